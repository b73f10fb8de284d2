#pragma once

/* Finite pointed sets and partial injections: the linear algebra layer.
 *
 * A vector space over F1 is a finite pointed set; we store only the number
 * of non-basepoint elements, which are the indices 0..size-1.  A morphism is
 * a basepoint-preserving map that is injective away from the preimage of the
 * basepoint, i.e. a partial injection on the indices.
 */

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace f1hall {

struct PointedSet {
    int size = 0;  // non-basepoint elements; dim_{F1} = size

    int dim() const { return size; }
    auto operator<=>(const PointedSet&) const = default;
};

/// A partial injection {0..dom-1} -> {0..cod-1}: pairs with distinct sources
/// and distinct targets, stored sorted by source.  Structural equality is
/// semantic equality.
class PartialInjection {
public:
    PartialInjection() = default;

    /// Throws std::invalid_argument if a source or target repeats or an
    /// index is out of bounds.
    PartialInjection(int dom_size, int cod_size,
                     std::vector<std::pair<int, int>> pairs);

    static PartialInjection identity(int n);
    static PartialInjection zero(int dom_size, int cod_size);

    int dom_size() const { return dom_; }
    int cod_size() const { return cod_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    std::optional<int> image(int src) const;
    std::optional<int> preimage(int tgt) const;

    bool operator==(const PartialInjection&) const = default;
    auto operator<=>(const PartialInjection&) const = default;

private:
    int dom_ = 0;
    int cod_ = 0;
    std::vector<std::pair<int, int>> pairs_;  // sorted by source
};

/// Diagrammatic composition: (x,z) in compose(f,g) iff (x,y) in f and
/// (y,z) in g for some y.  Throws if f.cod_size() != g.dom_size().
PartialInjection compose(const PartialInjection& f, const PartialInjection& g);

/// Relational converse; realizes the dual of a morphism under the canonical
/// identification V = V^dual (v -> delta_v).  An involution.
PartialInjection converse(const PartialInjection& f);

/// Block sum on shifted indices; dimensions add.
PartialInjection direct_sum(const PartialInjection& f, const PartialInjection& g);

enum class MorphismKind { inflation, deflation, isomorphism, neither };

/// Inflations are the everywhere-defined (injective) morphisms, deflations
/// the surjective ones; both at once is an isomorphism.
MorphismKind classify(const PartialInjection& f);

}  // namespace f1hall
