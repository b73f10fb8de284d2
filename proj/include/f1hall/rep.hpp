#pragma once

/* Quiver representations over F1: a pointed set per vertex and a partial
 * injection per arrow.  Canonical forms, subrepresentations, quotients,
 * Krull-Schmidt decomposition into connected components, and exhaustive
 * enumeration of isomorphism classes in a fixed dimension vector.
 */

#include "f1hall/f1vect.hpp"
#include "f1hall/quiver.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace f1hall {

class Rep {
public:
    Rep() = default;

    /// Throws std::invalid_argument when map sizes do not match the
    /// endpoint space sizes.
    Rep(const Quiver& q, std::vector<PointedSet> spaces,
        std::vector<PartialInjection> maps);

    static Rep zero(const Quiver& q);

    const std::vector<PointedSet>& spaces() const { return spaces_; }
    const PointedSet& space(int v) const { return spaces_[static_cast<std::size_t>(v)]; }
    const std::vector<PartialInjection>& maps() const { return maps_; }
    const PartialInjection& map(int a) const { return maps_[static_cast<std::size_t>(a)]; }

    bool operator==(const Rep&) const = default;

private:
    std::vector<PointedSet> spaces_;
    std::vector<PartialInjection> maps_;
};

DimVector dim_vector(const Rep& r);
Rep direct_sum(const Quiver& q, const Rep& a, const Rep& b);

/// Key of an isomorphism class: the minimal encoding of a representation
/// over all grade-preserving relabelings of its elements.  Parseable, see
/// encode_rep/parse_rep.
struct CanonicalClass {
    std::string enc;
    auto operator<=>(const CanonicalClass&) const = default;
};

/// Deterministic encoding of a labeled representation:
/// "d0,d1,...|arrow:s>t,s>t|arrow:..."  (arrows in quiver order, pairs
/// sorted by source).
std::string encode_rep(const Quiver& q, const Rep& r);
Rep parse_rep(const Quiver& q, const std::string& enc);

/// Minimum of encode_rep over all tuples of per-vertex permutations.
CanonicalClass canonical_form(const Quiver& q, const Rep& r);

/// A vertex-graded subset of the elements of a representation, one bitmask
/// per vertex.
struct GradedSubset {
    std::vector<std::uint32_t> bits;

    bool contains(int v, int x) const
    {
        return (bits[static_cast<std::size_t>(v)] >> x) & 1u;
    }
    int count() const;
    bool empty() const;
    auto operator<=>(const GradedSubset&) const = default;

    static GradedSubset none(int num_vertices);
    static GradedSubset all(const Rep& r);
};

/// All graded subsets closed under the arrow maps, sorted.  Each yields an
/// inflation into r.
std::vector<GradedSubset> subrepresentations(const Quiver& q, const Rep& r);

bool is_closed_subset(const Quiver& q, const Rep& r, const GradedSubset& s);

/// The induced representation on a subset: elements reindexed densely,
/// keeping the arrow pairs with both endpoints inside.  For a closed subset
/// this is the subrepresentation; reductions of forms also use it on
/// non-closed element sets.
Rep restrict_elements(const Quiver& q, const Rep& r, const GradedSubset& s);

/// Collapses a closed subset to the basepoint; throws std::invalid_argument
/// when s is not closed under the arrow maps.
Rep quotient(const Quiver& q, const Rep& r, const GradedSubset& s);

/// Connected components of the element graph, as graded subsets.
std::vector<GradedSubset> components(const Quiver& q, const Rep& r);

/// Multiset of classes of the connected components; their direct sum is
/// isomorphic to r and determines r up to isomorphism.
std::map<CanonicalClass, int> indecomposables(const Quiver& q, const Rep& r);

/// One representative per isomorphism class with the given dimension vector,
/// sorted by encoding.
std::vector<CanonicalClass> enumerate_reps(const Quiver& q, const DimVector& d);

/// All partial injections {0..n-1} -> {0..m-1}.
std::vector<PartialInjection> all_partial_injections(int n, int m);

/// All permutations of {0..n-1}; cached, n small.
const std::vector<std::vector<int>>& permutations(int n);

/// Applies a per-vertex relabeling: element x at vertex v becomes
/// perm[v][x].
Rep relabel(const Quiver& q, const Rep& r, const std::vector<std::vector<int>>& perm);

/// Runs f on every tuple of per-vertex permutations of the given sizes.
void for_each_relabeling(const DimVector& dims,
                         const std::function<void(const std::vector<std::vector<int>>&)>& f);

}  // namespace f1hall
