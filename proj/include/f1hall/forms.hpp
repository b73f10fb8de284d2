#pragma once

/* The duality functor on representations and symmetric forms.
 *
 * Under the canonical self-duality of pointed sets, a symmetric form on a
 * representation N is a family of bijections b_i: N_i -> N_{sigma(i)} with
 * b_{sigma(i)} = b_i^{-1} that is a morphism N -> P(N); at a sigma-fixed
 * vertex this is an involution of the fibre.  Isotropic subrepresentations
 * are disjoint from their form image, and reducing deletes U together with
 * b(U) and restricts the form.
 */

#include "f1hall/quiver.hpp"
#include "f1hall/rep.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f1hall {

struct SymmetricForm {
    Rep rep;
    std::vector<std::vector<int>> b;  // b[i][x] is an index into N_{sigma(i)}

    bool operator==(const SymmetricForm&) const = default;
};

/// P(U): spaces permuted by sigma, the map at arrow a is the converse of
/// the map at sigma(a).  dualize(dualize(r)) == r on the nose.
Rep dualize(const Quiver& q, const Involution& s, const Rep& r);

/// nullopt when (rep, b) is a symmetric form; otherwise which invariant
/// failed and where.
std::optional<std::string> is_form(const Quiver& q, const Involution& s,
                                   const SymmetricForm& f);

struct IsometryClass {
    std::string enc;
    auto operator<=>(const IsometryClass&) const = default;
};

/// "repenc@v=i0,i1|v=..." with the b arrays per vertex in quiver order.
std::string encode_form(const Quiver& q, const SymmetricForm& f);
SymmetricForm parse_form(const Quiver& q, const std::string& enc);

SymmetricForm relabel(const Quiver& q, const Involution& s, const SymmetricForm& f,
                      const std::vector<std::vector<int>>& perm);

/// Minimum of encode_form over grade-preserving relabelings; equal iff
/// isometric.
IsometryClass canonical_isometry_class(const Quiver& q, const Involution& s,
                                       const SymmetricForm& f);

bool isometric(const Quiver& q, const Involution& s, const SymmetricForm& m,
               const SymmetricForm& n);

/// The hyperbolic form on u + P(u): b exchanges the two summands.
SymmetricForm hyperbolic(const Quiver& q, const Involution& s, const Rep& u);

/// Orthogonal direct sum.
SymmetricForm form_sum(const Quiver& q, const Involution& s, const SymmetricForm& a,
                       const SymmetricForm& b);

/// One representative per isometry class with the given dimension vector;
/// empty when e is not sigma-symmetric.
std::vector<IsometryClass> enumerate_forms(const Quiver& q, const Involution& s,
                                           const DimVector& e);

bool is_isotropic(const Quiver& q, const Involution& s, const SymmetricForm& n,
                  const GradedSubset& u);

/// All isotropic subrepresentations of n.rep: closed subsets u with
/// b(u) disjoint from u, whose orthogonal (the complement of b(u)) is
/// checked closed under the arrow maps.
std::vector<GradedSubset> isotropics(const Quiver& q, const Involution& s,
                                     const SymmetricForm& n);

/// The reduction: deletes u and b(u), restricts rep and form, and validates
/// the result with is_form.  Throws std::invalid_argument when u is not
/// isotropic.
SymmetricForm reduce(const Quiver& q, const Involution& s, const SymmetricForm& n,
                     const GradedSubset& u);

/// Orthogonal decomposition along connected components: components fixed by
/// the form give self-dual summands, swapped pairs give hyperbolic summands
/// labelled by the smaller class of the two sides.  The orthogonal sum of
/// the returned summands is verified isometric to n.
struct OrthogonalDecomposition {
    std::map<IsometryClass, int> self_dual;
    std::map<CanonicalClass, int> hyperbolic;
};

OrthogonalDecomposition orthogonal_decompose(const Quiver& q, const Involution& s,
                                             const SymmetricForm& n);

/// Restriction of a form to a subset mapped onto itself by b (graded:
/// b(u_i) = u_{sigma(i)}).
SymmetricForm restrict_form(const Quiver& q, const Involution& s,
                            const SymmetricForm& n, const GradedSubset& u);

/// The graded image of u under the form, placed in grade sigma(i).
GradedSubset form_image(const Quiver& q, const Involution& s,
                        const SymmetricForm& n, const GradedSubset& u);

}  // namespace f1hall
