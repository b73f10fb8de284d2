#pragma once

/* The Hall algebra on isomorphism classes: the product counts
 * subrepresentations with prescribed sub and quotient, the coproduct sums
 * over direct-sum decompositions, and dualization induces an algebra
 * anti-involution.  Primitive elements are spanned by the indecomposable
 * classes; their +/- split under the involution and the graded
 * universal-envelope dimension check live here too.
 */

#include "f1hall/context.hpp"
#include "f1hall/linear.hpp"

#include <array>
#include <utility>
#include <vector>

namespace f1hall {

using HallElement = Linear<CanonicalClass>;
using Tensor2 = Linear<std::pair<CanonicalClass, CanonicalClass>>;
using Tensor3 = Linear<std::array<CanonicalClass, 3>>;

/// F^W_{U,V}: subrepresentations of W isomorphic to U with quotient
/// isomorphic to V.  Zero when the dimension vectors do not add up.
long long hall_number(Context& ctx, const CanonicalClass& u, const CanonicalClass& v,
                      const CanonicalClass& w);

HallElement product(Context& ctx, const HallElement& x, const HallElement& y);

/// Delta([W]) = sum over splittings of the indecomposable multiset of W,
/// one term per class pair (U, V) with U + V isomorphic to W.
Tensor2 coproduct(Context& ctx, const HallElement& x);

/// (Delta tensor id) Delta: one term per class triple summing to W.
Tensor3 coproduct2(Context& ctx, const HallElement& x);

/// [U] -> [P(U)], extended linearly; an involution.
HallElement p_involution(Context& ctx, const HallElement& x);

/// All indecomposable classes with dimension vector <= bound, sorted by
/// (dimension vector, encoding).
std::vector<CanonicalClass> primitive_basis(Context& ctx, const DimVector& bound);

HallElement bracket(Context& ctx, const HallElement& x, const HallElement& y);

/// Eigenbases of the duality involution on primitives: a fixed class J
/// contributes [J] to plus; a swapped pair {J, P(J)} contributes [J]+[P(J)]
/// to plus and [J]-[P(J)] to minus.
struct PmBases {
    std::vector<HallElement> plus;
    std::vector<HallElement> minus;
};

PmBases split_pm(Context& ctx, const DimVector& bound);

/// Per grade d <= bound: the number of isomorphism classes against the
/// rational rank of all ordered products of indecomposables of total
/// degree d.  The two agree exactly when the algebra is the universal
/// envelope of its primitives.
struct GradeRank {
    DimVector grade;
    int iso_classes = 0;
    int monomial_rank = 0;
};

/// The comparison at a single grade, over a fixed generating set of
/// indecomposable classes.
GradeRank mm_grade_rank(Context& ctx, const std::vector<CanonicalClass>& indecs,
                        const DimVector& d);

std::vector<GradeRank> mm_graded_report(Context& ctx, const DimVector& bound);

/// Lower central series dimensions of the primitive Lie algebra per grade:
/// row k lists dim L_k in each grade <= bound, until the series stabilizes
/// within the bound.
std::vector<std::vector<std::pair<DimVector, int>>>
lower_central_series(Context& ctx, const DimVector& bound);

}  // namespace f1hall
