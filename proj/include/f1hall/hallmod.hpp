#pragma once

/* The Hall module on isometry classes of symmetric forms.  The algebra acts
 * by counting isotropic subrepresentations with prescribed class and
 * reduction; the coaction splits off hyperbolic summands.  star_p is the
 * twisted three-fold action that appears on the right hand side of the
 * compatibility identity rho(u * xi) = Delta2(u) *_P rho(xi).
 */

#include "f1hall/context.hpp"
#include "f1hall/hall.hpp"
#include "f1hall/linear.hpp"

#include <utility>
#include <vector>

namespace f1hall {

using ModuleElement = Linear<IsometryClass>;
using TensorHM = Linear<std::pair<CanonicalClass, IsometryClass>>;

/// G^N_{U,M}: isotropic subrepresentations of N isomorphic to U whose
/// reduction is isometric to M.
long long g_number(Context& ctx, const CanonicalClass& u, const IsometryClass& m,
                   const IsometryClass& n);

/// [U] * [M] = sum_N G^N_{U,M} [N]; every term lives in grade
/// dim H(U) + dim M.
ModuleElement act(Context& ctx, const HallElement& x, const ModuleElement& xi);

/// rho([N]) = sum of [U] (x) [M] over distinct class pairs with
/// H(U) + M isometric to N.
TensorHM coact(Context& ctx, const ModuleElement& xi);

/// ([U1] (x) [U2] (x) [U3]) *_P ([W] (x) [N]) =
///     [U1].[W].[P(U2)] (x) [U3] * [N], extended bilinearly.
TensorHM star_p(Context& ctx, const Tensor3& t, const TensorHM& m);

/// Isometry classes <= bound with no hyperbolic summand; these span the
/// coinvariants.
std::vector<IsometryClass> coinvariant_basis(Context& ctx, const DimVector& bound);

/// rho(xi) == [0] (x) xi.
bool is_coinvariant(Context& ctx, const ModuleElement& xi);

}  // namespace f1hall
