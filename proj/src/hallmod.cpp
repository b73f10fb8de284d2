#include "f1hall/hallmod.hpp"

namespace f1hall {

long long g_number(Context& ctx, const CanonicalClass& u, const IsometryClass& m,
                   const IsometryClass& n)
{
    DimVector du = ctx.dim_of(u);
    DimVector expected = add(add(du, sigma_dim(ctx.sigma(), du)), ctx.dim_of(m));
    if (expected != ctx.dim_of(n))
        return 0;
    auto profile = ctx.isotropic_profile(n);
    auto it = profile->find({u, m});
    return it == profile->end() ? 0 : it->second;
}

ModuleElement act(Context& ctx, const HallElement& x, const ModuleElement& xi)
{
    ModuleElement out;
    for (const auto& [u, cu] : x.terms()) {
        DimVector du = ctx.dim_of(u);
        DimVector hu = add(du, sigma_dim(ctx.sigma(), du));
        for (const auto& [m, cm] : xi.terms()) {
            const Rat c = cu * cm;
            DimVector e = add(hu, ctx.dim_of(m));
            for (const auto& n : *ctx.forms_at(e)) {
                auto profile = ctx.isotropic_profile(n);
                auto it = profile->find({u, m});
                if (it != profile->end())
                    out.add(n, c * Rat(it->second));
            }
        }
    }
    return out;
}

TensorHM coact(Context& ctx, const ModuleElement& xi)
{
    TensorHM out;
    for (const auto& [n, c] : xi.terms())
        for (const auto& term : *ctx.coact_terms(n))
            out.add(term, c);
    return out;
}

TensorHM star_p(Context& ctx, const Tensor3& t, const TensorHM& m)
{
    TensorHM out;
    for (const auto& [triple, ct] : t.terms()) {
        const auto& [u1, u2, u3] = triple;
        HallElement pu2 = p_involution(ctx, HallElement::basis(u2));
        for (const auto& [pair, cm] : m.terms()) {
            const auto& [w, n] = pair;
            HallElement left = product(
                ctx, product(ctx, HallElement::basis(u1), HallElement::basis(w)), pu2);
            ModuleElement right =
                act(ctx, HallElement::basis(u3), ModuleElement::basis(n));
            const Rat c = ct * cm;
            for (const auto& [lk, lc] : left.terms())
                for (const auto& [rk, rc] : right.terms())
                    out.add({lk, rk}, c * lc * rc);
        }
    }
    return out;
}

std::vector<IsometryClass> coinvariant_basis(Context& ctx, const DimVector& bound)
{
    std::vector<IsometryClass> out;
    for (const auto& e : dims_upto(bound)) {
        if (!sigma_symmetric(ctx.sigma(), e))
            continue;
        for (const auto& n : *ctx.forms_at(e)) {
            auto dec = orthogonal_decompose(ctx.quiver(), ctx.sigma(), ctx.form_of(n));
            if (dec.hyperbolic.empty())
                out.push_back(n);
        }
    }
    return out;
}

bool is_coinvariant(Context& ctx, const ModuleElement& xi)
{
    TensorHM expected;
    CanonicalClass zero = ctx.zero_class();
    for (const auto& [n, c] : xi.terms())
        expected.add({zero, n}, c);
    return coact(ctx, xi) == expected;
}

}  // namespace f1hall
