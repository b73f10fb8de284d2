#include "f1hall/hall.hpp"

#include "f1hall/linalg.hpp"

#include <algorithm>
#include <functional>

namespace f1hall {

long long hall_number(Context& ctx, const CanonicalClass& u, const CanonicalClass& v,
                      const CanonicalClass& w)
{
    if (add(ctx.dim_of(u), ctx.dim_of(v)) != ctx.dim_of(w))
        return 0;
    auto profile = ctx.subobject_profile(w);
    auto it = profile->find({u, v});
    return it == profile->end() ? 0 : it->second;
}

HallElement product(Context& ctx, const HallElement& x, const HallElement& y)
{
    HallElement out;
    for (const auto& [u, cu] : x.terms()) {
        for (const auto& [v, cv] : y.terms()) {
            const Rat c = cu * cv;
            DimVector d = add(ctx.dim_of(u), ctx.dim_of(v));
            for (const auto& w : *ctx.reps_at(d)) {
                auto profile = ctx.subobject_profile(w);
                auto it = profile->find({u, v});
                if (it != profile->end())
                    out.add(w, c * Rat(it->second));
            }
        }
    }
    return out;
}

namespace {

// Enumerates splittings of the indecomposable multiset of a class into
// `parts` sub-multisets and reports the class of each part.  Distinct
// splittings give distinct class tuples, so the caller adds each with
// coefficient one.
void for_each_multiset_splitting(
    Context& ctx, const CanonicalClass& w, int parts,
    const std::function<void(const std::vector<CanonicalClass>&)>& f)
{
    auto indecs = ctx.indec_multiset(w);
    std::vector<std::pair<CanonicalClass, int>> items(indecs->begin(), indecs->end());
    const Quiver& q = ctx.quiver();

    // counts[p][k]: copies of indecomposable k assigned to part p
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(parts),
                                         std::vector<int>(items.size(), 0));
    std::vector<CanonicalClass> result(static_cast<std::size_t>(parts));

    std::function<void(std::size_t)> next_item = [&](std::size_t k) {
        if (k == items.size()) {
            for (int p = 0; p < parts; ++p) {
                Rep sum = Rep::zero(q);
                for (std::size_t j = 0; j < items.size(); ++j) {
                    Rep piece = ctx.rep_of(items[j].first);
                    for (int c = 0; c < counts[static_cast<std::size_t>(p)][j]; ++c)
                        sum = direct_sum(q, sum, piece);
                }
                result[static_cast<std::size_t>(p)] = ctx.canon(sum);
            }
            f(result);
            return;
        }
        std::function<void(int, int)> dist = [&](int p, int left) {
            if (p == parts - 1) {
                counts[static_cast<std::size_t>(p)][k] = left;
                next_item(k + 1);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                counts[static_cast<std::size_t>(p)][k] = take;
                dist(p + 1, left - take);
            }
        };
        dist(0, items[k].second);
    };
    next_item(0);
}

}  // namespace

Tensor2 coproduct(Context& ctx, const HallElement& x)
{
    Tensor2 out;
    for (const auto& [w, c] : x.terms()) {
        for_each_multiset_splitting(ctx, w, 2, [&](const std::vector<CanonicalClass>& parts) {
            out.add({parts[0], parts[1]}, c);
        });
    }
    return out;
}

Tensor3 coproduct2(Context& ctx, const HallElement& x)
{
    Tensor3 out;
    for (const auto& [w, c] : x.terms()) {
        for_each_multiset_splitting(ctx, w, 3, [&](const std::vector<CanonicalClass>& parts) {
            out.add({parts[0], parts[1], parts[2]}, c);
        });
    }
    return out;
}

HallElement p_involution(Context& ctx, const HallElement& x)
{
    HallElement out;
    for (const auto& [u, c] : x.terms())
        out.add(ctx.dual_class(u), c);
    return out;
}

std::vector<CanonicalClass> primitive_basis(Context& ctx, const DimVector& bound)
{
    std::vector<CanonicalClass> out;
    for (const auto& d : dims_upto(bound)) {
        if (total_dim(d) == 0)
            continue;
        for (const auto& c : *ctx.reps_at(d)) {
            auto indecs = ctx.indec_multiset(c);
            int pieces = 0;
            for (const auto& [k, m] : *indecs)
                pieces += m;
            if (pieces == 1)
                out.push_back(c);
        }
    }
    return out;
}

HallElement bracket(Context& ctx, const HallElement& x, const HallElement& y)
{
    return product(ctx, x, y) - product(ctx, y, x);
}

PmBases split_pm(Context& ctx, const DimVector& bound)
{
    PmBases out;
    for (const auto& j : primitive_basis(ctx, bound)) {
        CanonicalClass pj = ctx.dual_class(j);
        if (pj == j) {
            out.plus.push_back(HallElement::basis(j));
        } else if (j < pj) {
            if (!leq(ctx.dim_of(pj), bound))
                continue;  // the partner leaves the box; skip the orbit
            HallElement sum = HallElement::basis(j);
            sum.add(pj, Rat(1));
            out.plus.push_back(sum);
            HallElement diff = HallElement::basis(j);
            diff.add(pj, Rat(-1));
            out.minus.push_back(diff);
        }
    }
    return out;
}

GradeRank mm_grade_rank(Context& ctx, const std::vector<CanonicalClass>& indecs,
                        const DimVector& d)
{
    GradeRank row;
    row.grade = d;
    auto classes = ctx.reps_at(d);
    row.iso_classes = static_cast<int>(classes->size());

    // all ordered products of indecomposables of total degree d
    std::vector<HallElement> monomials;
    if (total_dim(d) == 0) {
        monomials.push_back(HallElement::basis(ctx.zero_class()));
    } else {
        std::vector<CanonicalClass> word;
        std::function<void(const DimVector&)> rec = [&](const DimVector& left) {
            if (total_dim(left) == 0) {
                HallElement m = HallElement::basis(ctx.zero_class());
                for (const auto& f : word)
                    m = product(ctx, m, HallElement::basis(f));
                monomials.push_back(std::move(m));
                return;
            }
            for (const auto& f : indecs) {
                DimVector df = ctx.dim_of(f);
                DimVector rest = left;
                bool ok = true;
                for (std::size_t i = 0; i < rest.size(); ++i) {
                    rest[i] -= df[i];
                    if (rest[i] < 0)
                        ok = false;
                }
                if (!ok)
                    continue;
                word.push_back(f);
                rec(rest);
                word.pop_back();
            }
        };
        rec(d);
    }

    RatMatrix m;
    m.reserve(monomials.size());
    for (const auto& mono : monomials) {
        std::vector<Rat> row_vec(classes->size(), Rat(0));
        for (std::size_t i = 0; i < classes->size(); ++i)
            row_vec[i] = mono.coeff((*classes)[i]);
        m.push_back(std::move(row_vec));
    }
    row.monomial_rank = rank(std::move(m));
    return row;
}

std::vector<GradeRank> mm_graded_report(Context& ctx, const DimVector& bound)
{
    std::vector<GradeRank> out;
    std::vector<CanonicalClass> indecs = primitive_basis(ctx, bound);
    for (const auto& d : dims_upto(bound))
        out.push_back(mm_grade_rank(ctx, indecs, d));
    return out;
}

std::vector<std::vector<std::pair<DimVector, int>>>
lower_central_series(Context& ctx, const DimVector& bound)
{
    // vectors live per grade in the coordinate basis of iso classes
    auto grade_vector = [&](const HallElement& x, const DimVector& d) {
        auto classes = ctx.reps_at(d);
        std::vector<Rat> v(classes->size(), Rat(0));
        for (std::size_t i = 0; i < classes->size(); ++i)
            v[i] = x.coeff((*classes)[i]);
        return v;
    };

    std::vector<CanonicalClass> prim = primitive_basis(ctx, bound);
    std::vector<HallElement> level;
    for (const auto& c : prim)
        level.push_back(HallElement::basis(c));

    std::vector<std::vector<std::pair<DimVector, int>>> table;
    auto grades = dims_upto(bound);
    while (!level.empty()) {
        std::vector<std::pair<DimVector, int>> dims_row;
        for (const auto& d : grades) {
            if (total_dim(d) == 0)
                continue;
            RatMatrix m;
            for (const auto& x : level) {
                bool in_grade = true;
                for (const auto& [k, c] : x.terms())
                    if (ctx.dim_of(k) != d)
                        in_grade = false;
                if (in_grade && !x.is_zero())
                    m.push_back(grade_vector(x, d));
            }
            int r = rank(std::move(m));
            if (r > 0)
                dims_row.emplace_back(d, r);
        }
        if (dims_row.empty())
            break;
        table.push_back(dims_row);

        // next level: brackets of generators with the current level,
        // graded and kept only inside the bound
        std::vector<HallElement> next;
        for (const auto& g : prim)
            for (const auto& x : level) {
                bool fits = true;
                for (const auto& [k, c] : x.terms())
                    if (!leq(add(ctx.dim_of(g), ctx.dim_of(k)), bound))
                        fits = false;
                if (!fits)
                    continue;
                HallElement b = bracket(ctx, HallElement::basis(g), x);
                if (!b.is_zero())
                    next.push_back(std::move(b));
            }
        level = std::move(next);
        if (table.size() > 16)
            break;  // safety valve; the series is nilpotent at these scales
    }
    return table;
}

}  // namespace f1hall
