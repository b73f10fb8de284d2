#include "f1hall/context.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace f1hall {

Context::Context(Quiver q, Involution s, std::string name)
    : q_(std::move(q)), sigma_(std::move(s)), name_(std::move(name))
{
    if (auto bad = validate(q_, sigma_))
        throw std::invalid_argument("Context: invalid quiver with involution: " + *bad);
}

template <class K, class V>
std::shared_ptr<const V> Context::cached(std::map<K, std::shared_ptr<const V>>& cache,
                                         const K& key, const std::function<V()>& make)
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto value = std::make_shared<const V>(make());  // computed outside the lock
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache.try_emplace(key, value);
    return it->second;  // first writer wins; a concurrent duplicate is discarded
}

CanonicalClass Context::canon(const Rep& r)
{
    std::string labeled = encode_rep(q_, r);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = canon_rep_.find(labeled);
        if (it != canon_rep_.end())
            return CanonicalClass{it->second};
    }
    CanonicalClass c = canonical_form(q_, r);
    std::lock_guard<std::mutex> lock(mu_);
    canon_rep_.emplace(std::move(labeled), c.enc);
    return c;
}

IsometryClass Context::canon(const SymmetricForm& f)
{
    std::string labeled = encode_form(q_, f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = canon_form_.find(labeled);
        if (it != canon_form_.end())
            return IsometryClass{it->second};
    }
    IsometryClass c = canonical_isometry_class(q_, sigma_, f);
    std::lock_guard<std::mutex> lock(mu_);
    canon_form_.emplace(std::move(labeled), c.enc);
    return c;
}

CanonicalClass Context::zero_class()
{
    return canon(Rep::zero(q_));
}

IsometryClass Context::trivial_form_class()
{
    SymmetricForm t{Rep::zero(q_),
                    std::vector<std::vector<int>>(static_cast<std::size_t>(q_.num_vertices()))};
    return canon(t);
}

std::shared_ptr<const std::vector<CanonicalClass>> Context::reps_at(const DimVector& d)
{
    return cached<DimVector, std::vector<CanonicalClass>>(
        reps_by_dim_, d, [&] { return enumerate_reps(q_, d); });
}

std::shared_ptr<const std::vector<IsometryClass>> Context::forms_at(const DimVector& e)
{
    return cached<DimVector, std::vector<IsometryClass>>(
        forms_by_dim_, e, [&] { return enumerate_forms(q_, sigma_, e); });
}

CanonicalClass Context::dual_class(const CanonicalClass& c)
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = duals_.find(c);
        if (it != duals_.end())
            return it->second;
    }
    CanonicalClass d = canon(dualize(q_, sigma_, rep_of(c)));
    std::lock_guard<std::mutex> lock(mu_);
    duals_.emplace(c, d);
    return d;
}

std::shared_ptr<const SubobjectProfile> Context::subobject_profile(const CanonicalClass& w)
{
    return cached<CanonicalClass, SubobjectProfile>(sub_profiles_, w, [&] {
        SubobjectProfile p;
        Rep rw = rep_of(w);
        for (const auto& sub : subrepresentations(q_, rw)) {
            CanonicalClass u = canon(restrict_elements(q_, rw, sub));
            CanonicalClass v = canon(quotient(q_, rw, sub));
            ++p[{u, v}];
        }
        return p;
    });
}

std::shared_ptr<const IsotropicProfile> Context::isotropic_profile(const IsometryClass& n)
{
    return cached<IsometryClass, IsotropicProfile>(iso_profiles_, n, [&] {
        IsotropicProfile p;
        SymmetricForm fn = form_of(n);
        for (const auto& u : isotropics(q_, sigma_, fn)) {
            CanonicalClass uc = canon(restrict_elements(q_, fn.rep, u));
            IsometryClass mc = canon(reduce(q_, sigma_, fn, u));
            ++p[{uc, mc}];
        }
        return p;
    });
}

std::shared_ptr<const std::vector<std::pair<CanonicalClass, IsometryClass>>>
Context::coact_terms(const IsometryClass& n)
{
    using Terms = std::vector<std::pair<CanonicalClass, IsometryClass>>;
    return cached<IsometryClass, Terms>(coact_terms_, n, [&] {
        // all (U, M) with H(U) + M isometric to N, straight from the
        // defining condition; one term per class pair
        Terms terms;
        const DimVector e = dim_of(n);
        const int nv = q_.num_vertices();
        // iterate dimension vectors d of U with d + sigma(d) <= e
        std::vector<DimVector> uds;
        DimVector d(static_cast<std::size_t>(nv), 0);
        std::function<void(int)> rec = [&](int v) {
            if (v == nv) {
                DimVector h = add(d, sigma_dim(sigma_, d));
                if (leq(h, e))
                    uds.push_back(d);
                return;
            }
            for (int x = 0; x <= e[static_cast<std::size_t>(v)]; ++x) {
                d[static_cast<std::size_t>(v)] = x;
                rec(v + 1);
            }
            d[static_cast<std::size_t>(v)] = 0;
        };
        if (nv == 0)
            uds.push_back({});
        else
            rec(0);

        for (const auto& du : uds) {
            DimVector rest = e;
            DimVector h = add(du, sigma_dim(sigma_, du));
            bool ok = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= h[i];
                if (rest[i] < 0)
                    ok = false;
            }
            if (!ok || !sigma_symmetric(sigma_, rest))
                continue;
            auto us = reps_at(du);
            auto ms = forms_at(rest);
            for (const auto& uc : *us) {
                SymmetricForm hu = hyperbolic(q_, sigma_, rep_of(uc));
                for (const auto& mc : *ms) {
                    SymmetricForm cand = form_sum(q_, sigma_, hu, form_of(mc));
                    if (canon(cand) == n)
                        terms.emplace_back(uc, mc);
                }
            }
        }
        std::sort(terms.begin(), terms.end());
        terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
        return terms;
    });
}

std::shared_ptr<const std::map<CanonicalClass, int>>
Context::indec_multiset(const CanonicalClass& c)
{
    return cached<CanonicalClass, std::map<CanonicalClass, int>>(
        indecs_, c, [&] { return indecomposables(q_, rep_of(c)); });
}

DimVector Context::dim_of(const CanonicalClass& c) const
{
    return dim_vector(rep_of(c));
}

DimVector Context::dim_of(const IsometryClass& c) const
{
    return dim_vector(form_of(c).rep);
}

}  // namespace f1hall
