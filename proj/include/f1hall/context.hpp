#pragma once

/* Per-quiver computation context.  Owns the validated quiver with its
 * involution and memoizes everything that is enumerated repeatedly: class
 * lists per dimension vector, canonical forms, subobject and isotropic
 * counts, and coaction terms.  All cached values are immutable; lookups are
 * mutex-guarded so verification instances can run on several threads.
 */

#include "f1hall/forms.hpp"
#include "f1hall/quiver.hpp"
#include "f1hall/rep.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace f1hall {

/// F^W_{U,V} aggregated per target: (class of S, class of W/S) -> count.
using SubobjectProfile = std::map<std::pair<CanonicalClass, CanonicalClass>, long long>;

/// G^N_{U,M} aggregated per target: (class of U, class of N//U) -> count.
using IsotropicProfile = std::map<std::pair<CanonicalClass, IsometryClass>, long long>;

class Context {
public:
    /// Throws std::invalid_argument when (q, s) fails validate().
    Context(Quiver q, Involution s, std::string name);

    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    const Quiver& quiver() const { return q_; }
    const Involution& sigma() const { return sigma_; }
    const std::string& name() const { return name_; }

    CanonicalClass canon(const Rep& r);
    IsometryClass canon(const SymmetricForm& f);

    Rep rep_of(const CanonicalClass& c) const { return parse_rep(q_, c.enc); }
    SymmetricForm form_of(const IsometryClass& c) const { return parse_form(q_, c.enc); }

    CanonicalClass zero_class();
    IsometryClass trivial_form_class();

    std::shared_ptr<const std::vector<CanonicalClass>> reps_at(const DimVector& d);
    std::shared_ptr<const std::vector<IsometryClass>> forms_at(const DimVector& e);

    CanonicalClass dual_class(const CanonicalClass& c);

    std::shared_ptr<const SubobjectProfile> subobject_profile(const CanonicalClass& w);
    std::shared_ptr<const IsotropicProfile> isotropic_profile(const IsometryClass& n);

    /// Distinct (class U, class M) with H(U) + M isometric to N, enumerated
    /// from the defining condition.
    std::shared_ptr<const std::vector<std::pair<CanonicalClass, IsometryClass>>>
    coact_terms(const IsometryClass& n);

    std::shared_ptr<const std::map<CanonicalClass, int>>
    indec_multiset(const CanonicalClass& c);

    DimVector dim_of(const CanonicalClass& c) const;
    DimVector dim_of(const IsometryClass& c) const;

private:
    template <class K, class V>
    std::shared_ptr<const V> cached(std::map<K, std::shared_ptr<const V>>& cache,
                                    const K& key, const std::function<V()>& make);

    Quiver q_;
    Involution sigma_;
    std::string name_;

    std::mutex mu_;
    std::map<std::string, std::string> canon_rep_;   // labeled enc -> canonical enc
    std::map<std::string, std::string> canon_form_;  // labeled enc -> canonical enc
    std::map<DimVector, std::shared_ptr<const std::vector<CanonicalClass>>> reps_by_dim_;
    std::map<DimVector, std::shared_ptr<const std::vector<IsometryClass>>> forms_by_dim_;
    std::map<CanonicalClass, CanonicalClass> duals_;
    std::map<CanonicalClass, std::shared_ptr<const SubobjectProfile>> sub_profiles_;
    std::map<IsometryClass, std::shared_ptr<const IsotropicProfile>> iso_profiles_;
    std::map<IsometryClass,
             std::shared_ptr<const std::vector<std::pair<CanonicalClass, IsometryClass>>>>
        coact_terms_;
    std::map<CanonicalClass, std::shared_ptr<const std::map<CanonicalClass, int>>> indecs_;
};

}  // namespace f1hall
