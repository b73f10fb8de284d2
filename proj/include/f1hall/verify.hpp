#pragma once

/* Exhaustive verification harness.  Every check enumerates all instances
 * within a cap, compares both sides of an identity exactly, and reports
 * failures as data with minimal witnesses.  Reports are deterministic given
 * (quiver, cap): reruns produce byte-identical JSON.
 */

#include "f1hall/context.hpp"
#include "f1hall/quiver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace f1hall {

/// Componentwise bound when given; otherwise checks fall back to a
/// total-dimension bound (5 for algebra-only checks, 4 for checks that
/// enumerate forms).
struct Cap {
    std::optional<DimVector> vec;

    static constexpr int algebra_total = 5;
    static constexpr int module_total = 4;

    bool admits(const DimVector& d, int default_total) const
    {
        return vec ? leq(d, *vec) : total_dim(d) <= default_total;
    }
    std::vector<DimVector> grades(const Context& ctx, int default_total) const;
    std::string str(int default_total) const;
};

struct CheckFailure {
    int total_dim = 0;
    std::string instance;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string check;
    std::string identity;
    std::string quiver;
    std::string cap;
    long long instances = 0;
    std::vector<CheckFailure> failures;  // empty iff the check passes
    std::vector<std::string> notes;
    double wall_seconds = 0;  // shown in text output; omitted from JSON so
                              // that reruns are byte-identical

    bool pass() const { return failures.empty(); }
};

CheckReport verify_bialgebra(Context& ctx, const Cap& cap, int jobs = 1);
CheckReport verify_duality(Context& ctx, const Cap& cap, int jobs = 1);
CheckReport verify_mm(Context& ctx, const Cap& cap, int jobs = 1);
CheckReport verify_module_comodule(Context& ctx, const Cap& cap, int jobs = 1);
CheckReport verify_yd(Context& ctx, const Cap& cap, int jobs = 1);
CheckReport verify_coinv_action(Context& ctx, const Cap& cap, int jobs = 1);
CheckReport verify_reduction_lemmas(Context& ctx, const Cap& cap, int jobs = 1);

/// Passes when a pair (U, xi) with rho(U * xi) != Delta(U) . rho(xi) is
/// found within the cap; the witness lands in the notes.
CheckReport verify_non_hopf(Context& ctx, const Cap& cap, int jobs = 1);

extern const std::vector<std::string> kCheckNames;

/// Runs one named check or, for "all", every check in kCheckNames order.
std::vector<CheckReport> run_checks(Context& ctx, const std::string& which,
                                    const Cap& cap, int jobs = 1);

nlohmann::json report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);

}  // namespace f1hall
