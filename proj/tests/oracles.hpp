#pragma once

/* Test-only oracles, kept independent of the canonical-form machinery they
 * cross-check: isomorphism and isometry are decided by searching all
 * relabelings directly, counts come from first principles.
 */

#include "f1hall/forms.hpp"
#include "f1hall/quiver.hpp"
#include "f1hall/rep.hpp"

#include <vector>

namespace oracle {

using namespace f1hall;

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

inline long long factorial(int n)
{
    long long r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// Isomorphism by exhaustive search over relabelings of a.
inline bool brute_iso(const Quiver& q, const Rep& a, const Rep& b)
{
    if (dim_vector(a) != dim_vector(b))
        return false;
    bool found = false;
    for_each_relabeling(dim_vector(a), [&](const std::vector<std::vector<int>>& perm) {
        if (found)
            return;
        if (relabel(q, a, perm) == b)
            found = true;
    });
    return found;
}

/// Isometry by exhaustive search: a relabeling matching both the arrow maps
/// and the form.
inline bool brute_isometric(const Quiver& q, const Involution& s, const SymmetricForm& a,
                            const SymmetricForm& b)
{
    if (dim_vector(a.rep) != dim_vector(b.rep))
        return false;
    bool found = false;
    for_each_relabeling(dim_vector(a.rep), [&](const std::vector<std::vector<int>>& perm) {
        if (found)
            return;
        if (relabel(q, s, a, perm) == b)
            found = true;
    });
    return found;
}

/// Every labeled representation with dimension vector d.
inline std::vector<Rep> raw_reps(const Quiver& q, const DimVector& d)
{
    std::vector<PointedSet> sp;
    for (int x : d)
        sp.push_back({x});
    std::vector<Rep> out;
    std::vector<PartialInjection> maps(static_cast<std::size_t>(q.num_arrows()));
    std::function<void(int)> rec = [&](int a) {
        if (a == q.num_arrows()) {
            out.emplace_back(q, sp, maps);
            return;
        }
        const Arrow& ar = q.arrow(a);
        for (auto& m : all_partial_injections(d[static_cast<std::size_t>(ar.src)],
                                              d[static_cast<std::size_t>(ar.tgt)])) {
            maps[static_cast<std::size_t>(a)] = m;
            rec(a + 1);
        }
    };
    rec(0);
    return out;
}

/// Number of isomorphism classes at d, deduplicated with brute_iso only.
inline int count_classes_brute(const Quiver& q, const DimVector& d)
{
    std::vector<Rep> reps = raw_reps(q, d);
    std::vector<Rep> distinct;
    for (const auto& r : reps) {
        bool seen = false;
        for (const auto& o : distinct)
            if (brute_iso(q, r, o)) {
                seen = true;
                break;
            }
        if (!seen)
            distinct.push_back(r);
    }
    return static_cast<int>(distinct.size());
}

}  // namespace oracle
