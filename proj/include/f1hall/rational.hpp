#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace f1hall {

// Exact rational coefficients. All identities checked by this library are
// exact, so no floating point appears anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Renders a rational as "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string rat_str(const Rat& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Human-friendly rendering: "p" when q = 1, else "p/q".
inline std::string rat_str_pretty(const Rat& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return rat_str(r);
}

}  // namespace f1hall
