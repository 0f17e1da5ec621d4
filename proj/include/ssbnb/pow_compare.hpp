#pragma once

#include "ssbnb/bigint.hpp"

#include <cstdint>
#include <optional>

namespace ssbnb {

// Comparisons against thresholds of the form base^x (x a runtime real) cannot
// in general be done exactly. The scheme here:
//
//  1. Exact path. A double exponent is exactly a dyadic rational p/2^s. When
//     p and s are small, base^x is rational iff base^p is a perfect 2^s-th
//     power, and then base^x is an integer we can compute. All comparisons
//     become exact big-integer comparisons; boundary cases (e.g. 4^0.5 = 2)
//     are decided correctly.
//  2. Escalating floating point. Otherwise base^x is irrational, so the
//     compared quantities are never truly equal; evaluate at 50, 100 and 300
//     decimal digits with a guard band and accept the sign once the
//     difference clears the band.
//  3. Indeterminate. If even 300 digits cannot separate the sides, report
//     nullopt and let the caller pick its conservative direction.

// base^x when it is an exact integer, nullopt otherwise (x in (0,1)).
std::optional<BigInt> exact_integer_pow(const BigInt& base, double x);

// Sign of a*base^x - b for a, b >= 0, base >= 1, x in (0,1].
// Returns -1, 0, +1, or nullopt when indeterminate.
std::optional<int> compare_scaled_pow(const BigInt& a, const BigInt& base, double x, const BigInt& b);

// floor(base^x) for base >= 1, x in (0,1). Exact when the exact path applies;
// otherwise evaluated at escalating precision (the floor of the highest
// precision value is returned if the boundary never resolves).
BigInt floor_pow(const BigInt& base, double x);

// base^x as a double with the exact-path assist (x may be negative).
double pow_real(std::uint64_t base, double x);

// Certified enclosure of total/base^x: returns (lo, hi) big integers with
// lo <= total/base^x <= hi and hi - lo as small as the float ladder allows.
std::pair<BigInt, BigInt> quotient_pow_bracket(const BigInt& total, const BigInt& base, double x);

}  // namespace ssbnb
