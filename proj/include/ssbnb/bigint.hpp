#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ssbnb {

using BigInt = boost::multiprecision::cpp_int;
using UInt128 = unsigned __int128;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Strict decimal parser: optional leading '-', digits only.
inline BigInt parse_bigint(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + std::string(s));
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal: " + std::string(s));
    return BigInt(std::string(s));
}

inline bool fits_uint128(const BigInt& v) {
    return v >= 0 && (v == 0 || boost::multiprecision::msb(v) <= 126);
}

inline UInt128 to_uint128(const BigInt& v) {
    const std::uint64_t lo = static_cast<std::uint64_t>(v & 0xFFFFFFFFFFFFFFFFULL);
    const std::uint64_t hi = static_cast<std::uint64_t>((v >> 64) & 0xFFFFFFFFFFFFFFFFULL);
    return (static_cast<UInt128>(hi) << 64) | lo;
}

inline BigInt from_uint128(UInt128 v) {
    BigInt r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r |= static_cast<std::uint64_t>(v);
    return r;
}

// Exact rational, kept normalized (gcd-reduced, positive denominator).
struct Ratio {
    BigInt num;
    BigInt den;

    Ratio() : num(0), den(1) {}
    Ratio(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { den = -den; num = -num; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool in_open_unit_interval() const { return num > 0 && num < den; }
    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }

    std::string str() const { return num.str() + "/" + den.str(); }
};

// Parses "p/q" (both decimal integers). Decimal notation is rejected on purpose.
inline Ratio parse_ratio(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("rational must be written p/q, got: " + std::string(s));
    return Ratio(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

}  // namespace ssbnb
