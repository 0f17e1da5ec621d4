#include "ssbnb/pow_compare.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>

namespace ssbnb {
namespace {

using boost::multiprecision::cpp_bin_float;
using boost::multiprecision::number;
using Float50 = number<cpp_bin_float<50>>;
using Float100 = number<cpp_bin_float<100>>;
using Float300 = number<cpp_bin_float<300>>;

struct Dyadic {
    std::uint64_t num;  // odd
    int log2_den;       // x = num / 2^log2_den
};

// Every finite double is a dyadic rational; recover it in lowest terms.
std::optional<Dyadic> decompose_dyadic(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
    int e = 0;
    const double f = std::frexp(x, &e);  // x = f * 2^e, f in [0.5, 1)
    const double scaled = std::ldexp(f, 53);
    auto m = static_cast<std::uint64_t>(scaled);
    if (static_cast<double>(m) != scaled) return std::nullopt;
    int s = 53 - e;
    while ((m & 1) == 0 && s > 0) { m >>= 1; --s; }
    if (s <= 0) return std::nullopt;  // integral exponent, not handled here
    return Dyadic{m, s};
}

// Integer 2^s-th root via repeated integer sqrt; exact iff every level is a
// perfect square.
std::optional<BigInt> exact_pow2s_root(BigInt value, int s) {
    for (int i = 0; i < s; ++i) {
        BigInt r = boost::multiprecision::sqrt(value);
        if (r * r != value) return std::nullopt;
        value = r;
    }
    return value;
}

template <class F>
std::optional<int> try_compare(const BigInt& a, const BigInt& base, double x, const BigInt& b) {
    const F fa(a), fb(b), fbase(base);
    const F lhs = fa * pow(fbase, F(x));
    const F diff = lhs - fb;
    // Relative guard band: the pow/mul/conversion chain is accurate to a few
    // ulps; 24 bits of slack is far more than enough.
    const F guard = (abs(lhs) + abs(fb) + 1) * ldexp(F(1), 24 - std::numeric_limits<F>::digits);
    if (diff > guard) return 1;
    if (diff < -guard) return -1;
    return std::nullopt;
}

template <class F>
std::optional<BigInt> try_floor(const BigInt& base, double x) {
    const F v = pow(F(base), F(x));
    const F fl = floor(v);
    const F guard = (abs(v) + 1) * ldexp(F(1), 24 - std::numeric_limits<F>::digits);
    if (v - fl > guard && (fl + 1) - v > guard) return fl.template convert_to<BigInt>();
    return std::nullopt;
}

template <class F>
std::pair<BigInt, BigInt> bracket(const BigInt& total, const BigInt& base, double x) {
    const F v = F(total) / pow(F(base), F(x));
    const F pad = (abs(v) + 1) * ldexp(F(1), 24 - std::numeric_limits<F>::digits);
    BigInt lo = floor(v - pad).template convert_to<BigInt>();
    BigInt hi = ceil(v + pad).template convert_to<BigInt>();
    if (lo < 0) lo = 0;
    return {lo, hi};
}

}  // namespace

std::optional<BigInt> exact_integer_pow(const BigInt& base, double x) {
    if (base <= 0) return std::nullopt;
    if (base == 1) return BigInt(1);
    const auto d = decompose_dyadic(x);
    if (!d) return std::nullopt;
    // Keep base^num small; larger exponents only arise from generic doubles
    // whose powers are irrational anyway.
    if (d->num > 64 || d->log2_den > 10) return std::nullopt;
    return exact_pow2s_root(boost::multiprecision::pow(base, static_cast<unsigned>(d->num)),
                            d->log2_den);
}

std::optional<int> compare_scaled_pow(const BigInt& a, const BigInt& base, double x, const BigInt& b) {
    if (a < 0 || b < 0 || base < 1) throw std::invalid_argument("compare_scaled_pow: negative input");
    if (!(x > 0.0) || !(x <= 1.0)) throw std::invalid_argument("compare_scaled_pow: exponent out of (0,1]");
    if (a == 0) return b == 0 ? 0 : -1;
    if (x == 1.0 || base == 1) {
        const BigInt lhs = a * base;
        return lhs < b ? -1 : (lhs == b ? 0 : 1);
    }
    if (auto r = exact_integer_pow(base, x)) {
        const BigInt lhs = a * *r;
        return lhs < b ? -1 : (lhs == b ? 0 : 1);
    }
    if (auto s = try_compare<Float50>(a, base, x, b)) return s;
    if (auto s = try_compare<Float100>(a, base, x, b)) return s;
    if (auto s = try_compare<Float300>(a, base, x, b)) return s;
    return std::nullopt;
}

BigInt floor_pow(const BigInt& base, double x) {
    if (base < 1) throw std::invalid_argument("floor_pow: base must be >= 1");
    if (!(x > 0.0) || !(x < 1.0)) throw std::invalid_argument("floor_pow: exponent out of (0,1)");
    if (base == 1) return BigInt(1);
    if (auto r = exact_integer_pow(base, x)) return *r;
    if (auto f = try_floor<Float50>(base, x)) return *f;
    if (auto f = try_floor<Float100>(base, x)) return *f;
    if (auto f = try_floor<Float300>(base, x)) return *f;
    // base^x provably within 10^-300 of an integer without being one: not a
    // case reachable with 64-bit bases and dyadic exponents.
    return floor(pow(Float300(base), Float300(x))).convert_to<BigInt>();
}

double pow_real(std::uint64_t base, double x) {
    if (base == 0) throw std::invalid_argument("pow_real: base must be positive");
    if (x == 0.0) return 1.0;
    const double ax = std::fabs(x);
    double mag;
    std::optional<BigInt> r;
    if (ax < 1.0) r = exact_integer_pow(BigInt(base), ax);
    if (r && *r <= BigInt(1) << 53)
        mag = static_cast<double>(r->convert_to<std::uint64_t>());
    else
        mag = std::pow(static_cast<double>(base), ax);
    return x < 0 ? 1.0 / mag : mag;
}

std::pair<BigInt, BigInt> quotient_pow_bracket(const BigInt& total, const BigInt& base, double x) {
    if (total < 0 || base < 1) throw std::invalid_argument("quotient_pow_bracket: negative input");
    if (!(x > 0.0) || !(x <= 1.0)) throw std::invalid_argument("quotient_pow_bracket: exponent out of (0,1]");
    if (auto r = exact_integer_pow(base, x)) {
        const BigInt lo = total / *r;  // floor, operands non-negative
        return {lo, lo * *r == total ? lo : lo + 1};
    }
    auto b = bracket<Float50>(total, base, x);
    if (b.second - b.first <= 1) return b;
    b = bracket<Float100>(total, base, x);
    if (b.second - b.first <= 1) return b;
    return bracket<Float300>(total, base, x);
}

}  // namespace ssbnb
