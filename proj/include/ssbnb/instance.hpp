#pragma once

#include "ssbnb/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssbnb {

enum class Rounding { floor, ceil };

inline const char* rounding_name(Rounding r) { return r == Rounding::floor ? "floor" : "ceil"; }
Rounding rounding_from_name(std::string_view name);

struct GeneratorConfig {
    std::uint64_t n = 0;
    Ratio r;  // must lie in (0,1)
    Rounding rounding = Rounding::floor;
    std::uint64_t seed = 0;
    // Defaults to floor(10^(n/2)); overridable for exploration.
    std::optional<BigInt> m_override;

    void validate() const;
};

struct Instance {
    std::uint64_t n = 0;
    std::vector<BigInt> a;  // coefficients, every entry >= 1
    BigInt beta;
    std::optional<GeneratorConfig> meta;  // present iff produced by generate_instance

    void validate() const;
};

// floor(10^(n/2)), exactly: 10^(n/2) for even n, isqrt(10^n) for odd n.
BigInt compute_m(std::uint64_t n);

// floor or ceil of r * sum(a), with r handled as an exact rational.
BigInt compute_beta(const std::vector<BigInt>& a, const Ratio& r, Rounding rounding);

// Draws n coefficients iid uniform on {1..M} from a SplitMix64 stream seeded
// with cfg.seed, then sets beta from cfg.r. Pure function of cfg.
Instance generate_instance(const GeneratorConfig& cfg);

// n / log2(max a_j); rejects max a_j < 2.
double density(const Instance& inst);

BigInt coefficient_sum(const Instance& inst);

// Canonical JSON form, e.g.
//   {"n":4,"a":["3","5","8","10"],"beta":"13","r":"1/2","rounding":"floor","seed":42}
// Coefficients and beta are decimal strings; meta fields appear only when the
// instance carries generation metadata. Serialization is byte-stable and
// from_json(to_json(x)) == x.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);

}  // namespace ssbnb
