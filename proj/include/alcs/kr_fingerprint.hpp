#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace alcs {

inline constexpr uint64_t kMersennePrime61 = (uint64_t{1} << 61) - 1;

// Parameters of the polynomial fingerprint. Production indexes fix the
// modulus to 2^61 - 1 and draw the base from a recorded seed; tests may
// fill in small values directly.
struct KrParams {
    uint64_t modulus = kMersennePrime61;
    uint64_t base = 0;

    // Base drawn uniformly from [2, modulus - 2].
    static KrParams from_seed(uint64_t seed);

    bool operator==(const KrParams&) const = default;
};

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t modulus);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t modulus);

// fp(s) = sum s[t] * base^(|s|-t) mod modulus; fp of the empty string is 0.
uint64_t fp_of(std::string_view s, const KrParams& params);

// Fingerprints of every prefix of a fixed string, plus powers of the base,
// so any substring fingerprint is one multiply away.
class PrefixFpTable {
public:
    PrefixFpTable() = default;
    PrefixFpTable(std::string_view s, const KrParams& params);

    // Fingerprint of s[i..j], 1-based inclusive; i == j + 1 selects the
    // empty substring. Throws std::out_of_range on anything else invalid.
    uint64_t substring_fp(size_t i, size_t j) const;

    size_t text_size() const { return prefix_fps_.empty() ? 0 : prefix_fps_.size() - 1; }
    const std::vector<uint64_t>& prefix_fps() const { return prefix_fps_; }
    const std::vector<uint64_t>& powers() const { return powers_; }
    const KrParams& params() const { return params_; }

private:
    KrParams params_;
    std::vector<uint64_t> prefix_fps_;  // n + 1 entries, [0] = 0
    std::vector<uint64_t> powers_;      // n + 1 entries, [t] = base^t
};

}  // namespace alcs
