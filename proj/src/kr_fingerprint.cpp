#include "alcs/kr_fingerprint.hpp"

#include <random>
#include <stdexcept>

namespace alcs {

KrParams KrParams::from_seed(uint64_t seed) {
    std::mt19937_64 eng(seed);
    // Plain modulo keeps the draw reproducible across standard libraries;
    // the bias is immaterial at this modulus.
    uint64_t base = 2 + eng() % (kMersennePrime61 - 3);
    return KrParams{kMersennePrime61, base};
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t modulus) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t modulus) {
    uint64_t result = 1 % modulus;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

uint64_t fp_of(std::string_view s, const KrParams& params) {
    uint64_t fp = 0;
    for (unsigned char c : s) {
        fp = (mul_mod(fp, params.base, params.modulus) + c) % params.modulus;
    }
    return fp;
}

PrefixFpTable::PrefixFpTable(std::string_view s, const KrParams& params) : params_(params) {
    prefix_fps_.resize(s.size() + 1);
    powers_.resize(s.size() + 1);
    prefix_fps_[0] = 0;
    powers_[0] = 1 % params.modulus;
    for (size_t t = 1; t <= s.size(); ++t) {
        unsigned char c = static_cast<unsigned char>(s[t - 1]);
        prefix_fps_[t] = (mul_mod(prefix_fps_[t - 1], params.base, params.modulus) + c) % params.modulus;
        powers_[t] = mul_mod(powers_[t - 1], params.base, params.modulus);
    }
}

uint64_t PrefixFpTable::substring_fp(size_t i, size_t j) const {
    size_t n = text_size();
    if (i < 1 || j > n || i > j + 1) {
        throw std::out_of_range("substring_fp: indices out of range");
    }
    if (i == j + 1) return 0;
    // fp(s[i..j]) = prefix[j] - prefix[i-1] * base^(j-i+1)
    uint64_t shifted = mul_mod(prefix_fps_[i - 1], powers_[j - i + 1], params_.modulus);
    uint64_t fp = prefix_fps_[j] + params_.modulus - shifted;
    return fp >= params_.modulus ? fp - params_.modulus : fp;
}

}  // namespace alcs
