#pragma once

#include <cstdint>
#include <string>

namespace alcs {

// Recipe for a synthetic repetitive text: a random base block repeated with
// sparse point mutations. Small alphabets map to 'a', 'b', ...
struct CorpusSpec {
    uint64_t base_len = 1024;
    uint64_t repeats = 64;
    double mut_rate = 0.001;
    uint64_t seed = 7;
    uint32_t alphabet = 4;

    bool operator==(const CorpusSpec&) const = default;
};

// Deterministic for a given spec; mut_rate 0 reproduces the base block
// exactly. Throws std::invalid_argument for alphabet outside [1, 26] or
// mut_rate outside [0, 1].
std::string generate_corpus(const CorpusSpec& spec);

}  // namespace alcs
