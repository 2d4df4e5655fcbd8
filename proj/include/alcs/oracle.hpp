#pragma once

#include <cstdint>
#include <compare>
#include <string_view>
#include <vector>

#include "alcs/index_builder.hpp"

namespace alcs {

// Exact longest common substring. Spans are 1-based inclusive and empty
// (start > end) when length is 0.
struct LcsAnswer {
    uint64_t length = 0;
    uint64_t p_start = 1;
    uint64_t p_end = 0;
    uint64_t t_start = 1;
    uint64_t t_end = 0;

    bool operator==(const LcsAnswer&) const = default;
};

// Dynamic programming over common suffixes, rolling two rows of the shorter
// side. Deterministic tie-breaking among maximal answers: smallest p_start,
// then smallest t_start.
LcsAnswer exact_lcs(std::string_view pattern, std::string_view text);

// A candidate split of the pattern: left part P[i..j], right part P[j+1..k]
// (empty when k == j).
struct CandidateTriple {
    uint64_t i = 0;
    uint64_t j = 0;
    uint64_t k = 0;

    auto operator<=>(const CandidateTriple&) const = default;
};

// Every triple whose left part ends at some phrase boundary of the text and
// whose right part follows the same boundary, found by direct string
// comparison against the reference parse. No fingerprints, no grid; this is
// the ground truth the probabilistic query pipeline is tested against.
// Intended for desk-scale inputs (cost ~ |pattern| * |lengths|^2 * z).
std::vector<CandidateTriple> brute_candidates(std::string_view text, std::string_view pattern,
                                              const LengthSet& lengths);

}  // namespace alcs
