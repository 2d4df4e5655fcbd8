#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "alcs/index_builder.hpp"
#include "alcs/kr_fingerprint.hpp"

namespace alcs {

// Answer to one pattern query. Spans are 1-based inclusive; p_start > p_end
// encodes the empty answer, in which case t_pos is absent.
struct QueryResult {
    uint64_t p_start = 1;
    uint64_t p_end = 0;
    uint64_t length = 0;               // p_end - p_start + 1, 0 when empty
    std::optional<uint64_t> t_pos;     // start of one occurrence in the text

    bool operator==(const QueryResult&) const = default;
};

// Operation counters, additive across queries when reused. grid_checks is
// the number of rectangle-emptiness tests, the observable for query-cost
// scaling; candidates counts candidate_check calls.
struct QueryStats {
    uint64_t map_lookups = 0;
    uint64_t grid_checks = 0;
    uint64_t candidates = 0;

    QueryStats& operator+=(const QueryStats& other) {
        map_lookups += other.map_lookups;
        grid_checks += other.grid_checks;
        candidates += other.candidates;
        return *this;
    }
    bool operator==(const QueryStats&) const = default;
};

// Tests the candidate split P[i..j] + P[j+1..k]: both parts must be mapped
// contexts and the rectangle of their rank intervals must hold a grid
// point. Returns the 1-based text position where P[i..k] occurs, or nullopt.
// k == j selects the empty right part. Requires j - i + 1 and k - j to be
// grid lengths (k - j may also be 0).
std::optional<uint64_t> candidate_check(const AlcsIndex& index, const PrefixFpTable& pattern_fps,
                                        uint64_t i, uint64_t j, uint64_t k,
                                        QueryStats* stats = nullptr);

// Exhaustive baseline: every split position times every admissible pair of
// grid lengths. Ties between maximum-length answers go to the smallest
// p_start, then the smallest right-part length.
QueryResult query_naive(const AlcsIndex& index, std::string_view pattern,
                        QueryStats* stats = nullptr);

// Pruned search; returns an answer of the same length as query_naive (the
// reported occurrence may differ). Two passes per split position share the
// running best length ell:
//   Pass A (left part at least as long as the right) walks left lengths
//   upward starting past ell/2 and stops at the first unmapped one; for a
//   mapped left part, right lengths walk upward from the first that beats
//   ell and stop at the first failing candidate.
//   Pass B mirrors this with the roles of the two parts swapped.
// Both stopping rules are justified by interval nesting: a context's
// extension can only shrink its rank interval, so longer parts inherit
// every miss.
QueryResult query_pruned(const AlcsIndex& index, std::string_view pattern,
                         QueryStats* stats = nullptr);

// True iff the answer's pattern span really occurs at t_pos in the text
// (vacuously true for the empty answer). Guards against fingerprint
// collisions, which the probabilistic structures cannot rule out.
bool verify_result(const QueryResult& result, std::string_view pattern, std::string_view text);

}  // namespace alcs
