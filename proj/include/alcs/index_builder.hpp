#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "alcs/kr_fingerprint.hpp"
#include "alcs/lz_parse.hpp"
#include "alcs/range_grid.hpp"

namespace alcs {

// The geometric grid of candidate lengths ceil((1/(1-epsilon))^e), e >= 0,
// deduplicated and truncated at max_len.
struct LengthSet {
    std::vector<uint64_t> values;  // ascending, distinct, all in [1, max_len]
    double epsilon = 0.0;
    uint64_t max_len = 0;

    bool operator==(const LengthSet&) const = default;
};

// Throws std::invalid_argument unless 0 < epsilon < 1 and max_len >= 1.
LengthSet length_set(double epsilon, uint64_t max_len);

// Per phrase t: the co-lex rank of the prefix T[1..e_t] among all z such
// prefixes, and the lex rank of the suffix T[e_t+1..n] among all z boundary
// suffixes (the empty suffix, after the last phrase, ranks first).
struct RankedBoundaries {
    std::vector<uint32_t> x_rank;
    std::vector<uint32_t> y_rank;
};

RankedBoundaries rank_boundaries(std::string_view text, const Lz77Parse& parse);

// Closed 1-based rank interval; lo > hi encodes a miss.
struct RankRange {
    uint32_t lo = 1;
    uint32_t hi = 0;

    bool empty() const { return lo > hi; }
    bool operator==(const RankRange&) const = default;
};

// Map from (substring length, fingerprint) to the contiguous rank interval
// of phrase boundaries carrying that substring. Entries are kept sorted by
// (length, fingerprint); lookups binary-search.
class FingerprintRangeMap {
public:
    struct Entry {
        uint32_t length = 0;
        uint64_t fp = 0;
        uint32_t lo = 1;
        uint32_t hi = 0;

        bool operator==(const Entry&) const = default;
    };

    FingerprintRangeMap() = default;

    // Sorts the entries; returns nullopt when two entries collide on the
    // same (length, fingerprint) key.
    static std::optional<FingerprintRangeMap> from_entries(std::vector<Entry> entries);

    RankRange find(uint32_t length, uint64_t fp) const;
    size_t entry_count() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    bool operator==(const FingerprintRangeMap&) const = default;

private:
    std::vector<Entry> entries_;
};

// Per boundary t and per grid length d <= e_t: the length-d substring
// ending at e_t, keyed to the co-lex rank interval of boundaries sharing it.
// Returns nullopt on a fingerprint collision (caller redraws the base).
std::optional<FingerprintRangeMap> build_left_map(std::string_view text, const Lz77Parse& parse,
                                                  const RankedBoundaries& ranks,
                                                  const LengthSet& lengths, const KrParams& kr);

// Per boundary t and per grid length d with e_t + d <= n: the length-d
// substring starting at e_t + 1, keyed to the lex rank interval of boundary
// suffixes starting with it; plus the empty-string entry (0, 0) -> [1, z].
std::optional<FingerprintRangeMap> build_right_map(std::string_view text, const Lz77Parse& parse,
                                                   const RankedBoundaries& ranks,
                                                   const LengthSet& lengths, const KrParams& kr);

struct BuildOptions {
    std::optional<uint64_t> seed;             // default: OS entropy
    std::optional<uint64_t> max_pattern_len;  // caps the length grid at min(n, M)
};

// The complete index. Holds no copy of the text; everything here is
// immutable after construction and safe for concurrent reads.
struct AlcsIndex {
    KrParams kr;
    uint64_t build_seed = 0;
    double epsilon = 0.0;
    uint64_t n = 0;
    uint64_t z = 0;
    LengthSet lengths;
    FingerprintRangeMap map_left;
    FingerprintRangeMap map_right;
    BoundaryGrid grid;

    bool operator==(const AlcsIndex&) const = default;
};

// Throws std::invalid_argument on epsilon outside (0,1) or max_pattern_len
// of zero. O(n)-sized scaffolding (suffix arrays, the text itself) is
// discarded before returning.
AlcsIndex build_index(std::string_view text, double epsilon, const BuildOptions& options = {});

}  // namespace alcs
