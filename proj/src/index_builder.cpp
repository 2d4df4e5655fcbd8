#include "alcs/index_builder.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>

#include "alcs/suffix_tools.hpp"

namespace alcs {

LengthSet length_set(double epsilon, uint64_t max_len) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must be in (0,1)");
    }
    if (max_len < 1) {
        throw std::invalid_argument("max_len must be positive");
    }
    LengthSet out;
    out.epsilon = epsilon;
    out.max_len = max_len;
    // powl keeps the ceiling exact for any epsilon of practical interest:
    // the nearest integer to r^e stays ~1e-8 relative away while long
    // double error is ~1e-19.
    const long double ratio = 1.0L / (1.0L - static_cast<long double>(epsilon));
    const long double log_ratio = logl(ratio);
    if (!(log_ratio > 0.0L)) {  // epsilon below long double resolution
        out.values.push_back(1);
        return out;
    }
    uint64_t e = 0;
    for (;;) {
        long double v = powl(ratio, static_cast<long double>(e));
        if (v > 2.0L * static_cast<long double>(max_len) + 2.0L) break;
        auto d = static_cast<uint64_t>(ceill(v));
        if (d > max_len) break;
        if (out.values.empty() || d > out.values.back()) out.values.push_back(d);
        // Skip exponents that cannot move the ceiling (matters when the
        // ratio is barely above 1).
        uint64_t e_next = e + 1;
        long double jump = logl(static_cast<long double>(out.values.back())) / log_ratio;
        if (jump > static_cast<long double>(e_next) && jump < 4.0e18L) {
            e_next = static_cast<uint64_t>(jump);
        }
        e = e_next;
    }
    return out;
}

namespace {

// Construction-time view of one side of the index: the boundaries in sorted
// (co-lex or lex) order, the string length available at each, and the LCP
// between neighbours.
struct SortedBoundaries {
    std::vector<uint32_t> phrase_at;  // phrase index at sorted position 0..z-1
    std::vector<uint64_t> avail;      // usable string length per sorted position
    std::vector<uint32_t> adj_lcp;    // between sorted positions q and q+1
};

// Left side: boundary prefixes T[1..e_t] in co-lex order, i.e. suffixes of
// the reversed text.
SortedBoundaries sort_left(std::string_view text, const Lz77Parse& parse) {
    const size_t n = text.size();
    std::string rev(text.rbegin(), text.rend());
    auto sa = suffix_array(rev);
    auto rank = inverse_permutation(sa);
    auto lcp = lcp_array(rev, sa, rank);

    std::vector<uint32_t> positions(parse.z());
    for (size_t t = 0; t < parse.z(); ++t) {
        positions[t] = static_cast<uint32_t>(n - parse.ends[t]);
    }
    auto order = order_subset(rank, lcp, positions);

    SortedBoundaries out;
    out.phrase_at = std::move(order.sorted);
    out.adj_lcp = std::move(order.adj_lcp);
    out.avail.resize(parse.z());
    for (size_t q = 0; q < parse.z(); ++q) {
        uint32_t t = out.phrase_at[q];
        out.avail[q] = parse.ends[t];  // reversed prefix has length e_t
        // A neighbour LCP cannot exceed either string.
        if (q > 0) out.adj_lcp[q - 1] = std::min<uint32_t>(out.adj_lcp[q - 1],
                                                           std::min(out.avail[q - 1], out.avail[q]));
    }
    return out;
}

// Right side: boundary suffixes T[e_t+1..n] in lex order, the empty suffix
// (after the last phrase) first.
SortedBoundaries sort_right(std::string_view text, const Lz77Parse& parse) {
    const size_t n = text.size();
    const size_t z = parse.z();
    auto sa = suffix_array(text);
    auto rank = inverse_permutation(sa);
    auto lcp = lcp_array(text, sa, rank);

    // All but the last boundary have non-empty suffixes.
    std::vector<uint32_t> positions(z - 1);
    for (size_t t = 0; t + 1 < z; ++t) {
        positions[t] = static_cast<uint32_t>(parse.ends[t]);  // 0-based start of T[e_t+1..n]
    }
    auto order = order_subset(rank, lcp, positions);

    SortedBoundaries out;
    out.phrase_at.resize(z);
    out.avail.resize(z);
    out.adj_lcp.assign(z > 1 ? z - 1 : 0, 0);
    out.phrase_at[0] = static_cast<uint32_t>(z - 1);  // empty suffix ranks first
    out.avail[0] = 0;
    for (size_t q = 0; q + 1 < z; ++q) {
        uint32_t t = order.sorted[q];
        out.phrase_at[q + 1] = t;
        out.avail[q + 1] = n - parse.ends[t];
        if (q > 0) out.adj_lcp[q] = std::min<uint64_t>(order.adj_lcp[q - 1],
                                                       std::min(out.avail[q], out.avail[q + 1]));
    }
    return out;
}

// Groups sorted boundaries whose length-d strings coincide (neighbour LCP
// >= d) and emits one map entry per group. Returns false on a fingerprint
// collision between distinct groups.
bool emit_entries(const SortedBoundaries& sb, const LengthSet& lengths, bool left,
                  const Lz77Parse& parse, const PrefixFpTable& tfps,
                  std::vector<FingerprintRangeMap::Entry>& entries) {
    const size_t z = sb.phrase_at.size();
    for (uint64_t d : lengths.values) {
        size_t a = 0;
        while (a < z) {
            if (sb.avail[a] < d) {
                ++a;
                continue;
            }
            size_t b = a;
            while (b + 1 < z && sb.avail[b + 1] >= d && sb.adj_lcp[b] >= d) ++b;
            uint32_t t = sb.phrase_at[a];
            uint64_t e = parse.ends[t];
            uint64_t fp = left ? tfps.substring_fp(e - d + 1, e) : tfps.substring_fp(e + 1, e + d);
            entries.push_back({static_cast<uint32_t>(d), fp, static_cast<uint32_t>(a + 1),
                               static_cast<uint32_t>(b + 1)});
            a = b + 1;
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
        return std::tie(l.length, l.fp) < std::tie(r.length, r.fp);
    });
    for (size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].length == entries[i - 1].length && entries[i].fp == entries[i - 1].fp) {
            return false;  // two distinct strings, one key
        }
    }
    return true;
}

std::optional<FingerprintRangeMap> build_side(std::string_view text, const Lz77Parse& parse,
                                              const LengthSet& lengths, const KrParams& kr,
                                              bool left) {
    PrefixFpTable tfps(text, kr);
    SortedBoundaries sb = left ? sort_left(text, parse) : sort_right(text, parse);
    std::vector<FingerprintRangeMap::Entry> entries;
    if (!left && parse.z() > 0) {
        entries.push_back({0, 0, 1, static_cast<uint32_t>(parse.z())});
    }
    if (!emit_entries(sb, lengths, left, parse, tfps, entries)) return std::nullopt;
    return FingerprintRangeMap::from_entries(std::move(entries));
}

}  // namespace

RankedBoundaries rank_boundaries(std::string_view text, const Lz77Parse& parse) {
    RankedBoundaries out;
    const size_t z = parse.z();
    out.x_rank.assign(z, 0);
    out.y_rank.assign(z, 0);
    if (z == 0) return out;
    SortedBoundaries left = sort_left(text, parse);
    SortedBoundaries right = sort_right(text, parse);
    for (size_t q = 0; q < z; ++q) {
        out.x_rank[left.phrase_at[q]] = static_cast<uint32_t>(q + 1);
        out.y_rank[right.phrase_at[q]] = static_cast<uint32_t>(q + 1);
    }
    return out;
}

std::optional<FingerprintRangeMap> FingerprintRangeMap::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        return std::tie(l.length, l.fp) < std::tie(r.length, r.fp);
    });
    for (size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].length == entries[i - 1].length && entries[i].fp == entries[i - 1].fp) {
            return std::nullopt;
        }
    }
    FingerprintRangeMap map;
    map.entries_ = std::move(entries);
    return map;
}

RankRange FingerprintRangeMap::find(uint32_t length, uint64_t fp) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(length, fp),
                               [](const Entry& e, const std::pair<uint32_t, uint64_t>& key) {
                                   return std::tie(e.length, e.fp) < std::tie(key.first, key.second);
                               });
    if (it != entries_.end() && it->length == length && it->fp == fp) {
        return RankRange{it->lo, it->hi};
    }
    return RankRange{};
}

std::optional<FingerprintRangeMap> build_left_map(std::string_view text, const Lz77Parse& parse,
                                                  const RankedBoundaries& /*ranks*/,
                                                  const LengthSet& lengths, const KrParams& kr) {
    return build_side(text, parse, lengths, kr, /*left=*/true);
}

std::optional<FingerprintRangeMap> build_right_map(std::string_view text, const Lz77Parse& parse,
                                                   const RankedBoundaries& /*ranks*/,
                                                   const LengthSet& lengths, const KrParams& kr) {
    return build_side(text, parse, lengths, kr, /*left=*/false);
}

AlcsIndex build_index(std::string_view text, double epsilon, const BuildOptions& options) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must be in (0,1)");
    }
    if (options.max_pattern_len && *options.max_pattern_len == 0) {
        throw std::invalid_argument("max_pattern_len must be positive");
    }

    AlcsIndex idx;
    idx.epsilon = epsilon;
    idx.n = text.size();
    idx.build_seed = options.seed ? *options.seed
                                  : (static_cast<uint64_t>(std::random_device{}()) << 32 |
                                     std::random_device{}());
    idx.lengths.epsilon = epsilon;
    if (text.empty()) {
        idx.kr = KrParams::from_seed(idx.build_seed);
        return idx;
    }

    uint64_t max_len = idx.n;
    if (options.max_pattern_len) max_len = std::min(max_len, *options.max_pattern_len);
    idx.lengths = length_set(epsilon, max_len);

    Lz77Parse parse = lz77_parse(text);
    idx.z = parse.z();

    SortedBoundaries left = sort_left(text, parse);
    SortedBoundaries right = sort_right(text, parse);

    // Draw bases until neither side has a same-length fingerprint collision;
    // at this modulus a single draw all but always suffices.
    std::mt19937_64 eng(idx.build_seed);
    for (;;) {
        idx.kr = KrParams{kMersennePrime61, 2 + eng() % (kMersennePrime61 - 3)};
        PrefixFpTable tfps(text, idx.kr);
        std::vector<FingerprintRangeMap::Entry> le, re;
        re.push_back({0, 0, 1, static_cast<uint32_t>(idx.z)});
        if (!emit_entries(left, idx.lengths, true, parse, tfps, le)) continue;
        if (!emit_entries(right, idx.lengths, false, parse, tfps, re)) continue;
        auto ml = FingerprintRangeMap::from_entries(std::move(le));
        auto mr = FingerprintRangeMap::from_entries(std::move(re));
        assert(ml && mr);
        idx.map_left = std::move(*ml);
        idx.map_right = std::move(*mr);
        break;
    }

    if (idx.map_left.entry_count() > idx.z * idx.lengths.values.size() ||
        idx.map_right.entry_count() > idx.z * idx.lengths.values.size() + 1) {
        throw std::logic_error("alcs: fingerprint map exceeds entry bound");
    }

    std::vector<GridPoint> points(idx.z);
    for (size_t q = 0; q < idx.z; ++q) {
        uint32_t tx = left.phrase_at[q];
        points[tx].x = static_cast<uint32_t>(q + 1);
        uint32_t ty = right.phrase_at[q];
        points[ty].y = static_cast<uint32_t>(q + 1);
    }
    for (size_t t = 0; t < idx.z; ++t) points[t].boundary_pos = parse.ends[t];
    idx.grid = BoundaryGrid::build(points);
    return idx;
}

}  // namespace alcs
