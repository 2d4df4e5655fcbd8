#include "alcs/query_engine.hpp"

#include <algorithm>
#include <cassert>

namespace alcs {

std::optional<uint64_t> candidate_check(const AlcsIndex& index, const PrefixFpTable& pattern_fps,
                                        uint64_t i, uint64_t j, uint64_t k, QueryStats* stats) {
    assert(i >= 1 && i <= j && j <= k);
    const uint64_t len_l = j - i + 1;
    const uint64_t len_r = k - j;
    if (stats != nullptr) stats->candidates++;

    if (stats != nullptr) stats->map_lookups++;
    RankRange xr = index.map_left.find(static_cast<uint32_t>(len_l), pattern_fps.substring_fp(i, j));
    if (xr.empty()) return std::nullopt;

    if (stats != nullptr) stats->map_lookups++;
    const uint64_t right_fp = len_r == 0 ? 0 : pattern_fps.substring_fp(j + 1, k);
    RankRange yr = index.map_right.find(static_cast<uint32_t>(len_r), right_fp);
    if (yr.empty()) return std::nullopt;

    if (stats != nullptr) stats->grid_checks++;
    if (!index.grid.is_nonempty(xr.lo, xr.hi, yr.lo, yr.hi)) return std::nullopt;
    auto point = index.grid.report_any(xr.lo, xr.hi, yr.lo, yr.hi);
    assert(point.has_value());
    assert(point->boundary_pos >= len_l);
    return point->boundary_pos - len_l + 1;
}

QueryResult query_naive(const AlcsIndex& index, std::string_view pattern, QueryStats* stats) {
    QueryResult best;
    if (pattern.empty() || index.z == 0) return best;
    const uint64_t m = pattern.size();
    const PrefixFpTable fps(pattern, index.kr);
    const auto& grid_lengths = index.lengths.values;

    uint64_t best_len_r = 0;
    for (uint64_t j = 1; j <= m; ++j) {
        for (uint64_t len_l : grid_lengths) {
            if (len_l > j) break;
            const uint64_t i = j - len_l + 1;
            for (size_t ri = 0; ri <= grid_lengths.size(); ++ri) {
                const uint64_t len_r = ri == 0 ? 0 : grid_lengths[ri - 1];
                if (len_r > m - j) break;
                auto t_pos = candidate_check(index, fps, i, j, j + len_r, stats);
                if (!t_pos) continue;
                const uint64_t len = len_l + len_r;
                const bool better =
                    len > best.length ||
                    (len == best.length &&
                     (i < best.p_start || (i == best.p_start && len_r < best_len_r)));
                if (better) {
                    best = {i, j + len_r, len, t_pos};
                    best_len_r = len_r;
                }
            }
        }
    }
    return best;
}

QueryResult query_pruned(const AlcsIndex& index, std::string_view pattern, QueryStats* stats) {
    QueryResult best;
    if (pattern.empty() || index.z == 0) return best;
    const uint64_t m = pattern.size();
    const PrefixFpTable fps(pattern, index.kr);
    const auto& grid_lengths = index.lengths.values;

    uint64_t ell = 0;
    auto record = [&](uint64_t i, uint64_t k, uint64_t t_pos) {
        if (k - i + 1 > ell) {
            ell = k - i + 1;
            best = {i, k, ell, t_pos};
        }
    };

    for (uint64_t j = 1; j <= m; ++j) {
        // Pass A: left part at least as long as the right part.
        for (uint64_t len_l : grid_lengths) {
            if (len_l > j) break;
            if (2 * len_l <= ell) continue;  // cannot beat ell in this pass
            const uint64_t i = j - len_l + 1;
            if (stats != nullptr) stats->map_lookups++;
            if (index.map_left.find(static_cast<uint32_t>(len_l), fps.substring_fp(i, j)).empty()) {
                break;  // longer left parts are unmapped too
            }
            const uint64_t cap_r = std::min(len_l, m - j);
            bool failed = false;
            for (size_t ri = 0; !failed && ri <= grid_lengths.size(); ++ri) {
                const uint64_t len_r = ri == 0 ? 0 : grid_lengths[ri - 1];
                if (len_r > cap_r) break;
                if (len_l + len_r <= ell) continue;
                auto t_pos = candidate_check(index, fps, i, j, j + len_r, stats);
                if (t_pos) {
                    record(i, j + len_r, *t_pos);
                } else {
                    failed = true;  // longer right parts fail too
                }
            }
        }
        // Pass B: right part at least as long as the left part.
        for (uint64_t len_r : grid_lengths) {
            if (len_r > m - j) break;
            if (2 * len_r <= ell) continue;
            if (stats != nullptr) stats->map_lookups++;
            if (index.map_right
                    .find(static_cast<uint32_t>(len_r), fps.substring_fp(j + 1, j + len_r))
                    .empty()) {
                break;
            }
            const uint64_t cap_l = std::min(len_r, j);
            for (uint64_t len_l : grid_lengths) {
                if (len_l > cap_l) break;
                if (len_l + len_r <= ell) continue;
                auto t_pos = candidate_check(index, fps, j - len_l + 1, j, j + len_r, stats);
                if (!t_pos) break;
                record(j - len_l + 1, j + len_r, *t_pos);
            }
        }
    }
    return best;
}

bool verify_result(const QueryResult& result, std::string_view pattern, std::string_view text) {
    if (result.length == 0) {
        return result.p_start > result.p_end && !result.t_pos.has_value();
    }
    if (result.p_start < 1 || result.p_start > result.p_end || result.p_end > pattern.size()) {
        return false;
    }
    if (result.length != result.p_end - result.p_start + 1) return false;
    if (!result.t_pos.has_value()) return false;
    const uint64_t t = *result.t_pos;
    if (t < 1 || t - 1 + result.length > text.size()) return false;
    return pattern.substr(result.p_start - 1, result.length) ==
           text.substr(t - 1, result.length);
}

}  // namespace alcs
