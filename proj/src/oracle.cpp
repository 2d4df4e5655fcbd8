#include "alcs/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "alcs/lz_parse.hpp"

namespace alcs {

LcsAnswer exact_lcs(std::string_view pattern, std::string_view text) {
    LcsAnswer best;
    if (pattern.empty() || text.empty()) return best;

    // Roll rows over the shorter string to keep memory at O(min(m, n)).
    std::string_view outer = pattern;
    std::string_view inner = text;
    const bool swapped = inner.size() > outer.size();
    if (swapped) std::swap(outer, inner);

    std::vector<uint64_t> prev(inner.size() + 1, 0);
    std::vector<uint64_t> cur(inner.size() + 1, 0);
    for (size_t a = 1; a <= outer.size(); ++a) {
        for (size_t b = 1; b <= inner.size(); ++b) {
            const uint64_t len = outer[a - 1] == inner[b - 1] ? prev[b - 1] + 1 : 0;
            cur[b] = len;
            if (len == 0) continue;
            const uint64_t p_end = swapped ? b : a;
            const uint64_t t_end = swapped ? a : b;
            const uint64_t p_start = p_end - len + 1;
            const uint64_t t_start = t_end - len + 1;
            const bool better =
                len > best.length ||
                (len == best.length &&
                 (p_start < best.p_start || (p_start == best.p_start && t_start < best.t_start)));
            if (better) best = {len, p_start, p_end, t_start, t_end};
        }
        std::swap(prev, cur);
    }
    return best;
}

std::vector<CandidateTriple> brute_candidates(std::string_view text, std::string_view pattern,
                                              const LengthSet& lengths) {
    std::vector<CandidateTriple> out;
    if (text.empty() || pattern.empty()) return out;
    const Lz77Parse parse = lz77_parse_naive(text);
    const auto& grid_lengths = lengths.values;
    const uint64_t m = pattern.size();
    const uint64_t n = text.size();

    // (length, substring) -> ascending boundary ids carrying that substring
    // as a left (ending at the boundary) or right (starting after it)
    // context.
    std::map<std::pair<uint64_t, std::string>, std::vector<uint32_t>> left_ids;
    std::map<std::pair<uint64_t, std::string>, std::vector<uint32_t>> right_ids;
    for (uint32_t t = 0; t < parse.ends.size(); ++t) {
        const uint64_t e = parse.ends[t];
        for (uint64_t d : grid_lengths) {
            if (d <= e) left_ids[{d, std::string(text.substr(e - d, d))}].push_back(t);
            if (e + d <= n) right_ids[{d, std::string(text.substr(e, d))}].push_back(t);
        }
    }

    auto share_boundary = [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        size_t ia = 0;
        size_t ib = 0;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia] == b[ib]) return true;
            if (a[ia] < b[ib]) {
                ++ia;
            } else {
                ++ib;
            }
        }
        return false;
    };

    for (uint64_t j = 1; j <= m; ++j) {
        for (uint64_t len_l : grid_lengths) {
            if (len_l > j) break;
            auto lit = left_ids.find({len_l, std::string(pattern.substr(j - len_l, len_l))});
            if (lit == left_ids.end()) continue;
            out.push_back({j - len_l + 1, j, j});  // empty right part co-occurs anywhere
            for (uint64_t len_r : grid_lengths) {
                if (len_r > m - j) break;
                auto rit = right_ids.find({len_r, std::string(pattern.substr(j, len_r))});
                if (rit == right_ids.end()) continue;
                if (share_boundary(lit->second, rit->second)) {
                    out.push_back({j - len_l + 1, j, j + len_r});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace alcs
