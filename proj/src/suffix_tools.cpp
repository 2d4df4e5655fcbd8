#include "alcs/suffix_tools.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace alcs {

std::vector<uint32_t> suffix_array(std::string_view s) {
    const uint32_t n = static_cast<uint32_t>(s.size());
    std::vector<uint32_t> sa(n), rank(n), tmp(n), cnt;
    for (uint32_t i = 0; i < n; ++i) {
        sa[i] = i;
        rank[i] = static_cast<unsigned char>(s[i]);
    }
    if (n == 0) return sa;

    // Radix passes sort sa by (rank[i], rank[i+k]), with rank past the end
    // treated as -infinity (encoded by key 0, real ranks shifted up by 1).
    std::vector<uint32_t> key(n);
    for (uint32_t k = 1;; k <<= 1) {
        auto second_key = [&](uint32_t i) -> uint32_t {
            return i + k < n ? rank[i + k] + 1 : 0;
        };
        // Sort by the secondary key, then stable counting sort by the
        // primary rank.
        uint32_t max_key = 0;
        for (uint32_t i = 0; i < n; ++i) max_key = std::max(max_key, second_key(i));
        cnt.assign(max_key + 2, 0);
        for (uint32_t i = 0; i < n; ++i) cnt[second_key(i) + 1]++;
        std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
        for (uint32_t i = 0; i < n; ++i) tmp[cnt[second_key(i)]++] = i;

        uint32_t max_rank = 0;
        for (uint32_t i = 0; i < n; ++i) max_rank = std::max(max_rank, rank[i]);
        cnt.assign(max_rank + 2, 0);
        for (uint32_t i = 0; i < n; ++i) cnt[rank[i] + 1]++;
        std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
        for (uint32_t i = 0; i < n; ++i) sa[cnt[rank[tmp[i]]]++] = tmp[i];

        key[sa[0]] = 0;
        for (uint32_t r = 1; r < n; ++r) {
            uint32_t a = sa[r - 1], b = sa[r];
            bool same = rank[a] == rank[b] && second_key(a) == second_key(b);
            key[b] = key[a] + (same ? 0 : 1);
        }
        rank.swap(key);
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

std::vector<uint32_t> inverse_permutation(const std::vector<uint32_t>& sa) {
    std::vector<uint32_t> rank(sa.size());
    for (uint32_t r = 0; r < sa.size(); ++r) rank[sa[r]] = r;
    return rank;
}

std::vector<uint32_t> lcp_array(std::string_view s, const std::vector<uint32_t>& sa,
                                const std::vector<uint32_t>& rank) {
    const uint32_t n = static_cast<uint32_t>(s.size());
    std::vector<uint32_t> lcp(n, 0);
    uint32_t h = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        uint32_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

SubsetOrder order_subset(const std::vector<uint32_t>& rank, const std::vector<uint32_t>& lcp,
                         const std::vector<uint32_t>& positions) {
    SubsetOrder out;
    const size_t k = positions.size();
    out.sorted.resize(k);
    std::iota(out.sorted.begin(), out.sorted.end(), 0);
    std::sort(out.sorted.begin(), out.sorted.end(),
              [&](uint32_t a, uint32_t b) { return rank[positions[a]] < rank[positions[b]]; });
    if (k < 2) return out;
    out.adj_lcp.resize(k - 1);
    for (size_t q = 0; q + 1 < k; ++q) {
        uint32_t lo = rank[positions[out.sorted[q]]];
        uint32_t hi = rank[positions[out.sorted[q + 1]]];
        assert(lo < hi);
        uint32_t m = lcp[lo + 1];
        for (uint32_t r = lo + 2; r <= hi; ++r) m = std::min(m, lcp[r]);
        out.adj_lcp[q] = m;
    }
    return out;
}

}  // namespace alcs
