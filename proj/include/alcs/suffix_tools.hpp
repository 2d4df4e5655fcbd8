#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

// Suffix-array scaffolding shared by the parser and the index builder.
// Everything here is construction-time only and is discarded once the
// index structures are assembled.

namespace alcs {

// Prefix-doubling suffix array, O(n log n) with radix sorting per round.
// Suffix starts are 0-based; ties are impossible (suffixes are distinct).
std::vector<uint32_t> suffix_array(std::string_view s);

// rank[i] = position of suffix i in the suffix array.
std::vector<uint32_t> inverse_permutation(const std::vector<uint32_t>& sa);

// Kasai: lcp[r] = LCP(suffix sa[r-1], suffix sa[r]) for r >= 1; lcp[0] = 0.
std::vector<uint32_t> lcp_array(std::string_view s, const std::vector<uint32_t>& sa,
                                const std::vector<uint32_t>& rank);

// Lexicographic order of a subset of suffixes, with the LCP between
// consecutive subset members (range-minimum over the full LCP array,
// computed in one scan).
struct SubsetOrder {
    std::vector<uint32_t> sorted;   // indices into `positions`, lex ascending
    std::vector<uint32_t> adj_lcp;  // adj_lcp[q] = LCP(sorted[q], sorted[q+1])
};

SubsetOrder order_subset(const std::vector<uint32_t>& rank, const std::vector<uint32_t>& lcp,
                         const std::vector<uint32_t>& positions);

}  // namespace alcs
