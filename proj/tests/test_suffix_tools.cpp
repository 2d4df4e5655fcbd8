#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "alcs/suffix_tools.hpp"

using namespace alcs;

namespace {

std::vector<uint32_t> suffix_array_brute(std::string_view s) {
    std::vector<uint32_t> sa(s.size());
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(),
              [&](uint32_t a, uint32_t b) { return s.substr(a) < s.substr(b); });
    return sa;
}

uint32_t lcp_brute(std::string_view a, std::string_view b) {
    uint32_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
}

std::string random_string(std::mt19937_64& eng, size_t max_len, int sigma) {
    std::string s(eng() % (max_len + 1), 'a');
    for (char& c : s) c = static_cast<char>('a' + eng() % sigma);
    return s;
}

}  // namespace

TEST_CASE("suffix array of known strings") {
    CHECK(suffix_array("banana") == std::vector<uint32_t>{5, 3, 1, 0, 4, 2});
    CHECK(suffix_array("abaab") == std::vector<uint32_t>{2, 3, 0, 4, 1});
    CHECK(suffix_array("") == std::vector<uint32_t>{});
    CHECK(suffix_array("a") == std::vector<uint32_t>{0});
    CHECK(suffix_array("aaaa") == std::vector<uint32_t>{3, 2, 1, 0});
}

TEST_CASE("suffix array matches brute force on random strings") {
    std::mt19937_64 eng(101);
    for (int round = 0; round < 120; ++round) {
        const std::string s = random_string(eng, 200, round % 2 ? 2 : 4);
        CHECK(suffix_array(s) == suffix_array_brute(s));
    }
}

TEST_CASE("inverse permutation") {
    const std::vector<uint32_t> sa{2, 0, 1};
    CHECK(inverse_permutation(sa) == std::vector<uint32_t>{1, 2, 0});
}

TEST_CASE("lcp array of banana") {
    const std::string s = "banana";
    const auto sa = suffix_array(s);
    const auto rank = inverse_permutation(sa);
    CHECK(lcp_array(s, sa, rank) == std::vector<uint32_t>{0, 1, 3, 0, 0, 2});
}

TEST_CASE("lcp array matches pairwise comparison on random strings") {
    std::mt19937_64 eng(202);
    for (int round = 0; round < 60; ++round) {
        const std::string s = random_string(eng, 150, 2);
        if (s.empty()) continue;
        const auto sa = suffix_array(s);
        const auto rank = inverse_permutation(sa);
        const auto lcp = lcp_array(s, sa, rank);
        REQUIRE(lcp.size() == s.size());
        CHECK(lcp[0] == 0);
        for (size_t r = 1; r < sa.size(); ++r) {
            CHECK(lcp[r] == lcp_brute(std::string_view(s).substr(sa[r - 1]),
                                      std::string_view(s).substr(sa[r])));
        }
    }
}

TEST_CASE("order_subset sorts positions and reports adjacent lcps") {
    const std::string s = "abaab";
    const auto sa = suffix_array(s);
    const auto rank = inverse_permutation(sa);
    const auto lcp = lcp_array(s, sa, rank);
    // Suffixes at 0-based positions 0 ("abaab"), 2 ("aab"), 4 ("b").
    const std::vector<uint32_t> positions{0, 2, 4};
    const SubsetOrder order = order_subset(rank, lcp, positions);
    CHECK(order.sorted == std::vector<uint32_t>{1, 0, 2});  // aab < abaab < b
    REQUIRE(order.adj_lcp.size() == 2);
    CHECK(order.adj_lcp[0] == 1);  // lcp(aab, abaab)
    CHECK(order.adj_lcp[1] == 0);  // lcp(abaab, b)
}

TEST_CASE("order_subset matches brute force on random subsets") {
    std::mt19937_64 eng(303);
    for (int round = 0; round < 60; ++round) {
        std::string s = random_string(eng, 120, 2);
        if (s.empty()) continue;
        const auto sa = suffix_array(s);
        const auto rank = inverse_permutation(sa);
        const auto lcp = lcp_array(s, sa, rank);

        std::vector<uint32_t> positions;
        for (uint32_t p = 0; p < s.size(); ++p) {
            if (eng() % 3 == 0) positions.push_back(p);
        }
        if (positions.empty()) continue;
        const SubsetOrder order = order_subset(rank, lcp, positions);

        auto expected = positions;
        std::sort(expected.begin(), expected.end(), [&](uint32_t a, uint32_t b) {
            return std::string_view(s).substr(a) < std::string_view(s).substr(b);
        });
        REQUIRE(order.sorted.size() == positions.size());
        for (size_t q = 0; q < order.sorted.size(); ++q) {
            CHECK(positions[order.sorted[q]] == expected[q]);
        }
        for (size_t q = 0; q + 1 < expected.size(); ++q) {
            CHECK(order.adj_lcp[q] == lcp_brute(std::string_view(s).substr(expected[q]),
                                                std::string_view(s).substr(expected[q + 1])));
        }
    }
}
