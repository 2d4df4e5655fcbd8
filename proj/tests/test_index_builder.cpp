#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "alcs/index_builder.hpp"
#include "alcs/kr_fingerprint.hpp"
#include "alcs/lz_parse.hpp"

using namespace alcs;

namespace {

std::string random_string(std::mt19937_64& eng, size_t max_len, int sigma) {
    std::string s(eng() % (max_len + 1), 'a');
    for (char& c : s) c = static_cast<char>('a' + eng() % sigma);
    return s;
}

// Boundary ranks recomputed by direct string sorting, no suffix arrays.
struct BruteRanks {
    std::vector<uint32_t> x_rank;
    std::vector<uint32_t> y_rank;
};

BruteRanks brute_ranks(std::string_view text, const Lz77Parse& parse) {
    const size_t z = parse.ends.size();
    std::vector<uint32_t> order(z);
    BruteRanks out;
    out.x_rank.resize(z);
    out.y_rank.resize(z);

    for (size_t t = 0; t < z; ++t) order[t] = static_cast<uint32_t>(t);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        std::string pa(text.substr(0, parse.ends[a]));
        std::string pb(text.substr(0, parse.ends[b]));
        std::reverse(pa.begin(), pa.end());
        std::reverse(pb.begin(), pb.end());
        return pa < pb;
    });
    for (size_t r = 0; r < z; ++r) out.x_rank[order[r]] = static_cast<uint32_t>(r + 1);

    for (size_t t = 0; t < z; ++t) order[t] = static_cast<uint32_t>(t);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return text.substr(parse.ends[a]) < text.substr(parse.ends[b]);
    });
    for (size_t r = 0; r < z; ++r) out.y_rank[order[r]] = static_cast<uint32_t>(r + 1);
    return out;
}

}  // namespace

TEST_CASE("length_set validates its arguments") {
    CHECK_THROWS_AS(length_set(0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(length_set(1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(length_set(-0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(length_set(1.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(length_set(0.5, 0), std::invalid_argument);
}

TEST_CASE("length_set frozen small sequences") {
    CHECK(length_set(0.5, 10).values == std::vector<uint64_t>{1, 2, 4, 8});
    CHECK(length_set(0.5, 5).values == std::vector<uint64_t>{1, 2, 4});
    CHECK(length_set(0.25, 8).values == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 8});
    CHECK(length_set(1.0 / 3.0, 100).values ==
          std::vector<uint64_t>{1, 2, 3, 4, 6, 8, 12, 18, 26, 39, 58, 87});
    // 1/(1-0.9) rounds above 10 in binary64, so the second value is 11.
    CHECK(length_set(0.9, 100).values == std::vector<uint64_t>{1, 11});
    CHECK(length_set(0.1, 200).values ==
          std::vector<uint64_t>{1,  2,  3,  4,  5,  6,  7,  8,   9,   10,  11,  12,  13,
                                14, 16, 18, 20, 22, 24, 27, 30,  33,  36,  40,  45,  50,
                                55, 61, 68, 76, 84, 93, 104, 115, 128, 142, 158, 175, 195});
}

TEST_CASE("length_set frozen large sequences") {
    const LengthSet quarter = length_set(0.25, uint64_t{1} << 20);
    REQUIRE(quarter.values.size() == 48);
    CHECK(quarter.values[30] == 7467);
    CHECK(quarter.values[31] == 9955);
    CHECK(quarter.values[32] == 13274);
    CHECK(quarter.values[33] == 17698);
    CHECK(quarter.values[34] == 23597);
    CHECK(quarter.values[35] == 31463);

    const LengthSet tenth = length_set(0.1, uint64_t{1} << 20);
    REQUIRE(tenth.values.size() == 120);
    CHECK(tenth.values[100] == 133303);
}

TEST_CASE("length_set covers every target length") {
    // For each L there must be a grid length d with (1-eps)L < d <= L; this
    // is what makes rounding a candidate length down to the grid safe.
    for (double eps : {0.5, 0.25, 0.1, 1.0 / 3.0, 0.7}) {
        const LengthSet lengths = length_set(eps, 400);
        CHECK(lengths.values.front() == 1);
        for (uint64_t big = 1; big <= 400; ++big) {
            bool covered = false;
            for (uint64_t d : lengths.values) {
                if (d <= big && static_cast<double>(d) > (1.0 - eps) * static_cast<double>(big)) {
                    covered = true;
                    break;
                }
            }
            CHECK_MESSAGE(covered, "eps=", eps, " L=", big);
        }
    }
}

TEST_CASE("length_set values are ascending, distinct, bounded") {
    std::mt19937_64 eng(42);
    for (int round = 0; round < 40; ++round) {
        const double eps = 0.02 + 0.96 * static_cast<double>(eng() % 1000) / 1000.0;
        const uint64_t max_len = 1 + eng() % 5000;
        const LengthSet lengths = length_set(eps, max_len);
        REQUIRE(!lengths.values.empty());
        CHECK(lengths.values.front() == 1);
        CHECK(lengths.values.back() <= max_len);
        for (size_t i = 1; i < lengths.values.size(); ++i) {
            CHECK(lengths.values[i - 1] < lengths.values[i]);
        }
    }
}

TEST_CASE("rank_boundaries on the running example") {
    const std::string text = "abaab";
    const Lz77Parse parse = lz77_parse(text);
    const RankedBoundaries ranks = rank_boundaries(text, parse);
    CHECK(ranks.x_rank == std::vector<uint32_t>{1, 3, 2, 4});
    CHECK(ranks.y_rank == std::vector<uint32_t>{4, 2, 3, 1});
}

TEST_CASE("rank_boundaries matches direct sorting on random strings") {
    std::mt19937_64 eng(2024);
    for (int round = 0; round < 60; ++round) {
        const std::string text = random_string(eng, 200, 2 + round % 3);
        if (text.empty()) continue;
        const Lz77Parse parse = lz77_parse(text);
        const RankedBoundaries ranks = rank_boundaries(text, parse);
        const BruteRanks expect = brute_ranks(text, parse);
        CHECK(ranks.x_rank == expect.x_rank);
        CHECK(ranks.y_rank == expect.y_rank);
    }
}

TEST_CASE("left and right maps of the running example") {
    const std::string text = "abaab";
    const KrParams kr = KrParams::from_seed(9);
    const Lz77Parse parse = lz77_parse(text);
    const RankedBoundaries ranks = rank_boundaries(text, parse);
    const LengthSet lengths = length_set(0.5, 5);
    REQUIRE(lengths.values == std::vector<uint64_t>{1, 2, 4});

    const auto left = build_left_map(text, parse, ranks, lengths, kr);
    REQUIRE(left.has_value());
    const auto right = build_right_map(text, parse, ranks, lengths, kr);
    REQUIRE(right.has_value());

    auto fp = [&](std::string_view s) { return fp_of(s, kr); };

    CHECK(left->entry_count() == 6);
    CHECK(left->find(1, fp("a")) == RankRange{1, 2});
    CHECK(left->find(1, fp("b")) == RankRange{3, 4});
    CHECK(left->find(2, fp("ab")) == RankRange{3, 4});
    CHECK(left->find(2, fp("aa")) == RankRange{2, 2});
    CHECK(left->find(4, fp("abaa")) == RankRange{2, 2});
    CHECK(left->find(4, fp("baab")) == RankRange{4, 4});
    CHECK(left->find(2, fp("ba")).empty());
    CHECK(left->find(3, fp("aba")).empty());  // 3 is not a grid length

    CHECK(right->entry_count() == 6);
    CHECK(right->find(0, 0) == RankRange{1, 4});
    CHECK(right->find(1, fp("a")) == RankRange{2, 2});
    CHECK(right->find(1, fp("b")) == RankRange{3, 4});
    CHECK(right->find(2, fp("aa")) == RankRange{2, 2});
    CHECK(right->find(2, fp("ba")) == RankRange{4, 4});
    CHECK(right->find(4, fp("baab")) == RankRange{4, 4});
    CHECK(right->find(2, fp("ab")).empty());
}

TEST_CASE("maps match brute-force rank intervals on random strings") {
    std::mt19937_64 eng(4096);
    for (int round = 0; round < 50; ++round) {
        const std::string text = random_string(eng, 256, round % 2 ? 2 : 3);
        if (text.empty()) continue;
        const uint64_t n = text.size();
        const KrParams kr = KrParams::from_seed(eng());
        const Lz77Parse parse = lz77_parse(text);
        const RankedBoundaries ranks = rank_boundaries(text, parse);
        const double eps = round % 3 == 0 ? 0.5 : (round % 3 == 1 ? 0.25 : 0.1);
        const LengthSet lengths = length_set(eps, n);

        const auto left = build_left_map(text, parse, ranks, lengths, kr);
        const auto right = build_right_map(text, parse, ranks, lengths, kr);
        REQUIRE(left.has_value());
        REQUIRE(right.has_value());

        // Group boundaries by their context strings directly.
        std::map<std::pair<uint64_t, std::string>, std::vector<uint32_t>> left_groups;
        std::map<std::pair<uint64_t, std::string>, std::vector<uint32_t>> right_groups;
        for (size_t t = 0; t < parse.ends.size(); ++t) {
            const uint64_t e = parse.ends[t];
            for (uint64_t d : lengths.values) {
                if (d <= e) {
                    left_groups[{d, std::string(text.substr(e - d, d))}].push_back(
                        ranks.x_rank[t]);
                }
                if (e + d <= n) {
                    right_groups[{d, std::string(text.substr(e, d))}].push_back(ranks.y_rank[t]);
                }
            }
        }

        size_t expected_left = 0;
        for (auto& [key, group] : left_groups) {
            std::sort(group.begin(), group.end());
            // Ranks sharing a context are contiguous in co-lex order.
            CHECK(group.back() - group.front() + 1 == group.size());
            CHECK(left->find(static_cast<uint32_t>(key.first), fp_of(key.second, kr)) ==
                  RankRange{group.front(), group.back()});
            ++expected_left;
        }
        CHECK(left->entry_count() == expected_left);

        size_t expected_right = 1;  // the empty-string entry
        CHECK(right->find(0, 0) == RankRange{1, static_cast<uint32_t>(parse.ends.size())});
        for (auto& [key, group] : right_groups) {
            std::sort(group.begin(), group.end());
            CHECK(group.back() - group.front() + 1 == group.size());
            CHECK(right->find(static_cast<uint32_t>(key.first), fp_of(key.second, kr)) ==
                  RankRange{group.front(), group.back()});
            ++expected_right;
        }
        CHECK(right->entry_count() == expected_right);

        // Missing keys stay missing.
        CHECK(left->find(1, fp_of("z", kr)).empty());
        CHECK(right->find(1, fp_of("z", kr)).empty());
    }
}

TEST_CASE("interval nesting: longer contexts refine shorter ones") {
    std::mt19937_64 eng(515);
    for (int round = 0; round < 40; ++round) {
        const std::string text = random_string(eng, 200, 2);
        if (text.empty()) continue;
        const uint64_t n = text.size();
        const KrParams kr = KrParams::from_seed(eng());
        const Lz77Parse parse = lz77_parse(text);
        const RankedBoundaries ranks = rank_boundaries(text, parse);
        const LengthSet lengths = length_set(0.25, n);
        const auto left = build_left_map(text, parse, ranks, lengths, kr);
        const auto right = build_right_map(text, parse, ranks, lengths, kr);
        REQUIRE(left.has_value());
        REQUIRE(right.has_value());

        for (const uint64_t e : parse.ends) {
            for (size_t a = 0; a + 1 < lengths.values.size(); ++a) {
                const uint64_t d_short = lengths.values[a];
                const uint64_t d_long = lengths.values[a + 1];
                if (d_long <= e) {
                    const RankRange wide =
                        left->find(static_cast<uint32_t>(d_short),
                                   fp_of(text.substr(e - d_short, d_short), kr));
                    const RankRange narrow =
                        left->find(static_cast<uint32_t>(d_long),
                                   fp_of(text.substr(e - d_long, d_long), kr));
                    REQUIRE(!wide.empty());
                    REQUIRE(!narrow.empty());
                    CHECK(wide.lo <= narrow.lo);
                    CHECK(narrow.hi <= wide.hi);
                }
                if (e + d_long <= n) {
                    const RankRange wide = right->find(
                        static_cast<uint32_t>(d_short), fp_of(text.substr(e, d_short), kr));
                    const RankRange narrow = right->find(
                        static_cast<uint32_t>(d_long), fp_of(text.substr(e, d_long), kr));
                    REQUIRE(!wide.empty());
                    REQUIRE(!narrow.empty());
                    CHECK(wide.lo <= narrow.lo);
                    CHECK(narrow.hi <= wide.hi);
                }
            }
        }
    }
}

TEST_CASE("from_entries rejects duplicate keys") {
    using Entry = FingerprintRangeMap::Entry;
    CHECK(!FingerprintRangeMap::from_entries({Entry{2, 77, 1, 2}, Entry{2, 77, 3, 3}})
               .has_value());
    const auto ok = FingerprintRangeMap::from_entries({Entry{2, 77, 1, 2}, Entry{1, 77, 3, 3}});
    REQUIRE(ok.has_value());
    CHECK(ok->entry_count() == 2);
    CHECK(ok->find(1, 77) == RankRange{3, 3});
    CHECK(ok->find(2, 77) == RankRange{1, 2});
    CHECK(ok->find(2, 78).empty());
}

TEST_CASE("build_index assembles the running example") {
    const AlcsIndex index = build_index("abaab", 0.5, {.seed = 7, .max_pattern_len = {}});
    CHECK(index.n == 5);
    CHECK(index.z == 4);
    CHECK(index.epsilon == 0.5);
    CHECK(index.build_seed == 7);
    CHECK(index.lengths.values == std::vector<uint64_t>{1, 2, 4});
    CHECK(index.map_left.entry_count() == 6);
    CHECK(index.map_right.entry_count() == 6);
    CHECK(index.grid.z() == 4);
    CHECK(index.grid.y_of_x() == std::vector<uint32_t>{4, 3, 2, 1});
    CHECK(index.grid.boundary_of_x() == std::vector<uint64_t>{1, 4, 2, 5});
}

TEST_CASE("build_index validates arguments") {
    CHECK_THROWS_AS(build_index("abc", 0.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(build_index("abc", 1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(build_index("abc", 0.5, {.seed = {}, .max_pattern_len = 0}),
                    std::invalid_argument);
}

TEST_CASE("build_index on an empty text") {
    const AlcsIndex index = build_index("", 0.5, {.seed = 3, .max_pattern_len = {}});
    CHECK(index.n == 0);
    CHECK(index.z == 0);
    CHECK(index.lengths.values.empty());
    CHECK(index.map_left.entry_count() == 0);
    CHECK(index.map_right.entry_count() == 0);
    CHECK(index.grid.z() == 0);
}

TEST_CASE("build_index is deterministic per seed") {
    const std::string text = "mississippimississippi";
    const AlcsIndex a = build_index(text, 0.25, {.seed = 11, .max_pattern_len = {}});
    const AlcsIndex b = build_index(text, 0.25, {.seed = 11, .max_pattern_len = {}});
    const AlcsIndex c = build_index(text, 0.25, {.seed = 12, .max_pattern_len = {}});
    CHECK(a == b);
    CHECK(a.kr.base != c.kr.base);
}

TEST_CASE("max_pattern_len caps the grid") {
    const AlcsIndex index = build_index("abcabcabcabc", 0.5, {.seed = 5, .max_pattern_len = 3});
    CHECK(index.lengths.max_len == 3);
    CHECK(index.lengths.values == std::vector<uint64_t>{1, 2});
}

TEST_CASE("entry counts respect the space bound") {
    std::mt19937_64 eng(616);
    for (int round = 0; round < 30; ++round) {
        const std::string text = random_string(eng, 400, 2 + round % 3);
        if (text.empty()) continue;
        const double eps = round % 2 ? 0.5 : 0.1;
        const AlcsIndex index = build_index(text, eps, {.seed = eng(), .max_pattern_len = {}});
        const uint64_t cap = index.z * index.lengths.values.size();
        CHECK(index.map_left.entry_count() <= cap);
        CHECK(index.map_right.entry_count() <= cap + 1);
        CHECK(index.map_left.entry_count() + index.map_right.entry_count() <= 2 * cap + 1);
    }
}
