#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace alcs {

// One LZ77 phrase: the longest prefix of the remaining text that occurs at
// an earlier start position (overlap with itself allowed), extended by one
// explicit character. A phrase whose match reaches the end of the text
// stops there without the explicit character.
struct Phrase {
    uint64_t start = 0;  // 1-based, inclusive
    uint64_t end = 0;    // 1-based, inclusive
    std::optional<uint64_t> source;  // 1-based; empty iff the phrase is a single
                                     // first-occurrence character

    bool operator==(const Phrase&) const = default;
};

struct Lz77Parse {
    std::vector<Phrase> phrases;
    std::vector<uint64_t> ends;  // e_1 < e_2 < ... < e_z = n

    uint64_t z() const { return phrases.size(); }
};

// Greedy left-to-right parse via suffix-array previous/next smaller values,
// O(n log n) overall.
Lz77Parse lz77_parse(std::string_view text);

// Quadratic reference parser: scans every earlier source position directly.
Lz77Parse lz77_parse_naive(std::string_view text);

// True when some phrase end e_t splits [start, end] into a non-empty prefix
// and a possibly-empty suffix, i.e. start <= e_t <= end. For the leftmost
// occurrence of any substring this always holds; tests use it to validate
// that property of the parse.
bool touches_phrase_boundary(const Lz77Parse& parse, uint64_t start, uint64_t end);

}  // namespace alcs
