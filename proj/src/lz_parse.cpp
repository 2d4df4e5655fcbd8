#include "alcs/lz_parse.hpp"

#include <algorithm>
#include <cassert>

#include "alcs/suffix_tools.hpp"

namespace alcs {

namespace {

// Emits the phrase starting at 0-based `pos` whose match part has length
// `len` with 0-based source `src` (ignored when len == 0). Returns the next
// parse position.
size_t emit_phrase(Lz77Parse& parse, size_t n, size_t pos, size_t len, size_t src) {
    Phrase p;
    p.start = pos + 1;
    if (len == 0) {
        p.end = pos + 1;  // single explicit first-occurrence character
        parse.phrases.push_back(p);
        parse.ends.push_back(p.end);
        return pos + 1;
    }
    p.source = src + 1;
    // Match plus one explicit character, unless the match runs to the end.
    p.end = std::min(pos + len + 1, n);
    parse.phrases.push_back(p);
    parse.ends.push_back(p.end);
    return pos + len + 1;
}

size_t match_len(std::string_view t, size_t src, size_t pos) {
    size_t l = 0;
    const size_t n = t.size();
    while (pos + l < n && t[src + l] == t[pos + l]) ++l;
    return l;
}

}  // namespace

Lz77Parse lz77_parse(std::string_view text) {
    Lz77Parse parse;
    const size_t n = text.size();
    if (n == 0) return parse;

    auto sa = suffix_array(text);

    // For each text position, the nearest smaller text position immediately
    // before/after it in suffix-array order. One of the two carries the
    // longest previous match (the LCP to rank-neighbours dominates all
    // farther entries).
    constexpr uint32_t kNone = UINT32_MAX;
    std::vector<uint32_t> psv(n, kNone), nsv(n, kNone);
    std::vector<uint32_t> stack;
    for (uint32_t r = 0; r < n; ++r) {
        uint32_t i = sa[r];
        while (!stack.empty() && stack.back() > i) {
            nsv[stack.back()] = i;
            stack.pop_back();
        }
        psv[i] = stack.empty() ? kNone : stack.back();
        stack.push_back(i);
    }

    size_t pos = 0;
    while (pos < n) {
        size_t best_len = 0, best_src = 0;
        if (psv[pos] != kNone) {
            best_len = match_len(text, psv[pos], pos);
            best_src = psv[pos];
        }
        if (nsv[pos] != kNone) {
            size_t l = match_len(text, nsv[pos], pos);
            if (l > best_len) {
                best_len = l;
                best_src = nsv[pos];
            }
        }
        pos = emit_phrase(parse, n, pos, best_len, best_src);
    }
    return parse;
}

Lz77Parse lz77_parse_naive(std::string_view text) {
    Lz77Parse parse;
    const size_t n = text.size();
    size_t pos = 0;
    while (pos < n) {
        size_t best_len = 0, best_src = 0;
        for (size_t src = 0; src < pos; ++src) {
            size_t l = match_len(text, src, pos);
            if (l > best_len) {
                best_len = l;
                best_src = src;
            }
        }
        pos = emit_phrase(parse, n, pos, best_len, best_src);
    }
    return parse;
}

bool touches_phrase_boundary(const Lz77Parse& parse, uint64_t start, uint64_t end) {
    auto it = std::lower_bound(parse.ends.begin(), parse.ends.end(), start);
    return it != parse.ends.end() && *it <= end;
}

}  // namespace alcs
