#include "alcs/corpus.hpp"

#include <random>
#include <stdexcept>

namespace alcs {

std::string generate_corpus(const CorpusSpec& spec) {
    if (spec.alphabet < 1 || spec.alphabet > 26) {
        throw std::invalid_argument("alphabet size must be in [1, 26]");
    }
    if (!(spec.mut_rate >= 0.0 && spec.mut_rate <= 1.0)) {
        throw std::invalid_argument("mut_rate must be in [0, 1]");
    }
    // Only engine outputs are consumed directly, so the byte stream is
    // reproducible across standard libraries.
    std::mt19937_64 eng(spec.seed);
    auto symbol = [&](uint64_t r) { return static_cast<char>('a' + r % spec.alphabet); };

    std::string base(spec.base_len, 'a');
    for (char& c : base) c = symbol(eng());

    std::string text;
    text.reserve(spec.base_len * spec.repeats);
    for (uint64_t rep = 0; rep < spec.repeats; ++rep) text += base;

    if (spec.mut_rate > 0.0 && spec.alphabet > 1) {
        for (char& c : text) {
            const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
            if (u < spec.mut_rate) {
                const uint64_t shift = 1 + eng() % (spec.alphabet - 1);
                c = static_cast<char>('a' + (static_cast<uint64_t>(c - 'a') + shift) % spec.alphabet);
            }
        }
    }
    return text;
}

}  // namespace alcs
