#ifndef SUSPKIT_TEST_HELPERS_HPP
#define SUSPKIT_TEST_HELPERS_HPP

#include "suspkit/formats.hpp"
#include "suspkit/suspension.hpp"
#include "suspkit/words.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace suspkit::testing {

inline std::uint64_t corpus_seed(std::uint64_t fallback = 20240911) {
    if (const char* s = std::getenv("SUSPKIT_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline Word wparse(const std::string& text, const Alphabet& a) { return parse_word(text, a); }

inline Alphabet ab() { return Alphabet({"a", "b"}); }
inline Alphabet abc() { return Alphabet({"a", "b", "c"}); }

// a -> b, b -> ab
inline FreeAutomorphism fibonacci() {
    Alphabet f = ab();
    return FreeAutomorphism::from_images(f, {wparse("b", f), wparse("a b", f)});
}

inline Word random_reduced_word(std::mt19937_64& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, rank - 1), sgn(0, 1);
    std::vector<Letter> raw;
    const int n = len(rng);
    while (int(raw.size()) < n) {
        Letter l = make_letter(gen(rng), sgn(rng) ? 1 : -1);
        if (!raw.empty() && raw.back() == -l) continue;
        raw.push_back(l);
    }
    return Word(std::move(raw));
}

inline std::string data_path(const std::string& name) {
    return std::string(SUSPKIT_DATA_DIR) + "/" + name;
}

} // namespace suspkit::testing

#endif
