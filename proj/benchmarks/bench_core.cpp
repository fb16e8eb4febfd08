#include "suspkit/intmat.hpp"
#include "suspkit/suspension.hpp"
#include "suspkit/words.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace suspkit;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int len) {
    std::uniform_int_distribution<int> gen(0, rank - 1), sgn(0, 1);
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i) raw.push_back(make_letter(gen(rng), sgn(rng) ? 1 : -1));
    return Word(std::move(raw));
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

void BM_FreeReduction(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Word> words;
    for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 3, int(state.range(0))));
    std::size_t k = 0;
    for (auto _ : state) {
        Word w = concat(words[k % 64], inverse(words[(k + 1) % 64]));
        benchmark::DoNotOptimize(w);
        ++k;
    }
}
BENCHMARK(BM_FreeReduction)->Arg(64)->Arg(512);

void BM_Conjugacy(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::vector<Word> words;
    for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 3, int(state.range(0))));
    std::size_t k = 0;
    for (auto _ : state) {
        Word c = random_word(rng, 3, 4);
        Word v = concat(concat(inverse(c), words[k % 64]), c);
        auto w = free_conjugate(words[k % 64], v);
        benchmark::DoNotOptimize(w);
        ++k;
    }
}
BENCHMARK(BM_Conjugacy)->Arg(16)->Arg(64);

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(13);
    std::vector<IntMatrix> mats;
    for (int i = 0; i < 16; ++i) mats.push_back(random_matrix(rng, std::size_t(state.range(0)), 9));
    std::size_t k = 0;
    for (auto _ : state) {
        auto snf = smith_normal_form(mats[k % 16]);
        benchmark::DoNotOptimize(snf);
        ++k;
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_ToroidalSearch(benchmark::State& state) {
    Alphabet f({"a", "b"});
    FreeAutomorphism phi = FreeAutomorphism::from_images(
        f, {Word::generator(1), Word({make_letter(0, 1), make_letter(1, 1)})});
    for (auto _ : state) {
        auto w = toroidal_witness_search(phi, int(state.range(0)), 2);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_ToroidalSearch)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
