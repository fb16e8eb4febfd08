#include "helpers.hpp"
#include "suspkit/words.hpp"

#include <doctest.h>

#include <random>

using namespace suspkit;
using namespace suspkit::testing;

TEST_CASE("free reduction") {
    Alphabet a = ab();
    CHECK(wparse("a a^-1", a).is_identity());
    CHECK(wparse("a b b^-1 a", a) == wparse("a a", a));
    CHECK(wparse("a b a^-1", a) == Word({make_letter(0, 1), make_letter(1, 1), make_letter(0, -1)}));

    std::mt19937_64 rng(corpus_seed());
    std::uniform_int_distribution<int> gen(0, 2), sgn(0, 1), len(0, 30);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> raw;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) raw.push_back(make_letter(gen(rng), sgn(rng) ? 1 : -1));
        Word once(raw);
        Word twice(once.letters());
        CHECK(once == twice); // idempotent
        CHECK(once.length() <= raw.size());
    }
}

TEST_CASE("cyclic reduction") {
    Alphabet a = ab();
    SUBCASE("single collar") {
        auto cf = cyclic_reduce(wparse("a b a^-1", a));
        CHECK(cf.core == wparse("b", a));
        CHECK(cf.conjugator == wparse("a", a));
    }
    SUBCASE("commutator is already cyclically reduced") {
        Word c = wparse("b a b^-1 a^-1", a);
        auto cf = cyclic_reduce(c);
        CHECK(cf.core == c);
        CHECK(cf.conjugator.is_identity());
    }
    SUBCASE("identity") {
        auto cf = cyclic_reduce(Word());
        CHECK(cf.core.is_identity());
        CHECK(cf.conjugator.is_identity());
    }
    SUBCASE("w = conjugator core conjugator^-1") {
        std::mt19937_64 rng(corpus_seed() + 1);
        for (int trial = 0; trial < 200; ++trial) {
            Word w = random_reduced_word(rng, 3, 12);
            auto cf = cyclic_reduce(w);
            CHECK(is_cyclically_reduced(cf.core));
            CHECK(concat(concat(cf.conjugator, cf.core), inverse(cf.conjugator)) == w);
        }
    }
}

TEST_CASE("conjugacy in the free group") {
    Alphabet a = ab();
    SUBCASE("cyclic rotation with witness") {
        auto c = free_conjugate(wparse("a b", a), wparse("b a", a));
        REQUIRE(c);
        CHECK(*c == wparse("a", a));
    }
    SUBCASE("distinct generators") { CHECK(!free_conjugate(wparse("a", a), wparse("b", a))); }
    SUBCASE("commutator and its reverse") {
        // oracle: enumerate rotations of the cyclic core directly
        Word u = wparse("a b a^-1 b^-1", a);
        Word v = wparse("b a b^-1 a^-1", a); // u^-1, not a rotation of u
        Word r = wparse("b a^-1 b^-1 a", a); // the rotation by one letter
        auto rotations_of = [](const Word& w) {
            std::vector<Word> out;
            std::vector<Letter> rot = w.letters();
            for (std::size_t i = 0; i < w.length(); ++i) {
                out.push_back(Word{std::vector<Letter>(rot)});
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            }
            return out;
        };
        auto rots = rotations_of(u);
        CHECK(std::find(rots.begin(), rots.end(), v) == rots.end());
        CHECK(std::find(rots.begin(), rots.end(), r) != rots.end());
        CHECK(!free_conjugate(u, v));
        auto c = free_conjugate(u, r);
        REQUIRE(c);
        CHECK(concat(concat(inverse(*c), u), *c) == r);
    }
    SUBCASE("equivalence relation on random words") {
        std::mt19937_64 rng(corpus_seed() + 2);
        std::vector<Word> words;
        for (int i = 0; i < 1000; ++i) words.push_back(random_reduced_word(rng, 3, 8));
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (const Word& w : words) {
            auto c = free_conjugate(w, w);
            REQUIRE(c);
            CHECK(concat(concat(inverse(*c), w), *c) == w);
        }
        int yes = 0;
        for (int trial = 0; trial < 1500; ++trial) {
            const Word& u = words[pick(rng)];
            const Word& v = words[pick(rng)];
            auto uv = free_conjugate(u, v);
            auto vu = free_conjugate(v, u);
            CHECK(uv.has_value() == vu.has_value()); // symmetric
            if (uv) {
                ++yes;
                CHECK(concat(concat(inverse(*uv), u), *uv) == v);
                const Word& w = words[pick(rng)];
                auto vw = free_conjugate(v, w);
                if (vw) CHECK(free_conjugate(u, w).has_value()); // transitive
            }
        }
        CHECK(yes > 0);
    }
}

TEST_CASE("applying automorphisms") {
    Alphabet a = ab();
    FreeAutomorphism fib = fibonacci();
    CHECK(fib.apply(wparse("a b", a)) == wparse("b a b", a));
    CHECK(FreeAutomorphism::identity(a).apply(wparse("a b a^-1", a)) == wparse("a b a^-1", a));
    CHECK(fib.apply(Word()).is_identity());

    SUBCASE("homomorphism and inverse compatibility") {
        std::mt19937_64 rng(corpus_seed() + 3);
        for (int trial = 0; trial < 200; ++trial) {
            Word u = random_reduced_word(rng, 2, 8);
            Word v = random_reduced_word(rng, 2, 8);
            CHECK(fib.apply(concat(u, v)) == concat(fib.apply(u), fib.apply(v)));
            CHECK(fib.apply(inverse(u)) == inverse(fib.apply(u)));
        }
    }
}

TEST_CASE("composition") {
    Alphabet a = ab();
    FreeAutomorphism fib = fibonacci();
    SUBCASE("with the inverse") {
        FreeAutomorphism id = compose(fib, fib.inverted());
        for (std::size_t i = 0; i < a.rank(); ++i) CHECK(id.image(int(i)) == Word::generator(int(i)));
    }
    SUBCASE("squared") {
        FreeAutomorphism f2 = compose(fib, fib);
        CHECK(f2.image(0) == wparse("a b", a));
        CHECK(f2.image(1) == wparse("b a b", a));
    }
    SUBCASE("inner automorphisms") {
        FreeAutomorphism ada = FreeAutomorphism::inner(a, wparse("a", a));
        FreeAutomorphism adainv = FreeAutomorphism::inner(a, wparse("a^-1", a));
        FreeAutomorphism id = compose(ada, adainv);
        for (std::size_t i = 0; i < a.rank(); ++i) CHECK(id.image(int(i)) == Word::generator(int(i)));
    }
    SUBCASE("every accepted automorphism has a working inverse") {
        std::mt19937_64 rng(corpus_seed() + 4);
        FreeAutomorphism cur = FreeAutomorphism::identity(a);
        for (int step = 0; step < 40; ++step) {
            Word g = random_reduced_word(rng, 2, 3);
            cur = compose(cur, FreeAutomorphism::inner(a, g));
            if (step % 3 == 0) cur = compose(cur, fibonacci());
            FreeAutomorphism check = compose(cur, cur.inverted());
            for (std::size_t i = 0; i < a.rank(); ++i)
                CHECK(check.image(int(i)) == Word::generator(int(i)));
        }
    }
}

TEST_CASE("normal forms in the mapping torus") {
    Alphabet a = ab();
    FreeAutomorphism fib = fibonacci();
    const Letter t = make_letter(2, 1);

    SUBCASE("defining relation") {
        // t^-1 a t  ->  phi(a) = b
        FbcNormalForm nf = fbc_normal_form({-t, make_letter(0, 1), t}, fib);
        CHECK(nf.t_exponent == 0);
        CHECK(nf.fiber_part == wparse("b", a));
    }
    SUBCASE("cancellation") {
        FbcNormalForm nf = fbc_normal_form({t, -t}, fib);
        CHECK(nf == FbcNormalForm{});
    }
    SUBCASE("single push") {
        FbcNormalForm nf = fbc_normal_form({make_letter(0, 1), t}, fib);
        CHECK(nf.t_exponent == 1);
        CHECK(nf.fiber_part == fib.apply(wparse("a", a)));
    }
    SUBCASE("multiplicativity") {
        std::mt19937_64 rng(corpus_seed() + 5);
        std::uniform_int_distribution<int> gen(0, 2), sgn(0, 1), len(0, 10);
        auto random_susp = [&]() {
            std::vector<Letter> raw;
            const int n = len(rng);
            for (int i = 0; i < n; ++i) raw.push_back(make_letter(gen(rng), sgn(rng) ? 1 : -1));
            return raw;
        };
        for (int trial = 0; trial < 200; ++trial) {
            auto u = random_susp(), v = random_susp();
            auto uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            FbcNormalForm lhs = fbc_normal_form(uv, fib);
            FbcNormalForm rhs = fbc_mul(fbc_normal_form(u, fib), fbc_normal_form(v, fib), fib);
            CHECK(lhs == rhs);
            FbcNormalForm one = fbc_mul(fbc_normal_form(u, fib), fbc_inv(fbc_normal_form(u, fib), fib), fib);
            CHECK(one == FbcNormalForm{});
        }
    }
}

TEST_CASE("primitive roots") {
    Alphabet a = ab();
    CHECK(primitive_root(wparse("a b a b a b", a)) == wparse("a b", a));
    CHECK(primitive_root(wparse("b a a b", a)) == wparse("b a a b", a));
    // collar survives: (c p c^-1)^3
    Word w = wparse("b a a a b^-1", a);
    CHECK(primitive_root(w) == wparse("b a b^-1", a));
    CHECK(power(primitive_root(w), 3) == w);
}

TEST_CASE("alphabet hygiene") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
    CHECK_THROWS_AS(Alphabet({"1bad"}), Error);
    CHECK_THROWS_AS(Alphabet({""}), Error);
    CHECK(Alphabet({"x_1", "Y2"}).rank() == 2);
}

TEST_CASE("automorphism certificates are mandatory") {
    Alphabet a = ab();
    // a -> a, b -> a is not injective
    CHECK_THROWS_AS(FreeAutomorphism::from_images(a, {wparse("a", a), wparse("a", a)}), Error);
    // claimed inverse that fails
    CHECK_THROWS_AS(FreeAutomorphism(a, {wparse("b", a), wparse("a b", a)},
                                     {wparse("b", a), wparse("a", a)}),
                    Error);
    // folding finds the inverse of a genuine basis map
    FreeAutomorphism phi =
        FreeAutomorphism::from_images(a, {wparse("a b a^-1", a), wparse("a b a b a^-1", a)});
    FreeAutomorphism check = compose(phi, phi.inverted());
    for (std::size_t i = 0; i < a.rank(); ++i) CHECK(check.image(int(i)) == Word::generator(int(i)));
}
