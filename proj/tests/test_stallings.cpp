#include "helpers.hpp"
#include "suspkit/stallings.hpp"

#include <doctest.h>

#include <random>

using namespace suspkit;
using namespace suspkit::testing;

TEST_CASE("membership with rewriting") {
    Alphabet a = ab();
    // <a^2, b> in F(a, b)
    SubgroupGraph g(2, {wparse("a a", a), wparse("b", a)});
    CHECK(g.contains(wparse("a a b", a)));
    CHECK(!g.contains(wparse("a", a)));
    CHECK(!g.contains(wparse("a b", a)));
    auto e = g.express(wparse("a a b a a", a));
    REQUIRE(e);
    // letters of the expression index the generator list
    CHECK(apply_images({wparse("a a", a), wparse("b", a)}, *e) == wparse("a a b a a", a));
}

TEST_CASE("membership in a conjugated subgroup") {
    Alphabet a = ab();
    SubgroupGraph g(2, {wparse("a b a^-1", a)});
    CHECK(g.contains(wparse("a b b b a^-1", a)));
    CHECK(!g.contains(wparse("b", a)));
    CHECK(!g.had_conflict());
}

TEST_CASE("basis map inversion") {
    Alphabet a = ab();
    SUBCASE("shear") {
        auto inv = invert_basis_map(2, {wparse("a b", a), wparse("b", a)});
        REQUIRE(inv);
        CHECK((*inv)[0] == wparse("a b^-1", a));
        CHECK((*inv)[1] == wparse("b", a));
    }
    SUBCASE("not a basis") {
        CHECK(!invert_basis_map(2, {wparse("a a", a), wparse("b", a)}));
        CHECK(!invert_basis_map(2, {wparse("a", a), wparse("a", a)}));
    }
    SUBCASE("random basis round-trips") {
        std::mt19937_64 rng(corpus_seed() + 6);
        Alphabet c = abc();
        std::vector<Word> images{wparse("a", c), wparse("b", c), wparse("c", c)};
        std::uniform_int_distribution<int> pick(0, 2), coin(0, 1);
        for (int step = 0; step < 60; ++step) {
            // random Nielsen move keeps it a basis
            int i = pick(rng), j = pick(rng);
            if (i != j) {
                images[i] = coin(rng) ? concat(images[i], images[j])
                                      : concat(images[j], images[i]);
            } else if (coin(rng)) {
                images[i] = inverse(images[i]);
            }
            auto inv = invert_basis_map(3, images);
            REQUIRE(inv);
            for (int k = 0; k < 3; ++k) {
                CHECK(apply_images(images, (*inv)[k]) == Word::generator(k));
                CHECK(apply_images(*inv, images[k]) == Word::generator(k));
            }
        }
    }
}
