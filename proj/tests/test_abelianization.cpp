#include "helpers.hpp"
#include "suspkit/abelianization.hpp"
#include "suspkit/orbit.hpp"
#include "suspkit/suspension.hpp"

#include <doctest.h>

#include <random>

using namespace suspkit;
using namespace suspkit::testing;

namespace {

SplittingContext load_ctx(const std::string& name) {
    return parse_gog(read_file(data_path(name))).bind();
}

} // namespace

TEST_CASE("abelianization of presentations") {
    SUBCASE("free of rank two") {
        H1Structure h = H1Structure::of_presentation(parse_grp("gens a b\n").presentation);
        CHECK(h.free_rank() == 2);
        CHECK(h.invariant_factors().empty());
    }
    SUBCASE("mapping torus of the substitution") {
        // independent route: the cokernel of (M - I) for M = [[0,1],[1,1]]
        // is trivial since det(M - I) = -1, leaving only the t coordinate
        IntMatrix m(2, 2);
        m.at(0, 1) = 1;
        m.at(1, 0) = 1;
        m.at(1, 1) = 1;
        IntMatrix mi = m;
        mi.at(0, 0) -= 1;
        mi.at(1, 1) -= 1;
        SnfResult r = smith_normal_form(mi);
        CHECK(r.D.at(0, 0) == 1);
        CHECK(r.D.at(1, 1) == 1);

        H1Structure h = H1Structure::of_presentation(
            parse_grp(read_file(data_path("fib-suspension.grp"))).presentation);
        CHECK(h.free_rank() == 1);
        CHECK(h.invariant_factors().empty());
    }
    SUBCASE("inversion torus has two-torsion") {
        H1Structure h = H1Structure::of_presentation(
            parse_grp(read_file(data_path("klein-suspension.grp"))).presentation);
        CHECK(h.free_rank() == 1);
        REQUIRE(h.invariant_factors().size() == 1);
        CHECK(h.invariant_factors()[0] == 2);
    }
    SUBCASE("identity torus is the plane") {
        H1Structure h = H1Structure::of_presentation(
            parse_grp(read_file(data_path("hnn-z.grp"))).presentation);
        CHECK(h.free_rank() == 2);
        CHECK(h.invariant_factors().empty());
    }
}

TEST_CASE("classes of path elements") {
    SplittingContext ctx = load_ctx("hnn_z.gog");
    const Alphabet& ext = ctx.external_names;

    SUBCASE("identity maps to zero") {
        IntVec z = bar_class(ctx.pi1, ctx.h1, ctx.path_of_word(Word()));
        for (const Int& c : z) CHECK(c == 0);
    }
    SUBCASE("a bare loop letter hits a unit coordinate") {
        IntVec t = ctx.pi1.exponent_vector(ctx.path_of_word(wparse("t", ext)));
        Int sum = 0;
        for (const Int& c : t) sum += c * c;
        CHECK(sum == 1);
    }
    SUBCASE("matched edge pair contributes nothing") {
        BassExpression x;
        x.entries = {wparse("a", ctx.pi1.gog.vg(0).gens()), wparse("a", ctx.pi1.gog.vg(0).gens()),
                     wparse("a", ctx.pi1.gog.vg(0).gens())};
        x.edges = {0, ctx.pi1.gog.graph.edges[0].bar};
        IntVec v = ctx.pi1.exponent_vector(x);
        CHECK(v[0] == 3); // three copies of a
        CHECK(v[1] == 0); // edge coordinate cancels
    }
}

TEST_CASE("transverse degrees") {
    SUBCASE("on the identity torus") {
        SplittingContext ctx = load_ctx("hnn_z.gog");
        const Alphabet& ext = ctx.external_names;
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("t", ext))) == 1);
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("a", ext))) == 0);
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("t^2 a", ext))) == 2);
    }
    SUBCASE("on the substitution torus") {
        FreeAutomorphism phi = fibonacci();
        SplittingContext ctx = canonical_splitting(phi).bind();
        const Alphabet& ext = ctx.external_names;
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("t", ext))) == 1);
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("a", ext))) == 0);
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("b", ext))) == 0);
        CHECK(ctx.transverse_degree(ctx.path_of_word(wparse("t^2 a", ext))) == 2);
    }
    SUBCASE("rejects a non-cyclic quotient") {
        // the fiber designation must make the quotient infinite cyclic;
        // an empty fiber on the plane leaves rank two
        SplittingFile f = parse_gog(read_file(data_path("hnn_z.gog")));
        f.fiber_words.clear();
        CHECK_THROWS_AS(f.bind(), Error);
    }
    SUBCASE("degree labels are cross-checked") {
        SplittingFile f = parse_gog(read_file(data_path("hnn_z.gog")));
        f.gog.vertex_groups[0].degree_labels = std::vector<long long>{0};
        CHECK_NOTHROW(f.bind());
        f.gog.vertex_groups[0].degree_labels = std::vector<long long>{1};
        CHECK_THROWS_AS(f.bind(), Error);
    }
    SUBCASE("all bundled transverse structures bind") {
        for (const char* f :
             {"hnn_z.gog", "klein.gog", "segment.gog", "trefoil.gog", "theta.gog", "f2xz.gog",
              "fib.gog"}) {
            SplittingContext ctx = load_ctx(f);
            CHECK(ctx.transverse_degree(ctx.path_of_word(*parse_gog(read_file(data_path(f)))
                                                              .transverse_word)) == 1);
        }
    }
}

TEST_CASE("twist matrices") {
    SUBCASE("trivial class twists to the identity matrix") {
        SplittingContext ctx = load_ctx("klein.gog");
        // on the inversion torus the fiber generator has order two in the
        // abelianization; its square is a trivial class
        IntVec h = word_exponents(ctx.pi1.presentation.generators.rank(),
                                  parse_word("a a", ctx.pi1.presentation.generators));
        IntMatrix m = transvection_matrix(ctx.h1, ctx.pi1.edge_functional(0), h);
        // identity on classes: row-convention application fixes every class
        std::mt19937_64 rng(corpus_seed() + 11);
        std::uniform_int_distribution<int> entry(-4, 4);
        for (int trial = 0; trial < 40; ++trial) {
            IntVec v(ctx.pi1.presentation.generators.rank());
            for (auto& c : v) c = entry(rng);
            CHECK(apply_matrix(ctx.h1, ctx.h1.reduce(v), m) == ctx.h1.reduce(v));
        }
    }
    SUBCASE("the plane twist is the elementary shear") {
        SplittingContext ctx = load_ctx("hnn_z.gog");
        IntVec h = word_exponents(2, parse_word("a", ctx.pi1.presentation.generators));
        IntMatrix m = transvection_matrix(ctx.h1, ctx.pi1.edge_functional(0), h);
        IntMatrix expect(2, 2);
        expect.at(0, 0) = 1;
        expect.at(1, 0) = 1;
        expect.at(1, 1) = 1;
        CHECK(m == expect);
        // squared twist = twist by the squared element
        IntVec h2 = h;
        h2[0] = 2;
        CHECK(mul(m, m) == transvection_matrix(ctx.h1, ctx.pi1.edge_functional(0), h2));
    }
    SUBCASE("tree-edge twists use the canonical loops") {
        SplittingContext ctx = load_ctx("theta.gog");
        const int e = *ctx.pi1.gog.graph.edge_index("e");
        const int f = *ctx.pi1.gog.graph.edge_index("f");
        IntVec lam_e = ctx.pi1.edge_functional(e);
        IntVec lam_f = ctx.pi1.edge_functional(f);
        // the canonical loop of the non-tree letter runs backwards through e
        BassExpression q = ctx.path_of_word(wparse("q", ctx.external_names));
        IntVec xq = ctx.pi1.exponent_vector(q);
        Int ne = 0, nf = 0;
        for (std::size_t i = 0; i < xq.size(); ++i) {
            ne += lam_e[i] * xq[i];
            nf += lam_f[i] * xq[i];
        }
        CHECK(ne == signed_edge_count(ctx.pi1.gog.graph, q, e));
        CHECK(nf == signed_edge_count(ctx.pi1.gog.graph, q, f));
    }
}
