#include "helpers.hpp"
#include "suspkit/abelianization.hpp"
#include "suspkit/graph_of_groups.hpp"

#include <doctest.h>

#include <random>

using namespace suspkit;
using namespace suspkit::testing;

namespace {

SplittingFile load(const std::string& name) { return parse_gog(read_file(data_path(name))); }

GraphOfGroups hnn_z() { return load("hnn_z.gog").gog; }

} // namespace

TEST_CASE("structure validation") {
    SUBCASE("smallest HNN datum is valid") { CHECK(hnn_z().validate().empty()); }
    SUBCASE("inverted edge") {
        GraphOfGroups g = hnn_z();
        g.graph.edges[0].bar = 0; // its own reverse
        auto bad = g.validate();
        bool found = false;
        for (const auto& b : bad)
            if (b.find("inverted edge") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("cyclic generator killed") {
        GraphOfGroups g = hnn_z();
        g.injections[0].images[0] = Word();
        auto bad = g.validate();
        bool found = false;
        for (const auto& b : bad)
            if (b.find("kills the cyclic edge generator") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("all bundled splittings are valid") {
        for (const char* f : {"hnn_z.gog", "klein.gog", "segment.gog", "trefoil.gog", "theta.gog",
                              "f2xz.gog", "fib.gog"})
            CHECK(load(f).gog.validate().empty());
    }
}

TEST_CASE("path elements") {
    GraphOfGroups g = load("segment.gog").gog;
    const Alphabet& au = g.vg(0).gens();
    const Alphabet& aw = g.vg(1).gens();

    SUBCASE("bare vertex element") {
        BassExpression x = BassExpression::vertex_element(0, wparse("a", au));
        CHECK(is_path_element(g, x, 0, 0));
        CHECK(!is_path_element(g, x, 0, 1));
    }
    SUBCASE("one crossing") {
        BassExpression x;
        x.entries = {wparse("a", au), wparse("b", aw)};
        x.edges = {0};
        CHECK(is_path_element(g, x, 0, 1));
    }
    SUBCASE("entry in the wrong vertex group") {
        BassExpression x;
        x.entries = {wparse("a", au), Word({make_letter(5, 1)})};
        x.edges = {0};
        CHECK(!is_path_element(g, x, 0, 1));
        CHECK(!path_violations(g, x).empty());
    }
    SUBCASE("inverse is a path exactly when the original is") {
        std::mt19937_64 rng(corpus_seed() + 9);
        GraphOfGroups th = load("theta.gog").gog;
        for (int trial = 0; trial < 100; ++trial) {
            BassExpression x;
            std::uniform_int_distribution<int> edge(0, int(th.graph.edges.size()) - 1);
            std::uniform_int_distribution<int> len(0, 3);
            const int n = len(rng);
            for (int i = 0; i < n; ++i) x.edges.push_back(edge(rng));
            for (int i = 0; i <= n; ++i) {
                int v = n == 0 ? 0 : x.entry_vertex(th.graph, std::size_t(i));
                if (v < 0 || v >= int(th.graph.vertex_names.size())) v = 0;
                x.entries.push_back(random_reduced_word(rng, int(th.vg(v).gens().rank()), 2));
            }
            bool fwd = path_violations(th, x).empty();
            if (!fwd) continue;
            BassExpression inv = bass_inverse(th, x);
            CHECK(path_violations(th, inv).empty());
            CHECK(inv.from(th.graph) == x.to(th.graph));
            CHECK(inv.to(th.graph) == x.from(th.graph));
        }
    }
}

TEST_CASE("fundamental group presentations") {
    SUBCASE("HNN of Z over the identity") {
        Pi1Context ctx = pi1_presentation(hnn_z(), {}, "");
        CHECK(ctx.presentation.generators.names() == std::vector<std::string>{"a", "e"});
        REQUIRE(ctx.presentation.relators.size() == 1);
        CHECK(ctx.presentation.relators[0] ==
              parse_word("e^-1 a e a^-1", ctx.presentation.generators));
        H1Structure h = H1Structure::of_presentation(ctx.presentation);
        CHECK(h.free_rank() == 2);
        CHECK(h.invariant_factors().empty());
    }
    SUBCASE("amalgam over doubled generators") {
        Pi1Context ctx = pi1_presentation(load("segment.gog").gog, {"e"}, "");
        CHECK(ctx.presentation.generators.names() == std::vector<std::string>{"a", "b"});
        REQUIRE(ctx.presentation.relators.size() == 1);
        CHECK(ctx.presentation.relators[0] == parse_word("a^2 b^-2", ctx.presentation.generators));
        H1Structure h = H1Structure::of_presentation(ctx.presentation);
        CHECK(h.free_rank() == 1);
        REQUIRE(h.invariant_factors().size() == 1);
        CHECK(h.invariant_factors()[0] == 2);
    }
    SUBCASE("trivial vertex group with a free loop") {
        GraphOfGroups g;
        g.graph.vertex_names = {"v"};
        g.graph.add_edge_pair("e", "ebar", 0, 0);
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet{}));
        g.edge_groups.assign(2, EdgeGroup::free_group(Alphabet{}));
        g.injections.assign(2, EdgeInjection{});
        Pi1Context ctx = pi1_presentation(g, {}, "");
        CHECK(ctx.presentation.generators.names() == std::vector<std::string>{"e"});
        CHECK(ctx.presentation.relators.empty());
    }
    SUBCASE("tree errors") {
        CHECK_THROWS_AS(pi1_presentation(load("segment.gog").gog, {}, ""), Error);
        CHECK_THROWS_AS(pi1_presentation(hnn_z(), {"e"}, ""), Error);
    }
    SUBCASE("name qualification on collision") {
        GraphOfGroups g;
        g.graph.vertex_names = {"u", "w"};
        g.graph.add_edge_pair("e", "ebar", 0, 1);
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"a"})));
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"a"})));
        g.edge_groups.assign(2, EdgeGroup::cyclic("c", 0));
        g.injections.resize(2);
        g.injections[0].images = {Word::generator(0)};
        g.injections[1].images = {Word::generator(0)};
        Pi1Context ctx = pi1_presentation(g, {"e"}, "");
        CHECK(ctx.presentation.generators.names() == std::vector<std::string>{"u_a", "w_a"});
    }
    SUBCASE("same invariant factors for either spanning tree") {
        SplittingFile th = load("theta.gog");
        Pi1Context c1 = pi1_presentation(th.gog, {"e"}, "");
        Pi1Context c2 = pi1_presentation(th.gog, {"f"}, "");
        H1Structure h1 = H1Structure::of_presentation(c1.presentation);
        H1Structure h2 = H1Structure::of_presentation(c2.presentation);
        CHECK(h1.invariant_factors() == h2.invariant_factors());
        CHECK(h1.free_rank() == h2.free_rank());
    }
}

TEST_CASE("signed edge counts") {
    GraphOfGroups g = load("theta.gog").gog;
    const int e = *g.graph.edge_index("e");
    const int f = *g.graph.edge_index("f");
    const int ebar = g.graph.edges[e].bar;

    BassExpression matched;
    matched.entries = {Word(), Word(), Word()};
    matched.edges = {e, ebar};
    CHECK(signed_edge_count(g.graph, matched, e) == 0);
    CHECK(signed_edge_count(g.graph, matched, ebar) == 0);

    BassExpression loop; // f then ebar: a loop at u
    loop.entries = {Word(), Word(), Word()};
    loop.edges = {f, ebar};
    CHECK(signed_edge_count(g.graph, loop, f) == 1);
    CHECK(signed_edge_count(g.graph, loop, e) == -1);

    BassExpression vertex = BassExpression::vertex_element(0, Word::generator(0));
    for (std::size_t k = 0; k < g.graph.edges.size(); ++k)
        CHECK(signed_edge_count(g.graph, vertex, int(k)) == 0);

    SUBCASE("additive under concatenation") {
        std::mt19937_64 rng(corpus_seed() + 10);
        std::uniform_int_distribution<int> coin(0, 1);
        auto random_loop = [&]() {
            BassExpression acc = BassExpression::vertex_element(0, Word());
            for (int piece = 0, n = coin(rng) + coin(rng) + 1; piece < n; ++piece) {
                BassExpression p;
                p.entries = {Word(), Word(), Word()};
                p.edges = coin(rng) ? std::vector<int>{f, ebar}
                                    : std::vector<int>{e, g.graph.edges[f].bar};
                acc = bass_concat(g, acc, p);
            }
            return acc;
        };
        for (int trial = 0; trial < 50; ++trial) {
            BassExpression x = random_loop(), y = random_loop();
            BassExpression xy = bass_concat(g, x, y);
            for (std::size_t k = 0; k < g.graph.edges.size(); ++k)
                CHECK(signed_edge_count(g.graph, xy, int(k)) ==
                      signed_edge_count(g.graph, x, int(k)) +
                          signed_edge_count(g.graph, y, int(k)));
        }
    }
}

TEST_CASE("edge collapse") {
    SUBCASE("identity-injection edge collapses onto the target group") {
        GraphOfGroups g;
        g.graph.vertex_names = {"u", "w"};
        g.graph.add_edge_pair("e", "ebar", 0, 1);
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"a"})));
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"b"})));
        g.edge_groups.assign(2, EdgeGroup::cyclic("c", 0));
        g.injections.resize(2);
        g.injections[0].images = {parse_word("a", g.vg(0).gens())};
        g.injections[1].images = {parse_word("b b", g.vg(1).gens())};
        CollapseResult res = collapse_edge(g, "e");
        CHECK(res.gog.graph.vertex_names == std::vector<std::string>{"w"});
        CHECK(res.gog.graph.edges.empty());
        CHECK(res.gog.vg(0).gens().names() == std::vector<std::string>{"b"});
    }
    SUBCASE("loop edges cannot collapse") { CHECK_THROWS_AS(collapse_edge(hnn_z(), "e"), Error); }
    SUBCASE("non-isomorphic injection is rejected") {
        CHECK_THROWS_AS(collapse_edge(load("segment.gog").gog, "e"), Error);
    }
    SUBCASE("collapse preserves the abelianization") {
        GraphOfGroups g;
        g.graph.vertex_names = {"u", "w"};
        g.graph.add_edge_pair("e", "ebar", 0, 1);
        g.graph.add_edge_pair("f", "fbar", 0, 1);
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"a"})));
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"b"})));
        g.edge_groups.assign(4, EdgeGroup::cyclic("c", 0));
        g.injections.resize(4);
        g.injections[0].images = {parse_word("a", g.vg(0).gens())}; // e: iso
        g.injections[1].images = {parse_word("b b b", g.vg(1).gens())};
        g.injections[2].images = {parse_word("a a", g.vg(0).gens())}; // f
        g.injections[3].images = {parse_word("b b", g.vg(1).gens())};
        REQUIRE(g.validate().empty());
        Pi1Context before = pi1_presentation(g, {"e"}, "");
        H1Structure hb = H1Structure::of_presentation(before.presentation);

        CollapseResult res = collapse_edge(g, "e");
        REQUIRE(res.gog.validate().empty());
        Pi1Context after = pi1_presentation(res.gog, {"f"}, "");
        H1Structure ha = H1Structure::of_presentation(after.presentation);
        CHECK(hb.invariant_factors() == ha.invariant_factors());
        CHECK(hb.free_rank() == ha.free_rank());

        BassExpression x;
        x.entries = {parse_word("a", g.vg(0).gens()), parse_word("b", g.vg(1).gens()), Word()};
        x.edges = {0, g.graph.edges[2].bar}; // e then fbar
        REQUIRE(is_path_element(g, x, 0, 0));
        BassExpression y = res.rewrite(x);
        CHECK(path_violations(res.gog, y).empty());
        CHECK(y.edges.size() == 1);
    }
    SUBCASE("collapse after a basis-change gluing") {
        GraphOfGroups g;
        g.graph.vertex_names = {"u", "w"};
        g.graph.add_edge_pair("e", "ebar", 0, 1);
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"a", "b"})));
        g.vertex_groups.push_back(VertexGroup::free_group(Alphabet({"p", "q"})));
        Alphabet eg({"g", "h"});
        g.edge_groups.assign(2, EdgeGroup::free_group(eg));
        g.injections.resize(2);
        g.injections[0].images = {parse_word("a b", g.vg(0).gens()),
                                  parse_word("b", g.vg(0).gens())};
        g.injections[1].images = {parse_word("p", g.vg(1).gens()),
                                  parse_word("q p", g.vg(1).gens())};
        REQUIRE(g.validate().empty());
        CollapseResult res = collapse_edge(g, "e");
        REQUIRE(res.gog.validate().empty());
        // a = (ab)(b)^-1 maps through the edge to p (qp)^-1 = q^-1... conjugated
        CHECK(res.origin_translation[0] == parse_word("p p^-1 q^-1", g.vg(1).gens()));
        CHECK(res.origin_translation[1] == parse_word("q p", g.vg(1).gens()));
    }
}

TEST_CASE("vertex group word problems") {
    SUBCASE("abelian with torsion") {
        VertexGroup v = VertexGroup::abelian(Alphabet({"x", "y"}), {2, 4});
        CHECK(v.equal(parse_word("x y x", v.gens()), parse_word("y", v.gens())));
        CHECK(v.equal(parse_word("y^5", v.gens()), parse_word("y", v.gens())));
        CHECK(!v.equal(parse_word("y^2", v.gens()), parse_word("y", v.gens())));
        CHECK(v.is_identity(parse_word("x^2 y^4", v.gens())));
        CHECK_THROWS_AS(VertexGroup::abelian(Alphabet({"x", "y"}), {3, 4}), Error);
        CHECK_THROWS_AS(VertexGroup::abelian(Alphabet({"x", "y"}), {0, 2}), Error);
    }
    SUBCASE("free by cyclic") {
        Alphabet fib_gens({"a", "b", "s"});
        VertexGroup v = VertexGroup::free_by_cyclic(fib_gens, fibonacci());
        CHECK(v.equal(parse_word("s^-1 a s", v.gens()), parse_word("b", v.gens())));
        CHECK(v.equal(parse_word("a s", v.gens()), parse_word("s b", v.gens())));
        CHECK(!v.equal(parse_word("a s", v.gens()), parse_word("s a", v.gens())));
        auto rels = v.relators();
        REQUIRE(rels.size() == 2);
        CHECK(v.is_identity(rels[0]));
        CHECK(v.is_identity(rels[1]));
    }
}
