#include "suspkit/gog_automorphism.hpp"

#include <algorithm>

namespace suspkit {

namespace {

GenMapCert identity_cert(std::size_t rank) {
    GenMapCert c;
    for (std::size_t i = 0; i < rank; ++i) {
        c.images.push_back(Word::generator(int(i)));
        c.inverse_images.push_back(Word::generator(int(i)));
    }
    return c;
}

bool is_permutation(const std::vector<int>& m, std::size_t n) {
    if (m.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : m) {
        if (x < 0 || x >= int(n) || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

} // namespace

GogAutomorphism GogAutomorphism::identity(const GraphOfGroups& gog) {
    GogAutomorphism a;
    const int nv = int(gog.graph.vertex_names.size());
    const int ne = int(gog.graph.edges.size());
    for (int v = 0; v < nv; ++v) {
        a.vertex_map.push_back(v);
        a.vertex_maps.push_back(identity_cert(gog.vg(v).gens().rank()));
    }
    for (int e = 0; e < ne; ++e) {
        a.edge_map.push_back(e);
        a.edge_maps.push_back(identity_cert(gog.edge_groups[e].gens.rank()));
        a.twists.emplace_back();
    }
    return a;
}

std::vector<std::string> validate_gog_aut(const GraphOfGroups& gog, const GogAutomorphism& aut,
                                          bool gamma_at_origin) {
    std::vector<std::string> bad;
    const Graph& g = gog.graph;
    const std::size_t nv = g.vertex_names.size();
    const std::size_t ne = g.edges.size();

    if (!is_permutation(aut.vertex_map, nv)) bad.push_back("vertex map is not a permutation");
    if (!is_permutation(aut.edge_map, ne)) bad.push_back("edge map is not a permutation");
    if (aut.vertex_maps.size() != nv) bad.push_back("missing vertex group maps");
    if (aut.edge_maps.size() != ne) bad.push_back("missing edge group maps");
    if (aut.twists.size() != ne) bad.push_back("missing edge twists");
    if (!bad.empty()) return bad;

    for (std::size_t e = 0; e < ne; ++e) {
        const auto& ed = g.edges[e];
        if (aut.edge_map[ed.bar] != g.edges[aut.edge_map[e]].bar)
            bad.push_back("edge map does not commute with reversal at '" + ed.name + "'");
        if (aut.vertex_map[ed.origin] != g.edges[aut.edge_map[e]].origin ||
            aut.vertex_map[ed.target] != g.edges[aut.edge_map[e]].target)
            bad.push_back("edge map does not respect endpoints at '" + ed.name + "'");
        if (!(aut.edge_maps[e] == aut.edge_maps[ed.bar]))
            bad.push_back("edge group maps differ on the pair of '" + ed.name + "'");
    }
    if (!bad.empty()) return bad;

    // vertex group isomorphism certificates
    for (std::size_t v = 0; v < nv; ++v) {
        const VertexGroup& src = gog.vg(int(v));
        const VertexGroup& dst = gog.vg(aut.vertex_map[v]);
        const GenMapCert& c = aut.vertex_maps[v];
        const std::string where = "vertex '" + g.vertex_names[v] + "'";
        if (c.images.size() != src.gens().rank() || c.inverse_images.size() != dst.gens().rank()) {
            bad.push_back("certificate arity wrong at " + where);
            continue;
        }
        bool range_ok = true;
        for (const Word& w : c.images)
            if (w.max_gen_index() >= int(dst.gens().rank())) range_ok = false;
        for (const Word& w : c.inverse_images)
            if (w.max_gen_index() >= int(src.gens().rank())) range_ok = false;
        if (!range_ok) {
            bad.push_back("certificate image out of range at " + where);
            continue;
        }
        for (const Word& r : src.relators())
            if (!dst.is_identity(apply_images(c.images, r)))
                bad.push_back("map does not kill a relator at " + where);
        for (const Word& r : dst.relators())
            if (!src.is_identity(apply_images(c.inverse_images, r)))
                bad.push_back("inverse does not kill a relator at " + where);
        for (std::size_t i = 0; i < src.gens().rank(); ++i)
            if (!src.equal(apply_images(c.inverse_images, c.images[i]), Word::generator(int(i))))
                bad.push_back("inverse fails on generator " + src.gens().name(int(i)) + " at " + where);
        for (std::size_t i = 0; i < dst.gens().rank(); ++i)
            if (!dst.equal(apply_images(c.images, c.inverse_images[i]), Word::generator(int(i))))
                bad.push_back("map is not onto generator " + dst.gens().name(int(i)) + " at " + where);
    }

    // edge group isomorphism certificates
    for (std::size_t e = 0; e < ne; ++e) {
        if (!g.edges[e].positive) continue;
        const EdgeGroup& src = gog.edge_groups[e];
        const EdgeGroup& dst = gog.edge_groups[aut.edge_map[e]];
        const GenMapCert& c = aut.edge_maps[e];
        const std::string where = "edge '" + g.edges[e].name + "'";
        if (c.images.size() != src.gens.rank() || c.inverse_images.size() != dst.gens.rank()) {
            bad.push_back("certificate arity wrong at " + where);
            continue;
        }
        for (const Word& r : src.relators())
            if (!dst.normalize(apply_images(c.images, r)).is_identity())
                bad.push_back("map does not kill the order relator at " + where);
        for (std::size_t i = 0; i < src.gens.rank(); ++i)
            if (!src.equal(apply_images(c.inverse_images, c.images[i]), Word::generator(int(i))))
                bad.push_back("inverse fails at " + where);
        for (std::size_t i = 0; i < dst.gens.rank(); ++i)
            if (!dst.equal(apply_images(c.images, c.inverse_images[i]), Word::generator(int(i))))
                bad.push_back("map is not onto at " + where);
    }

    // twist ranges
    for (std::size_t e = 0; e < ne; ++e) {
        int home = gamma_at_origin ? aut.vertex_map[g.edges[e].origin] : aut.vertex_map[g.edges[e].target];
        if (aut.twists[e].max_gen_index() >= int(gog.vg(home).gens().rank()))
            bad.push_back("twist of '" + g.edges[e].name + "' is outside its vertex group");
    }
    if (!bad.empty()) return bad;

    // edge compatibility diagram, on every edge-group generator
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& ed = g.edges[e];
        const VertexGroup& tv = gog.vg(aut.vertex_map[ed.origin]);
        const Word gamma = gamma_at_origin ? aut.twists[e] : aut.twists[ed.bar];
        const int fe = aut.edge_map[e];
        for (std::size_t c = 0; c < gog.edge_groups[e].gens.rank(); ++c) {
            Word lhs = apply_images(aut.vertex_maps[ed.origin].images, gog.injections[e].images[c]);
            Word mid = apply_images(gog.injections[fe].images, aut.edge_maps[e].images[c]);
            Word rhs = tv.conjugate(mid, gamma);
            if (!tv.equal(lhs, rhs))
                bad.push_back("compatibility fails on edge '" + ed.name + "' generator " +
                              gog.edge_groups[e].gens.name(int(c)));
        }
    }
    return bad;
}

BassExpression act_on_bass(const GraphOfGroups& gog, const GogAutomorphism& aut,
                           const BassExpression& x) {
    {
        auto bad = path_violations(gog, x);
        if (!bad.empty()) throw Error("not a path element: " + bad.front());
    }
    const Graph& g = gog.graph;
    BassExpression y;
    if (x.edges.empty()) {
        y.base_vertex = aut.vertex_map[x.base_vertex];
        y.entries.push_back(apply_images(aut.vertex_maps[x.base_vertex].images, x.entries[0]));
        return normalize_entries(gog, y);
    }
    const std::size_t n = x.edges.size();
    y.edges.reserve(n);
    y.entries.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        int v = x.entry_vertex(g, i);
        Word w = apply_images(aut.vertex_maps[v].images, x.entries[i]);
        if (i > 0) w = concat(aut.twists[x.edges[i - 1]], w);
        if (i < n) w = concat(w, inverse(aut.twists[g.edges[x.edges[i]].bar]));
        y.entries.push_back(std::move(w));
        if (i < n) y.edges.push_back(aut.edge_map[x.edges[i]]);
    }
    y.base_vertex = aut.vertex_map[x.base_vertex];
    return normalize_entries(gog, y);
}

GogAutomorphism compose_gog(const GraphOfGroups& gog, const GogAutomorphism& phi,
                            const GogAutomorphism& psi) {
    const Graph& g = gog.graph;
    GogAutomorphism out;
    const std::size_t nv = g.vertex_names.size();
    const std::size_t ne = g.edges.size();
    out.vertex_map.resize(nv);
    out.edge_map.resize(ne);
    out.vertex_maps.resize(nv);
    out.edge_maps.resize(ne);
    out.twists.resize(ne);
    for (std::size_t v = 0; v < nv; ++v) {
        const int pv = psi.vertex_map[v];
        out.vertex_map[v] = phi.vertex_map[pv];
        GenMapCert c;
        for (const Word& w : psi.vertex_maps[v].images)
            c.images.push_back(apply_images(phi.vertex_maps[pv].images, w));
        for (const Word& w : phi.vertex_maps[pv].inverse_images)
            c.inverse_images.push_back(apply_images(psi.vertex_maps[v].inverse_images, w));
        out.vertex_maps[v] = std::move(c);
    }
    for (std::size_t e = 0; e < ne; ++e) {
        const int pe = psi.edge_map[e];
        out.edge_map[e] = phi.edge_map[pe];
        GenMapCert c;
        for (const Word& w : psi.edge_maps[e].images)
            c.images.push_back(apply_images(phi.edge_maps[pe].images, w));
        for (const Word& w : phi.edge_maps[pe].inverse_images)
            c.inverse_images.push_back(apply_images(psi.edge_maps[e].inverse_images, w));
        out.edge_maps[e] = std::move(c);
        // phi_{Psi(t(e))}(eta_e) * gamma_{Psi(e)}
        const int ptv = psi.vertex_map[g.edges[e].target];
        Word tw = concat(apply_images(phi.vertex_maps[ptv].images, psi.twists[e]), phi.twists[pe]);
        out.twists[e] = gog.vg(phi.vertex_map[ptv]).normalize(tw);
    }
    return out;
}

std::vector<std::string> twist_violations(const GraphOfGroups& gog, const DehnTwist& t) {
    std::vector<std::string> bad;
    if (t.edge < 0 || t.edge >= int(gog.graph.edges.size())) {
        bad.push_back("unknown edge");
        return bad;
    }
    const int tv = gog.graph.edges[t.edge].target;
    const VertexGroup& vg = gog.vg(tv);
    if (t.element.max_gen_index() >= int(vg.gens().rank())) {
        bad.push_back("twist element is outside the terminus vertex group");
        return bad;
    }
    for (const Word& im : gog.images_at_target(t.edge)) {
        if (!vg.equal(concat(t.element, im), concat(im, t.element)))
            bad.push_back("twist element does not centralize the attached edge group");
    }
    return bad;
}

GogAutomorphism twist_tuple(const GraphOfGroups& gog, const DehnTwist& t) {
    {
        auto bad = twist_violations(gog, t);
        if (!bad.empty()) throw Error(bad.front());
    }
    GogAutomorphism a = GogAutomorphism::identity(gog);
    a.twists[t.edge] = gog.vg(gog.graph.edges[t.edge].target).normalize(t.element);
    return a;
}

DehnTwist twist_power(const GraphOfGroups& gog, const DehnTwist& t, const Int& r) {
    if (r < -1000000 || r > 1000000) throw Error("twist power out of supported range");
    DehnTwist out;
    out.edge = t.edge;
    out.element = gog.vg(gog.graph.edges[t.edge].target)
                      .normalize(power(t.element, r.convert_to<long long>()));
    return out;
}

GogAutomorphism inert_tuple(const GraphOfGroups& gog, const InertTwist& t) {
    const Graph& g = gog.graph;
    if (t.conjugators.size() != g.vertex_names.size())
        throw Error("inert twist needs one conjugator per vertex");
    GogAutomorphism a = GogAutomorphism::identity(gog);
    for (std::size_t v = 0; v < g.vertex_names.size(); ++v) {
        const VertexGroup& vg = gog.vg(int(v));
        const Word& c = t.conjugators[v];
        if (c.max_gen_index() >= int(vg.gens().rank()))
            throw Error("conjugator is outside its vertex group");
        GenMapCert cert;
        for (std::size_t i = 0; i < vg.gens().rank(); ++i) {
            cert.images.push_back(vg.conjugate(Word::generator(int(i)), c));
            cert.inverse_images.push_back(vg.conjugate(Word::generator(int(i)), inverse(c)));
        }
        a.vertex_maps[v] = std::move(cert);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        a.twists[e] = gog.vg(g.edges[e].target).normalize(t.conjugators[g.edges[e].target]);
    return a;
}

std::optional<std::vector<Word>> centralizer_generators(const GraphOfGroups& gog, int edge) {
    const int tv = gog.graph.edges.at(edge).target;
    const VertexGroup& vg = gog.vg(tv);
    std::vector<Word> all;
    for (std::size_t i = 0; i < vg.gens().rank(); ++i) all.push_back(Word::generator(int(i)));
    if (vg.kind() == VgKind::Abelian) return all;
    if (vg.kind() != VgKind::Free) return std::nullopt;

    std::vector<Word> nontrivial;
    for (const Word& im : gog.images_at_target(edge))
        if (!im.is_identity()) nontrivial.push_back(im);
    if (nontrivial.empty()) return all; // trivial attached image, whole group
    Word root = primitive_root(nontrivial.front());
    const std::size_t rl = cyclic_reduce(root).core.length();
    for (const Word& im : nontrivial) {
        const std::size_t il = cyclic_reduce(im).core.length();
        if (rl == 0 || il % rl != 0) return std::vector<Word>{};
        long long k = (long long)(il / rl);
        if (!(im == power(root, k)) && !(im == power(root, -k)))
            return std::vector<Word>{}; // no common root, trivial centralizer
    }
    return std::vector<Word>{root};
}

std::vector<DehnTwist> small_modular_generators(const GraphOfGroups& gog,
                                                const std::vector<std::vector<Word>>& s_sets) {
    if (s_sets.size() != gog.graph.edges.size())
        throw Error("need one centralizer generating set per oriented edge");
    std::vector<DehnTwist> out;
    for (std::size_t e = 0; e < s_sets.size(); ++e) {
        for (const Word& s : s_sets[e]) {
            DehnTwist t{int(e), s};
            auto bad = twist_violations(gog, t);
            if (!bad.empty())
                throw Error("centralizer certificate fails on edge '" + gog.graph.edges[e].name +
                            "': " + bad.front());
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace suspkit
