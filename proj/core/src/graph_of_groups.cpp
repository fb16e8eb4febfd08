#include "suspkit/graph_of_groups.hpp"

#include "suspkit/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace suspkit {

std::optional<int> Graph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return int(i);
    return std::nullopt;
}

std::optional<int> Graph::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return int(i);
    return std::nullopt;
}

int Graph::add_edge_pair(const std::string& name, const std::string& barname, int origin, int target) {
    int e = int(edges.size());
    if (name == barname) {
        // representable on purpose; validate() flags it as an inverted edge
        edges.push_back({name, e, origin, target, true});
        return e;
    }
    edges.push_back({name, e + 1, origin, target, true});
    edges.push_back({barname, e, target, origin, false});
    return e;
}

std::vector<std::string> Graph::validate() const {
    std::vector<std::string> bad;
    const int nv = int(vertex_names.size());
    const int ne = int(edges.size());
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (vertex_names[i] == vertex_names[j])
                bad.push_back("duplicate vertex name '" + vertex_names[i] + "'");
    std::set<std::string> seen;
    for (int e = 0; e < ne; ++e) {
        const auto& ed = edges[e];
        if (!seen.insert(ed.name).second) bad.push_back("duplicate edge name '" + ed.name + "'");
        if (ed.origin < 0 || ed.origin >= nv || ed.target < 0 || ed.target >= nv) {
            bad.push_back("edge '" + ed.name + "' has an endpoint outside the vertex set");
            continue;
        }
        if (ed.bar < 0 || ed.bar >= ne) {
            bad.push_back("edge '" + ed.name + "' has no reverse");
            continue;
        }
        if (ed.bar == e) bad.push_back("inverted edge '" + ed.name + "' (its own reverse)");
        if (edges[ed.bar].bar != e)
            bad.push_back("edge reversal is not an involution at '" + ed.name + "'");
        if (edges[ed.bar].origin != ed.target || edges[ed.bar].target != ed.origin)
            bad.push_back("reverse of '" + ed.name + "' does not swap endpoints");
        if (ed.bar != e && edges[ed.bar].positive == ed.positive)
            bad.push_back("orientation flags of '" + ed.name + "' and its reverse coincide");
    }
    return bad;
}

VertexGroup VertexGroup::free_group(Alphabet gens) {
    VertexGroup g;
    g.kind_ = VgKind::Free;
    g.gens_ = std::move(gens);
    return g;
}

VertexGroup VertexGroup::abelian(Alphabet gens, std::vector<long long> factors) {
    VertexGroup g;
    g.kind_ = VgKind::Abelian;
    if (factors.size() != gens.rank())
        throw Error("abelian vertex group needs one factor per generator");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] == 1 || factors[i] < 0)
            throw Error("abelian factors are 0 (infinite) or >= 2");
        if (i > 0) {
            long long prev = factors[i - 1], cur = factors[i];
            bool ok = prev == 0 ? cur == 0 : (cur == 0 || cur % prev == 0);
            if (!ok) throw Error("abelian factors must divide along the chain");
        }
    }
    g.gens_ = std::move(gens);
    g.factors_ = std::move(factors);
    return g;
}

VertexGroup VertexGroup::free_by_cyclic(Alphabet gens, FreeAutomorphism monodromy) {
    VertexGroup g;
    g.kind_ = VgKind::FreeByCyclic;
    if (gens.rank() != monodromy.domain().rank() + 1)
        throw Error("free-by-cyclic vertex group needs fiber generators plus one stable letter");
    for (std::size_t i = 0; i + 1 < gens.rank(); ++i)
        if (gens.name(int(i)) != monodromy.domain().name(int(i)))
            throw Error("fiber generator names must match the monodromy domain");
    g.gens_ = std::move(gens);
    g.monodromy_ = std::move(monodromy);
    return g;
}

Word VertexGroup::normalize(const Word& w) const {
    if (w.max_gen_index() >= int(gens_.rank())) throw Error("word outside vertex group alphabet");
    switch (kind_) {
    case VgKind::Free:
        return w;
    case VgKind::Abelian: {
        std::vector<long long> exp(gens_.rank(), 0);
        for (Letter l : w.letters()) exp[gen_of(l)] += sign_of(l);
        std::vector<Letter> out;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            long long e = exp[i];
            if (factors_[i] > 0) {
                e %= factors_[i];
                if (e < 0) e += factors_[i];
            }
            for (long long k = 0; k < (e > 0 ? e : -e); ++k)
                out.push_back(make_letter(int(i), e > 0 ? 1 : -1));
        }
        return Word(std::move(out));
    }
    case VgKind::FreeByCyclic: {
        FbcNormalForm nf = fbc_normal_form(w.letters(), *monodromy_);
        std::vector<Letter> out;
        const int t = int(gens_.rank()) - 1;
        for (long long k = 0; k < (nf.t_exponent > 0 ? nf.t_exponent : -nf.t_exponent); ++k)
            out.push_back(make_letter(t, nf.t_exponent > 0 ? 1 : -1));
        out.insert(out.end(), nf.fiber_part.letters().begin(), nf.fiber_part.letters().end());
        return Word(std::move(out));
    }
    }
    throw Error("unreachable");
}

bool VertexGroup::equal(const Word& u, const Word& v) const { return normalize(u) == normalize(v); }

Word VertexGroup::conjugate(const Word& x, const Word& g) const {
    return normalize(concat(concat(inverse(g), x), g));
}

std::vector<Word> VertexGroup::relators() const {
    std::vector<Word> rels;
    switch (kind_) {
    case VgKind::Free:
        break;
    case VgKind::Abelian: {
        const int r = int(gens_.rank());
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                std::vector<Letter> c{make_letter(i, 1), make_letter(j, 1), make_letter(i, -1),
                                      make_letter(j, -1)};
                rels.emplace_back(std::move(c));
            }
        for (int i = 0; i < r; ++i) {
            if (factors_[i] == 0) continue;
            std::vector<Letter> p(std::size_t(factors_[i]), make_letter(i, 1));
            rels.emplace_back(std::move(p));
        }
        break;
    }
    case VgKind::FreeByCyclic: {
        const int t = int(gens_.rank()) - 1;
        for (std::size_t f = 0; f + 1 < gens_.rank(); ++f) {
            std::vector<Letter> raw{make_letter(t, -1), make_letter(int(f), 1), make_letter(t, 1)};
            Word lhs(std::move(raw));
            rels.push_back(concat(lhs, inverse(monodromy_->image(int(f)))));
        }
        break;
    }
    }
    return rels;
}

EdgeGroup EdgeGroup::free_group(Alphabet g) { return EdgeGroup{std::move(g), 0}; }

EdgeGroup EdgeGroup::cyclic(const std::string& gen_name, long long order) {
    if (order < 0 || order == 1) throw Error("cyclic edge group order is 0 (infinite) or >= 2");
    return EdgeGroup{Alphabet({gen_name}), order};
}

Word EdgeGroup::normalize(const Word& w) const {
    if (w.max_gen_index() >= int(gens.rank())) throw Error("word outside edge group alphabet");
    if (order == 0) return w;
    long long e = 0;
    for (Letter l : w.letters()) e += sign_of(l);
    e %= order;
    if (e < 0) e += order;
    std::vector<Letter> out(std::size_t(e), make_letter(0, 1));
    return Word(std::move(out));
}

std::vector<Word> EdgeGroup::relators() const {
    if (order == 0) return {};
    return {Word(std::vector<Letter>(std::size_t(order), make_letter(0, 1)))};
}

std::vector<std::string> GraphOfGroups::validate() const {
    std::vector<std::string> bad = graph.validate();
    if (vertex_groups.size() != graph.vertex_names.size())
        bad.push_back("vertex group count does not match vertex count");
    if (edge_groups.size() != graph.edges.size())
        bad.push_back("edge group count does not match oriented edge count");
    if (injections.size() != graph.edges.size())
        bad.push_back("injection count does not match oriented edge count");
    if (!bad.empty()) return bad;

    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto& ed = graph.edges[e];
        if (ed.bar >= 0 && !(edge_groups[e] == edge_groups[ed.bar]))
            bad.push_back("edge groups of '" + ed.name + "' and its reverse differ");
        const EdgeGroup& eg = edge_groups[e];
        const VertexGroup& ov = vertex_groups[ed.origin];
        if (injections[e].images.size() != eg.gens.rank()) {
            bad.push_back("injection of '" + ed.name + "' has wrong arity");
            continue;
        }
        for (std::size_t c = 0; c < eg.gens.rank(); ++c) {
            const Word& im = injections[e].images[c];
            if (im.max_gen_index() >= int(ov.gens().rank())) {
                bad.push_back("injection of '" + ed.name + "' leaves the origin vertex group");
                continue;
            }
            if (eg.gens.rank() == 1 && ov.is_identity(im))
                bad.push_back("injection of '" + ed.name + "' kills the cyclic edge generator");
            if (eg.order > 0) {
                // finite order must be respected in the vertex group
                if (!ov.is_identity(power(im, eg.order)))
                    bad.push_back("injection of '" + ed.name + "' breaks the edge generator order");
            }
        }
    }
    return bad;
}

BassExpression BassExpression::vertex_element(int v, Word g) {
    BassExpression x;
    x.base_vertex = v;
    x.entries.push_back(std::move(g));
    return x;
}

int BassExpression::entry_vertex(const Graph& g, std::size_t i) const {
    if (edges.empty()) return base_vertex;
    if (i == 0) return g.edges.at(edges[0]).origin;
    return g.edges.at(edges[i - 1]).target;
}

std::vector<std::string> path_violations(const GraphOfGroups& gog, const BassExpression& x) {
    std::vector<std::string> bad;
    if (x.entries.size() != x.edges.size() + 1) {
        bad.push_back("expression must alternate g0 e1 g1 ... en gn");
        return bad;
    }
    for (int e : x.edges)
        if (e < 0 || e >= int(gog.graph.edges.size())) {
            bad.push_back("unknown edge index in expression");
            return bad;
        }
    for (std::size_t i = 0; i + 1 < x.edges.size(); ++i) {
        const auto& a = gog.graph.edges[x.edges[i]];
        const auto& b = gog.graph.edges[x.edges[i + 1]];
        if (a.target != b.origin)
            bad.push_back("edges '" + a.name + "' and '" + b.name + "' do not concatenate");
    }
    if (x.edges.empty() && (x.base_vertex < 0 || x.base_vertex >= int(gog.graph.vertex_names.size()))) {
        bad.push_back("unknown base vertex");
        return bad;
    }
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        int v = x.entry_vertex(gog.graph, i);
        if (x.entries[i].max_gen_index() >= int(gog.vg(v).gens().rank()))
            bad.push_back("entry " + std::to_string(i) + " is not a word in the group at vertex '" +
                          gog.graph.vertex_names[v] + "'");
    }
    return bad;
}

bool is_path_element(const GraphOfGroups& gog, const BassExpression& x, int from, int to) {
    if (!path_violations(gog, x).empty()) return false;
    return x.from(gog.graph) == from && x.to(gog.graph) == to;
}

BassExpression bass_inverse(const GraphOfGroups& gog, const BassExpression& x) {
    BassExpression y;
    y.base_vertex = x.to(gog.graph);
    y.entries.reserve(x.entries.size());
    y.edges.reserve(x.edges.size());
    for (auto it = x.entries.rbegin(); it != x.entries.rend(); ++it) y.entries.push_back(inverse(*it));
    for (auto it = x.edges.rbegin(); it != x.edges.rend(); ++it)
        y.edges.push_back(gog.graph.edges[*it].bar);
    return y;
}

BassExpression bass_concat(const GraphOfGroups& gog, const BassExpression& x, const BassExpression& y) {
    if (x.to(gog.graph) != y.from(gog.graph)) throw Error("path elements do not concatenate");
    BassExpression z;
    z.base_vertex = x.from(gog.graph);
    z.entries = x.entries;
    z.edges = x.edges;
    z.entries.back() = concat(z.entries.back(), y.entries.front());
    z.entries.insert(z.entries.end(), y.entries.begin() + 1, y.entries.end());
    z.edges.insert(z.edges.end(), y.edges.begin(), y.edges.end());
    return z;
}

BassExpression normalize_entries(const GraphOfGroups& gog, const BassExpression& x) {
    BassExpression y = x;
    for (std::size_t i = 0; i < y.entries.size(); ++i)
        y.entries[i] = gog.vg(y.entry_vertex(gog.graph, i)).normalize(y.entries[i]);
    return y;
}

bool bass_equal_entrywise(const GraphOfGroups& gog, const BassExpression& x, const BassExpression& y) {
    if (x.edges != y.edges) return false;
    if (x.entries.size() != y.entries.size()) return false;
    if (x.edges.empty() && x.base_vertex != y.base_vertex) return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        if (!gog.vg(x.entry_vertex(gog.graph, i)).equal(x.entries[i], y.entries[i])) return false;
    return true;
}

long long signed_edge_count(const Graph& g, const BassExpression& x, int oriented_edge) {
    long long n = 0;
    const int bar = g.edges.at(oriented_edge).bar;
    for (int e : x.edges) {
        if (e == oriented_edge) ++n;
        else if (e == bar) --n;
    }
    return n;
}

namespace {

// Deterministic presentation generator names: plain when globally unique,
// otherwise vertex-qualified.
std::vector<std::string> presentation_names(const GraphOfGroups& gog,
                                            const std::vector<int>& nontree_reps) {
    std::vector<std::string> plain;
    for (std::size_t v = 0; v < gog.vertex_groups.size(); ++v)
        for (const auto& n : gog.vg(int(v)).gens().names()) plain.push_back(n);
    for (int e : nontree_reps) plain.push_back(gog.graph.edges[e].name);
    std::set<std::string> uniq(plain.begin(), plain.end());
    if (uniq.size() == plain.size()) return plain;

    std::vector<std::string> qualified;
    for (std::size_t v = 0; v < gog.vertex_groups.size(); ++v)
        for (const auto& n : gog.vg(int(v)).gens().names())
            qualified.push_back(gog.graph.vertex_names[v] + "_" + n);
    for (int e : nontree_reps) qualified.push_back(gog.graph.edges[e].name);
    std::set<std::string> uniq2(qualified.begin(), qualified.end());
    if (uniq2.size() != qualified.size())
        throw Error("generator names collide even after vertex qualification");
    return qualified;
}

} // namespace

Pi1Context pi1_presentation(const GraphOfGroups& gog, const std::vector<std::string>& tree_edges,
                            const std::string& base_vertex) {
    {
        auto bad = gog.validate();
        if (!bad.empty()) throw Error("invalid graph of groups: " + bad.front());
    }
    Pi1Context ctx;
    ctx.gog = gog;
    const Graph& g = ctx.gog.graph;
    const int nv = int(g.vertex_names.size());
    const int ne = int(g.edges.size());

    ctx.base_vertex = 0;
    if (!base_vertex.empty()) {
        auto b = g.vertex_index(base_vertex);
        if (!b) throw Error("unknown base vertex '" + base_vertex + "'");
        ctx.base_vertex = *b;
    }

    ctx.in_tree.assign(ne, false);
    for (const auto& name : tree_edges) {
        auto e = g.edge_index(name);
        if (!e) throw Error("unknown tree edge '" + name + "'");
        ctx.in_tree[*e] = true;
        ctx.in_tree[g.edges[*e].bar] = true;
    }
    // spanning and acyclic
    {
        std::vector<int> comp(nv);
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int v) {
            while (comp[v] != v) v = comp[v] = comp[comp[v]];
            return v;
        };
        for (int e = 0; e < ne; ++e) {
            if (!ctx.in_tree[e] || !g.edges[e].positive) continue;
            int a = find(g.edges[e].origin), b = find(g.edges[e].target);
            if (a == b) throw Error("tree edges contain a cycle");
            comp[a] = b;
        }
        for (int v = 0; v < nv; ++v)
            if (find(v) != find(ctx.base_vertex)) throw Error("tree edges do not span the graph");
    }

    // tree paths from the base
    ctx.tree_path.assign(nv, {});
    {
        std::vector<bool> seen(nv, false);
        seen[ctx.base_vertex] = true;
        std::deque<int> q{ctx.base_vertex};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int e = 0; e < ne; ++e) {
                if (!ctx.in_tree[e] || g.edges[e].origin != v) continue;
                int w = g.edges[e].target;
                if (seen[w]) continue;
                seen[w] = true;
                ctx.tree_path[w] = ctx.tree_path[v];
                ctx.tree_path[w].push_back(e);
                q.push_back(w);
            }
        }
    }

    std::vector<int> nontree_reps;
    for (int e = 0; e < ne; ++e)
        if (!ctx.in_tree[e] && g.edges[e].positive) nontree_reps.push_back(e);

    std::vector<std::string> names = presentation_names(gog, nontree_reps);

    ctx.vertex_gen_index.assign(nv, {});
    int idx = 0;
    for (int v = 0; v < nv; ++v)
        for (std::size_t i = 0; i < gog.vg(v).gens().rank(); ++i)
            ctx.vertex_gen_index[v].push_back(idx++);
    ctx.edge_letter_index.assign(ne, -1);
    ctx.edge_letter_sign.assign(ne, 0);
    for (int e : nontree_reps) {
        ctx.edge_letter_index[e] = idx;
        ctx.edge_letter_sign[e] = 1;
        ctx.edge_letter_index[g.edges[e].bar] = idx;
        ctx.edge_letter_sign[g.edges[e].bar] = -1;
        ++idx;
    }

    auto translate = [&](int v, const Word& w) {
        std::vector<Letter> out;
        out.reserve(w.length());
        for (Letter l : w.letters())
            out.push_back(make_letter(ctx.vertex_gen_index[v][gen_of(l)], sign_of(l)));
        return Word(std::move(out));
    };

    std::vector<Word> relators;
    for (int v = 0; v < nv; ++v)
        for (const Word& r : gog.vg(v).relators()) relators.push_back(translate(v, r));
    for (int e = 0; e < ne; ++e) {
        if (!g.edges[e].positive) continue;
        const int bar = g.edges[e].bar;
        for (std::size_t c = 0; c < gog.edge_groups[e].gens.rank(); ++c) {
            // e^-1 i_e(c) e i_ebar(c)^-1, with tree letters dropped
            std::vector<Letter> raw;
            if (!ctx.in_tree[e]) raw.push_back(make_letter(ctx.edge_letter_index[e], -1));
            Word left = translate(g.edges[e].origin, gog.injections[e].images[c]);
            raw.insert(raw.end(), left.letters().begin(), left.letters().end());
            if (!ctx.in_tree[e]) raw.push_back(make_letter(ctx.edge_letter_index[e], 1));
            Word right = translate(g.edges[e].target, gog.injections[bar].images[c]);
            Word rel = concat(Word(std::move(raw)), inverse(right));
            relators.push_back(rel);
        }
    }
    ctx.presentation = GroupPresentation(Alphabet(names), std::move(relators));
    return ctx;
}

IntVec Pi1Context::exponent_vector(const BassExpression& x) const {
    IntVec vec(presentation.generators.rank());
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        int v = x.entry_vertex(gog.graph, i);
        for (Letter l : x.entries[i].letters())
            vec[vertex_gen_index[v][gen_of(l)]] += sign_of(l);
    }
    for (int e : x.edges) {
        if (in_tree[e]) continue;
        vec[edge_letter_index[e]] += edge_letter_sign[e];
    }
    return vec;
}

Word Pi1Context::to_presentation_word(const BassExpression& x) const {
    std::vector<Letter> raw;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        int v = x.entry_vertex(gog.graph, i);
        for (Letter l : x.entries[i].letters())
            raw.push_back(make_letter(vertex_gen_index[v][gen_of(l)], sign_of(l)));
        if (i < x.edges.size()) {
            int e = x.edges[i];
            if (!in_tree[e]) raw.push_back(make_letter(edge_letter_index[e], edge_letter_sign[e]));
        }
    }
    return Word(std::move(raw));
}

IntVec Pi1Context::edge_functional(int oriented_edge) const {
    IntVec row(presentation.generators.rank());
    const Graph& g = gog.graph;
    const int bar = g.edges.at(oriented_edge).bar;
    auto count = [&](const std::vector<int>& seq, long long sign) {
        long long n = 0;
        for (int e : seq) {
            if (e == oriented_edge) n += 1;
            else if (e == bar) n -= 1;
        }
        return n * sign;
    };
    for (int f = 0; f < int(g.edges.size()); ++f) {
        if (in_tree[f] || !g.edges[f].positive) continue;
        // canonical loop: tree path to o(f), then f, then reverse tree path from t(f)
        long long n = count(tree_path[g.edges[f].origin], 1);
        if (f == oriented_edge) n += 1;
        else if (f == bar) n -= 1;
        n += count(tree_path[g.edges[f].target], -1); // reversed path: bars swap roles
        row[edge_letter_index[f]] = n;
    }
    return row;
}

CollapseResult collapse_edge(const GraphOfGroups& gog, const std::string& edge_name) {
    auto ei = gog.graph.edge_index(edge_name);
    if (!ei) throw Error("unknown edge '" + edge_name + "'");
    const int e = *ei;
    const int bar = gog.graph.edges[e].bar;
    const int dead = gog.graph.edges[e].origin;
    const int live = gog.graph.edges[e].target;
    if (dead == live) throw Error("cannot collapse a loop edge");

    const VertexGroup& ov = gog.vg(dead);
    const EdgeGroup& eg = gog.edge_groups[e];
    const auto& images = gog.injections[e].images;

    // invert the identification of the edge group with the origin group
    std::vector<Word> inv; // origin generator -> edge group word
    switch (ov.kind()) {
    case VgKind::Free: {
        if (eg.order != 0 || eg.gens.rank() != ov.gens().rank())
            throw Error("collapse unsupported: edge group does not match the origin group");
        auto r = invert_basis_map(int(ov.gens().rank()), images);
        if (!r) throw Error("collapse unsupported: injection is not onto the origin group");
        inv = std::move(*r);
        break;
    }
    case VgKind::Abelian: {
        if (ov.gens().rank() != 1 || eg.gens.rank() != 1)
            throw Error("collapse unsupported: abelian case handles single generators only");
        long long d = ov.factors()[0];
        long long k = 0;
        for (Letter l : images[0].letters()) k += sign_of(l);
        if (d == 0) {
            if (eg.order != 0 || (k != 1 && k != -1))
                throw Error("collapse unsupported: injection is not onto the origin group");
            inv.push_back(power(Word::generator(0), k));
        } else {
            if (eg.order != d) throw Error("collapse unsupported: orders differ");
            long long kk = ((k % d) + d) % d, x = -1;
            for (long long c = 1; c < d; ++c)
                if ((kk * c) % d == 1) { x = c; break; }
            if (x < 0) throw Error("collapse unsupported: injection is not onto the origin group");
            inv.push_back(power(Word::generator(0), x));
        }
        break;
    }
    case VgKind::FreeByCyclic:
        throw Error("collapse unsupported for free-by-cyclic origin groups");
    }

    // origin generator -> element of the surviving group, through the edge
    CollapseResult res;
    res.old_graph = gog.graph;
    res.removed_vertex = dead;
    const auto& target_images = gog.injections[bar].images;
    for (std::size_t i = 0; i < inv.size(); ++i)
        res.origin_translation.push_back(gog.vg(live).normalize(apply_images(target_images, inv[i])));

    const int nv = int(gog.graph.vertex_names.size());
    res.vertex_map.assign(nv, -1);
    int nidx = 0;
    for (int v = 0; v < nv; ++v)
        if (v != dead) res.vertex_map[v] = nidx++;
    res.vertex_map[dead] = res.vertex_map[live];

    res.edge_map.assign(gog.graph.edges.size(), -1);
    GraphOfGroups out;
    for (int v = 0; v < nv; ++v)
        if (v != dead) {
            out.graph.vertex_names.push_back(gog.graph.vertex_names[v]);
            out.vertex_groups.push_back(gog.vertex_groups[v]);
        }
    for (std::size_t f = 0; f < gog.graph.edges.size(); ++f) {
        if (int(f) == e || int(f) == bar) continue;
        res.edge_map[f] = int(out.graph.edges.size());
        Graph::OrientedEdge ne = gog.graph.edges[f];
        ne.origin = res.vertex_map[ne.origin];
        ne.target = res.vertex_map[ne.target];
        out.graph.edges.push_back(ne);
        out.edge_groups.push_back(gog.edge_groups[f]);
        EdgeInjection inj = gog.injections[f];
        if (gog.graph.edges[f].origin == dead)
            for (Word& w : inj.images)
                w = out.vertex_groups[res.vertex_map[dead]].normalize(
                    apply_images(res.origin_translation, w));
        out.injections.push_back(std::move(inj));
    }
    for (auto& ne : out.graph.edges) ne.bar = res.edge_map[ne.bar];
    res.gog = std::move(out);
    return res;
}

BassExpression CollapseResult::rewrite(const BassExpression& x) const {
    auto old_vertex = [&](std::size_t i) { return x.entry_vertex(old_graph, i); };
    auto translate = [&](int v, const Word& w) {
        return v == removed_vertex ? apply_images(origin_translation, w) : w;
    };
    BassExpression y;
    y.base_vertex = vertex_map.at(old_vertex(0));
    Word cur = translate(old_vertex(0), x.entries.at(0));
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
        Word nxt = translate(old_vertex(i + 1), x.entries.at(i + 1));
        if (edge_map.at(x.edges[i]) < 0) {
            cur = concat(cur, nxt);
        } else {
            y.entries.push_back(std::move(cur));
            y.edges.push_back(edge_map[x.edges[i]]);
            cur = std::move(nxt);
        }
    }
    y.entries.push_back(std::move(cur));
    return normalize_entries(gog, y);
}

} // namespace suspkit
