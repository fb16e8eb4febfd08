#include "suspkit/formats.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace suspkit {

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

// Line-oriented reader with section headers `[name args...]`.
struct Lines {
    std::vector<std::string> raw;
    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) raw.push_back(strip_comment(line));
    }
};

[[noreturn]] void fail(int line, const std::string& msg, int column = 1) {
    throw ParseError(line, column, msg);
}

bool is_section(const std::string& line, std::string& name, std::vector<std::string>& args,
                int lineno) {
    std::string t = line;
    auto first = t.find_first_not_of(" \t");
    if (first == std::string::npos || t[first] != '[') return false;
    auto close = t.find(']', first);
    if (close == std::string::npos) fail(lineno, "unterminated section header");
    auto toks = tokenize(t.substr(first + 1, close - first - 1));
    if (toks.empty()) fail(lineno, "empty section header");
    name = toks[0];
    args.assign(toks.begin() + 1, toks.end());
    return true;
}

// `lhs -> rhs` split
bool split_arrow(const std::string& line, std::string& lhs, std::string& rhs) {
    auto pos = line.find("->");
    if (pos == std::string::npos) return false;
    lhs = line.substr(0, pos);
    rhs = line.substr(pos + 2);
    return true;
}

Word parse_word_tokens(const std::vector<std::string>& toks, const Alphabet& alphabet, int line) {
    std::vector<Letter> raw;
    for (const auto& tok : toks) {
        if (tok == "1") continue;
        std::string label = tok;
        long long exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            label = tok.substr(0, caret);
            try {
                exp = std::stoll(tok.substr(caret + 1));
            } catch (...) {
                fail(line, "bad exponent in token '" + tok + "'");
            }
        }
        auto idx = alphabet.index_of(label);
        if (!idx) fail(line, "unknown generator '" + label + "'");
        for (long long i = 0; i < (exp > 0 ? exp : -exp); ++i)
            raw.push_back(make_letter(*idx, exp > 0 ? 1 : -1));
    }
    return Word(std::move(raw));
}

std::string format_token(int gen, long long exp, const Alphabet& alphabet) {
    if (exp == 1) return alphabet.name(gen);
    return alphabet.name(gen) + "^" + std::to_string(exp);
}

} // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet, int line) {
    return parse_word_tokens(tokenize(text), alphabet, line);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.is_identity()) return "1";
    std::string out;
    std::size_t i = 0;
    const auto& ls = w.letters();
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        long long exp = (long long)(j - i) * sign_of(ls[i]);
        if (!out.empty()) out += ' ';
        out += format_token(gen_of(ls[i]), exp, alphabet);
        i = j;
    }
    return out;
}

// --- automorphism files -----------------------------------------------

AutFile parse_aut(const std::string& text) {
    Lines lines(text);
    std::vector<std::string> names;
    std::vector<std::string> rhs_main, rhs_inv;
    std::vector<int> line_main, line_inv;
    std::vector<std::string> inv_names;
    bool in_inverse = false;
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        std::string name;
        std::vector<std::string> args;
        if (is_section(lines.raw[i], name, args, ln)) {
            if (name != "inverse") fail(ln, "unknown section '" + name + "'");
            in_inverse = true;
            continue;
        }
        std::string lhs, rhs;
        if (!split_arrow(lines.raw[i], lhs, rhs)) {
            if (!tokenize(lines.raw[i]).empty()) fail(ln, "expected `gen -> word`");
            continue;
        }
        auto lt = tokenize(lhs);
        if (lt.size() != 1) fail(ln, "expected a single generator on the left");
        if (!in_inverse) {
            names.push_back(lt[0]);
            rhs_main.push_back(rhs);
            line_main.push_back(ln);
        } else {
            inv_names.push_back(lt[0]);
            rhs_inv.push_back(rhs);
            line_inv.push_back(ln);
        }
    }
    if (names.empty()) fail(1, "no generator images found");
    AutFile f;
    if (std::find(names.begin(), names.end(), "t") != names.end())
        fail(line_main[std::find(names.begin(), names.end(), "t") - names.begin()],
             "the label 't' is reserved for the transverse letter");
    f.alphabet = Alphabet(names);
    for (std::size_t i = 0; i < rhs_main.size(); ++i)
        f.images.push_back(parse_word(rhs_main[i], f.alphabet, line_main[i]));
    if (!rhs_inv.empty()) {
        std::vector<Word> inv(names.size());
        std::vector<bool> seen(names.size(), false);
        for (std::size_t i = 0; i < rhs_inv.size(); ++i) {
            auto idx = f.alphabet.index_of(inv_names[i]);
            if (!idx) fail(line_inv[i], "unknown generator '" + inv_names[i] + "'");
            inv[*idx] = parse_word(rhs_inv[i], f.alphabet, line_inv[i]);
            seen[*idx] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) fail(line_inv.empty() ? 1 : line_inv.back(),
                               "inverse image of '" + names[i] + "' missing");
        f.inverse_images = std::move(inv);
    }
    return f;
}

std::string serialize_aut(const AutFile& f) {
    std::string out;
    for (std::size_t i = 0; i < f.images.size(); ++i)
        out += f.alphabet.name(int(i)) + " -> " + format_word(f.images[i], f.alphabet) + "\n";
    if (f.inverse_images) {
        out += "[inverse]\n";
        for (std::size_t i = 0; i < f.inverse_images->size(); ++i)
            out += f.alphabet.name(int(i)) + " -> " +
                   format_word((*f.inverse_images)[i], f.alphabet) + "\n";
    }
    return out;
}

FreeAutomorphism AutFile::bind() const {
    if (inverse_images) return FreeAutomorphism(alphabet, images, *inverse_images);
    return FreeAutomorphism::from_images(alphabet, images);
}

// --- presentation files -----------------------------------------------

PresentationFile parse_grp(const std::string& text) {
    Lines lines(text);
    std::optional<Alphabet> gens;
    std::vector<Word> relators;
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (toks[0] == "gens") {
            if (gens) fail(ln, "duplicate gens line");
            gens = Alphabet(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else if (toks[0] == "rel") {
            if (!gens) fail(ln, "rel before gens");
            relators.push_back(
                parse_word_tokens({toks.begin() + 1, toks.end()}, *gens, ln));
        } else {
            fail(ln, "expected `gens ...` or `rel ...`");
        }
    }
    if (!gens) fail(1, "missing gens line");
    return PresentationFile{GroupPresentation(*gens, std::move(relators))};
}

std::string serialize_grp(const PresentationFile& f) {
    std::string out = "gens";
    for (const auto& n : f.presentation.generators.names()) out += " " + n;
    out += "\n";
    for (const Word& r : f.presentation.relators)
        out += "rel " + format_word(r, f.presentation.generators) + "\n";
    return out;
}

// --- splitting files ----------------------------------------------------

namespace {

BassExpression parse_bass(const std::string& text, const GraphOfGroups& gog,
                          const std::string& base_vertex, int ln) {
    // alternating {word} edge {word} ... ; a bare {word} needs base_vertex
    BassExpression x;
    std::vector<std::string> pieces;
    std::string cur;
    bool in_brace = false;
    for (char c : text) {
        if (c == '{') {
            if (in_brace) fail(ln, "nested brace");
            in_brace = true;
            cur = "{";
        } else if (c == '}') {
            if (!in_brace) fail(ln, "unmatched brace");
            in_brace = false;
            pieces.push_back(cur + "}");
            cur.clear();
        } else if (in_brace) {
            cur += c;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                pieces.push_back(cur);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (in_brace) fail(ln, "unmatched brace");
    if (!cur.empty()) pieces.push_back(cur);
    if (pieces.empty()) fail(ln, "empty path expression");

    std::vector<int> edges;
    std::vector<std::string> entry_texts;
    bool expect_entry = true;
    for (const auto& p : pieces) {
        if (expect_entry) {
            if (p.front() != '{' || p.back() != '}') fail(ln, "expected {word}, got '" + p + "'");
            entry_texts.push_back(p.substr(1, p.size() - 2));
        } else {
            auto e = gog.graph.edge_index(p);
            if (!e) fail(ln, "unknown edge '" + p + "'");
            edges.push_back(*e);
        }
        expect_entry = !expect_entry;
    }
    if (entry_texts.size() != edges.size() + 1) fail(ln, "path must end with a {word}");
    x.edges = edges;
    if (edges.empty()) {
        auto v = gog.graph.vertex_index(base_vertex);
        if (!v) fail(ln, "edge-free path needs a known base vertex");
        x.base_vertex = *v;
    }
    for (std::size_t i = 0; i < entry_texts.size(); ++i) {
        int v = x.edges.empty() ? x.base_vertex
                                : (i == 0 ? gog.graph.edges[x.edges[0]].origin
                                          : gog.graph.edges[x.edges[i - 1]].target);
        x.entries.push_back(parse_word(entry_texts[i], gog.vg(v).gens(), ln));
    }
    return x;
}

} // namespace

std::string format_bass(const BassExpression& x, const GraphOfGroups& gog) {
    std::string out;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        int v = x.entry_vertex(gog.graph, i);
        out += "{" + format_word(x.entries[i], gog.vg(v).gens()) + "}";
        if (i < x.edges.size()) out += " " + gog.graph.edges[x.edges[i]].name + " ";
    }
    return out;
}

SplittingFile parse_gog(const std::string& text) {
    Lines lines(text);
    SplittingFile f;
    std::string section;
    std::vector<std::string> sargs;
    // deferred vertex/edge group payloads keyed by section order
    struct VgDecl {
        std::string vertex, kind, stable;
        std::vector<std::string> gens;
        std::vector<long long> factors;
        std::vector<std::pair<std::string, std::string>> mono, monoinv;
        std::vector<long long> degrees;
        bool has_degrees = false;
        int line = 0;
    };
    struct EgDecl {
        std::string edge, kind = "free";
        std::vector<std::string> gens;
        long long order = 0;
        int line = 0;
    };
    struct InjDecl {
        std::string edge;
        std::vector<std::pair<std::string, std::string>> images;
        int line = 0;
    };
    std::vector<VgDecl> vgs;
    std::vector<EgDecl> egs;
    std::vector<InjDecl> injs;
    std::vector<std::pair<std::string, std::string>> dict_lines; // name -> path text
    std::vector<int> dict_linenos;
    std::vector<std::pair<std::string, std::string>> wordmap_lines;
    std::vector<int> wordmap_linenos;
    std::vector<std::pair<std::string, int>> fiber_lines;
    std::optional<std::pair<std::string, int>> transverse_line;

    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        std::string name;
        std::vector<std::string> args;
        if (is_section(lines.raw[i], name, args, ln)) {
            section = name;
            sargs = args;
            if (section == "vertexgroup") {
                if (sargs.size() != 1) fail(ln, "[vertexgroup] needs a vertex name");
                vgs.push_back(VgDecl{});
                vgs.back().vertex = sargs[0];
                vgs.back().line = ln;
            } else if (section == "edgegroup") {
                if (sargs.size() != 1) fail(ln, "[edgegroup] needs an edge name");
                egs.push_back(EgDecl{});
                egs.back().edge = sargs[0];
                egs.back().line = ln;
            } else if (section == "inject") {
                if (sargs.size() != 1) fail(ln, "[inject] needs an edge name");
                injs.push_back(InjDecl{});
                injs.back().edge = sargs[0];
                injs.back().line = ln;
            }
            continue;
        }
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (section == "graph") {
            if (toks[0] == "vertex" && toks.size() == 2) {
                f.gog.graph.vertex_names.push_back(toks[1]);
            } else if (toks[0] == "base" && toks.size() == 2) {
                f.base_vertex = toks[1];
            } else if (toks[0] == "edge" && toks.size() == 6 && toks[3] == ":" && toks[4].size()) {
                fail(ln, "expected `edge e ebar : u -> v`");
            } else if (toks[0] == "edge") {
                // edge e ebar : u -> v
                if (toks.size() != 7 || toks[3] != ":" || toks[5] != "->")
                    fail(ln, "expected `edge e ebar : u -> v`");
                auto u = f.gog.graph.vertex_index(toks[4]);
                auto v = f.gog.graph.vertex_index(toks[6]);
                if (!u || !v) fail(ln, "unknown endpoint vertex");
                f.gog.graph.add_edge_pair(toks[1], toks[2], *u, *v);
            } else {
                fail(ln, "unknown graph line");
            }
        } else if (section == "vertexgroup") {
            auto& d = vgs.back();
            if (toks[0] == "kind" && toks.size() == 2) d.kind = toks[1];
            else if (toks[0] == "gens") d.gens.assign(toks.begin() + 1, toks.end());
            else if (toks[0] == "stable" && toks.size() == 2) d.stable = toks[1];
            else if (toks[0] == "factors") {
                for (std::size_t k = 1; k < toks.size(); ++k) {
                    try {
                        d.factors.push_back(std::stoll(toks[k]));
                    } catch (...) {
                        fail(ln, "bad factor '" + toks[k] + "'");
                    }
                }
            } else if (toks[0] == "degrees") {
                d.has_degrees = true;
                for (std::size_t k = 1; k < toks.size(); ++k) {
                    try {
                        d.degrees.push_back(std::stoll(toks[k]));
                    } catch (...) {
                        fail(ln, "bad degree '" + toks[k] + "'");
                    }
                }
            } else if (toks[0] == "mono" || toks[0] == "monoinv") {
                std::string lhs, rhs;
                if (!split_arrow(lines.raw[i].substr(lines.raw[i].find(toks[0]) + toks[0].size()),
                                 lhs, rhs))
                    fail(ln, "expected `" + toks[0] + " gen -> word`");
                auto lt = tokenize(lhs);
                if (lt.size() != 1) fail(ln, "expected a single generator");
                (toks[0] == "mono" ? d.mono : d.monoinv).emplace_back(lt[0], rhs);
            } else {
                fail(ln, "unknown vertexgroup line");
            }
        } else if (section == "edgegroup") {
            auto& d = egs.back();
            if (toks[0] == "kind" && toks.size() == 2) d.kind = toks[1];
            else if (toks[0] == "gens") d.gens.assign(toks.begin() + 1, toks.end());
            else if (toks[0] == "order" && toks.size() == 2) {
                try {
                    d.order = std::stoll(toks[1]);
                } catch (...) {
                    fail(ln, "bad order");
                }
            } else {
                fail(ln, "unknown edgegroup line");
            }
        } else if (section == "inject") {
            std::string lhs, rhs;
            if (!split_arrow(lines.raw[i], lhs, rhs)) fail(ln, "expected `gen -> word`");
            auto lt = tokenize(lhs);
            if (lt.size() != 1) fail(ln, "expected a single generator");
            injs.back().images.emplace_back(lt[0], rhs);
            injs.back().line = ln;
        } else if (section == "tree") {
            if (toks[0] == "edge" && toks.size() == 2) f.tree_edges.push_back(toks[1]);
            else fail(ln, "expected `edge name`");
        } else if (section == "pathdict") {
            std::string lhs, rhs;
            if (!split_arrow(lines.raw[i], lhs, rhs)) fail(ln, "expected `gen -> path`");
            auto lt = tokenize(lhs);
            if (lt.size() != 1) fail(ln, "expected a single name");
            dict_lines.emplace_back(lt[0], rhs);
            dict_linenos.push_back(ln);
        } else if (section == "wordmap") {
            std::string lhs, rhs;
            if (!split_arrow(lines.raw[i], lhs, rhs)) fail(ln, "expected `gen -> word`");
            auto lt = tokenize(lhs);
            if (lt.size() != 1) fail(ln, "expected a single name");
            wordmap_lines.emplace_back(lt[0], rhs);
            wordmap_linenos.push_back(ln);
        } else if (section == "fiber") {
            if (toks[0] == "gen") {
                std::string rest;
                for (std::size_t k = 1; k < toks.size(); ++k) rest += toks[k] + " ";
                fiber_lines.emplace_back(rest, ln);
            } else if (toks[0] == "transverse") {
                std::string rest;
                for (std::size_t k = 1; k < toks.size(); ++k) rest += toks[k] + " ";
                transverse_line = {rest, ln};
            } else {
                fail(ln, "expected `gen word` or `transverse word`");
            }
        } else {
            fail(ln, "content outside any known section");
        }
    }

    // bind vertex groups in graph order
    const std::size_t nv = f.gog.graph.vertex_names.size();
    f.gog.vertex_groups.resize(nv, VertexGroup::free_group(Alphabet{}));
    std::vector<bool> have_vg(nv, false);
    for (const auto& d : vgs) {
        auto v = f.gog.graph.vertex_index(d.vertex);
        if (!v) fail(d.line, "unknown vertex '" + d.vertex + "'");
        VertexGroup vg = VertexGroup::free_group(Alphabet{});
        if (d.kind == "free") {
            vg = VertexGroup::free_group(Alphabet(d.gens));
        } else if (d.kind == "abelian") {
            std::vector<long long> factors = d.factors;
            if (factors.empty()) factors.assign(d.gens.size(), 0);
            vg = VertexGroup::abelian(Alphabet(d.gens), factors);
        } else if (d.kind == "freebycyclic") {
            if (d.stable.empty()) fail(d.line, "free-by-cyclic group needs a `stable` letter");
            Alphabet fiber(d.gens);
            std::vector<Word> images(fiber.rank());
            std::vector<bool> seen(fiber.rank(), false);
            for (const auto& [g, w] : d.mono) {
                auto gi = fiber.index_of(g);
                if (!gi) fail(d.line, "unknown fiber generator '" + g + "'");
                images[*gi] = parse_word(w, fiber, d.line);
                seen[*gi] = true;
            }
            for (std::size_t k = 0; k < seen.size(); ++k)
                if (!seen[k]) fail(d.line, "missing monodromy image of '" + d.gens[k] + "'");
            FreeAutomorphism mono = [&]() {
                if (d.monoinv.empty()) return FreeAutomorphism::from_images(fiber, images);
                std::vector<Word> inv(fiber.rank());
                for (const auto& [g, w] : d.monoinv) {
                    auto gi = fiber.index_of(g);
                    if (!gi) fail(d.line, "unknown fiber generator '" + g + "'");
                    inv[*gi] = parse_word(w, fiber, d.line);
                }
                return FreeAutomorphism(fiber, images, inv);
            }();
            std::vector<std::string> all = d.gens;
            all.push_back(d.stable);
            vg = VertexGroup::free_by_cyclic(Alphabet(all), std::move(mono));
        } else {
            fail(d.line, "unknown vertex group kind '" + d.kind + "'");
        }
        if (d.has_degrees) {
            if (d.degrees.size() != vg.gens().rank())
                fail(d.line, "degrees line needs one value per generator");
            vg.degree_labels = d.degrees;
        }
        f.gog.vertex_groups[*v] = std::move(vg);
        have_vg[*v] = true;
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (!have_vg[v]) fail(1, "vertex '" + f.gog.graph.vertex_names[v] + "' has no group");

    const std::size_t ne = f.gog.graph.edges.size();
    f.gog.edge_groups.resize(ne, EdgeGroup::free_group(Alphabet{}));
    std::vector<bool> have_eg(ne, false);
    for (const auto& d : egs) {
        auto e = f.gog.graph.edge_index(d.edge);
        if (!e) fail(d.line, "unknown edge '" + d.edge + "'");
        EdgeGroup eg = EdgeGroup::free_group(Alphabet{});
        if (d.kind == "free") {
            eg = EdgeGroup::free_group(Alphabet(d.gens));
            if (d.order != 0) fail(d.line, "free edge groups have no order");
        } else if (d.kind == "cyclic") {
            if (d.gens.size() != 1) fail(d.line, "cyclic edge group needs exactly one generator");
            eg = EdgeGroup{Alphabet(d.gens), d.order};
            if (d.order == 1 || d.order < 0) fail(d.line, "order is 0 (infinite) or >= 2");
        } else {
            fail(d.line, "unknown edge group kind '" + d.kind + "'");
        }
        f.gog.edge_groups[*e] = eg;
        f.gog.edge_groups[f.gog.graph.edges[*e].bar] = eg;
        have_eg[*e] = true;
        have_eg[f.gog.graph.edges[*e].bar] = true;
    }
    for (std::size_t e = 0; e < ne; ++e)
        if (!have_eg[e]) fail(1, "edge '" + f.gog.graph.edges[e].name + "' has no group");

    f.gog.injections.resize(ne);
    for (const auto& d : injs) {
        auto e = f.gog.graph.edge_index(d.edge);
        if (!e) fail(d.line, "unknown edge '" + d.edge + "'");
        const EdgeGroup& eg = f.gog.edge_groups[*e];
        const VertexGroup& ov = f.gog.vg(f.gog.graph.edges[*e].origin);
        std::vector<Word> images(eg.gens.rank());
        std::vector<bool> seen(eg.gens.rank(), false);
        for (const auto& [g, w] : d.images) {
            auto gi = eg.gens.index_of(g);
            if (!gi) fail(d.line, "unknown edge-group generator '" + g + "'");
            images[*gi] = parse_word(w, ov.gens(), d.line);
            seen[*gi] = true;
        }
        for (std::size_t k = 0; k < seen.size(); ++k)
            if (!seen[k]) fail(d.line, "missing image of '" + eg.gens.name(int(k)) + "'");
        f.gog.injections[*e].images = std::move(images);
    }

    // dictionary
    if (!dict_lines.empty()) {
        std::vector<std::string> names;
        for (const auto& [n, _] : dict_lines) names.push_back(n);
        f.external_names = Alphabet(names);
        std::string base = f.base_vertex.empty() ? f.gog.graph.vertex_names.at(0) : f.base_vertex;
        for (std::size_t k = 0; k < dict_lines.size(); ++k)
            f.dictionary.push_back(parse_bass(dict_lines[k].second, f.gog, base, dict_linenos[k]));
    }
    for (std::size_t k = 0; k < wordmap_lines.size(); ++k) {
        if (!f.external_names) fail(wordmap_linenos[k], "[wordmap] needs a [pathdict]");
        f.reverse_dictionary.emplace_back(
            wordmap_lines[k].first,
            parse_word(wordmap_lines[k].second, *f.external_names, wordmap_linenos[k]));
    }
    for (const auto& [w, ln] : fiber_lines) {
        if (!f.external_names) fail(ln, "[fiber] needs a [pathdict]");
        f.fiber_words.push_back(parse_word(w, *f.external_names, ln));
    }
    if (transverse_line) {
        if (!f.external_names) fail(transverse_line->second, "[fiber] needs a [pathdict]");
        f.transverse_word =
            parse_word(transverse_line->first, *f.external_names, transverse_line->second);
    }
    return f;
}

std::string serialize_gog(const SplittingFile& f) {
    std::string out = "[graph]\n";
    for (const auto& v : f.gog.graph.vertex_names) out += "vertex " + v + "\n";
    if (!f.base_vertex.empty()) out += "base " + f.base_vertex + "\n";
    for (std::size_t e = 0; e < f.gog.graph.edges.size(); ++e) {
        const auto& ed = f.gog.graph.edges[e];
        if (!ed.positive) continue;
        out += "edge " + ed.name + " " + f.gog.graph.edges[ed.bar].name + " : " +
               f.gog.graph.vertex_names[ed.origin] + " -> " + f.gog.graph.vertex_names[ed.target] +
               "\n";
    }
    for (std::size_t v = 0; v < f.gog.graph.vertex_names.size(); ++v) {
        const VertexGroup& vg = f.gog.vg(int(v));
        out += "[vertexgroup " + f.gog.graph.vertex_names[v] + "]\n";
        switch (vg.kind()) {
        case VgKind::Free: {
            out += "kind free\ngens";
            for (const auto& n : vg.gens().names()) out += " " + n;
            out += "\n";
            break;
        }
        case VgKind::Abelian: {
            out += "kind abelian\ngens";
            for (const auto& n : vg.gens().names()) out += " " + n;
            out += "\nfactors";
            for (long long d : vg.factors()) out += " " + std::to_string(d);
            out += "\n";
            break;
        }
        case VgKind::FreeByCyclic: {
            out += "kind freebycyclic\ngens";
            const Alphabet& fiber = vg.monodromy().domain();
            for (const auto& n : fiber.names()) out += " " + n;
            out += "\nstable " + vg.gens().name(int(vg.gens().rank()) - 1) + "\n";
            for (std::size_t i = 0; i < fiber.rank(); ++i)
                out += "mono " + fiber.name(int(i)) + " -> " +
                       format_word(vg.monodromy().image(int(i)), fiber) + "\n";
            for (std::size_t i = 0; i < fiber.rank(); ++i)
                out += "monoinv " + fiber.name(int(i)) + " -> " +
                       format_word(vg.monodromy().inverse_images()[i], fiber) + "\n";
            break;
        }
        }
        if (vg.degree_labels) {
            out += "degrees";
            for (long long d : *vg.degree_labels) out += " " + std::to_string(d);
            out += "\n";
        }
    }
    for (std::size_t e = 0; e < f.gog.graph.edges.size(); ++e) {
        if (!f.gog.graph.edges[e].positive) continue;
        const EdgeGroup& eg = f.gog.edge_groups[e];
        out += "[edgegroup " + f.gog.graph.edges[e].name + "]\n";
        if (eg.order == 0) {
            out += "kind free\ngens";
            for (const auto& n : eg.gens.names()) out += " " + n;
            out += "\n";
        } else {
            out += "kind cyclic\ngens " + eg.gens.name(0) + "\norder " + std::to_string(eg.order) +
                   "\n";
        }
    }
    for (std::size_t e = 0; e < f.gog.graph.edges.size(); ++e) {
        const EdgeGroup& eg = f.gog.edge_groups[e];
        if (eg.gens.rank() == 0) continue;
        out += "[inject " + f.gog.graph.edges[e].name + "]\n";
        const VertexGroup& ov = f.gog.vg(f.gog.graph.edges[e].origin);
        for (std::size_t c = 0; c < eg.gens.rank(); ++c)
            out += eg.gens.name(int(c)) + " -> " +
                   format_word(f.gog.injections[e].images[c], ov.gens()) + "\n";
    }
    if (!f.tree_edges.empty()) {
        out += "[tree]\n";
        for (const auto& t : f.tree_edges) out += "edge " + t + "\n";
    }
    if (f.external_names) {
        out += "[pathdict]\n";
        for (std::size_t i = 0; i < f.external_names->rank(); ++i)
            out += f.external_names->name(int(i)) + " -> " + format_bass(f.dictionary[i], f.gog) +
                   "\n";
    }
    if (!f.reverse_dictionary.empty()) {
        out += "[wordmap]\n";
        for (const auto& [n, w] : f.reverse_dictionary)
            out += n + " -> " + format_word(w, *f.external_names) + "\n";
    }
    if (!f.fiber_words.empty() || f.transverse_word) {
        out += "[fiber]\n";
        for (const Word& w : f.fiber_words)
            out += "gen " + format_word(w, *f.external_names) + "\n";
        if (f.transverse_word)
            out += "transverse " + format_word(*f.transverse_word, *f.external_names) + "\n";
    }
    return out;
}

SplittingContext SplittingFile::bind() const {
    if (!external_names) throw Error("splitting file has no [pathdict]");
    std::optional<std::vector<Word>> rev;
    // resolve reverse dictionary names against the derived presentation
    Pi1Context probe = pi1_presentation(gog, tree_edges, base_vertex);
    if (!reverse_dictionary.empty()) {
        std::vector<Word> images(probe.presentation.generators.rank());
        std::vector<bool> seen(images.size(), false);
        for (const auto& [name, w] : reverse_dictionary) {
            auto idx = probe.presentation.generators.index_of(name);
            if (!idx) throw Error("[wordmap] names unknown presentation generator '" + name + "'");
            images[*idx] = w;
            seen[*idx] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw Error("[wordmap] misses presentation generator '" +
                            probe.presentation.generators.name(int(i)) + "'");
        rev = std::move(images);
    }
    return bind_splitting(gog, tree_edges, base_vertex, *external_names, dictionary, fiber_words,
                          transverse_word, std::move(rev));
}

SplittingFile canonical_splitting_file(const CanonicalSplitting& c) {
    SplittingFile f;
    f.gog = c.gog;
    f.base_vertex = c.base_vertex;
    f.tree_edges = c.tree_edges;
    f.external_names = c.external_names;
    f.dictionary = c.dictionary;
    f.fiber_words = c.fiber_words;
    f.transverse_word = c.transverse_word;
    Pi1Context probe = pi1_presentation(c.gog, c.tree_edges, c.base_vertex);
    for (std::size_t i = 0; i < c.reverse_dictionary.size(); ++i)
        f.reverse_dictionary.emplace_back(probe.presentation.generators.name(int(i)),
                                          c.reverse_dictionary[i]);
    return f;
}

// --- twist files ----------------------------------------------------------

TwistFile parse_twists(const std::string& text, const GraphOfGroups& gog) {
    Lines lines(text);
    TwistFile f;
    std::string section;
    std::vector<std::string> sargs;
    std::optional<GogAutomorphism> tuple;
    std::vector<Word> inert_conj(gog.graph.vertex_names.size());
    bool has_inert = false;

    auto ensure_tuple = [&]() -> GogAutomorphism& {
        if (!tuple) tuple = GogAutomorphism::identity(gog);
        return *tuple;
    };

    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        std::string name;
        std::vector<std::string> args;
        if (is_section(lines.raw[i], name, args, ln)) {
            section = name;
            sargs = args;
            if ((section == "vertexmap" || section == "vertexmapinv" || section == "edgemap" ||
                 section == "edgemapinv" || section == "gamma") &&
                sargs.size() != 1)
                fail(ln, "section [" + section + "] needs one name argument");
            if (section == "vertexmap" || section == "vertexmapinv") {
                if (!gog.graph.vertex_index(sargs[0])) fail(ln, "unknown vertex");
            }
            if (section == "edgemap" || section == "edgemapinv" || section == "gamma") {
                if (!gog.graph.edge_index(sargs[0])) fail(ln, "unknown edge");
            }
            continue;
        }
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (section.empty()) {
            if (toks[0] == "twist" || toks[0] == "inert") {
                auto colon = std::find(toks.begin(), toks.end(), ":");
                if (toks.size() < 4 || colon != toks.begin() + 2)
                    fail(ln, "expected `" + std::string(toks[0]) + " name : word`");
                if (toks[0] == "twist") {
                    auto e = gog.graph.edge_index(toks[1]);
                    if (!e) fail(ln, "unknown edge '" + toks[1] + "'");
                    const auto& vg = gog.vg(gog.graph.edges[*e].target);
                    f.twists.push_back(
                        DehnTwist{*e, parse_word_tokens({toks.begin() + 3, toks.end()},
                                                        vg.gens(), ln)});
                } else {
                    auto v = gog.graph.vertex_index(toks[1]);
                    if (!v) fail(ln, "unknown vertex '" + toks[1] + "'");
                    inert_conj[*v] = parse_word_tokens({toks.begin() + 3, toks.end()},
                                                       gog.vg(*v).gens(), ln);
                    has_inert = true;
                }
            } else {
                fail(ln, "expected `twist ...`, `inert ...` or a section");
            }
        } else if (section == "graphmap") {
            std::string lhs, rhs;
            if (!split_arrow(lines.raw[i], lhs, rhs)) fail(ln, "expected `name -> name`");
            auto lt = tokenize(lhs), rt = tokenize(rhs);
            if (lt.size() != 1 || rt.size() != 1) fail(ln, "expected `name -> name`");
            auto& t = ensure_tuple();
            if (auto v = gog.graph.vertex_index(lt[0])) {
                auto w = gog.graph.vertex_index(rt[0]);
                if (!w) fail(ln, "unknown vertex '" + rt[0] + "'");
                t.vertex_map[*v] = *w;
            } else if (auto e = gog.graph.edge_index(lt[0])) {
                auto fe = gog.graph.edge_index(rt[0]);
                if (!fe) fail(ln, "unknown edge '" + rt[0] + "'");
                t.edge_map[*e] = *fe;
            } else {
                fail(ln, "unknown vertex or edge '" + lt[0] + "'");
            }
        } else if (section == "vertexmap" || section == "vertexmapinv") {
            auto v = gog.graph.vertex_index(sargs[0]);
            std::string lhs, rhs;
            if (!split_arrow(lines.raw[i], lhs, rhs)) fail(ln, "expected `gen -> word`");
            auto lt = tokenize(lhs);
            if (lt.size() != 1) fail(ln, "expected a single generator");
            auto& t = ensure_tuple();
            const VertexGroup& src = gog.vg(*v);
            const VertexGroup& dst = gog.vg(t.vertex_map[*v]);
            if (section == "vertexmap") {
                auto gi = src.gens().index_of(lt[0]);
                if (!gi) fail(ln, "unknown generator");
                t.vertex_maps[*v].images[*gi] = parse_word(rhs, dst.gens(), ln);
            } else {
                auto gi = dst.gens().index_of(lt[0]);
                if (!gi) fail(ln, "unknown generator");
                t.vertex_maps[*v].inverse_images[*gi] = parse_word(rhs, src.gens(), ln);
            }
        } else if (section == "edgemap" || section == "edgemapinv") {
            auto e = gog.graph.edge_index(sargs[0]);
            std::string lhs, rhs;
            if (!split_arrow(lines.raw[i], lhs, rhs)) fail(ln, "expected `gen -> word`");
            auto lt = tokenize(lhs);
            if (lt.size() != 1) fail(ln, "expected a single generator");
            auto& t = ensure_tuple();
            const EdgeGroup& src = gog.edge_groups[*e];
            const EdgeGroup& dst = gog.edge_groups[t.edge_map[*e]];
            const int bar = gog.graph.edges[*e].bar;
            if (section == "edgemap") {
                auto gi = src.gens.index_of(lt[0]);
                if (!gi) fail(ln, "unknown generator");
                Word w = parse_word(rhs, dst.gens, ln);
                t.edge_maps[*e].images[*gi] = w;
                t.edge_maps[bar].images[*gi] = w;
            } else {
                auto gi = dst.gens.index_of(lt[0]);
                if (!gi) fail(ln, "unknown generator");
                Word w = parse_word(rhs, src.gens, ln);
                t.edge_maps[*e].inverse_images[*gi] = w;
                t.edge_maps[bar].inverse_images[*gi] = w;
            }
        } else if (section == "gamma") {
            auto e = gog.graph.edge_index(sargs[0]);
            auto& t = ensure_tuple();
            const VertexGroup& tv = gog.vg(t.vertex_map[gog.graph.edges[*e].target]);
            t.twists[*e] = parse_word(lines.raw[i], tv.gens(), ln);
        } else {
            fail(ln, "unknown section '" + section + "'");
        }
    }
    if (has_inert) f.inert = InertTwist{std::move(inert_conj)};
    f.tuple = std::move(tuple);
    return f;
}

std::string serialize_twists(const TwistFile& f, const GraphOfGroups& gog) {
    std::string out;
    for (const auto& t : f.twists) {
        const auto& vg = gog.vg(gog.graph.edges[t.edge].target);
        out += "twist " + gog.graph.edges[t.edge].name + " : " + format_word(t.element, vg.gens()) +
               "\n";
    }
    if (f.inert) {
        for (std::size_t v = 0; v < f.inert->conjugators.size(); ++v)
            if (!f.inert->conjugators[v].is_identity())
                out += "inert " + gog.graph.vertex_names[v] + " : " +
                       format_word(f.inert->conjugators[v], gog.vg(int(v)).gens()) + "\n";
    }
    if (f.tuple) {
        const GogAutomorphism& t = *f.tuple;
        out += "[graphmap]\n";
        for (std::size_t v = 0; v < t.vertex_map.size(); ++v)
            out += gog.graph.vertex_names[v] + " -> " + gog.graph.vertex_names[t.vertex_map[v]] +
                   "\n";
        for (std::size_t e = 0; e < t.edge_map.size(); ++e)
            out += gog.graph.edges[e].name + " -> " + gog.graph.edges[t.edge_map[e]].name + "\n";
        for (std::size_t v = 0; v < t.vertex_maps.size(); ++v) {
            const VertexGroup& src = gog.vg(int(v));
            const VertexGroup& dst = gog.vg(t.vertex_map[v]);
            out += "[vertexmap " + gog.graph.vertex_names[v] + "]\n";
            for (std::size_t i = 0; i < src.gens().rank(); ++i)
                out += src.gens().name(int(i)) + " -> " +
                       format_word(t.vertex_maps[v].images[i], dst.gens()) + "\n";
            out += "[vertexmapinv " + gog.graph.vertex_names[v] + "]\n";
            for (std::size_t i = 0; i < dst.gens().rank(); ++i)
                out += dst.gens().name(int(i)) + " -> " +
                       format_word(t.vertex_maps[v].inverse_images[i], src.gens()) + "\n";
        }
        for (std::size_t e = 0; e < t.edge_maps.size(); ++e) {
            if (!gog.graph.edges[e].positive) continue;
            const EdgeGroup& src = gog.edge_groups[e];
            const EdgeGroup& dst = gog.edge_groups[t.edge_map[e]];
            out += "[edgemap " + gog.graph.edges[e].name + "]\n";
            for (std::size_t i = 0; i < src.gens.rank(); ++i)
                out += src.gens.name(int(i)) + " -> " +
                       format_word(t.edge_maps[e].images[i], dst.gens) + "\n";
            out += "[edgemapinv " + gog.graph.edges[e].name + "]\n";
            for (std::size_t i = 0; i < dst.gens.rank(); ++i)
                out += dst.gens.name(int(i)) + " -> " +
                       format_word(t.edge_maps[e].inverse_images[i], src.gens) + "\n";
        }
        for (std::size_t e = 0; e < t.twists.size(); ++e) {
            const VertexGroup& tv = gog.vg(t.vertex_map[gog.graph.edges[e].target]);
            out += "[gamma " + gog.graph.edges[e].name + "]\n" +
                   format_word(t.twists[e], tv.gens()) + "\n";
        }
    }
    return out;
}

GogAutomorphism TwistFile::bind(const GraphOfGroups& gog) const {
    GogAutomorphism acc = GogAutomorphism::identity(gog);
    for (const auto& t : twists) acc = compose_gog(gog, acc, twist_tuple(gog, t));
    if (inert) acc = compose_gog(gog, acc, inert_tuple(gog, *inert));
    if (tuple) acc = compose_gog(gog, acc, *tuple);
    return acc;
}

// --- centralizer generating sets ------------------------------------------

std::vector<std::vector<Word>> parse_centralizers(const std::string& text,
                                                  const GraphOfGroups& gog) {
    Lines lines(text);
    std::vector<std::vector<Word>> s(gog.graph.edges.size());
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (toks.size() < 3 || toks[1] != ":") fail(ln, "expected `edge : word`");
        auto e = gog.graph.edge_index(toks[0]);
        if (!e) fail(ln, "unknown edge '" + toks[0] + "'");
        const auto& vg = gog.vg(gog.graph.edges[*e].target);
        s[*e].push_back(parse_word_tokens({toks.begin() + 2, toks.end()}, vg.gens(), ln));
    }
    return s;
}

std::string serialize_centralizers(const std::vector<std::vector<Word>>& s_sets,
                                   const GraphOfGroups& gog) {
    std::string out;
    for (std::size_t e = 0; e < s_sets.size(); ++e) {
        const auto& vg = gog.vg(gog.graph.edges[e].target);
        for (const Word& w : s_sets[e])
            out += gog.graph.edges[e].name + " : " + format_word(w, vg.gens()) + "\n";
    }
    return out;
}

// --- element family files ---------------------------------------------

std::vector<Word> parse_family(const std::string& text, const Alphabet& alphabet) {
    Lines lines(text);
    std::vector<Word> fam;
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        fam.push_back(parse_word_tokens(toks, alphabet, int(i) + 1));
    }
    return fam;
}

std::string serialize_family(const std::vector<Word>& family, const Alphabet& alphabet) {
    std::string out;
    for (const Word& w : family) out += format_word(w, alphabet) + "\n";
    return out;
}

// --- isomorphism certificate files ------------------------------------

namespace {

std::vector<std::pair<std::string, std::pair<std::string, int>>> arrow_sections(
    const std::string& text, const std::vector<std::string>& wanted) {
    Lines lines(text);
    std::vector<std::pair<std::string, std::pair<std::string, int>>> out;
    std::string section;
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        std::string name;
        std::vector<std::string> args;
        if (is_section(lines.raw[i], name, args, ln)) {
            if (std::find(wanted.begin(), wanted.end(), name) == wanted.end())
                fail(ln, "unknown section '" + name + "'");
            section = name;
            continue;
        }
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (section.empty()) fail(ln, "content before any section");
        out.push_back({section, {lines.raw[i], ln}});
    }
    return out;
}

void fill_images(const std::string& line, int ln, const Alphabet& domain, const Alphabet& target,
                 std::vector<Word>& images, std::vector<bool>& seen) {
    std::string lhs, rhs;
    if (!split_arrow(line, lhs, rhs)) fail(ln, "expected `gen -> word`");
    auto lt = tokenize(lhs);
    if (lt.size() != 1) fail(ln, "expected a single generator");
    auto idx = domain.index_of(lt[0]);
    if (!idx) fail(ln, "unknown generator '" + lt[0] + "'");
    images[*idx] = parse_word(rhs, target, ln);
    seen[*idx] = true;
}

} // namespace

IsoCertificate parse_iso(const std::string& text, const Suspension& s1, const Suspension& s2) {
    IsoCertificate cert;
    const Alphabet& a1 = s1.presentation.generators;
    const Alphabet& a2 = s2.presentation.generators;
    cert.images.resize(a1.rank());
    cert.inverse_images.resize(a2.rank());
    std::vector<bool> seen1(a1.rank(), false), seen2(a2.rank(), false);
    for (const auto& [section, payload] : arrow_sections(text, {"map", "inverse"})) {
        if (section == "map")
            fill_images(payload.first, payload.second, a1, a2, cert.images, seen1);
        else
            fill_images(payload.first, payload.second, a2, a1, cert.inverse_images, seen2);
    }
    for (std::size_t i = 0; i < seen1.size(); ++i)
        if (!seen1[i]) throw Error("certificate misses the image of '" + a1.name(int(i)) + "'");
    for (std::size_t i = 0; i < seen2.size(); ++i)
        if (!seen2[i])
            throw Error("certificate misses the inverse image of '" + a2.name(int(i)) + "'");
    return cert;
}

std::string serialize_iso(const IsoCertificate& cert, const Suspension& s1, const Suspension& s2) {
    std::string out = "[map]\n";
    for (std::size_t i = 0; i < cert.images.size(); ++i)
        out += s1.presentation.generators.name(int(i)) + " -> " +
               format_word(cert.images[i], s2.presentation.generators) + "\n";
    out += "[inverse]\n";
    for (std::size_t i = 0; i < cert.inverse_images.size(); ++i)
        out += s2.presentation.generators.name(int(i)) + " -> " +
               format_word(cert.inverse_images[i], s1.presentation.generators) + "\n";
    return out;
}

// --- conjugacy certificate files ---------------------------------------

ConjugacyCertificate parse_conj(const std::string& text, const Alphabet& fiber) {
    Lines lines(text);
    std::vector<Word> images(fiber.rank()), inv(fiber.rank());
    std::vector<bool> seen(fiber.rank(), false), seen_inv(fiber.rank(), false);
    std::optional<Word> f0;
    bool has_inv = false;
    std::string section;
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        std::string name;
        std::vector<std::string> args;
        if (is_section(lines.raw[i], name, args, ln)) {
            if (name != "psi" && name != "psiinv") fail(ln, "unknown section '" + name + "'");
            section = name;
            if (name == "psiinv") has_inv = true;
            continue;
        }
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (toks[0] == "f0") {
            if (toks.size() < 2 || toks[1] != "=") fail(ln, "expected `f0 = word`");
            f0 = parse_word_tokens({toks.begin() + 2, toks.end()}, fiber, ln);
            continue;
        }
        if (section == "psi")
            fill_images(lines.raw[i], ln, fiber, fiber, images, seen);
        else if (section == "psiinv")
            fill_images(lines.raw[i], ln, fiber, fiber, inv, seen_inv);
        else
            fail(ln, "content before any section");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw Error("missing image of '" + fiber.name(int(i)) + "'");
    if (!f0) throw Error("missing `f0 = word` line");
    FreeAutomorphism psi = has_inv ? FreeAutomorphism(fiber, images, inv)
                                   : FreeAutomorphism::from_images(fiber, images);
    return ConjugacyCertificate{std::move(psi), *f0};
}

std::string serialize_conj(const ConjugacyCertificate& cert, const Alphabet& fiber) {
    std::string out = "[psi]\n";
    for (std::size_t i = 0; i < fiber.rank(); ++i)
        out += fiber.name(int(i)) + " -> " + format_word(cert.psi.image(int(i)), fiber) + "\n";
    out += "[psiinv]\n";
    for (std::size_t i = 0; i < fiber.rank(); ++i)
        out += fiber.name(int(i)) + " -> " + format_word(cert.psi.inverse_images()[i], fiber) +
               "\n";
    out += "f0 = " + format_word(cert.f0, fiber) + "\n";
    return out;
}

// --- coset representative files ----------------------------------------

std::vector<ExternalAutomorphism> parse_cosets(const std::string& text, const Alphabet& alphabet) {
    Lines lines(text);
    std::vector<ExternalAutomorphism> reps;
    std::string section;
    std::vector<std::vector<bool>> seen, seen_inv;
    for (std::size_t i = 0; i < lines.raw.size(); ++i) {
        const int ln = int(i) + 1;
        std::string name;
        std::vector<std::string> args;
        if (is_section(lines.raw[i], name, args, ln)) {
            if (name == "rep") {
                reps.push_back(ExternalAutomorphism{});
                reps.back().images.resize(alphabet.rank());
                reps.back().inverse_images.resize(alphabet.rank());
                seen.push_back(std::vector<bool>(alphabet.rank(), false));
                seen_inv.push_back(std::vector<bool>(alphabet.rank(), false));
            } else if (name != "repinv") {
                fail(ln, "unknown section '" + name + "'");
            }
            if (name == "repinv" && reps.empty()) fail(ln, "[repinv] before any [rep]");
            section = name;
            continue;
        }
        auto toks = tokenize(lines.raw[i]);
        if (toks.empty()) continue;
        if (reps.empty()) fail(ln, "content before any [rep]");
        if (section == "rep")
            fill_images(lines.raw[i], ln, alphabet, alphabet, reps.back().images, seen.back());
        else
            fill_images(lines.raw[i], ln, alphabet, alphabet, reps.back().inverse_images,
                        seen_inv.back());
    }
    for (std::size_t r = 0; r < reps.size(); ++r) {
        for (std::size_t i = 0; i < alphabet.rank(); ++i) {
            if (!seen[r][i])
                throw Error("representative " + std::to_string(r + 1) + " misses '" +
                            alphabet.name(int(i)) + "'");
            if (!seen_inv[r][i])
                throw Error("representative " + std::to_string(r + 1) +
                            " misses the inverse image of '" + alphabet.name(int(i)) + "'");
        }
    }
    return reps;
}

std::string serialize_cosets(const std::vector<ExternalAutomorphism>& reps,
                             const Alphabet& alphabet) {
    std::string out;
    for (const auto& r : reps) {
        out += "[rep]\n";
        for (std::size_t i = 0; i < alphabet.rank(); ++i)
            out += alphabet.name(int(i)) + " -> " + format_word(r.images[i], alphabet) + "\n";
        out += "[repinv]\n";
        for (std::size_t i = 0; i < alphabet.rank(); ++i)
            out += alphabet.name(int(i)) + " -> " + format_word(r.inverse_images[i], alphabet) +
                   "\n";
    }
    return out;
}

// --- helpers ---------------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

} // namespace suspkit
