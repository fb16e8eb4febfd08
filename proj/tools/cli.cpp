#include "cli.hpp"

#include "suspkit/formats.hpp"
#include "suspkit/suspension.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace suspkit::cli {

using nlohmann::json;

namespace {

struct Report {
    json doc;
    int exit_code = 0;
    bool human = false;

    Report(const std::string& command, bool human_mode) : human(human_mode) {
        doc["command"] = command;
        doc["inputs"] = json::object();
        doc["verdict"] = "error";
        doc["diagnostics"] = json::array();
    }
    void input(const std::string& key, const std::string& value) { doc["inputs"][key] = value; }
    void verdict(const std::string& v, int code) {
        doc["verdict"] = v;
        exit_code = code;
    }
    void note(const std::string& d) { doc["diagnostics"].push_back(d); }

    int emit(std::ostream& out) const {
        if (human) {
            out << doc["command"].get<std::string>() << ": " << doc["verdict"].get<std::string>()
                << "\n";
            if (doc.contains("witness")) out << "witness: " << doc["witness"].dump() << "\n";
            for (const auto& d : doc["diagnostics"]) out << "note: " << d.get<std::string>() << "\n";
        } else {
            out << doc.dump(2) << "\n";
        }
        return exit_code;
    }
};

std::string slurp(const std::string& path) { return read_file(path); }

std::vector<std::vector<Word>> resolve_centralizers(const std::string& spec,
                                                    const GraphOfGroups& gog) {
    if (spec == "auto") {
        std::vector<std::vector<Word>> s;
        for (std::size_t e = 0; e < gog.graph.edges.size(); ++e) {
            auto gens = centralizer_generators(gog, int(e));
            if (!gens)
                throw Error("no automatic centralizer generators at edge '" +
                            gog.graph.edges[e].name + "'; supply them in a file");
            s.push_back(std::move(*gens));
        }
        return s;
    }
    return parse_centralizers(slurp(spec), gog);
}

json twist_witness_json(const GraphOfGroups& gog, const OrbitDecision& dec) {
    json w = json::object();
    json twists = json::array();
    for (const auto& [t, r] : dec.witness) {
        const auto& vg = gog.vg(gog.graph.edges[t.edge].target);
        twists.push_back({{"edge", gog.graph.edges[t.edge].name},
                          {"element", format_word(t.element, vg.gens())},
                          {"power", r.str()}});
    }
    w["twists"] = twists;
    if (dec.coset_index > 0) w["coset_index"] = dec.coset_index;
    return w;
}

json certificate_json(const OrbitDecision& dec) {
    return {{"failing_index", dec.fail_row},
            {"divisor", dec.fail_divisor.str()},
            {"value", dec.fail_value.str()}};
}

json conj_json(const ConjugacyCertificate& cert) {
    const Alphabet& f = cert.psi.domain();
    json psi = json::object();
    for (std::size_t i = 0; i < f.rank(); ++i)
        psi[f.name(int(i))] = format_word(cert.psi.image(int(i)), f);
    return {{"psi", psi}, {"f0", format_word(cert.f0, f)}};
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decisions for fibered-group splittings and their twist actions"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "plain-text output instead of JSON");

    // h1
    auto* h1_cmd = app.add_subcommand("h1", "abelianization invariants of a presentation or splitting");
    std::string h1_file;
    h1_cmd->add_option("file", h1_file, "presentation (.grp) or splitting (.gog) file")->required();

    // delta
    auto* delta_cmd = app.add_subcommand("delta", "transverse degree of an element");
    std::string delta_splitting, delta_aut, delta_word;
    delta_cmd->add_option("--splitting", delta_splitting, "splitting file with a [fiber] section");
    delta_cmd->add_option("--aut", delta_aut, "fiber automorphism file (degree in its suspension)");
    delta_cmd->add_option("--word", delta_word, "element")->required();

    // ncount
    auto* ncount_cmd = app.add_subcommand("ncount", "net signed count of an edge in an element");
    std::string nc_splitting, nc_word, nc_edge;
    ncount_cmd->add_option("--splitting", nc_splitting)->required();
    ncount_cmd->add_option("--word", nc_word)->required();
    ncount_cmd->add_option("--edge", nc_edge)->required();

    // twist-apply
    auto* tw_cmd = app.add_subcommand("twist-apply", "apply twists to an element");
    std::string tw_splitting, tw_twists, tw_word;
    tw_cmd->add_option("--splitting", tw_splitting)->required();
    tw_cmd->add_option("--twists", tw_twists)->required();
    tw_cmd->add_option("--word", tw_word)->required();

    // validate
    auto* val_cmd = app.add_subcommand("validate", "check a splitting and optional twists");
    std::string val_splitting, val_twists;
    bool val_gamma_origin = false;
    val_cmd->add_option("--splitting", val_splitting)->required();
    val_cmd->add_option("--twists", val_twists);
    val_cmd->add_flag("--gamma-at-origin", val_gamma_origin,
                      "pair each edge twist with its origin endpoint instead");

    // collapse
    auto* col_cmd = app.add_subcommand("collapse", "collapse a non-loop edge");
    std::string col_splitting, col_edge, col_out;
    col_cmd->add_option("--splitting", col_splitting)->required();
    col_cmd->add_option("--edge", col_edge)->required();
    col_cmd->add_option("-o,--output", col_out)->required();

    // orbit-decide
    auto* orb_cmd = app.add_subcommand("orbit-decide", "fiber-and-orientation orbit decision");
    std::string orb_splitting, orb_cent, orb_family, orb_cosets;
    orb_cmd->add_option("--splitting", orb_splitting)->required();
    orb_cmd->add_option("--centralizers", orb_cent, "file, or 'auto'")->required();
    orb_cmd->add_option("--family", orb_family)->required();
    orb_cmd->add_option("--cosets", orb_cosets);

    // suspend
    auto* sus_cmd = app.add_subcommand("suspend", "mapping-torus presentation and splitting");
    std::string sus_aut, sus_out, sus_grp;
    sus_cmd->add_option("--aut", sus_aut)->required();
    sus_cmd->add_option("-o,--output", sus_out, "splitting file to write");
    sus_cmd->add_option("--grp", sus_grp, "presentation file to write");

    // check-iso
    auto* ci_cmd = app.add_subcommand("check-iso", "abelianized fiber-and-orientation criterion");
    std::string ci_phi1, ci_phi2, ci_iso;
    ci_cmd->add_option("--phi1", ci_phi1)->required();
    ci_cmd->add_option("--phi2", ci_phi2)->required();
    ci_cmd->add_option("--iso", ci_iso)->required();

    // extract-conj
    auto* ec_cmd = app.add_subcommand("extract-conj", "conjugator data from an isomorphism certificate");
    std::string ec_phi1, ec_phi2, ec_iso, ec_out;
    ec_cmd->add_option("--phi1", ec_phi1)->required();
    ec_cmd->add_option("--phi2", ec_phi2)->required();
    ec_cmd->add_option("--iso", ec_iso)->required();
    ec_cmd->add_option("-o,--output", ec_out);

    // verify-conj
    auto* vc_cmd = app.add_subcommand("verify-conj", "check a conjugacy certificate");
    std::string vc_phi1, vc_phi2, vc_cert;
    vc_cmd->add_option("--phi1", vc_phi1)->required();
    vc_cmd->add_option("--phi2", vc_phi2)->required();
    vc_cmd->add_option("--cert", vc_cert)->required();

    // toroidal-search
    auto* ts_cmd = app.add_subcommand("toroidal-search", "bounded search for a preserved class");
    std::string ts_aut;
    int ts_len = 4, ts_pow = 2;
    ts_cmd->add_option("--aut", ts_aut)->required();
    ts_cmd->add_option("--max-len", ts_len)->required();
    ts_cmd->add_option("--max-pow", ts_pow)->required();

    // pipeline
    auto* pl_cmd = app.add_subcommand("pipeline", "conjugacy decision from oracle inputs");
    std::string pl_phi1, pl_phi2, pl_iso, pl_splitting, pl_cent, pl_cosets, pl_out;
    pl_cmd->add_option("--phi1", pl_phi1)->required();
    pl_cmd->add_option("--phi2", pl_phi2)->required();
    pl_cmd->add_option("--iso", pl_iso, "isomorphism certificate; omit to record the missing oracle");
    pl_cmd->add_option("--splitting", pl_splitting)->required();
    pl_cmd->add_option("--centralizers", pl_cent, "file, or 'auto'")->required();
    pl_cmd->add_option("--cosets", pl_cosets);
    pl_cmd->add_option("-o,--output", pl_out, "write the extracted certificate here");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::stringstream ss;
            int rc = app.exit(e, ss, ss);
            out << ss.str();
            return rc;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto chosen = app.get_subcommands().at(0);
    Report rep(chosen->get_name(), human);
    try {
        if (chosen == h1_cmd) {
            rep.input("file", h1_file);
            std::string text = slurp(h1_file);
            GroupPresentation pres;
            if (text.find("[graph]") != std::string::npos) {
                SplittingFile f = parse_gog(text);
                pres = pi1_presentation(f.gog, f.tree_edges, f.base_vertex).presentation;
            } else {
                pres = parse_grp(text).presentation;
            }
            H1Structure h = H1Structure::of_presentation(pres);
            json factors = json::array();
            for (const Int& d : h.invariant_factors()) factors.push_back(d.str());
            rep.doc["witness"] = {{"invariant_factors", factors}, {"free_rank", h.free_rank()}};
            rep.verdict("ok", 0);
        } else if (chosen == delta_cmd) {
            rep.input("word", delta_word);
            if (!delta_splitting.empty()) {
                rep.input("splitting", delta_splitting);
                SplittingContext ctx = parse_gog(slurp(delta_splitting)).bind();
                Word w = parse_word(delta_word, ctx.external_names);
                Int d = ctx.transverse_degree(ctx.path_of_word(w));
                rep.doc["witness"] = {{"degree", d.str()}};
            } else if (!delta_aut.empty()) {
                rep.input("aut", delta_aut);
                Suspension s = build_suspension(parse_aut(slurp(delta_aut)).bind());
                Word w = parse_word(delta_word, s.presentation.generators);
                rep.doc["witness"] = {{"degree", std::to_string(s.normal_form(w).t_exponent)}};
            } else {
                throw Error("delta needs --splitting or --aut");
            }
            rep.verdict("ok", 0);
        } else if (chosen == ncount_cmd) {
            rep.input("splitting", nc_splitting);
            rep.input("word", nc_word);
            rep.input("edge", nc_edge);
            SplittingContext ctx = parse_gog(slurp(nc_splitting)).bind();
            auto e = ctx.pi1.gog.graph.edge_index(nc_edge);
            if (!e) throw Error("unknown edge '" + nc_edge + "'");
            Word w = parse_word(nc_word, ctx.external_names);
            rep.doc["witness"] = {
                {"n", signed_edge_count(ctx.pi1.gog.graph, ctx.path_of_word(w), *e)}};
            rep.verdict("ok", 0);
        } else if (chosen == tw_cmd) {
            rep.input("splitting", tw_splitting);
            rep.input("twists", tw_twists);
            rep.input("word", tw_word);
            SplittingContext ctx = parse_gog(slurp(tw_splitting)).bind();
            TwistFile tf = parse_twists(slurp(tw_twists), ctx.pi1.gog);
            GogAutomorphism tuple = tf.bind(ctx.pi1.gog);
            auto bad = validate_gog_aut(ctx.pi1.gog, tuple);
            if (!bad.empty()) throw Error("twist data invalid: " + bad.front());
            BassExpression res =
                act_on_bass(ctx.pi1.gog, tuple, ctx.path_of_word(parse_word(tw_word, ctx.external_names)));
            rep.doc["witness"] = {{"result", format_bass(res, ctx.pi1.gog)}};
            rep.verdict("ok", 0);
        } else if (chosen == val_cmd) {
            rep.input("splitting", val_splitting);
            SplittingFile f = parse_gog(slurp(val_splitting));
            std::vector<std::string> bad = f.gog.validate();
            if (!val_twists.empty()) {
                rep.input("twists", val_twists);
                if (bad.empty()) {
                    TwistFile tf = parse_twists(slurp(val_twists), f.gog);
                    for (const auto& t : tf.twists)
                        for (const auto& v : twist_violations(f.gog, t)) bad.push_back(v);
                    GogAutomorphism tuple = tf.bind(f.gog);
                    for (const auto& v : validate_gog_aut(f.gog, tuple, val_gamma_origin))
                        bad.push_back(v);
                }
            }
            for (const auto& b : bad) rep.note(b);
            if (bad.empty()) rep.verdict("valid", 0);
            else rep.verdict("invalid", 1);
        } else if (chosen == col_cmd) {
            rep.input("splitting", col_splitting);
            rep.input("edge", col_edge);
            rep.input("output", col_out);
            SplittingFile f = parse_gog(slurp(col_splitting));
            CollapseResult res = collapse_edge(f.gog, col_edge);
            SplittingFile g;
            g.gog = res.gog;
            if (!f.base_vertex.empty()) {
                int b = *f.gog.graph.vertex_index(f.base_vertex);
                g.base_vertex = res.gog.graph.vertex_names[res.vertex_map[b]];
            }
            // keep usable tree edges, then complete greedily
            {
                std::vector<bool> chosen_tree(res.gog.graph.edges.size(), false);
                std::vector<int> comp(res.gog.graph.vertex_names.size());
                for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = int(i);
                auto find = [&](int v) {
                    while (comp[v] != v) v = comp[v] = comp[comp[v]];
                    return v;
                };
                auto try_add = [&](int e) {
                    const auto& ed = res.gog.graph.edges[e];
                    if (!ed.positive) return;
                    int a = find(ed.origin), b = find(ed.target);
                    if (a == b) return;
                    comp[a] = b;
                    chosen_tree[e] = true;
                };
                for (const auto& name : f.tree_edges) {
                    auto old = f.gog.graph.edge_index(name);
                    if (old && res.edge_map[*old] >= 0) {
                        int ne = res.edge_map[*old];
                        try_add(res.gog.graph.edges[ne].positive ? ne : res.gog.graph.edges[ne].bar);
                    }
                }
                for (std::size_t e = 0; e < res.gog.graph.edges.size(); ++e) try_add(int(e));
                for (std::size_t e = 0; e < res.gog.graph.edges.size(); ++e)
                    if (chosen_tree[e]) g.tree_edges.push_back(res.gog.graph.edges[e].name);
            }
            if (f.external_names) {
                g.external_names = f.external_names;
                for (const auto& p : f.dictionary) g.dictionary.push_back(res.rewrite(p));
                g.fiber_words = f.fiber_words;
                g.transverse_word = f.transverse_word;
            }
            if (!f.reverse_dictionary.empty())
                rep.note("the [wordmap] section is not carried through a collapse");
            write_file(col_out, serialize_gog(g));
            rep.doc["witness"] = {{"vertices", g.gog.graph.vertex_names.size()},
                                  {"oriented_edges", g.gog.graph.edges.size()},
                                  {"output", col_out}};
            rep.verdict("ok", 0);
        } else if (chosen == orb_cmd) {
            rep.input("splitting", orb_splitting);
            rep.input("centralizers", orb_cent);
            rep.input("family", orb_family);
            SplittingContext ctx = parse_gog(slurp(orb_splitting)).bind();
            auto s_sets = resolve_centralizers(orb_cent, ctx.pi1.gog);
            std::vector<Word> fam = parse_family(slurp(orb_family), ctx.external_names);
            std::vector<ExternalAutomorphism> reps;
            if (!orb_cosets.empty()) {
                rep.input("cosets", orb_cosets);
                reps = parse_cosets(slurp(orb_cosets), ctx.external_names);
            }
            OrbitDecision dec = decide_aut_orbit(ctx, s_sets, fam, reps);
            if (dec.yes) {
                rep.doc["witness"] = twist_witness_json(ctx.pi1.gog, dec);
                rep.verdict("yes", 0);
            } else {
                if (dec.has_certificate) rep.doc["witness"] = certificate_json(dec);
                rep.verdict("no", 1);
            }
        } else if (chosen == sus_cmd) {
            rep.input("aut", sus_aut);
            FreeAutomorphism phi = parse_aut(slurp(sus_aut)).bind();
            Suspension s = build_suspension(phi);
            CanonicalSplitting c = canonical_splitting(phi);
            json w = json::object();
            json factors = json::array();
            H1Structure h = H1Structure::of_presentation(s.presentation);
            for (const Int& d : h.invariant_factors()) factors.push_back(d.str());
            w["invariant_factors"] = factors;
            w["free_rank"] = h.free_rank();
            if (!sus_out.empty()) {
                write_file(sus_out, serialize_gog(canonical_splitting_file(c)));
                w["splitting"] = sus_out;
                rep.input("output", sus_out);
            }
            if (!sus_grp.empty()) {
                write_file(sus_grp, serialize_grp(PresentationFile{s.presentation}));
                w["presentation"] = sus_grp;
                rep.input("grp", sus_grp);
            }
            rep.doc["witness"] = w;
            rep.verdict("ok", 0);
        } else if (chosen == ci_cmd) {
            rep.input("phi1", ci_phi1);
            rep.input("phi2", ci_phi2);
            rep.input("iso", ci_iso);
            Suspension s1 = build_suspension(parse_aut(slurp(ci_phi1)).bind());
            Suspension s2 = build_suspension(parse_aut(slurp(ci_phi2)).bind());
            IsoCertificate cert = parse_iso(slurp(ci_iso), s1, s2);
            bool ok = check_item4(s1, s2, cert);
            rep.verdict(ok ? "yes" : "no", ok ? 0 : 1);
        } else if (chosen == ec_cmd) {
            rep.input("phi1", ec_phi1);
            rep.input("phi2", ec_phi2);
            rep.input("iso", ec_iso);
            FreeAutomorphism p1 = parse_aut(slurp(ec_phi1)).bind();
            FreeAutomorphism p2 = parse_aut(slurp(ec_phi2)).bind();
            Suspension s1 = build_suspension(p1), s2 = build_suspension(p2);
            IsoCertificate iso = parse_iso(slurp(ec_iso), s1, s2);
            ConjugacyCertificate cert = extract_conjugacy(s1, s2, iso);
            rep.doc["witness"] = conj_json(cert);
            if (!ec_out.empty()) {
                write_file(ec_out, serialize_conj(cert, p1.domain()));
                rep.input("output", ec_out);
            }
            rep.verdict("ok", 0);
        } else if (chosen == vc_cmd) {
            rep.input("phi1", vc_phi1);
            rep.input("phi2", vc_phi2);
            rep.input("cert", vc_cert);
            FreeAutomorphism p1 = parse_aut(slurp(vc_phi1)).bind();
            FreeAutomorphism p2 = parse_aut(slurp(vc_phi2)).bind();
            ConjugacyCertificate cert = parse_conj(slurp(vc_cert), p1.domain());
            auto bad = conjugacy_violations(p1, p2, cert);
            for (const auto& b : bad) rep.note(b);
            if (bad.empty()) rep.verdict("valid", 0);
            else rep.verdict("invalid", 1);
        } else if (chosen == ts_cmd) {
            rep.input("aut", ts_aut);
            rep.input("max_len", std::to_string(ts_len));
            rep.input("max_pow", std::to_string(ts_pow));
            FreeAutomorphism phi = parse_aut(slurp(ts_aut)).bind();
            auto found = toroidal_witness_search(phi, ts_len, ts_pow);
            if (found) {
                rep.doc["witness"] = {{"word", format_word(found->first, phi.domain())},
                                      {"power", found->second}};
                rep.verdict("found", 0);
            } else {
                rep.note("no preserved class within the bounds; this proves nothing beyond them");
                rep.verdict("not-found", 1);
            }
        } else if (chosen == pl_cmd) {
            rep.input("phi1", pl_phi1);
            rep.input("phi2", pl_phi2);
            rep.input("splitting", pl_splitting);
            rep.input("centralizers", pl_cent);
            FreeAutomorphism p1 = parse_aut(slurp(pl_phi1)).bind();
            FreeAutomorphism p2 = parse_aut(slurp(pl_phi2)).bind();
            Suspension s1 = build_suspension(p1), s2 = build_suspension(p2);
            SplittingContext ctx = parse_gog(slurp(pl_splitting)).bind();
            auto s_sets = resolve_centralizers(pl_cent, ctx.pi1.gog);
            std::optional<IsoCertificate> iso;
            if (!pl_iso.empty()) {
                rep.input("iso", pl_iso);
                iso = parse_iso(slurp(pl_iso), s1, s2);
            }
            std::vector<ExternalAutomorphism> reps;
            if (!pl_cosets.empty()) {
                rep.input("cosets", pl_cosets);
                reps = parse_cosets(slurp(pl_cosets), s2.presentation.generators);
            }
            PipelineResult res = conjugacy_pipeline(p1, p2, iso, ctx, s_sets, reps);
            for (const auto& d : res.diagnostics) rep.note(d);
            switch (res.verdict) {
            case PipelineVerdict::Conjugate: {
                json w = conj_json(*res.certificate);
                w["orbit"] = twist_witness_json(ctx.pi1.gog, res.orbit);
                rep.doc["witness"] = w;
                if (!pl_out.empty()) {
                    write_file(pl_out, serialize_conj(*res.certificate, p1.domain()));
                    rep.input("output", pl_out);
                }
                rep.verdict("conjugate-with-certificate", 0);
                break;
            }
            case PipelineVerdict::NotConjugateGivenOracles:
                if (res.orbit.has_certificate) rep.doc["witness"] = certificate_json(res.orbit);
                rep.verdict("not-conjugate-given-oracles", 1);
                break;
            case PipelineVerdict::IsoOracleMissing:
                rep.verdict("iso-oracle-missing", 3);
                break;
            }
        }
    } catch (const ParseError& e) {
        rep.note(e.what());
        rep.verdict("error", 2);
    } catch (const Error& e) {
        rep.note(e.what());
        rep.verdict("error", 2);
    } catch (const std::exception& e) {
        rep.note(std::string("unexpected: ") + e.what());
        rep.verdict("error", 2);
    }
    return rep.emit(out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run_impl(args, out, err);
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace suspkit::cli
