#include "suspkit/orbit.hpp"

#include <future>

namespace suspkit {

BassExpression SplittingContext::path_of_word(const Word& w) const {
    BassExpression acc = BassExpression::vertex_element(pi1.base_vertex, Word());
    for (Letter l : w.letters()) {
        if (gen_of(l) >= int(external_names.rank())) throw Error("word outside external alphabet");
        const BassExpression& p = dictionary[gen_of(l)];
        acc = bass_concat(pi1.gog, acc, l > 0 ? p : bass_inverse(pi1.gog, p));
    }
    return acc;
}

Word SplittingContext::external_word(const BassExpression& x) const {
    if (!reverse_dictionary) throw Error("splitting has no reverse dictionary");
    return apply_images(*reverse_dictionary, pi1.to_presentation_word(x));
}

Int SplittingContext::transverse_degree(const BassExpression& x) const {
    return transverse_degree_of_vector(pi1.exponent_vector(x));
}

Int SplittingContext::transverse_degree_of_vector(const IntVec& exponents) const {
    if (!degree) throw Error("splitting has no transverse structure");
    return degree->degree(exponents);
}

SplittingContext bind_splitting(const GraphOfGroups& gog, const std::vector<std::string>& tree_edges,
                                const std::string& base_vertex, const Alphabet& external_names,
                                const std::vector<BassExpression>& dictionary,
                                const std::vector<Word>& fiber_words,
                                const std::optional<Word>& transverse_word,
                                std::optional<std::vector<Word>> reverse_dictionary) {
    SplittingContext ctx;
    ctx.pi1 = pi1_presentation(gog, tree_edges, base_vertex);
    for (const Word& r : ctx.pi1.presentation.relators)
        ctx.relation_columns.push_back(word_exponents(ctx.pi1.presentation.generators.rank(), r));
    ctx.h1 = H1Structure::of_columns(ctx.pi1.presentation.generators.rank(), ctx.relation_columns);

    if (dictionary.size() != external_names.rank())
        throw Error("dictionary needs one path element per external generator");
    for (const auto& p : dictionary) {
        if (!is_path_element(ctx.pi1.gog, p, ctx.pi1.base_vertex, ctx.pi1.base_vertex))
            throw Error("dictionary entry is not a loop at the base vertex");
    }
    ctx.external_names = external_names;
    ctx.dictionary = dictionary;

    if (reverse_dictionary) {
        if (reverse_dictionary->size() != ctx.pi1.presentation.generators.rank())
            throw Error("reverse dictionary needs one word per presentation generator");
        for (const Word& w : *reverse_dictionary)
            if (w.max_gen_index() >= int(external_names.rank()))
                throw Error("reverse dictionary word outside the external alphabet");
        ctx.reverse_dictionary = std::move(reverse_dictionary);
    }

    if (transverse_word) {
        std::vector<IntVec> fiber_vecs;
        for (const Word& fw : fiber_words)
            fiber_vecs.push_back(ctx.pi1.exponent_vector(ctx.path_of_word(fw)));
        IntVec t_vec = ctx.pi1.exponent_vector(ctx.path_of_word(*transverse_word));
        ctx.degree = TransverseDegree::make(ctx.pi1.presentation.generators.rank(),
                                            ctx.relation_columns, fiber_vecs, t_vec);
        // cross-check any declared degree labels
        for (std::size_t v = 0; v < ctx.pi1.gog.vertex_groups.size(); ++v) {
            const auto& labels = ctx.pi1.gog.vg(int(v)).degree_labels;
            if (!labels) continue;
            for (std::size_t i = 0; i < labels->size(); ++i) {
                IntVec vec(ctx.pi1.presentation.generators.rank());
                vec[ctx.pi1.vertex_gen_index[v][i]] = 1;
                if (ctx.degree->degree(vec) != (*labels)[i])
                    throw Error("declared degree label of generator '" +
                                ctx.pi1.gog.vg(int(v)).gens().name(int(i)) + "' at vertex '" +
                                ctx.pi1.gog.graph.vertex_names[v] + "' disagrees with the computed degree");
            }
        }
    }
    return ctx;
}

DiophantineSystem build_system(const SplittingContext& ctx,
                               const std::vector<std::vector<Word>>& s_sets,
                               const std::vector<BassExpression>& family) {
    if (s_sets.size() != ctx.pi1.gog.graph.edges.size())
        throw Error("need one centralizer set per oriented edge");
    DiophantineSystem sys;
    IntVec s_degrees;
    for (std::size_t e = 0; e < s_sets.size(); ++e) {
        const int tv = ctx.pi1.gog.graph.edges[e].target;
        for (std::size_t k = 0; k < s_sets[e].size(); ++k) {
            sys.unknowns.emplace_back(int(e), int(k));
            IntVec vec(ctx.pi1.presentation.generators.rank());
            for (Letter l : s_sets[e][k].letters())
                vec[ctx.pi1.vertex_gen_index[tv][gen_of(l)]] += sign_of(l);
            s_degrees.push_back(ctx.transverse_degree_of_vector(vec));
        }
    }
    sys.a = IntMatrix(family.size(), sys.unknowns.size());
    sys.b.assign(family.size(), 0);
    for (std::size_t j = 0; j < family.size(); ++j) {
        for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
            long long n = signed_edge_count(ctx.pi1.gog.graph, family[j], sys.unknowns[u].first);
            sys.a.at(j, u) = Int(n) * s_degrees[u];
        }
        sys.b[j] = -ctx.transverse_degree(family[j]);
        if (j + 1 == family.size()) sys.b[j] += 1;
    }
    return sys;
}

OrbitDecision solve_diophantine(const DiophantineSystem& sys,
                                const std::vector<DehnTwist>& generators) {
    if (generators.size() != sys.unknowns.size())
        throw Error("generator list does not match the unknowns");
    OrbitDecision dec;
    LinearSolution sol = solve_linear(sys.a, sys.b);
    if (!sol.solvable) {
        dec.yes = false;
        dec.has_certificate = true;
        dec.fail_row = sol.fail_row;
        dec.fail_divisor = sol.fail_divisor;
        dec.fail_value = sol.fail_value;
        return dec;
    }
    dec.yes = true;
    for (std::size_t u = 0; u < generators.size(); ++u)
        dec.witness.emplace_back(generators[u], sol.x[u]);
    return dec;
}

GogAutomorphism witness_tuple(const GraphOfGroups& gog,
                              const std::vector<std::pair<DehnTwist, Int>>& witness) {
    GogAutomorphism eta = GogAutomorphism::identity(gog);
    for (const auto& [t, r] : witness) {
        if (r == 0) continue;
        eta = compose_gog(gog, eta, twist_tuple(gog, twist_power(gog, t, r)));
    }
    return eta;
}

OrbitDecision decide_mod_orbit(const SplittingContext& ctx,
                               const std::vector<std::vector<Word>>& s_sets,
                               const std::vector<BassExpression>& family) {
    std::vector<DehnTwist> gens = small_modular_generators(ctx.pi1.gog, s_sets);
    for (const auto& g : family)
        if (!is_path_element(ctx.pi1.gog, g, ctx.pi1.base_vertex, ctx.pi1.base_vertex))
            throw Error("family member is not a loop at the base vertex");
    DiophantineSystem sys = build_system(ctx, s_sets, family);
    OrbitDecision dec = solve_diophantine(sys, gens);
    if (!dec.yes) return dec;
    // re-verify the witness through the action
    GogAutomorphism eta = witness_tuple(ctx.pi1.gog, dec.witness);
    for (std::size_t j = 0; j < family.size(); ++j) {
        Int want = (j + 1 == family.size()) ? 1 : 0;
        BassExpression moved = act_on_bass(ctx.pi1.gog, eta, family[j]);
        if (ctx.transverse_degree(moved) != want)
            throw Error("internal: witness failed re-verification");
    }
    return dec;
}

std::vector<std::string> external_aut_violations(const Alphabet& names, const ExternalAutomorphism& a) {
    std::vector<std::string> bad;
    const std::size_t n = names.rank();
    if (a.images.size() != n || a.inverse_images.size() != n) {
        bad.push_back("representative needs one image per external generator, both directions");
        return bad;
    }
    for (const Word& w : a.images)
        if (w.max_gen_index() >= int(n)) bad.push_back("image outside the external alphabet");
    for (const Word& w : a.inverse_images)
        if (w.max_gen_index() >= int(n)) bad.push_back("inverse image outside the external alphabet");
    if (!bad.empty()) return bad;
    // abelianized composition must be the identity
    IntMatrix fwd(n, n), bwd(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec f = word_exponents(n, a.images[i]);
        IntVec b = word_exponents(n, a.inverse_images[i]);
        for (std::size_t j = 0; j < n; ++j) {
            fwd.at(i, j) = f[j];
            bwd.at(i, j) = b[j];
        }
    }
    if (!(mul(fwd, bwd) == IntMatrix::identity(n)))
        bad.push_back("abelianized composition with the claimed inverse is not the identity");
    return bad;
}

OrbitDecision decide_aut_orbit(const SplittingContext& ctx,
                               const std::vector<std::vector<Word>>& s_sets,
                               const std::vector<Word>& family_words,
                               const std::vector<ExternalAutomorphism>& coset_reps) {
    std::vector<ExternalAutomorphism> reps = coset_reps;
    if (reps.empty()) {
        ExternalAutomorphism id;
        for (std::size_t i = 0; i < ctx.external_names.rank(); ++i) {
            id.images.push_back(Word::generator(int(i)));
            id.inverse_images.push_back(Word::generator(int(i)));
        }
        reps.push_back(std::move(id));
    }
    for (const auto& r : reps) {
        auto bad = external_aut_violations(ctx.external_names, r);
        if (!bad.empty()) throw Error("coset representative rejected: " + bad.front());
    }
    // evaluate representatives independently; join by first success in index order
    std::vector<std::future<OrbitDecision>> runs;
    runs.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        runs.push_back(std::async(std::launch::deferred | std::launch::async, [&ctx, &s_sets,
                                                                               &family_words,
                                                                               rep = reps[i]]() {
            std::vector<BassExpression> family;
            for (const Word& w : family_words)
                family.push_back(ctx.path_of_word(apply_images(rep.images, w)));
            return decide_mod_orbit(ctx, s_sets, family);
        }));
    }
    OrbitDecision last;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        OrbitDecision dec = runs[i].get();
        if (dec.yes) {
            dec.coset_index = int(i) + 1;
            return dec;
        }
        last = std::move(dec);
    }
    last.yes = false;
    last.coset_index = 0;
    return last;
}

} // namespace suspkit
