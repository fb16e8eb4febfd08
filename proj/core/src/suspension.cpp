#include "suspkit/suspension.hpp"

#include <algorithm>
#include <future>

namespace suspkit {

Suspension build_suspension(const FreeAutomorphism& phi) {
    const Alphabet& f = phi.domain();
    if (f.index_of("t")) throw Error("fiber alphabet must not use the reserved letter 't'");
    std::vector<std::string> names = f.names();
    names.push_back("t");
    const int t = int(f.rank());
    std::vector<Word> relators;
    for (std::size_t i = 0; i < f.rank(); ++i) {
        std::vector<Letter> raw{make_letter(t, -1), make_letter(int(i), 1), make_letter(t, 1)};
        relators.push_back(concat(Word(std::move(raw)), inverse(phi.image(int(i)))));
    }
    return Suspension{phi, GroupPresentation(Alphabet(std::move(names)), std::move(relators))};
}

CanonicalSplitting canonical_splitting(const FreeAutomorphism& phi) {
    CanonicalSplitting c;
    const Alphabet& f = phi.domain();

    c.gog.graph.vertex_names = {"v"};
    c.gog.graph.add_edge_pair("e", "ebar", 0, 0);
    c.gog.vertex_groups.push_back(VertexGroup::free_group(f));
    c.gog.edge_groups.push_back(EdgeGroup::free_group(f));
    c.gog.edge_groups.push_back(EdgeGroup::free_group(f));
    EdgeInjection fwd, bwd;
    for (std::size_t i = 0; i < f.rank(); ++i) {
        fwd.images.push_back(Word::generator(int(i)));
        bwd.images.push_back(phi.image(int(i)));
    }
    c.gog.injections.push_back(std::move(fwd));
    c.gog.injections.push_back(std::move(bwd));

    c.base_vertex = "v";
    std::vector<std::string> ext = f.names();
    ext.push_back("t");
    c.external_names = Alphabet(std::move(ext));
    for (std::size_t i = 0; i < f.rank(); ++i) {
        c.dictionary.push_back(BassExpression::vertex_element(0, Word::generator(int(i))));
        c.fiber_words.push_back(Word::generator(int(i)));
    }
    BassExpression loop;
    loop.entries = {Word(), Word()};
    loop.edges = {0};
    c.dictionary.push_back(loop);
    c.transverse_word = Word::generator(int(f.rank()));
    // presentation generators are the vertex generators then the edge letter
    for (std::size_t i = 0; i <= f.rank(); ++i)
        c.reverse_dictionary.push_back(Word::generator(int(i)));
    return c;
}

SplittingContext CanonicalSplitting::bind() const {
    return bind_splitting(gog, tree_edges, base_vertex, external_names, dictionary, fiber_words,
                          transverse_word, reverse_dictionary);
}

std::vector<std::string> iso_violations(const Suspension& s1, const Suspension& s2,
                                        const IsoCertificate& cert) {
    std::vector<std::string> bad;
    const std::size_t n1 = s1.presentation.generators.rank();
    const std::size_t n2 = s2.presentation.generators.rank();
    if (cert.images.size() != n1 || cert.inverse_images.size() != n2) {
        bad.push_back("certificate arity does not match the presentations");
        return bad;
    }
    for (const Word& w : cert.images)
        if (w.max_gen_index() >= int(n2)) bad.push_back("image outside the target letters");
    for (const Word& w : cert.inverse_images)
        if (w.max_gen_index() >= int(n1)) bad.push_back("inverse image outside the source letters");
    if (!bad.empty()) return bad;

    for (std::size_t r = 0; r < s1.presentation.relators.size(); ++r)
        if (!(s2.normal_form(apply_images(cert.images, s1.presentation.relators[r])) == FbcNormalForm{}))
            bad.push_back("relator of " + s1.presentation.generators.name(int(r)) +
                          " is not respected");
    for (std::size_t r = 0; r < s2.presentation.relators.size(); ++r)
        if (!(s1.normal_form(apply_images(cert.inverse_images, s2.presentation.relators[r])) ==
              FbcNormalForm{}))
            bad.push_back("inverse does not respect relator " + std::to_string(r));
    for (std::size_t i = 0; i < n1; ++i)
        if (!s1.equal(apply_images(cert.inverse_images, cert.images[i]), Word::generator(int(i))))
            bad.push_back("composition fails on generator " + s1.presentation.generators.name(int(i)));
    for (std::size_t i = 0; i < n2; ++i)
        if (!s2.equal(apply_images(cert.images, cert.inverse_images[i]), Word::generator(int(i))))
            bad.push_back("reverse composition fails on generator " +
                          s2.presentation.generators.name(int(i)));
    return bad;
}

namespace {

TransverseDegree suspension_degree(const Suspension& s) {
    const std::size_t n = s.presentation.generators.rank();
    std::vector<IntVec> rels;
    for (const Word& r : s.presentation.relators) rels.push_back(word_exponents(n, r));
    std::vector<IntVec> fiber;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntVec v(n);
        v[i] = 1;
        fiber.push_back(std::move(v));
    }
    IntVec t(n);
    t[n - 1] = 1;
    return TransverseDegree::make(n, rels, fiber, t);
}

} // namespace

bool check_item4(const Suspension& s1, const Suspension& s2, const IsoCertificate& cert) {
    {
        auto bad = iso_violations(s1, s2, cert);
        if (!bad.empty()) throw Error("invalid isomorphism certificate: " + bad.front());
    }
    TransverseDegree deg = suspension_degree(s2);
    const std::size_t n2 = s2.presentation.generators.rank();
    for (std::size_t i = 0; i + 1 < s1.presentation.generators.rank(); ++i)
        if (deg.degree(word_exponents(n2, cert.images[i])) != 0) return false;
    return deg.degree(word_exponents(n2, cert.images.back())) == 1;
}

std::vector<std::string> conjugacy_violations(const FreeAutomorphism& phi1,
                                              const FreeAutomorphism& phi2,
                                              const ConjugacyCertificate& cert) {
    std::vector<std::string> bad;
    if (!(phi1.domain() == phi2.domain()) || !(cert.psi.domain() == phi1.domain())) {
        bad.push_back("certificate alphabets do not match");
        return bad;
    }
    if (cert.f0.max_gen_index() >= int(phi1.domain().rank())) {
        bad.push_back("conjugating element is not a fiber word");
        return bad;
    }
    for (std::size_t i = 0; i < phi1.domain().rank(); ++i) {
        Word lhs = phi2.apply(concat(concat(inverse(cert.f0), cert.psi.image(int(i))), cert.f0));
        Word rhs = cert.psi.apply(phi1.image(int(i)));
        if (!(lhs == rhs))
            bad.push_back("relation fails on generator " + phi1.domain().name(int(i)));
    }
    return bad;
}

ConjugacyCertificate extract_conjugacy(const Suspension& s1, const Suspension& s2,
                                       const IsoCertificate& cert) {
    if (!check_item4(s1, s2, cert))
        throw Error("certificate does not preserve fiber image and orientation");
    const std::size_t rank = s1.fiber().rank();
    std::vector<Word> psi_images, psi_inverse;
    for (std::size_t i = 0; i < rank; ++i) {
        FbcNormalForm nf = s2.normal_form(cert.images[i]);
        if (nf.t_exponent != 0)
            throw Error("internal: fiber image escapes the fiber despite the abelianized check");
        psi_images.push_back(nf.fiber_part);
        FbcNormalForm ni = s1.normal_form(cert.inverse_images[i]);
        if (ni.t_exponent != 0)
            throw Error("internal: inverse fiber image escapes the fiber");
        psi_inverse.push_back(ni.fiber_part);
    }
    FbcNormalForm nt = s2.normal_form(cert.images.back());
    if (nt.t_exponent != 1) throw Error("internal: transverse image does not have degree one");
    ConjugacyCertificate out{FreeAutomorphism(s1.fiber(), psi_images, psi_inverse),
                             s2.monodromy.apply_inverse(nt.fiber_part)};
    auto bad = conjugacy_violations(s1.monodromy, s2.monodromy, out);
    if (!bad.empty()) throw Error("internal: extracted certificate fails: " + bad.front());
    return out;
}

IsoCertificate build_iso_from_conjugacy(const ConjugacyCertificate& cert,
                                        const FreeAutomorphism& phi1,
                                        const FreeAutomorphism& phi2) {
    {
        auto bad = conjugacy_violations(phi1, phi2, cert);
        if (!bad.empty()) throw Error(bad.front());
    }
    const std::size_t rank = phi1.domain().rank();
    const Letter t = make_letter(int(rank), 1);
    IsoCertificate iso;
    for (std::size_t i = 0; i < rank; ++i) iso.images.push_back(cert.psi.image(int(i)));
    {
        std::vector<Letter> raw = cert.f0.letters();
        raw.push_back(t);
        iso.images.push_back(Word(std::move(raw)));
    }
    for (std::size_t i = 0; i < rank; ++i)
        iso.inverse_images.push_back(cert.psi.inverse_images()[i]);
    {
        std::vector<Letter> raw = cert.psi.apply_inverse(inverse(cert.f0)).letters();
        raw.push_back(t);
        iso.inverse_images.push_back(Word(std::move(raw)));
    }
    Suspension s1 = build_suspension(phi1), s2 = build_suspension(phi2);
    auto bad = iso_violations(s1, s2, iso);
    if (!bad.empty()) throw Error("certificate relation fails: " + bad.front());
    if (!check_item4(s1, s2, iso))
        throw Error("internal: built certificate fails the abelianized criterion");
    return iso;
}

namespace {

// cyclically reduced canonical (least-rotation) words of the given length,
// in lexicographic order
std::vector<Word> canonical_classes(int rank, int len) {
    std::vector<Word> out;
    std::vector<Letter> cur;
    auto key_to_letter = [&](int key) { return make_letter(key / 2, key % 2 == 0 ? 1 : -1); };
    std::function<void()> rec = [&]() {
        if (int(cur.size()) == len) {
            if (len > 1 && cur.front() == -cur.back()) return;
            Word w{std::vector<Letter>(cur)};
            if (w.length() == std::size_t(len) && least_rotation(w) == w) out.push_back(std::move(w));
            return;
        }
        for (int key = 0; key < 2 * rank; ++key) {
            Letter l = key_to_letter(key);
            if (!cur.empty() && l == -cur.back()) continue;
            cur.push_back(l);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

} // namespace

std::optional<std::pair<Word, int>> toroidal_witness_search(const FreeAutomorphism& phi,
                                                            int max_len, int max_pow) {
    if (max_len < 1 || max_pow < 1) throw Error("search bounds must be positive");
    const int rank = int(phi.domain().rank());
    for (int k = 1; k <= max_pow; ++k) {
        for (int len = 1; len <= max_len; ++len) {
            std::vector<Word> cands = canonical_classes(rank, len);
            // evaluate candidates independently, then take the first hit
            const std::size_t chunk = std::max<std::size_t>(1, cands.size() / 8);
            std::vector<std::future<std::vector<std::size_t>>> parts;
            for (std::size_t lo = 0; lo < cands.size(); lo += chunk) {
                const std::size_t hi = std::min(cands.size(), lo + chunk);
                parts.push_back(std::async(std::launch::async, [&, lo, hi]() {
                    std::vector<std::size_t> hits;
                    for (std::size_t i = lo; i < hi; ++i)
                        if (free_conjugate(phi.apply_power(cands[i], k), cands[i])) hits.push_back(i);
                    return hits;
                }));
            }
            std::optional<std::size_t> first;
            for (auto& p : parts) {
                for (std::size_t i : p.get())
                    if (!first || i < *first) first = i;
            }
            if (first) return std::make_pair(cands[*first], k);
        }
    }
    return std::nullopt;
}

std::vector<std::string> suspension_aut_violations(const Suspension& s,
                                                   const ExternalAutomorphism& rep) {
    std::vector<std::string> bad;
    const std::size_t n = s.presentation.generators.rank();
    if (rep.images.size() != n || rep.inverse_images.size() != n) {
        bad.push_back("representative arity does not match the suspension presentation");
        return bad;
    }
    for (const Word& w : rep.images)
        if (w.max_gen_index() >= int(n)) bad.push_back("image outside the suspension letters");
    for (const Word& w : rep.inverse_images)
        if (w.max_gen_index() >= int(n)) bad.push_back("inverse image outside the suspension letters");
    if (!bad.empty()) return bad;
    for (const Word& r : s.presentation.relators) {
        if (!(s.normal_form(apply_images(rep.images, r)) == FbcNormalForm{}))
            bad.push_back("representative does not respect a defining relator");
        if (!(s.normal_form(apply_images(rep.inverse_images, r)) == FbcNormalForm{}))
            bad.push_back("claimed inverse does not respect a defining relator");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.equal(apply_images(rep.inverse_images, rep.images[i]), Word::generator(int(i))))
            bad.push_back("composition fails on " + s.presentation.generators.name(int(i)));
        if (!s.equal(apply_images(rep.images, rep.inverse_images[i]), Word::generator(int(i))))
            bad.push_back("reverse composition fails on " + s.presentation.generators.name(int(i)));
    }
    return bad;
}

namespace {

// translation tables between the suspension letters and the splitting's
// external names, matched by name
struct LetterBridge {
    std::vector<int> susp_to_ext, ext_to_susp;

    static LetterBridge make(const Suspension& s, const Alphabet& ext, bool need_back) {
        LetterBridge b;
        const auto& sg = s.presentation.generators;
        b.susp_to_ext.assign(sg.rank(), -1);
        for (std::size_t i = 0; i < sg.rank(); ++i) {
            auto j = ext.index_of(sg.name(int(i)));
            if (!j) throw Error("splitting dictionary lacks the generator '" + sg.name(int(i)) + "'");
            b.susp_to_ext[i] = *j;
        }
        b.ext_to_susp.assign(ext.rank(), -1);
        for (std::size_t i = 0; i < ext.rank(); ++i) {
            auto j = sg.index_of(ext.name(int(i)));
            if (j) b.ext_to_susp[i] = *j;
            else if (need_back)
                throw Error("external generator '" + ext.name(int(i)) +
                            "' has no suspension counterpart");
        }
        return b;
    }

    static Word translate(const Word& w, const std::vector<int>& table) {
        std::vector<Letter> raw;
        raw.reserve(w.length());
        for (Letter l : w.letters()) {
            int g = table.at(gen_of(l));
            if (g < 0) throw Error("letter has no translation");
            raw.push_back(make_letter(g, sign_of(l)));
        }
        return Word(std::move(raw));
    }
};

} // namespace

PipelineResult conjugacy_pipeline(const FreeAutomorphism& phi1, const FreeAutomorphism& phi2,
                                  const std::optional<IsoCertificate>& psi,
                                  const SplittingContext& ctx,
                                  const std::vector<std::vector<Word>>& s_sets,
                                  const std::vector<ExternalAutomorphism>& coset_reps) {
    PipelineResult res;
    if (!psi) {
        res.verdict = PipelineVerdict::IsoOracleMissing;
        res.diagnostics.push_back("no isomorphism certificate supplied; conjugacy is undecided");
        return res;
    }
    if (!(phi1.domain() == phi2.domain()))
        throw Error("the two automorphisms must share a fiber alphabet");
    Suspension s1 = build_suspension(phi1), s2 = build_suspension(phi2);
    {
        auto bad = iso_violations(s1, s2, *psi);
        if (!bad.empty()) throw Error("isomorphism certificate rejected: " + bad.front());
    }
    if (!ctx.degree) throw Error("splitting lacks a transverse structure");
    {
        H1Structure target = H1Structure::of_presentation(s2.presentation);
        if (ctx.h1.invariant_factors() != target.invariant_factors() ||
            ctx.h1.free_rank() != target.free_rank())
            throw Error("splitting does not present the target suspension "
                        "(abelianizations disagree)");
    }
    LetterBridge bridge = LetterBridge::make(s2, ctx.external_names, false);

    std::vector<ExternalAutomorphism> reps = coset_reps;
    if (reps.empty()) {
        ExternalAutomorphism id;
        for (std::size_t i = 0; i < s2.presentation.generators.rank(); ++i) {
            id.images.push_back(Word::generator(int(i)));
            id.inverse_images.push_back(Word::generator(int(i)));
        }
        reps.push_back(std::move(id));
    }
    for (const auto& r : reps) {
        auto bad = suspension_aut_violations(s2, r);
        if (!bad.empty()) throw Error("coset representative rejected: " + bad.front());
    }

    // family: images of the fiber basis, then of t
    std::vector<Word> family_susp = psi->images;

    OrbitDecision last;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::vector<BassExpression> family;
        for (const Word& w : family_susp)
            family.push_back(
                ctx.path_of_word(LetterBridge::translate(apply_images(reps[i].images, w),
                                                         bridge.susp_to_ext)));
        OrbitDecision dec = decide_mod_orbit(ctx, s_sets, family);
        if (!dec.yes) {
            last = std::move(dec);
            continue;
        }
        dec.coset_index = int(i) + 1;
        res.orbit = dec;

        // assemble eta o alpha_i o psi as a suspension-level certificate
        LetterBridge back = LetterBridge::make(s2, ctx.external_names, true);
        GogAutomorphism eta = witness_tuple(ctx.pi1.gog, dec.witness);
        std::vector<std::pair<DehnTwist, Int>> inv_witness(dec.witness.rbegin(), dec.witness.rend());
        for (auto& [t, r] : inv_witness) r = -r;
        GogAutomorphism eta_inv = witness_tuple(ctx.pi1.gog, inv_witness);

        auto act_word = [&](const GogAutomorphism& tuple, const Word& w_susp) {
            BassExpression p = ctx.path_of_word(LetterBridge::translate(w_susp, bridge.susp_to_ext));
            BassExpression q = act_on_bass(ctx.pi1.gog, tuple, p);
            return LetterBridge::translate(ctx.external_word(q), back.ext_to_susp);
        };

        IsoCertificate theta;
        for (std::size_t g = 0; g < s1.presentation.generators.rank(); ++g)
            theta.images.push_back(act_word(eta, apply_images(reps[i].images, psi->images[g])));
        for (std::size_t g = 0; g < s2.presentation.generators.rank(); ++g) {
            Word w = act_word(eta_inv, Word::generator(int(g)));
            w = apply_images(reps[i].inverse_images, w);
            theta.inverse_images.push_back(apply_images(psi->inverse_images, w));
        }
        {
            auto bad = iso_violations(s1, s2, theta);
            if (!bad.empty())
                throw Error("inconsistent oracle data: assembled map fails validation: " +
                            bad.front());
        }
        if (!check_item4(s1, s2, theta))
            throw Error("internal: assembled map fails the abelianized criterion");
        res.assembled = theta;
        res.certificate = extract_conjugacy(s1, s2, theta);
        res.verdict = PipelineVerdict::Conjugate;
        return res;
    }
    res.verdict = PipelineVerdict::NotConjugateGivenOracles;
    res.orbit = last;
    res.diagnostics.push_back("no coset representative admits a twist product fixing the "
                              "fiber image and orientation");
    return res;
}

} // namespace suspkit
