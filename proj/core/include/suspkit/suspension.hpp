#ifndef SUSPKIT_SUSPENSION_HPP
#define SUSPKIT_SUSPENSION_HPP

#include "suspkit/orbit.hpp"
#include "suspkit/words.hpp"

#include <optional>
#include <utility>

namespace suspkit {

// F x| <t> for a fiber automorphism: presentation on the fiber generators
// plus the transverse letter t (always last), one defining relator per fiber
// generator.
struct Suspension {
    FreeAutomorphism monodromy;
    GroupPresentation presentation;

    const Alphabet& fiber() const { return monodromy.domain(); }
    int t_index() const { return int(monodromy.domain().rank()); }
    FbcNormalForm normal_form(const Word& w) const {
        return fbc_normal_form(w.letters(), monodromy);
    }
    bool equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }
};

Suspension build_suspension(const FreeAutomorphism& phi);

// The one-vertex one-loop splitting presenting the suspension, bundled with
// the dictionaries binding it to the suspension generators.
struct CanonicalSplitting {
    GraphOfGroups gog;
    std::vector<std::string> tree_edges;
    std::string base_vertex;
    Alphabet external_names;
    std::vector<BassExpression> dictionary;
    std::vector<Word> fiber_words;
    Word transverse_word;
    std::vector<Word> reverse_dictionary;

    SplittingContext bind() const;
};

CanonicalSplitting canonical_splitting(const FreeAutomorphism& phi);

// Isomorphism certificate between two suspensions: images of the source
// generators (fiber first, then t) over the target letters, plus a claimed
// inverse. Validity means both directions kill the defining relators and
// the compositions fix every generator.
struct IsoCertificate {
    std::vector<Word> images;
    std::vector<Word> inverse_images;
    bool operator==(const IsoCertificate&) const = default;
};

std::vector<std::string> iso_violations(const Suspension& s1, const Suspension& s2,
                                        const IsoCertificate& cert);

// The abelianized criterion: the induced map sends the fiber image into the
// fiber image and the class of t onto the class of t (degree one).
bool check_item4(const Suspension& s1, const Suspension& s2, const IsoCertificate& cert);

// psi and f0 with  phi2 o ad_{f0} o psi = psi o phi1  on every generator.
struct ConjugacyCertificate {
    FreeAutomorphism psi;
    Word f0;
    bool operator==(const ConjugacyCertificate&) const = default;
};

std::vector<std::string> conjugacy_violations(const FreeAutomorphism& phi1,
                                              const FreeAutomorphism& phi2,
                                              const ConjugacyCertificate& cert);

// Restriction to the fiber and the t-image tail of a fiber-and-orientation
// preserving certificate.
ConjugacyCertificate extract_conjugacy(const Suspension& s1, const Suspension& s2,
                                       const IsoCertificate& cert);

// Extends psi by t |-> f0 t; the result passes the full validity check and
// the abelianized criterion.
IsoCertificate build_iso_from_conjugacy(const ConjugacyCertificate& cert,
                                        const FreeAutomorphism& phi1, const FreeAutomorphism& phi2);

// Bounded search for a conjugacy class preserved by a power of phi. Scans
// powers k = 1..max_pow in the outer loop, candidate classes by length then
// lexicographic order inside, and returns the first hit; a hit means (w, k)
// with phi^k(w) conjugate to w. No hit within the bounds proves nothing.
std::optional<std::pair<Word, int>> toroidal_witness_search(const FreeAutomorphism& phi,
                                                            int max_len, int max_pow);

// Certificate that the representative respects the suspension's defining
// relators and inverts correctly (exact word problem, not just abelianized).
std::vector<std::string> suspension_aut_violations(const Suspension& s,
                                                   const ExternalAutomorphism& rep);

enum class PipelineVerdict { Conjugate, NotConjugateGivenOracles, IsoOracleMissing };

struct PipelineResult {
    PipelineVerdict verdict = PipelineVerdict::IsoOracleMissing;
    std::optional<ConjugacyCertificate> certificate;
    std::optional<IsoCertificate> assembled;
    OrbitDecision orbit;
    std::vector<std::string> diagnostics;
};

// Decides conjugacy of phi1 and phi2 given the external inputs: an
// isomorphism certificate between the suspensions (absent => oracle-missing
// verdict), a splitting of the target suspension with dictionaries, a
// centralizer generating set per oriented edge, and coset representatives
// acting on the target suspension's generators (empty => identity only).
PipelineResult conjugacy_pipeline(const FreeAutomorphism& phi1, const FreeAutomorphism& phi2,
                                  const std::optional<IsoCertificate>& psi,
                                  const SplittingContext& ctx,
                                  const std::vector<std::vector<Word>>& s_sets,
                                  const std::vector<ExternalAutomorphism>& coset_reps);

} // namespace suspkit

#endif
