#ifndef SUSPKIT_ORBIT_HPP
#define SUSPKIT_ORBIT_HPP

#include "suspkit/abelianization.hpp"
#include "suspkit/gog_automorphism.hpp"
#include "suspkit/graph_of_groups.hpp"

#include <optional>

namespace suspkit {

// A splitting bound for computation: relative presentation, abelianization,
// external generator dictionary (one path element per external generator),
// and optionally a transverse structure and the reverse dictionary.
struct SplittingContext {
    Pi1Context pi1;
    H1Structure h1;
    std::vector<IntVec> relation_columns;

    Alphabet external_names;
    std::vector<BassExpression> dictionary; // loops at the base, one per external generator

    // presentation generator -> word over the external names
    std::optional<std::vector<Word>> reverse_dictionary;
    std::optional<TransverseDegree> degree;

    BassExpression path_of_word(const Word& w) const;
    // Requires the reverse dictionary.
    Word external_word(const BassExpression& x) const;
    Int transverse_degree(const BassExpression& x) const;
    Int transverse_degree_of_vector(const IntVec& exponents) const;
};

SplittingContext bind_splitting(const GraphOfGroups& gog, const std::vector<std::string>& tree_edges,
                                const std::string& base_vertex, const Alphabet& external_names,
                                const std::vector<BassExpression>& dictionary,
                                const std::vector<Word>& fiber_words, // over external names
                                const std::optional<Word>& transverse_word,
                                std::optional<std::vector<Word>> reverse_dictionary);

struct DiophantineSystem {
    std::vector<std::pair<int, int>> unknowns; // (oriented edge, generator slot)
    IntMatrix a;
    IntVec b;
};

// Row j reads sum_(e,s) r_(e,s) * n(gamma_j, e) * deg(s) = -deg(gamma_j),
// with +1 added on the last row.
DiophantineSystem build_system(const SplittingContext& ctx,
                               const std::vector<std::vector<Word>>& s_sets,
                               const std::vector<BassExpression>& family);

struct OrbitDecision {
    bool yes = false;
    // twist generators with integer powers, in unknown order
    std::vector<std::pair<DehnTwist, Int>> witness;
    bool has_certificate = false;
    std::size_t fail_row = 0;
    Int fail_divisor = 0, fail_value = 0;
    int coset_index = 0; // 1-based once decided among representatives
};

OrbitDecision solve_diophantine(const DiophantineSystem& sys,
                                const std::vector<DehnTwist>& generators);

// Decides whether some product of the listed twists moves every family
// member's class into the fiber span and the last one onto the transverse
// class; a positive answer is re-verified by acting on the family.
OrbitDecision decide_mod_orbit(const SplittingContext& ctx,
                               const std::vector<std::vector<Word>>& s_sets,
                               const std::vector<BassExpression>& family);

// Word-level automorphism certificate over the external names. Validation
// checks that the induced maps on the free abelianization compose to the
// identity; group-level validity is the supplier's responsibility.
struct ExternalAutomorphism {
    std::vector<Word> images, inverse_images;
    bool operator==(const ExternalAutomorphism&) const = default;
};

std::vector<std::string> external_aut_violations(const Alphabet& names, const ExternalAutomorphism& a);

// Applies each representative to the family (given over the external names)
// and decides the twisted orbit problem; first success wins, reported with
// its 1-based index.
OrbitDecision decide_aut_orbit(const SplittingContext& ctx,
                               const std::vector<std::vector<Word>>& s_sets,
                               const std::vector<Word>& family_words,
                               const std::vector<ExternalAutomorphism>& coset_reps);

// The witness product as a single tuple (composed in unknown order).
GogAutomorphism witness_tuple(const GraphOfGroups& gog,
                              const std::vector<std::pair<DehnTwist, Int>>& witness);

} // namespace suspkit

#endif
