#ifndef SUSPKIT_GOG_AUTOMORPHISM_HPP
#define SUSPKIT_GOG_AUTOMORPHISM_HPP

#include "suspkit/graph_of_groups.hpp"

#include <optional>
#include <vector>

namespace suspkit {

// Generator-image map together with a claimed inverse; isomorphism-ness is
// checked through word problems, never searched.
struct GenMapCert {
    std::vector<Word> images;         // over the target's generators
    std::vector<Word> inverse_images; // over the source's generators
    bool operator==(const GenMapCert&) const = default;
};

// Automorphism tuple of a graph of groups: a graph automorphism, compatible
// vertex- and edge-group isomorphisms, and a twisting element per oriented
// edge living at the image of its terminus.
struct GogAutomorphism {
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
    std::vector<GenMapCert> vertex_maps; // per vertex
    std::vector<GenMapCert> edge_maps;   // per oriented edge, equal on a bar pair
    std::vector<Word> twists;            // per oriented edge

    static GogAutomorphism identity(const GraphOfGroups& gog);
    bool operator==(const GogAutomorphism&) const = default;
};

// The edge compatibility identity is checked, for each oriented edge e, as
//   phi_{o(e)} o i_e = ad_{gamma_{ebar}} o i_{Phi(e)} o phi_e
// which is the convention under which the Bass relations are preserved and a
// twisting element lives at the terminus of its own edge. Setting
// gamma_at_origin pairs each edge's own twist with its origin side instead.
std::vector<std::string> validate_gog_aut(const GraphOfGroups& gog, const GogAutomorphism& aut,
                                          bool gamma_at_origin = false);

BassExpression act_on_bass(const GraphOfGroups& gog, const GogAutomorphism& aut,
                           const BassExpression& x);

// (Phi o Psi): apply Psi first.
GogAutomorphism compose_gog(const GraphOfGroups& gog, const GogAutomorphism& phi,
                            const GogAutomorphism& psi);

// Twist on an oriented edge by an element of the group at its terminus
// centralizing the attached edge-group image there.
struct DehnTwist {
    int edge = -1;
    Word element;
    bool operator==(const DehnTwist&) const = default;
};

std::vector<std::string> twist_violations(const GraphOfGroups& gog, const DehnTwist& t);
GogAutomorphism twist_tuple(const GraphOfGroups& gog, const DehnTwist& t);
DehnTwist twist_power(const GraphOfGroups& gog, const DehnTwist& t, const Int& r);

// Tuple conjugating every vertex group by a chosen element, with edge twists
// copied from the terminus conjugators; acts trivially on loops once the
// base conjugator is trivial.
struct InertTwist {
    std::vector<Word> conjugators; // per vertex
    bool operator==(const InertTwist&) const = default;
};

GogAutomorphism inert_tuple(const GraphOfGroups& gog, const InertTwist& t);

// Generating set of the centralizer of the attached edge-group image at the
// terminus of e: the whole generator set for abelian groups, the primitive
// root of the image for free groups. Unsupported kinds give nullopt.
std::optional<std::vector<Word>> centralizer_generators(const GraphOfGroups& gog, int edge);

// One twist per (oriented edge, listed centralizer generator), in that
// order; every generator's centralizing certificate is re-checked.
std::vector<DehnTwist> small_modular_generators(const GraphOfGroups& gog,
                                                const std::vector<std::vector<Word>>& s_sets);

} // namespace suspkit

#endif
