#ifndef SUSPKIT_GRAPH_OF_GROUPS_HPP
#define SUSPKIT_GRAPH_OF_GROUPS_HPP

#include "suspkit/intmat.hpp"
#include "suspkit/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suspkit {

// Finite graph with an orientation-reversing involution on edges. Arbitrary
// data is representable; validate() reports axiom violations.
struct Graph {
    struct OrientedEdge {
        std::string name;
        int bar = -1;    // index of the reversed edge
        int origin = -1; // o(e)
        int target = -1; // t(e)
        bool positive = false; // chosen orientation representative
    };

    std::vector<std::string> vertex_names;
    std::vector<OrientedEdge> edges;

    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> edge_index(const std::string& name) const;
    // Adds the pair {name, barname} and returns the index of `name`.
    int add_edge_pair(const std::string& name, const std::string& barname, int origin, int target);
    std::vector<std::string> validate() const;

    bool operator==(const Graph&) const = default;
};

enum class VgKind { Free, Abelian, FreeByCyclic };

// Vertex group with a decidable word problem. Elements are words over the
// group's generators; normalize() computes a canonical form per kind:
// free reduction, exponent vectors modulo the factors, or t^k w.
class VertexGroup {
public:
    static VertexGroup free_group(Alphabet gens);
    // factors[i] = 0 for an infinite factor, d >= 2 for Z/d; torsion factors
    // must divide along the chain and precede the zeros.
    static VertexGroup abelian(Alphabet gens, std::vector<long long> factors);
    // gens = fiber generators plus the stable letter (last); monodromy acts
    // on the fiber.
    static VertexGroup free_by_cyclic(Alphabet gens, FreeAutomorphism monodromy);

    VgKind kind() const { return kind_; }
    const Alphabet& gens() const { return gens_; }
    const std::vector<long long>& factors() const { return factors_; }
    const FreeAutomorphism& monodromy() const { return *monodromy_; }

    Word normalize(const Word& w) const;
    bool equal(const Word& u, const Word& v) const;
    bool is_identity(const Word& w) const { return normalize(w).is_identity(); }
    Word mul(const Word& u, const Word& v) const { return normalize(concat(u, v)); }
    Word conjugate(const Word& x, const Word& g) const; // g^-1 x g

    // Defining relators, used when assembling fundamental group presentations.
    std::vector<Word> relators() const;

    // Optional expected transverse degrees, one per generator; cross-checked
    // against computed degrees when a transverse structure is bound.
    std::optional<std::vector<long long>> degree_labels;

    bool operator==(const VertexGroup&) const = default;

private:
    VertexGroup() = default;
    VgKind kind_ = VgKind::Free;
    Alphabet gens_;
    std::vector<long long> factors_;
    std::optional<FreeAutomorphism> monodromy_;
};

// Edge group: free of finite rank, or cyclic of given finite order.
struct EdgeGroup {
    Alphabet gens;
    long long order = 0; // nonzero only for one-generator finite cyclic

    static EdgeGroup free_group(Alphabet gens);
    static EdgeGroup cyclic(const std::string& gen_name, long long order);

    Word normalize(const Word& w) const;
    bool equal(const Word& u, const Word& v) const { return normalize(u) == normalize(v); }
    std::vector<Word> relators() const;

    bool operator==(const EdgeGroup&) const = default;
};

struct EdgeInjection {
    // One element of the origin vertex group per edge-group generator.
    std::vector<Word> images;
    bool operator==(const EdgeInjection&) const = default;
};

struct GraphOfGroups {
    Graph graph;
    std::vector<VertexGroup> vertex_groups; // per vertex
    std::vector<EdgeGroup> edge_groups;     // per oriented edge; equal on a bar pair
    std::vector<EdgeInjection> injections;  // per oriented edge, into the origin group

    const VertexGroup& vg(int v) const { return vertex_groups.at(v); }
    // Images of the edge group inside the vertex group at t(e), i.e. the
    // injection of the reversed edge.
    const std::vector<Word>& images_at_target(int e) const {
        return injections.at(graph.edges.at(e).bar).images;
    }
    const std::vector<Word>& images_at_origin(int e) const { return injections.at(e).images; }

    std::vector<std::string> validate() const;

    bool operator==(const GraphOfGroups&) const = default;
};

// Alternating word g0 e1 g1 ... en gn; entries.size() == edges.size() + 1.
// base_vertex locates entries[0] when there are no edges.
struct BassExpression {
    int base_vertex = 0;
    std::vector<Word> entries;
    std::vector<int> edges;

    static BassExpression vertex_element(int v, Word g);

    int entry_vertex(const Graph& g, std::size_t i) const;
    int from(const Graph& g) const { return entry_vertex(g, 0); }
    int to(const Graph& g) const { return entry_vertex(g, entries.size() - 1); }

    bool operator==(const BassExpression&) const = default;
};

std::vector<std::string> path_violations(const GraphOfGroups& gog, const BassExpression& x);
bool is_path_element(const GraphOfGroups& gog, const BassExpression& x, int from, int to);
BassExpression bass_inverse(const GraphOfGroups& gog, const BassExpression& x);
BassExpression bass_concat(const GraphOfGroups& gog, const BassExpression& x, const BassExpression& y);
// Canonical entries (vertex-group normal forms), same shape.
BassExpression normalize_entries(const GraphOfGroups& gog, const BassExpression& x);
bool bass_equal_entrywise(const GraphOfGroups& gog, const BassExpression& x, const BassExpression& y);
// Net count of e minus its reverse among the edges of x.
long long signed_edge_count(const Graph& g, const BassExpression& x, int oriented_edge);

// Fundamental group presentation relative to a spanning tree, with the
// bookkeeping needed to abelianize path elements: generator layout, tree
// paths, and per-edge counting functionals.
struct Pi1Context {
    GraphOfGroups gog;
    int base_vertex = 0;
    std::vector<bool> in_tree; // per oriented edge
    GroupPresentation presentation;
    std::vector<std::vector<int>> vertex_gen_index; // [v][local gen] -> presentation gen
    std::vector<int> edge_letter_index;             // per oriented edge; -1 for tree edges
    std::vector<int> edge_letter_sign;              // +1 on the representative, -1 reversed
    std::vector<std::vector<int>> tree_path;        // base -> v as oriented edge indices

    // Exponent vector of a loop at the base in presentation coordinates.
    IntVec exponent_vector(const BassExpression& x) const;
    // Word over presentation generators (tree letters dropped).
    Word to_presentation_word(const BassExpression& x) const;
    // Row functional computing the net signed count of `oriented_edge` for
    // loops at the base, expressed over presentation generators. For tree
    // edges this uses the canonical loops of the non-tree letters.
    IntVec edge_functional(int oriented_edge) const;
};

// tree_edges name unoriented classes by either representative.
Pi1Context pi1_presentation(const GraphOfGroups& gog, const std::vector<std::string>& tree_edges,
                            const std::string& base_vertex = "");

struct CollapseResult {
    GraphOfGroups gog;
    Graph old_graph;
    std::vector<int> vertex_map; // old vertex -> new vertex
    std::vector<int> edge_map;   // old oriented edge -> new index, -1 for the removed pair
    int removed_vertex = -1;
    // old origin-vertex generator -> word at the surviving vertex
    std::vector<Word> origin_translation;

    // Rewrites a path expression of the old splitting into the new one.
    BassExpression rewrite(const BassExpression& x) const;
};

// Collapses a non-loop edge whose injection identifies the edge group with
// the full origin vertex group; the target vertex group survives.
CollapseResult collapse_edge(const GraphOfGroups& gog, const std::string& edge_name);

} // namespace suspkit

#endif
