#ifndef SUSPKIT_STALLINGS_HPP
#define SUSPKIT_STALLINGS_HPP

#include "suspkit/words.hpp"

#include <deque>
#include <map>
#include <optional>
#include <vector>

namespace suspkit {

// Folded subgroup graph over a rank-n free group. Each directed arc carries
// an annotation word over the subgroup's own generators, so membership
// queries come with an explicit rewriting in those generators.
class SubgroupGraph {
public:
    // generators[i] is a word over the ambient alphabet (ambient_rank letters).
    SubgroupGraph(int ambient_rank, const std::vector<Word>& generators);

    // True when folding identified two parallel arcs carrying different
    // annotations, i.e. the generators are not a free basis of their span.
    bool had_conflict() const { return conflict_; }

    bool contains(const Word& w) const;
    // Rewrites w as a word in the subgroup generators (letter i = generator i).
    std::optional<Word> express(const Word& w) const;
    // Every ambient generator is a member.
    bool is_whole_group() const;

private:
    struct PendingArc {
        int from;
        Letter letter;
        int to;
        Word ann;
    };
    int new_vertex();
    void insert(PendingArc a, std::deque<PendingArc>& pending);
    void merge(int y, int x, Word p, std::deque<PendingArc>& pending);

    int ambient_rank_;
    bool conflict_ = false;
    // out-arc map per vertex: ambient letter -> (target, annotation)
    std::vector<std::map<Letter, std::pair<int, Word>>> verts_;
    std::vector<int> redirect_;
    std::vector<Word> gauge_;
};

// Inverse of the free-group map sending generator i of a rank-`domain_rank`
// free group to images[i] (words over the same rank); empty when the images
// are not a basis. The result is verified by composition before returning.
std::optional<std::vector<Word>> invert_basis_map(int domain_rank, const std::vector<Word>& images);

} // namespace suspkit

#endif
