#include "suspkit/stallings.hpp"

namespace suspkit {

SubgroupGraph::SubgroupGraph(int ambient_rank, const std::vector<Word>& generators)
    : ambient_rank_(ambient_rank) {
    for (const Word& g : generators)
        if (g.max_gen_index() >= ambient_rank)
            throw Error("subgroup generator outside ambient alphabet");
    new_vertex(); // base = 0, never merged away
    std::deque<PendingArc> pending;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& ls = generators[k].letters();
        if (ls.empty()) continue;
        int cur = 0;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            int nxt = (i + 1 == ls.size()) ? 0 : new_vertex();
            Word ann = (i == 0) ? Word::generator(int(k)) : Word();
            pending.push_back({cur, ls[i], nxt, std::move(ann)});
            cur = nxt;
        }
    }
    while (!pending.empty()) {
        PendingArc a = std::move(pending.front());
        pending.pop_front();
        insert(std::move(a), pending);
    }
}

int SubgroupGraph::new_vertex() {
    verts_.emplace_back();
    redirect_.push_back(-1);
    gauge_.emplace_back();
    return int(verts_.size()) - 1;
}

void SubgroupGraph::insert(PendingArc a, std::deque<PendingArc>& pending) {
    // Resolve endpoints through redirects, composing the gauges the dead
    // vertices accumulated: out-arcs of a re-gauged vertex pick up p on the
    // left, in-arcs p^-1 on the right.
    int u = a.from;
    Word ann = std::move(a.ann);
    while (redirect_[u] >= 0) {
        ann = concat(gauge_[u], ann);
        u = redirect_[u];
    }
    int v = a.to;
    while (redirect_[v] >= 0) {
        ann = concat(ann, inverse(gauge_[v]));
        v = redirect_[v];
    }

    auto fwd = verts_[u].find(a.letter);
    if (fwd != verts_[u].end()) {
        int v0 = fwd->second.first;
        if (v0 == v) {
            if (!(fwd->second.second == ann)) conflict_ = true;
            return;
        }
        if (v == 0)
            merge(v0, v, concat(inverse(ann), fwd->second.second), pending);
        else
            merge(v, v0, concat(inverse(fwd->second.second), ann), pending);
        return;
    }
    auto bwd = verts_[v].find(-a.letter);
    if (bwd != verts_[v].end()) {
        int u0 = bwd->second.first;
        Word inv_ann = inverse(ann);
        if (u0 == u) {
            if (!(bwd->second.second == inv_ann)) conflict_ = true;
            return;
        }
        if (u == 0)
            merge(u0, u, concat(ann, bwd->second.second), pending);
        else
            merge(u, u0, concat(inverse(bwd->second.second), inv_ann), pending);
        return;
    }
    verts_[u][a.letter] = {v, ann};
    verts_[v][-a.letter] = {u, inverse(ann)};
}

// Identifies y with x (y dies). p re-gauges y: an out-arc annotation b of y
// becomes p*b (p*b*p^-1 for loops at y); closed-path products away from y
// are untouched, so membership rewritings at the base stay exact.
void SubgroupGraph::merge(int y, int x, Word p, std::deque<PendingArc>& pending) {
    auto moved = std::move(verts_[y]);
    verts_[y].clear();
    redirect_[y] = x;
    gauge_[y] = p;
    for (auto& [letter, tgt] : moved) {
        if (tgt.first == y) {
            pending.push_back({x, letter, x, concat(concat(p, tgt.second), inverse(p))});
        } else {
            int z = tgt.first;
            auto it = verts_[z].find(-letter);
            if (it != verts_[z].end() && it->second.first == y)
                verts_[z].erase(it); // stale reverse half, re-created on insert
            pending.push_back({x, letter, z, concat(p, tgt.second)});
        }
    }
}

bool SubgroupGraph::contains(const Word& w) const { return express(w).has_value(); }

std::optional<Word> SubgroupGraph::express(const Word& w) const {
    if (w.max_gen_index() >= ambient_rank_) return std::nullopt;
    int cur = 0;
    std::vector<Letter> ann;
    for (Letter l : w.letters()) {
        auto it = verts_[cur].find(l);
        if (it == verts_[cur].end()) return std::nullopt;
        const auto& a = it->second.second.letters();
        ann.insert(ann.end(), a.begin(), a.end());
        cur = it->second.first;
    }
    if (cur != 0) return std::nullopt;
    return Word(std::move(ann));
}

bool SubgroupGraph::is_whole_group() const {
    for (int i = 0; i < ambient_rank_; ++i)
        if (!contains(Word::generator(i))) return false;
    return true;
}

std::optional<std::vector<Word>> invert_basis_map(int domain_rank, const std::vector<Word>& images) {
    if (int(images.size()) != domain_rank) return std::nullopt;
    for (const Word& w : images)
        if (w.max_gen_index() >= domain_rank) return std::nullopt;
    SubgroupGraph g(domain_rank, images);
    if (g.had_conflict()) return std::nullopt;
    std::vector<Word> inv;
    for (int i = 0; i < domain_rank; ++i) {
        auto e = g.express(Word::generator(i));
        if (!e) return std::nullopt;
        inv.push_back(std::move(*e));
    }
    for (int i = 0; i < domain_rank; ++i) {
        if (apply_images(images, inv[i]) != Word::generator(i)) return std::nullopt;
        if (apply_images(inv, images[i]) != Word::generator(i)) return std::nullopt;
    }
    return inv;
}

} // namespace suspkit
