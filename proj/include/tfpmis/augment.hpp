#pragma once

#include <vector>

#include "tfpmis/abstract_graph.hpp"

namespace tfpmis {
namespace augment {

/// Directed graph with simple underlying graph (no loops, no digons).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(n), in_(n) {}

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return m_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int indegree(int v) const { return static_cast<int>(in_[v].size()); }
    int max_indegree() const;
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    /// Adds u -> v; throws LoopOrParallelEdge on loops or digons.
    void add_arc(int u, int v);

    AbstractGraph underlying_graph() const;

private:
    std::vector<std::vector<int>> out_, in_;  // sorted
    int m_ = 0;
};

struct AugmentStats {
    int rounds = 0;
    std::vector<int> max_indegree_per_round;  // length rounds + 1, includes D_0
    int m_d = 0;                              // final max indegree
};

/// Orientation from a greedy minimum-degree elimination order (arcs from
/// later-removed to earlier-removed); max indegree <= degeneracy(g).
Digraph degeneracy_orientation(const AbstractGraph& g);

/// One oriented-augmentation round: adds x->y for every directed 2-path
/// x->z->y with x,y non-adjacent (transitivity), and one arc per non-adjacent
/// pair with a common out-target (fraternality), with all fraternal additions
/// oriented by a degeneracy orientation of the graph they form. Pairs demanded
/// by transitivity in both directions join the fraternal orientation pool.
Digraph augment_step(const Digraph& d);

/// D_0 = degeneracy_orientation(g); D_i = augment_step(D_{i-1}); returns D_l
/// and per-round max indegrees.
std::pair<Digraph, AugmentStats> augment_l(const AbstractGraph& g, int l);

} // namespace augment
} // namespace tfpmis
