#pragma once

#include <utility>
#include <vector>

#include "tfpmis/errors.hpp"

namespace tfpmis {

class PlaneGraph;

/// Simple undirected graph without an embedding. Neighbor lists are kept
/// sorted; duplicate insertions collapse silently, loops throw.
class AbstractGraph {
public:
    AbstractGraph() = default;
    explicit AbstractGraph(int n) : adj_(n) {}
    static AbstractGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Adds {u,v}; returns false if it was already present.
    bool add_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// The abstract graph underlying a plane graph.
AbstractGraph underlying(const PlaneGraph& g);

/// BFS distances from src in g, skipping vertices marked in `blocked`
/// (blocked may be empty). Unreachable vertices get -1.
std::vector<int> bfs_distances(const AbstractGraph& g, int src, const std::vector<char>& blocked = {});

/// True iff s is an independent set; otherwise *witness (if non-null)
/// receives a violating edge.
bool is_independent_set(const AbstractGraph& g, const std::vector<int>& s,
                        std::pair<int, int>* witness = nullptr);

/// `.gr` text format (PACE-style): "p tw <n> <m>" then one 1-based "<u> <v>"
/// line per edge; 'c' lines are comments.
AbstractGraph parse_gr(const std::string& text);
std::string emit_gr(const AbstractGraph& g);

} // namespace tfpmis
