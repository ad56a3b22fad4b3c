#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfpmis/abstract_graph.hpp"
#include "tfpmis/plane_graph.hpp"

namespace tfpmis {
namespace tw {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;           // sorted vertex ids
    std::vector<std::pair<int, int>> tree_edges;  // bag indices

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

struct TdViolation {
    enum class Kind { none, uncovered_edge, disconnected_occurrence, not_a_tree };
    Kind kind = Kind::none;
    std::pair<int, int> edge{-1, -1};  // for uncovered_edge
    int vertex = -1;                   // for disconnected_occurrence
    std::string message;

    bool ok() const { return kind == Kind::none; }
};

/// Checks the three decomposition axioms; reports the first violation found
/// (tree structure, then edge coverage, then occurrence connectivity).
/// A vertex appearing in no bag reports as a disconnected occurrence.
TdViolation validate_td(const AbstractGraph& g, const TreeDecomposition& td);

enum class TdStrategy { min_degree, min_fill };

/// Elimination-ordering heuristic decomposition; always valid, width >= tw(g),
/// deterministic (ties by smallest vertex id).
TreeDecomposition heuristic_td(const AbstractGraph& g, TdStrategy strategy);

/// g0 plus both diagonals of every 4-face. Duplicate diagonals collapse.
/// Throws NotTriangleFree.
AbstractGraph addcross(const PlaneGraph& g0);

/// Tree decomposition of addcross(g0): decompose the apex graph (one new
/// vertex per 4-face, adjacent to the face), then substitute the face's
/// vertices for each apex.
TreeDecomposition addcross_td(const PlaneGraph& g0, TdStrategy strategy = TdStrategy::min_fill);

struct CliqueJoin {
    int part_a = 0;
    int part_b = 0;
    std::vector<int> clique;
};

/// Glues per-part decompositions along shared cliques: one tree edge per join,
/// between a bag of each part containing the join clique. Width is the max of
/// the part widths. Parts use a common (global) vertex id space.
/// Throws JoinNotClique / JoinNotInBag; joins must connect the parts into a
/// tree.
TreeDecomposition cliquesum_td(const std::vector<std::pair<AbstractGraph, TreeDecomposition>>& parts,
                               const std::vector<CliqueJoin>& joins);

struct MisDpResult {
    int size = 0;
    std::vector<int> witness;
    int width_used = -1;
};

/// Maximum independent set by dynamic programming over the decomposition.
/// Requires validate_td(g, td).ok(); throws WidthBudgetExceeded when the
/// width exceeds w_max.
MisDpResult mis_dp(const AbstractGraph& g, const TreeDecomposition& td, int w_max = 24);

/// `.td` PACE-style format: "s td <#bags> <width+1> <n>", "b <i> <v...>" bag
/// lines, then tree edges; all ids 1-based.
std::string emit_td(const TreeDecomposition& td, int n);
struct TdFile {
    TreeDecomposition td;
    int n = 0;
};
TdFile parse_td(const std::string& text);

} // namespace tw
} // namespace tfpmis
