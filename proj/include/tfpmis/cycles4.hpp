#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tfpmis/plane_graph.hpp"

namespace tfpmis {
namespace cycles4 {

enum class CycleKind { facial, separating, neither };

/// A 4-cycle of a plane graph with its side classification. `vertices` is the
/// canonical cyclic order (min vertex first, smaller cycle-neighbor second).
/// The interior is the side with fewer vertices in the cycle's component
/// (ties: the side not containing the smallest vertex id); vertices of other
/// components always count as exterior.
struct CycleWitness {
    std::array<int, 4> vertices{};
    bool separating = false;
    int interior_vertex_count = 0;
    CycleKind kind = CycleKind::neither;
};

/// All 4-cycles of g, classified, in deterministic (canonical tuple) order.
std::vector<CycleWitness> enumerate_4cycles(const PlaneGraph& g);

/// The two-phase separating-4-cycle search: a degeneracy order with back-degree
/// at most 5, direct enumeration of cycles with i2 < max(i1,i3) < i4, then the
/// sorted-triple pass testing at most 4 candidate cycles per (a,b) group.
/// Returns some separating 4-cycle iff one exists.
/// Throws NotPlanarOrder if no back-degree-5 ordering exists.
std::optional<CycleWitness> find_separating_4cycle_fast(const PlaneGraph& g);

/// A separating 4-cycle whose open interior contains no separating 4-cycle of
/// g; none iff g has none. Deterministic: smallest interior vertex count,
/// then lexicographically smallest canonical tuple.
std::optional<CycleWitness> innermost_separating_4cycle(const PlaneGraph& g);

/// Subgraphs drawn in the closed interior / exterior of a cycle of g.
/// `orig[local]` maps back to g's vertex ids; `cycle_local` is the cycle.
struct SideSubgraph {
    PlaneGraph graph;
    std::vector<int> orig;
    std::array<int, 4> cycle_local{};
};

/// parts[i] with orig-id maps; joins glue each split-off part to the part that
/// inherited the matching 4-face (the clique-sum structure of the parts after
/// diagonal insertion).
struct SweptPart {
    PlaneGraph graph;
    std::vector<int> orig;
};

struct CliqueJoinRef {
    int part_a = -1;
    int part_b = -1;
    std::array<int, 4> clique{};  // ids of g
};

struct SweptDecomposition {
    std::vector<SweptPart> parts;
    std::vector<CliqueJoinRef> joins;
    std::map<std::pair<int, int>, std::vector<int>> shared_vertices;  // nonempty intersections
    int s_hat = 0;  // max part size
};

/// Repeatedly splits off the closed interior of an innermost separating
/// 4-cycle until no separating 4-cycle remains anywhere. Parts cover g, every
/// part face that is not a face of g has length 4, and no part has a
/// separating 4-cycle.
SweptDecomposition swept_decompose(const PlaneGraph& g);

} // namespace cycles4
} // namespace tfpmis
