#pragma once

#include <map>
#include <string>
#include <vector>

#include "tfpmis/errors.hpp"

namespace tfpmis {

/// Embedded planar graph given as a rotation system: for every vertex, the
/// clockwise cyclic order of its neighbors. Simple graphs only; construction
/// validates symmetry and runs the Euler check on every connected component,
/// so a successfully built PlaneGraph really is a plane embedding.
///
/// Immutable after construction; all queries are const and thread-safe.
class PlaneGraph {
public:
    PlaneGraph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    bool has_edge(int u, int v) const;

    /// Position of neighbor u in the rotation of v; -1 if absent.
    int rotation_index(int v, int u) const;

    bool operator==(const PlaneGraph& o) const { return rot_ == o.rot_; }

private:
    friend PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rotations);
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> rot_;
};

/// Validates and builds a PlaneGraph.
/// Throws AsymmetricAdjacency, LoopOrParallelEdge, or EulerViolation (the
/// rotation system does not describe a genus-0 embedding).
PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rotations);

/// One closed face walk. `vertices` lists the walk in traversal order (the
/// closing edge back to vertices.front() is implicit); `length` is the number
/// of edge traversals. An isolated vertex yields a degenerate walk of length 0.
struct FaceWalk {
    std::vector<int> vertices;
    int length = 0;
};

/// All face walks of g. Every directed edge appears in exactly one walk;
/// for each connected component, n - m + f = 2.
std::vector<FaceWalk> faces(const PlaneGraph& g);

/// True iff g contains no 3-cycle (neighbor-set intersection per edge).
bool check_triangle_free(const PlaneGraph& g);

struct DegreeProfile {
    std::map<int, int> histogram;  // degree -> vertex count
    int low_degree_count = 0;      // vertices of degree <= 4
};

DegreeProfile degree_profile(const PlaneGraph& g);

/// Connected components of the underlying graph, as vertex-id lists.
std::vector<std::vector<int>> plane_components(const PlaneGraph& g);

/// `.pg` text format: "pg <n>" header, then one line "<v>: <c1> <c2> ..."
/// per vertex giving its clockwise rotation; '#' starts a comment.
/// parse -> emit -> parse is the identity.
PlaneGraph parse_pg(const std::string& text);
std::string emit_pg(const PlaneGraph& g);

} // namespace tfpmis
