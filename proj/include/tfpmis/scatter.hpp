#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "tfpmis/abstract_graph.hpp"
#include "tfpmis/augment.hpp"

namespace tfpmis {
namespace scatter {

using BigInt = boost::multiprecision::cpp_int;

/// The exact constants of the bipartite selection: K0 = c^{2c} (2c+2)^{c+1} t^c
/// and the degree thresholds d_i = K0 / (c^{2i+1} (2c+2)^{i+1} t^i) as exact
/// rationals (numerator K0, per-i denominator), so that d_c * c = 1.
struct FatConstants {
    int cap = 1;  // c
    int t = 1;
    BigInt K0;
    BigInt K;  // (2 m_d + 1) * K0 in the fat-extraction context, else (2 cap + 1) * K0
    std::vector<BigInt> threshold_den;  // d_i = K0 / threshold_den[i], i = 0..cap

    /// degree >= d_i, exactly.
    bool at_least(long long degree, int i) const { return degree * threshold_den[i] >= K0; }
};

FatConstants fat_constants(int cap, int t, int m_d);

/// Bipartite instance with parts S and Z; adj_s[i] lists the Z-indices
/// adjacent to the i-th S-vertex.
struct BipartiteInstance {
    int z_count = 0;
    std::vector<std::vector<int>> adj_s;
};

struct SpecSelectResult {
    std::vector<int> Q;  // indices into S
    std::vector<int> X;  // indices into Z
    FatConstants consts;
    int bucket_index = 0;  // the pigeonhole index i
};

/// The bucketed selection: split Z by degree thresholds, pick the index i
/// maximizing |B| (ties to smallest i) where B has no neighbor in Z_i, set
/// X = Z_0 .. Z_{i-1}, and take Q greedily (ascending index) maximal in B with
/// pairwise-disjoint neighborhoods in Z - X.
/// Guarantees |Q| * K0 >= |S| and |X| * t <= |Q|.
/// Throws DegreeCapViolated if an S-vertex exceeds cap.
SpecSelectResult spec_select(const BipartiteInstance& h, int cap, int t);

struct ScatterResult {
    std::vector<int> Q;
    std::vector<int> X;
    int d = 0;
    int m_d = 0;
    BigInt K;
    int s_size = 0;  // |S| the extraction started from
    bool q_ratio_ok = false;  // |Q| * K >= |S|
    bool x_ratio_ok = false;  // |X| * t <= |Q|
};

/// Full fatness extraction: d-th oriented augmentation, greedy coloring with
/// at most 2 m_d + 1 colors, largest color class inside S, bipartite
/// in-neighbor instance, then spec_select with cap = max(m_d, 1).
/// The result is certified d-scattered before returning.
ScatterResult fat_extract(const AbstractGraph& g, const std::vector<int>& S, int d, int t);

struct ScatterCheck {
    bool ok = false;
    std::pair<int, int> violating_pair{-1, -1};
};

/// Truncated BFS from every Q-vertex in g - X; ok iff no other Q-vertex lies
/// within distance d.
ScatterCheck verify_scattered(const AbstractGraph& g, const std::vector<int>& Q,
                              const std::vector<int>& X, int d);

} // namespace scatter
} // namespace tfpmis
