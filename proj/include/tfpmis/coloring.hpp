#pragma once

#include <array>
#include <chrono>
#include <vector>

#include "tfpmis/abstract_graph.hpp"
#include "tfpmis/plane_graph.hpp"

namespace tfpmis {
namespace coloring {

/// Partial vertex -> {1,2,3} map; 0 means unassigned.
struct Coloring {
    std::vector<int> color;

    Coloring() = default;
    explicit Coloring(int n) : color(n, 0) {}
    bool assigned(int v) const { return color[v] != 0; }
    int domain_size() const {
        int c = 0;
        for (int x : color) c += x != 0;
        return c;
    }
};

enum class SolveStatus { found, none, timeout };

struct Color3Result {
    SolveStatus status = SolveStatus::none;
    Coloring coloring;
};

using Millis = std::chrono::milliseconds;

/// Exact 3-coloring extension by exhaustive backtracking with
/// saturation-ordered branching and forward checking. Deterministic: returns a
/// fixed coloring when one exists, a definitive `none`, or `timeout`.
/// Throws Error if the precoloring is improper.
Color3Result color3_exact(const AbstractGraph& g, const Coloring& precoloring,
                          Millis timeout = Millis(10000));

/// True iff the proper cyclic coloring has length 6, equal opposite vertices,
/// and three distinct colors. Throws ImproperCycleColoring.
bool gimbel_bad_pattern(const std::vector<int>& cycle_coloring);

/// A 3-coloring of g in which the neighborhood of v (degree <= 3) is
/// monochromatic, via the alternating-cycle gadget: replace v by the cycle
/// v1 u1 v2 u2 ... precolored 1/2, extend, then restore v with color 2.
/// Throws DegreeTooHigh, NotTriangleFree.
Color3Result mono3_gadget(const PlaneGraph& g, int v, Millis timeout = Millis(10000));

struct MonoCertificate {
    std::vector<int> q_prime;  // certified monochromatic-neighborhood vertices
    std::vector<int> dropped;  // requested Q-vertices that were not certified
};

struct MonoResult {
    SolveStatus status = SolveStatus::none;
    bool has_coloring = false;
    Coloring coloring;  // of g - X (domain = V minus X) when has_coloring
    MonoCertificate certificate;
};

/// Contracts N(q) to a single vertex for each q in Q (overlapping or
/// uncolorable constraints are dropped one at a time, ascending id) and solves
/// exactly; returns a coloring of g - X plus the certified Q'.
MonoResult color3_monochromatic(const PlaneGraph& g, const std::vector<int>& Q,
                                const std::vector<int>& X, Millis timeout = Millis(10000));

struct BoostResult {
    std::vector<int> set;
    std::array<int, 3> set_sizes{};  // |S_1|, |S_2|, |S_3|
};

/// The color-class boost: splits Q into isolated vertices and classes by
/// neighborhood color, forms S_i = V_i + Q_0 + Q_{i+1} + Q_{i+2}, and returns
/// the largest, which is independent of size >= (n - |X| + |Q|) / 3.
/// Throws CertificateInvalid on a bichromatic neighborhood or improper input.
BoostResult boost_independent_set(const AbstractGraph& g, const std::vector<int>& X,
                                  const std::vector<int>& Q, const Coloring& coloring);

} // namespace coloring
} // namespace tfpmis
