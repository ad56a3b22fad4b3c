#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfpmis/augment.hpp"
#include "tfpmis/coloring.hpp"
#include "tfpmis/cycles4.hpp"
#include "tfpmis/oracle.hpp"
#include "tfpmis/plane_graph.hpp"
#include "tfpmis/scatter.hpp"
#include "tfpmis/treewidth.hpp"

namespace tfpmis {
namespace solver {

struct Rational {
    long long num = 0;
    long long den = 1;
};

struct SolverConfig {
    enum class Mode { exact, theorem };
    Mode mode = Mode::exact;
    int w_max = 24;
    std::optional<Rational> c_theorem;  // required iff mode == theorem
    int d_scatter = 5;
    int t_sparsity = 14;
    coloring::Millis color_timeout{10000};
};

enum class Answer { yes, no, unknown };
enum class DecisionPath { dp, theorem_shortcut };

struct DecisionReport {
    Answer answer = Answer::unknown;
    DecisionPath path = DecisionPath::dp;
    std::optional<int> alpha;
    int s_hat = 0;
    int width_used = -1;
    std::optional<std::vector<int>> witness;
    std::string note;
};

/// Decides whether g (triangle-free) has an independent set of size at least
/// (n+k)/3, i.e. 3 alpha >= n + k. Exact mode: swept decomposition, diagonal
/// insertion per part, clique-sum decomposition, then DP; answers yes/no
/// exactly or `unknown` when the width budget is exceeded (never wrong).
/// Theorem mode: answers yes when c_theorem * s_hat >= k, else falls through
/// to the exact path. Throws NotTriangleFree.
DecisionReport decide(const PlaneGraph& g, int k, const SolverConfig& cfg = {});

struct FindResult {
    Answer answer = Answer::unknown;
    std::optional<std::vector<int>> set;
    DecisionReport report;
};

/// Like decide, but returns a verified independent set of size >= ceil((n+k)/3)
/// on yes. When the theorem shortcut fires, runs the constructive pipeline
/// (largest swept part, low-degree vertices, scatter extraction, constrained
/// coloring, boost) and falls back to the DP witness when needed.
FindResult find_set(const PlaneGraph& g, int k, const SolverConfig& cfg = {});

struct AnalyzeOptions {
    int augment_rounds = 2;
    std::optional<std::pair<int, int>> scatter;  // (d, t)
    std::optional<Rational> c;
    int alpha_max = 40;
};

struct AnalyzeReport {
    int n = 0;
    int m = 0;
    bool triangle_free = false;
    int separating_4cycles = 0;
    int total_4cycles = 0;
    int s_hat = 0;
    int part_count = 0;
    std::map<int, int> degree_histogram;
    int low_degree_count = 0;
    bool low_degree_bound_holds = false;  // count >= ceil(n/5)
    int width_plain = -1;                 // heuristic width of g
    int width_addcross = -1;              // heuristic width after diagonal insertion
    double bound_41_sqrt_s = 0.0;
    augment::AugmentStats augment_stats;
    std::optional<scatter::ScatterResult> scatter_result;
    std::optional<int> alpha;
    bool alpha_bound_ok = false;  // 3 alpha >= n + 1 (when alpha known)
    std::optional<bool> theorem_shortcut_would_fire;
    std::optional<bool> theorem_bound_ok;  // 3 alpha >= n + c * s_hat (alpha and c known)

    std::string to_string() const;
};

AnalyzeReport analyze(const PlaneGraph& g, const AnalyzeOptions& opts = {});

/// The decomposition-based tree decomposition of the exact path, exposed for
/// reuse: clique-sum of the per-part addcross decompositions.
tw::TreeDecomposition pipeline_td(const PlaneGraph& g, const cycles4::SweptDecomposition& dec);

} // namespace solver
} // namespace tfpmis
