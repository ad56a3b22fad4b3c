#include "tfpmis/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace tfpmis {
namespace oracle {

namespace {

using Clock = std::chrono::steady_clock;

struct Solver {
    const AbstractGraph& g;
    Clock::time_point deadline;
    long long nodes = 0;

    explicit Solver(const AbstractGraph& graph, long long cap_ms)
        : g(graph), deadline(Clock::now() + std::chrono::milliseconds(cap_ms)) {}

    void check_time() {
        if ((++nodes & 0x3ff) == 0 && Clock::now() > deadline)
            throw BudgetExceeded("alpha_exact: time cap exceeded");
    }

    // Greedy clique cover of the subgraph induced by `alive`: each clique can
    // contribute at most one vertex to an independent set.
    int clique_cover_bound(const std::vector<char>& alive) const {
        int n = g.vertex_count();
        std::vector<char> used(n, 0);
        int cliques = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || used[v]) continue;
            used[v] = 1;
            ++cliques;
            std::vector<int> clique{v};
            for (int u : g.neighbors(v)) {
                if (!alive[u] || used[u]) continue;
                bool all = true;
                for (int w : clique)
                    if (w != v && !g.has_edge(u, w)) { all = false; break; }
                if (all) {
                    used[u] = 1;
                    clique.push_back(u);
                }
            }
        }
        return cliques;
    }

    int best = 0;

    void branch(std::vector<char>& alive, int alive_count, int current) {
        check_time();
        if (current + alive_count <= best) return;
        if (alive_count == 0) {
            best = std::max(best, current);
            return;
        }
        if (current + clique_cover_bound(alive) <= best) return;

        int pick = -1, pick_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!alive[v]) continue;
            int d = 0;
            for (int u : g.neighbors(v)) d += alive[u];
            if (d > pick_deg) { pick_deg = d; pick = v; }
        }
        if (pick_deg == 0) {
            best = std::max(best, current + alive_count);
            return;
        }

        // include pick
        std::vector<int> removed{pick};
        alive[pick] = 0;
        for (int u : g.neighbors(pick))
            if (alive[u]) { alive[u] = 0; removed.push_back(u); }
        branch(alive, alive_count - static_cast<int>(removed.size()), current + 1);
        for (int v : removed) alive[v] = 1;

        // exclude pick
        alive[pick] = 0;
        branch(alive, alive_count - 1, current);
        alive[pick] = 1;
    }

    int solve(const std::vector<char>& fixed_out, const std::vector<int>& fixed_in) {
        std::vector<char> alive(g.vertex_count(), 1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (fixed_out[v]) alive[v] = 0;
        for (int v : fixed_in) {
            alive[v] = 0;
            for (int u : g.neighbors(v)) alive[u] = 0;
        }
        int cnt = 0;
        for (char a : alive) cnt += a;
        best = 0;
        branch(alive, cnt, 0);
        return best + static_cast<int>(fixed_in.size());
    }
};

} // namespace

AlphaResult alpha_exact(const AbstractGraph& g, const OracleBudget& budget) {
    if (g.vertex_count() > budget.max_n)
        throw BudgetExceeded("alpha_exact: n=" + std::to_string(g.vertex_count()) +
                             " exceeds max_n=" + std::to_string(budget.max_n));
    Solver solver(g, budget.time_cap_ms);
    std::vector<char> out(g.vertex_count(), 0);
    std::vector<int> in;
    int alpha = solver.solve(out, in);

    // Lexicographically smallest witness: fix vertices in ascending order
    // whenever doing so keeps the optimum attainable.
    for (int v = 0; v < g.vertex_count() && static_cast<int>(in.size()) < alpha; ++v) {
        if (out[v]) continue;
        bool adjacent = false;
        for (int u : g.neighbors(v))
            if (std::find(in.begin(), in.end(), u) != in.end()) { adjacent = true; break; }
        if (adjacent) continue;
        in.push_back(v);
        if (solver.solve(out, in) < alpha) in.pop_back();
    }
    AlphaResult r;
    r.size = alpha;
    r.witness = std::move(in);
    return r;
}

IndependenceCheck verify_independent(const AbstractGraph& g, const std::vector<int>& s) {
    IndependenceCheck c;
    std::pair<int, int> w;
    c.ok = is_independent_set(g, s, &w);
    if (!c.ok) c.violating_edge = w;
    return c;
}

} // namespace oracle
} // namespace tfpmis
