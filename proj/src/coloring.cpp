#include "tfpmis/coloring.hpp"

#include <algorithm>
#include <set>

namespace tfpmis {
namespace coloring {

namespace {

using Clock = std::chrono::steady_clock;

struct Solver {
    const AbstractGraph& g;
    Clock::time_point deadline;
    std::vector<int> color;    // 0 unassigned
    std::vector<int> domain;   // 3-bit masks
    long long nodes = 0;
    bool timed_out = false;

    Solver(const AbstractGraph& graph, Millis timeout)
        : g(graph),
          deadline(Clock::now() + timeout),
          color(graph.vertex_count(), 0),
          domain(graph.vertex_count(), 0b111) {}

    bool out_of_time() {
        if ((++nodes & 0xff) == 0 && Clock::now() > deadline) timed_out = true;
        return timed_out;
    }

    // assign + forward check + unit propagation; records touched vertices for undo
    bool assign(int v, int c, std::vector<std::pair<int, int>>& trail) {
        std::vector<int> queue{v};
        trail.push_back({v, color[v]});
        color[v] = c;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            int bit = 1 << (color[x] - 1);
            for (int u : g.neighbors(x)) {
                if (color[u] != 0) {
                    if (color[u] == color[x]) return false;
                    continue;
                }
                if (!(domain[u] & bit)) continue;
                trail.push_back({~u, domain[u]});
                domain[u] &= ~bit;
                if (domain[u] == 0) return false;
                if ((domain[u] & (domain[u] - 1)) == 0) {
                    int only = domain[u] == 1 ? 1 : domain[u] == 2 ? 2 : 3;
                    trail.push_back({u, color[u]});
                    color[u] = only;
                    queue.push_back(u);
                }
            }
        }
        return true;
    }

    void undo(std::vector<std::pair<int, int>>& trail, size_t mark) {
        while (trail.size() > mark) {
            auto [key, val] = trail.back();
            trail.pop_back();
            if (key >= 0) color[key] = val;
            else domain[~key] = val;
        }
    }

    int pick_branch_vertex() const {
        int best = -1, best_dom = 4, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != 0) continue;
            int dom = __builtin_popcount(static_cast<unsigned>(domain[v]));
            int deg = g.degree(v);
            if (dom < best_dom || (dom == best_dom && deg > best_deg)) {
                best = v;
                best_dom = dom;
                best_deg = deg;
            }
        }
        return best;
    }

    bool search(std::vector<std::pair<int, int>>& trail) {
        if (out_of_time()) return false;
        int v = pick_branch_vertex();
        if (v < 0) return true;
        for (int c = 1; c <= 3; ++c) {
            if (!(domain[v] & (1 << (c - 1)))) continue;
            size_t mark = trail.size();
            if (assign(v, c, trail) && search(trail)) return true;
            undo(trail, mark);
            if (timed_out) return false;
        }
        return false;
    }
};

} // namespace

Color3Result color3_exact(const AbstractGraph& g, const Coloring& precoloring, Millis timeout) {
    if (static_cast<int>(precoloring.color.size()) != g.vertex_count())
        throw Error("color3_exact: precoloring size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = precoloring.color[v];
        if (c < 0 || c > 3) throw Error("color3_exact: color out of range");
        if (c == 0) continue;
        for (int u : g.neighbors(v))
            if (precoloring.color[u] == c)
                throw Error("color3_exact: improper precoloring on edge " + std::to_string(v) +
                            "-" + std::to_string(u));
    }

    Solver s(g, timeout);
    std::vector<std::pair<int, int>> trail;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (precoloring.color[v] == 0) continue;
        if (s.color[v] == precoloring.color[v]) continue;
        if (s.color[v] != 0 || !(s.domain[v] & (1 << (precoloring.color[v] - 1))) ||
            !s.assign(v, precoloring.color[v], trail)) {
            Color3Result r;
            r.status = SolveStatus::none;
            return r;
        }
    }
    Color3Result r;
    if (s.search(trail)) {
        r.status = SolveStatus::found;
        r.coloring.color = s.color;
        return r;
    }
    r.status = s.timed_out ? SolveStatus::timeout : SolveStatus::none;
    return r;
}

bool gimbel_bad_pattern(const std::vector<int>& cycle_coloring) {
    int L = static_cast<int>(cycle_coloring.size());
    if (L < 3 || L > 6) throw ImproperCycleColoring("cycle length must be 3..6");
    for (int i = 0; i < L; ++i) {
        int c = cycle_coloring[i];
        if (c < 1 || c > 3) throw ImproperCycleColoring("color out of range");
        if (c == cycle_coloring[(i + 1) % L])
            throw ImproperCycleColoring("equal colors on consecutive cycle vertices");
    }
    if (L != 6) return false;
    for (int i = 0; i < 3; ++i)
        if (cycle_coloring[i] != cycle_coloring[i + 3]) return false;
    return cycle_coloring[0] != cycle_coloring[1] && cycle_coloring[1] != cycle_coloring[2] &&
           cycle_coloring[0] != cycle_coloring[2];
}

Color3Result mono3_gadget(const PlaneGraph& g, int v, Millis timeout) {
    if (!check_triangle_free(g)) throw NotTriangleFree("mono3_gadget: input has a triangle");
    int t = g.degree(v);
    if (t > 3) throw DegreeTooHigh("mono3_gadget: degree " + std::to_string(t) + " > 3");
    int n = g.vertex_count();

    if (t <= 1) {
        Color3Result r = color3_exact(underlying(g), Coloring(n), timeout);
        return r;
    }

    // replace v by the alternating cycle v1 u1 v2 u2 ... precolored 1/2
    AbstractGraph gp(n + t);
    for (int a = 0; a < n; ++a)
        for (int b : g.rotation(a))
            if (a < b && a != v && b != v) gp.add_edge(a, b);
    const auto& nb = g.rotation(v);
    for (int i = 0; i < t; ++i) {
        gp.add_edge(nb[i], n + i);
        gp.add_edge(n + i, nb[(i + 1) % t]);
    }
    Coloring pre(n + t);
    for (int i = 0; i < t; ++i) {
        pre.color[nb[i]] = 1;
        pre.color[n + i] = 2;
    }
    Color3Result inner = color3_exact(gp, pre, timeout);
    Color3Result r;
    r.status = inner.status;
    if (inner.status != SolveStatus::found) return r;
    r.coloring = Coloring(n);
    for (int a = 0; a < n; ++a) r.coloring.color[a] = inner.coloring.color[a];
    r.coloring.color[v] = 2;
    for (int u : g.rotation(v))
        if (r.coloring.color[u] != 1)
            throw InternalInvariantViolation("mono3_gadget: neighborhood not monochromatic");
    return r;
}

MonoResult color3_monochromatic(const PlaneGraph& g, const std::vector<int>& Q,
                                const std::vector<int>& X, Millis timeout) {
    if (!check_triangle_free(g)) throw NotTriangleFree("color3_monochromatic: input has a triangle");
    int n = g.vertex_count();
    AbstractGraph ga = underlying(g);
    std::vector<char> in_x(n, 0);
    for (int x : X) in_x[x] = 1;
    for (int q : Q)
        if (in_x[q]) throw Error("color3_monochromatic: Q and X intersect");
    std::vector<int> q_sorted = Q;
    std::sort(q_sorted.begin(), q_sorted.end());
    for (size_t i = 0; i < q_sorted.size(); ++i)
        for (size_t j = i + 1; j < q_sorted.size(); ++j)
            if (ga.has_edge(q_sorted[i], q_sorted[j]))
                throw Error("color3_monochromatic: Q is not independent in g - X");

    auto deadline = Clock::now() + timeout;
    MonoResult out;

    // Overlapping contractions cannot be satisfied simultaneously; keep the
    // ascending-id prefix whose neighborhoods are disjoint.
    std::vector<int> active;
    {
        std::vector<char> used(n, 0);
        for (int q : q_sorted) {
            bool clash = false;
            for (int u : ga.neighbors(q))
                if (!in_x[u] && used[u]) clash = true;
            if (clash) {
                out.certificate.dropped.push_back(q);
                continue;
            }
            for (int u : ga.neighbors(q))
                if (!in_x[u]) used[u] = 1;
            active.push_back(q);
        }
    }

    while (true) {
        // contracted graph over V - X with one vertex per active neighborhood
        std::vector<int> repr(n, -1);
        int m = 0;
        std::vector<int> back;  // contracted id -> representative original id (or -1 for groups)
        std::vector<char> grouped(n, 0);
        for (int q : active)
            for (int u : ga.neighbors(q))
                if (!in_x[u]) grouped[u] = 1;
        std::vector<int> group_of(n, -1);
        for (size_t qi = 0; qi < active.size(); ++qi)
            for (int u : ga.neighbors(active[qi]))
                if (!in_x[u]) group_of[u] = static_cast<int>(qi);
        std::vector<int> group_vertex(active.size(), -1);
        for (int v = 0; v < n; ++v) {
            if (in_x[v]) continue;
            if (grouped[v]) {
                int qi = group_of[v];
                if (group_vertex[qi] < 0) {
                    group_vertex[qi] = m++;
                    back.push_back(-1);
                }
                repr[v] = group_vertex[qi];
            } else {
                repr[v] = m++;
                back.push_back(v);
            }
        }
        AbstractGraph gc(m);
        for (auto [a, b] : ga.edges()) {
            if (in_x[a] || in_x[b]) continue;
            int ra = repr[a], rb = repr[b];
            if (ra == rb)
                throw InternalInvariantViolation("color3_monochromatic: contraction self-loop");
            gc.add_edge(ra, rb);
        }

        Millis remaining = std::chrono::duration_cast<Millis>(deadline - Clock::now());
        if (remaining.count() < 1) remaining = Millis(1);
        Color3Result sol = color3_exact(gc, Coloring(m), remaining);
        if (sol.status == SolveStatus::found) {
            out.status = SolveStatus::found;
            out.has_coloring = true;
            out.coloring = Coloring(n);
            for (int v = 0; v < n; ++v)
                if (!in_x[v]) out.coloring.color[v] = sol.coloring.color[repr[v]];
            out.certificate.q_prime = active;
            return out;
        }
        if (active.empty()) {
            // not even the unconstrained instance solved within the budget
            out.status = sol.status;
            return out;
        }
        out.certificate.dropped.push_back(active.front());
        active.erase(active.begin());
        if (Clock::now() > deadline) {
            // final attempt: plain coloring of g - X, empty certificate
            for (int q : active) out.certificate.dropped.push_back(q);
            active.clear();
        }
    }
}

BoostResult boost_independent_set(const AbstractGraph& g, const std::vector<int>& X,
                                  const std::vector<int>& Q, const Coloring& coloring) {
    int n = g.vertex_count();
    std::vector<char> in_x(n, 0);
    for (int x : X) in_x[x] = 1;
    std::vector<char> in_q(n, 0);
    for (int q : Q) {
        if (in_x[q]) throw CertificateInvalid("boost: Q and X intersect");
        in_q[q] = 1;
    }
    if (static_cast<int>(coloring.color.size()) != n)
        throw CertificateInvalid("boost: coloring size mismatch");
    for (int v = 0; v < n; ++v) {
        if (in_x[v]) continue;
        if (coloring.color[v] < 1 || coloring.color[v] > 3)
            throw CertificateInvalid("boost: coloring not total on g - X");
        for (int u : g.neighbors(v))
            if (!in_x[u] && coloring.color[u] == coloring.color[v])
                throw CertificateInvalid("boost: coloring not proper on g - X");
    }
    for (int q : Q)
        for (int u : g.neighbors(q))
            if (in_q[u]) throw CertificateInvalid("boost: Q not independent");

    // Q_0 isolated in g - X; Q_c by neighborhood color
    std::vector<std::vector<int>> qclass(4);
    for (int q : Q) {
        int c = 0;
        bool any = false;
        for (int u : g.neighbors(q)) {
            if (in_x[u]) continue;
            any = true;
            if (c == 0) c = coloring.color[u];
            else if (c != coloring.color[u])
                throw CertificateInvalid("boost: vertex " + std::to_string(q) +
                                         " has a bichromatic neighborhood");
        }
        qclass[any ? c : 0].push_back(q);
    }

    BoostResult r;
    std::array<std::vector<int>, 3> sets;
    for (int i = 1; i <= 3; ++i) {
        auto& s = sets[i - 1];
        for (int v = 0; v < n; ++v)
            if (!in_x[v] && !in_q[v] && coloring.color[v] == i) s.push_back(v);
        for (int q : qclass[0]) s.push_back(q);
        int j1 = i % 3 + 1, j2 = (i + 1) % 3 + 1;  // i+1, i+2 wrapped into 1..3
        for (int q : qclass[j1]) s.push_back(q);
        for (int q : qclass[j2]) s.push_back(q);
        std::sort(s.begin(), s.end());
        r.set_sizes[i - 1] = static_cast<int>(s.size());
    }
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (r.set_sizes[i] > r.set_sizes[best]) best = i;
    r.set = sets[best];
    std::pair<int, int> bad;
    if (!is_independent_set(g, r.set, &bad))
        throw InternalInvariantViolation("boost: produced set is not independent (edge " +
                                         std::to_string(bad.first) + "-" +
                                         std::to_string(bad.second) + ")");
    return r;
}

} // namespace coloring
} // namespace tfpmis
