#include "tfpmis/scatter.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tfpmis {
namespace scatter {

namespace {

BigInt big_pow(BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

FatConstants fat_constants(int cap, int t, int m_d) {
    if (cap < 1 || t < 1) throw Error("fat_constants: cap and t must be >= 1");
    FatConstants fc;
    fc.cap = cap;
    fc.t = t;
    fc.K0 = big_pow(cap, 2 * cap) * big_pow(2 * cap + 2, cap + 1) * big_pow(t, cap);
    fc.K = BigInt(2 * m_d + 1) * fc.K0;
    for (int i = 0; i <= cap; ++i)
        fc.threshold_den.push_back(big_pow(cap, 2 * i + 1) * big_pow(2 * cap + 2, i + 1) *
                                   big_pow(t, i));
    return fc;
}

SpecSelectResult spec_select(const BipartiteInstance& h, int cap, int t) {
    FatConstants fc = fat_constants(cap, t, cap);
    int sn = static_cast<int>(h.adj_s.size());
    for (int i = 0; i < sn; ++i)
        if (static_cast<int>(h.adj_s[i].size()) > cap)
            throw DegreeCapViolated("spec_select: S-vertex " + std::to_string(i) + " has degree " +
                                    std::to_string(h.adj_s[i].size()) + " > cap " +
                                    std::to_string(cap));

    std::vector<long long> zdeg(h.z_count, 0);
    for (const auto& nb : h.adj_s)
        for (int z : nb) zdeg[z]++;

    // bucket[z]: 0 for deg >= d_0; i for d_i <= deg < d_{i-1}; -1 below d_cap
    std::vector<int> bucket(h.z_count, -1);
    for (int z = 0; z < h.z_count; ++z)
        for (int i = 0; i <= cap; ++i)
            if (fc.at_least(zdeg[z], i)) {
                bucket[z] = i;
                break;
            }

    // B_i = S-vertices with no neighbor in Z_i; pick i maximizing |B_i|
    int best_i = 0, best_count = -1;
    for (int i = 0; i <= cap; ++i) {
        int cnt = 0;
        for (int v = 0; v < sn; ++v) {
            bool hit = false;
            for (int z : h.adj_s[v])
                if (bucket[z] == i) {
                    hit = true;
                    break;
                }
            if (!hit) ++cnt;
        }
        if (cnt > best_count) {
            best_count = cnt;
            best_i = i;
        }
    }

    SpecSelectResult r;
    r.consts = fc;
    r.bucket_index = best_i;
    std::vector<char> in_x(h.z_count, 0);
    for (int z = 0; z < h.z_count; ++z)
        if (bucket[z] >= 0 && bucket[z] < best_i) {
            in_x[z] = 1;
            r.X.push_back(z);
        }

    // greedy maximal Q by ascending index, pairwise-disjoint neighborhoods
    // outside X
    std::vector<char> z_used(h.z_count, 0);
    for (int v = 0; v < sn; ++v) {
        bool hit_bucket = false, clash = false;
        for (int z : h.adj_s[v]) {
            if (bucket[z] == best_i) hit_bucket = true;
            if (!in_x[z] && z_used[z]) clash = true;
        }
        if (hit_bucket || clash) continue;
        for (int z : h.adj_s[v])
            if (!in_x[z]) z_used[z] = 1;
        r.Q.push_back(v);
    }

    if (BigInt(r.Q.size()) * fc.K0 < BigInt(sn))
        throw InternalInvariantViolation("spec_select: |Q| K0 >= |S| failed");
    if (BigInt(r.X.size()) * t > BigInt(r.Q.size()))
        throw InternalInvariantViolation("spec_select: |X| t <= |Q| failed");
    return r;
}

namespace {

// Greedy coloring in reverse minimum-degree elimination order; every subgraph
// of the underlying augmentation has a vertex of degree <= 2 m_d, so this uses
// at most 2 m_d + 1 colors.
std::vector<int> greedy_color(const AbstractGraph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::set<std::pair<int, int>> pq;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pq.insert({deg[v], v});
    }
    std::vector<char> removed(n, 0);
    while (!pq.empty()) {
        auto [d, v] = *pq.begin();
        pq.erase(pq.begin());
        removed[v] = 1;
        order.push_back(v);
        for (int u : g.neighbors(v))
            if (!removed[u]) {
                pq.erase({deg[u], u});
                deg[u]--;
                pq.insert({deg[u], u});
            }
    }
    std::vector<int> color(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::set<int> used;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used.insert(color[u]);
        int c = 0;
        while (used.count(c)) ++c;
        color[v] = c;
    }
    return color;
}

} // namespace

ScatterResult fat_extract(const AbstractGraph& g, const std::vector<int>& S, int d, int t) {
    if (d < 1 || t < 1) throw Error("fat_extract: d and t must be >= 1");
    auto [dg, stats] = augment::augment_l(g, d);
    int m_d = stats.m_d;
    AbstractGraph aug = dg.underlying_graph();

    std::vector<int> color = greedy_color(aug);
    int colors = 0;
    for (int c : color) colors = std::max(colors, c + 1);
    if (colors > 2 * m_d + 1)
        throw InternalInvariantViolation("fat_extract: greedy coloring exceeded 2 m_d + 1 colors");

    std::vector<int> s_sorted = S;
    std::sort(s_sorted.begin(), s_sorted.end());
    s_sorted.erase(std::unique(s_sorted.begin(), s_sorted.end()), s_sorted.end());

    std::vector<std::vector<int>> by_color(colors);
    for (int v : s_sorted) by_color[color[v]].push_back(v);
    int best_c = 0;
    for (int c = 1; c < colors; ++c)
        if (by_color[c].size() > by_color[best_c].size()) best_c = c;
    const std::vector<int>& s0 = by_color[best_c];

    // bipartite instance: S_0 against the in-neighbors of S_0 in D_d
    std::vector<int> z_ids;
    std::vector<int> z_index(g.vertex_count(), -1);
    BipartiteInstance h;
    h.adj_s.resize(s0.size());
    for (size_t i = 0; i < s0.size(); ++i)
        for (int z : dg.in_neighbors(s0[i])) {
            if (z_index[z] < 0) {
                z_index[z] = static_cast<int>(z_ids.size());
                z_ids.push_back(z);
            }
            h.adj_s[i].push_back(z_index[z]);
        }
    h.z_count = static_cast<int>(z_ids.size());

    int cap = std::max(m_d, 1);
    SpecSelectResult sel = spec_select(h, cap, t);

    ScatterResult out;
    out.d = d;
    out.m_d = m_d;
    out.K = BigInt(2 * m_d + 1) * sel.consts.K0;
    out.s_size = static_cast<int>(s_sorted.size());
    for (int qi : sel.Q) out.Q.push_back(s0[qi]);
    for (int xi : sel.X) out.X.push_back(z_ids[xi]);
    std::sort(out.Q.begin(), out.Q.end());
    std::sort(out.X.begin(), out.X.end());

    ScatterCheck check = verify_scattered(g, out.Q, out.X, d);
    if (!check.ok)
        throw InternalInvariantViolation(
            "fat_extract: result failed the scatteredness certificate (pair " +
            std::to_string(check.violating_pair.first) + "," +
            std::to_string(check.violating_pair.second) + ")");
    out.q_ratio_ok = BigInt(out.Q.size()) * out.K >= BigInt(out.s_size);
    out.x_ratio_ok = BigInt(out.X.size()) * t <= BigInt(out.Q.size());
    if (!out.q_ratio_ok || !out.x_ratio_ok)
        throw InternalInvariantViolation("fat_extract: ratio certificates failed");
    return out;
}

ScatterCheck verify_scattered(const AbstractGraph& g, const std::vector<int>& Q,
                              const std::vector<int>& X, int d) {
    ScatterCheck c;
    std::vector<char> blocked(g.vertex_count(), 0);
    for (int x : X) blocked[x] = 1;
    std::vector<char> in_q(g.vertex_count(), 0);
    for (int q : Q) {
        if (blocked[q]) throw Error("verify_scattered: Q and X intersect");
        in_q[q] = 1;
    }
    for (int q : Q) {
        // BFS truncated at depth d
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> bfs;
        dist[q] = 0;
        bfs.push(q);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            if (dist[v] == d) continue;
            for (int u : g.neighbors(v)) {
                if (blocked[u] || dist[u] >= 0) continue;
                dist[u] = dist[v] + 1;
                if (in_q[u]) {
                    c.ok = false;
                    c.violating_pair = {std::min(q, u), std::max(q, u)};
                    return c;
                }
                bfs.push(u);
            }
        }
    }
    c.ok = true;
    return c;
}

} // namespace scatter
} // namespace tfpmis
