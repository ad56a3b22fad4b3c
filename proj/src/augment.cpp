#include "tfpmis/augment.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfpmis {
namespace augment {

int Digraph::max_indegree() const {
    int m = 0;
    for (const auto& l : in_) m = std::max(m, static_cast<int>(l.size()));
    return m;
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

void Digraph::add_arc(int u, int v) {
    if (u == v) throw LoopOrParallelEdge("add_arc: loop");
    if (has_arc(u, v)) return;
    if (has_arc(v, u)) throw LoopOrParallelEdge("add_arc: would create a digon");
    out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
    in_[v].insert(std::lower_bound(in_[v].begin(), in_[v].end(), u), u);
    ++m_;
}

AbstractGraph Digraph::underlying_graph() const {
    AbstractGraph g(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        for (int u : out_[v]) g.add_edge(v, u);
    return g;
}

Digraph degeneracy_orientation(const AbstractGraph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), removal_pos(n, -1);
    std::set<std::pair<int, int>> pq;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pq.insert({deg[v], v});
    }
    std::vector<char> removed(n, 0);
    for (int step = 0; step < n; ++step) {
        auto [d, v] = *pq.begin();
        pq.erase(pq.begin());
        removed[v] = 1;
        removal_pos[v] = step;
        for (int u : g.neighbors(v))
            if (!removed[u]) {
                pq.erase({deg[u], u});
                deg[u]--;
                pq.insert({deg[u], u});
            }
    }
    Digraph d(n);
    for (auto [u, v] : g.edges()) {
        if (removal_pos[u] < removal_pos[v]) d.add_arc(v, u);
        else d.add_arc(u, v);
    }
    return d;
}

Digraph augment_step(const Digraph& d) {
    int n = d.vertex_count();
    // per non-adjacent pair: which directions transitivity demands
    std::map<std::pair<int, int>, int> demand;  // (min,max) -> bit0: min->max, bit1: max->min
    auto demand_arc = [&](int x, int y) {
        int a = std::min(x, y), b = std::max(x, y);
        demand[{a, b}] |= x == a ? 1 : 2;
    };
    std::set<std::pair<int, int>> fraternal;

    for (int z = 0; z < n; ++z) {
        for (int x : d.in_neighbors(z))
            for (int y : d.out_neighbors(z))
                if (x != y && !d.adjacent(x, y)) demand_arc(x, y);
        const auto& ins = d.in_neighbors(z);
        for (size_t i = 0; i < ins.size(); ++i)
            for (size_t j = i + 1; j < ins.size(); ++j)
                if (!d.adjacent(ins[i], ins[j]))
                    fraternal.insert({ins[i], ins[j]});
    }

    Digraph out = d;
    std::vector<std::pair<int, int>> undirected;  // fraternal + two-way transitive
    for (auto& [pair, dirs] : demand) {
        if (dirs == 3) undirected.push_back(pair);
        else if (dirs == 1) out.add_arc(pair.first, pair.second);
        else out.add_arc(pair.second, pair.first);
    }
    for (const auto& pair : fraternal)
        if (!demand.count(pair)) undirected.push_back(pair);

    if (!undirected.empty()) {
        AbstractGraph f(n);
        for (auto [u, v] : undirected) f.add_edge(u, v);
        Digraph fo = degeneracy_orientation(f);
        for (int v = 0; v < n; ++v)
            for (int u : fo.out_neighbors(v)) out.add_arc(v, u);
    }
    return out;
}

std::pair<Digraph, AugmentStats> augment_l(const AbstractGraph& g, int l) {
    if (l < 0) throw Error("augment_l: l must be >= 0");
    Digraph d = degeneracy_orientation(g);
    AugmentStats stats;
    stats.rounds = l;
    stats.max_indegree_per_round.push_back(d.max_indegree());
    for (int i = 0; i < l; ++i) {
        d = augment_step(d);
        stats.max_indegree_per_round.push_back(d.max_indegree());
    }
    stats.m_d = stats.max_indegree_per_round.back();
    return {std::move(d), std::move(stats)};
}

} // namespace augment
} // namespace tfpmis
