#include "tfpmis/abstract_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "tfpmis/plane_graph.hpp"

namespace tfpmis {

AbstractGraph AbstractGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    AbstractGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool AbstractGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

bool AbstractGraph::add_edge(int u, int v) {
    int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("add_edge: vertex id out of range");
    if (u == v) throw LoopOrParallelEdge("add_edge: loop at " + std::to_string(u));
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return false;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
    return true;
}

std::vector<std::pair<int, int>> AbstractGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

AbstractGraph underlying(const PlaneGraph& g) {
    AbstractGraph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.rotation(v))
            if (v < u) out.add_edge(v, u);
    return out;
}

std::vector<int> bfs_distances(const AbstractGraph& g, int src, const std::vector<char>& blocked) {
    std::vector<int> dist(g.vertex_count(), -1);
    if (!blocked.empty() && blocked[src]) return dist;
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (dist[u] >= 0) continue;
            if (!blocked.empty() && blocked[u]) continue;
            dist[u] = dist[v] + 1;
            q.push(u);
        }
    }
    return dist;
}

bool is_independent_set(const AbstractGraph& g, const std::vector<int>& s,
                        std::pair<int, int>* witness) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s) in[v] = 1;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in[u]) {
                if (witness) *witness = {std::min(u, v), std::max(u, v)};
                return false;
            }
    return true;
}

AbstractGraph parse_gr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1, got = 0;
    AbstractGraph g;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0)
                throw ParseError(".gr: bad problem line");
            g = AbstractGraph(n);
            continue;
        }
        if (n < 0) throw ParseError(".gr: missing 'p tw <n> <m>' line");
        int u, v;
        try {
            u = std::stoi(tok);
        } catch (...) {
            throw ParseError(".gr: bad edge line '" + line + "'");
        }
        if (!(ls >> v)) throw ParseError(".gr: bad edge line '" + line + "'");
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(".gr: vertex id out of range");
        g.add_edge(u - 1, v - 1);
        ++got;
    }
    if (n < 0) throw ParseError(".gr: missing 'p tw <n> <m>' line");
    if (got != m) throw ParseError(".gr: edge count does not match header");
    return g;
}

std::string emit_gr(const AbstractGraph& g) {
    std::ostringstream out;
    out << "p tw " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

} // namespace tfpmis
