#include "tfpmis/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace tfpmis {

bool PlaneGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = rot_[u].size() <= rot_[v].size() ? rot_[u] : rot_[v];
    int t = rot_[u].size() <= rot_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), t) != a.end();
}

int PlaneGraph::rotation_index(int v, int u) const {
    const auto& r = rot_[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    return -1;
}

namespace {

// Face tracing: the dart following (u -> v) is (v -> w) where w is the
// successor of u in the rotation at v. Orbits of this map are the faces.
struct DartTable {
    // darts indexed by (vertex, slot): id = offset[v] + slot
    std::vector<int> offset;
    std::vector<int> head;   // head vertex of each dart
    std::vector<int> tail;   // tail vertex
    std::vector<int> twin;   // dart of the reverse edge
    int count = 0;

    explicit DartTable(const std::vector<std::vector<int>>& rot) {
        int n = static_cast<int>(rot.size());
        offset.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
        count = offset[n];
        head.resize(count);
        tail.resize(count);
        twin.assign(count, -1);
        for (int v = 0; v < n; ++v)
            for (size_t i = 0; i < rot[v].size(); ++i) {
                tail[offset[v] + static_cast<int>(i)] = v;
                head[offset[v] + static_cast<int>(i)] = rot[v][i];
            }
        for (int v = 0; v < n; ++v)
            for (size_t i = 0; i < rot[v].size(); ++i) {
                int d = offset[v] + static_cast<int>(i);
                int u = rot[v][i];
                for (size_t j = 0; j < rot[u].size(); ++j)
                    if (rot[u][j] == v) { twin[d] = offset[u] + static_cast<int>(j); break; }
            }
    }

    int next_in_face(int d) const {
        int t = twin[d];  // dart (head -> tail)
        int v = tail[t];
        int slot = t - offset[v];
        int deg = offset[v + 1] - offset[v];
        return offset[v] + (slot + 1) % deg;
    }
};

std::vector<FaceWalk> trace_faces(const std::vector<std::vector<int>>& rot) {
    DartTable dt(rot);
    std::vector<FaceWalk> out;
    std::vector<char> seen(dt.count, 0);
    for (int d0 = 0; d0 < dt.count; ++d0) {
        if (seen[d0]) continue;
        FaceWalk w;
        int d = d0;
        do {
            seen[d] = 1;
            w.vertices.push_back(dt.tail[d]);
            d = dt.next_in_face(d);
        } while (d != d0);
        w.length = static_cast<int>(w.vertices.size());
        out.push_back(std::move(w));
    }
    // Degenerate one-vertex walks for isolated vertices keep the per-component
    // Euler arithmetic uniform.
    for (size_t v = 0; v < rot.size(); ++v)
        if (rot[v].empty()) out.push_back(FaceWalk{{static_cast<int>(v)}, 0});
    return out;
}

std::vector<std::vector<int>> components_of(const std::vector<std::vector<int>>& rot) {
    int n = static_cast<int>(rot.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comps[id].push_back(v);
            for (int u : rot[v])
                if (comp[u] < 0) {
                    comp[u] = id;
                    q.push(u);
                }
        }
    }
    return comps;
}

} // namespace

PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rotations) {
    if (n < 0 || static_cast<int>(rotations.size()) != n)
        throw ParseError("build_plane_graph: rotation list size does not match n");
    for (int v = 0; v < n; ++v) {
        std::unordered_set<int> seen;
        for (int u : rotations[v]) {
            if (u < 0 || u >= n)
                throw ParseError("vertex id out of range in rotation of " + std::to_string(v));
            if (u == v)
                throw LoopOrParallelEdge("loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw LoopOrParallelEdge("parallel edge " + std::to_string(v) + "-" + std::to_string(u));
        }
    }
    long long darts = 0;
    for (int v = 0; v < n; ++v) {
        for (int u : rotations[v]) {
            const auto& r = rotations[u];
            if (std::find(r.begin(), r.end(), v) == r.end())
                throw AsymmetricAdjacency(std::to_string(v) + " lists " + std::to_string(u) +
                                          " but not vice versa");
        }
        darts += static_cast<long long>(rotations[v].size());
    }

    // Euler check per connected component: n_c - m_c + f_c = 2 certifies that
    // the rotation system is a genus-0 embedding of the component.
    auto walks = trace_faces(rotations);
    auto comps = components_of(rotations);
    std::vector<int> comp_of(n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<long long> fc(comps.size(), 0), mc(comps.size(), 0);
    for (const auto& w : walks) fc[comp_of[w.vertices.front()]]++;
    for (int v = 0; v < n; ++v) mc[comp_of[v]] += static_cast<long long>(rotations[v].size());
    for (size_t c = 0; c < comps.size(); ++c) {
        long long nc = static_cast<long long>(comps[c].size());
        long long m = mc[c] / 2;
        if (nc - m + fc[c] != 2)
            throw EulerViolation("component of vertex " + std::to_string(comps[c].front()) +
                                 ": n=" + std::to_string(nc) + " m=" + std::to_string(m) +
                                 " f=" + std::to_string(fc[c]));
    }

    PlaneGraph g;
    g.n_ = n;
    g.m_ = static_cast<int>(darts / 2);
    g.rot_ = std::move(rotations);
    return g;
}

std::vector<FaceWalk> faces(const PlaneGraph& g) { return trace_faces(g.rotations()); }

bool check_triangle_free(const PlaneGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.rotation(v);
        std::sort(adj[v].begin(), adj[v].end());
    }
    for (int v = 0; v < n; ++v)
        for (int u : g.rotation(v)) {
            if (u < v) continue;
            // common neighbor of edge {v,u}?
            const auto& a = adj[v];
            const auto& b = adj[u];
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return false;
                if (a[i] < b[j]) ++i; else ++j;
            }
        }
    return true;
}

DegreeProfile degree_profile(const PlaneGraph& g) {
    DegreeProfile p;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        p.histogram[d]++;
        if (d <= 4) p.low_degree_count++;
    }
    return p;
}

std::vector<std::vector<int>> plane_components(const PlaneGraph& g) {
    return components_of(g.rotations());
}

PlaneGraph parse_pg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rot;
    std::vector<char> have;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "pg") {
            if (n >= 0) throw ParseError(".pg: duplicate header");
            if (!(ls >> n) || n < 0) throw ParseError(".pg: bad header");
            rot.assign(n, {});
            have.assign(n, 0);
            continue;
        }
        if (n < 0) throw ParseError(".pg: missing 'pg <n>' header");
        if (tok.empty() || tok.back() != ':')
            throw ParseError(".pg: expected '<v>:' line, got '" + tok + "'");
        int v;
        try {
            v = std::stoi(tok.substr(0, tok.size() - 1));
        } catch (...) {
            throw ParseError(".pg: bad vertex id '" + tok + "'");
        }
        if (v < 0 || v >= n) throw ParseError(".pg: vertex id out of range");
        if (have[v]) throw ParseError(".pg: duplicate line for vertex " + std::to_string(v));
        have[v] = 1;
        int u;
        while (ls >> u) rot[v].push_back(u);
        if (!ls.eof()) throw ParseError(".pg: bad neighbor token on line of vertex " + std::to_string(v));
    }
    if (n < 0) throw ParseError(".pg: missing 'pg <n>' header");
    for (int v = 0; v < n; ++v)
        if (!have[v]) throw ParseError(".pg: missing line for vertex " + std::to_string(v));
    return build_plane_graph(n, std::move(rot));
}

std::string emit_pg(const PlaneGraph& g) {
    std::ostringstream out;
    out << "pg " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ":";
        for (int u : g.rotation(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

} // namespace tfpmis
