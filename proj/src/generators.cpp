#include "tfpmis/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace tfpmis {
namespace gen {

PlaneGraph gen_cycle(int length) {
    if (length < 3) throw BadParams("cycle: length must be >= 3");
    std::vector<std::vector<int>> rot(length);
    for (int v = 0; v < length; ++v)
        rot[v] = {(v + length - 1) % length, (v + 1) % length};
    return build_plane_graph(length, std::move(rot));
}

PlaneGraph gen_cube() {
    // Outer square 0..3 (clockwise), inner square 4..7, spokes i - i+4.
    std::vector<std::vector<int>> rot(8);
    rot[0] = {1, 4, 3};
    rot[1] = {2, 5, 0};
    rot[2] = {1, 3, 6};
    rot[3] = {0, 7, 2};
    rot[4] = {0, 5, 7};
    rot[5] = {1, 6, 4};
    rot[6] = {5, 2, 7};
    rot[7] = {4, 6, 3};
    return build_plane_graph(8, std::move(rot));
}

PlaneGraph gen_k23() {
    // 0 left, 1 right, 2/3/4 stacked between them; all three faces length 4.
    std::vector<std::vector<int>> rot(5);
    rot[0] = {2, 3, 4};
    rot[1] = {4, 3, 2};
    rot[2] = {1, 0};
    rot[3] = {1, 0};
    rot[4] = {1, 0};
    return build_plane_graph(5, std::move(rot));
}

PlaneGraph gen_stars(int a) {
    if (a < 1) throw BadParams("stars: a must be >= 1");
    int n = a * (a + 1);
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < a; ++i) {
        int center = i * (a + 1);
        for (int r = 1; r <= a; ++r) {
            rot[center].push_back(center + r);
            rot[center + r] = {center};
        }
    }
    return build_plane_graph(n, std::move(rot));
}

PlaneGraph gen_hex(int rows, int cols) {
    if (rows < 1 || cols < 1) throw BadParams("hex: rows and cols must be >= 1");
    // Pointy-top hexagons on an integer grid: corner offsets from a center are
    // (0,2),(1,1),(1,-1),(0,-2),(-1,-1),(-1,1); centers at (2c + (r&1), -3r).
    static const int off[6][2] = {{0, 2}, {1, 1}, {1, -1}, {0, -2}, {-1, -1}, {-1, 1}};
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> pos;
    auto vertex = [&](int x, int y) {
        auto [it, fresh] = id.try_emplace({x, y}, static_cast<int>(pos.size()));
        if (fresh) pos.emplace_back(x, y);
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int cx = 2 * c + (r & 1), cy = -3 * r;
            int corner[6];
            for (int k = 0; k < 6; ++k) corner[k] = vertex(cx + off[k][0], cy + off[k][1]);
            for (int k = 0; k < 6; ++k) edges.emplace_back(corner[k], corner[(k + 1) % 6]);
        }
    int n = static_cast<int>(pos.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    // Clockwise rotation = decreasing angle around each vertex.
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = adj[v];
        std::sort(rot[v].begin(), rot[v].end(), [&](int p, int q) {
            double ap = std::atan2(pos[p].second - pos[v].second, pos[p].first - pos[v].first);
            double aq = std::atan2(pos[q].second - pos[v].second, pos[q].first - pos[v].first);
            return ap > aq;
        });
    }
    return build_plane_graph(n, std::move(rot));
}

PlaneGraph gen_jones(int n) {
    if (n < 5 || n % 3 != 2) throw BadParams("jones: need n >= 5 with n = 2 (mod 3)");
    int q = (n - 2) / 3;  // number of pentagons
    if (q == 1) return gen_cycle(5);

    // Pentagon strip: pentagon 1 is 0-1-2-3-4; pentagon j >= 2 shares the edge
    // (s,t) with the strip so far and adds u,v,w (cycle s-u-v-w-t-s), plus a
    // long closing edge far-u drawn around the outside of the strip.
    // Rotations follow the drawing: blocks descend, u on the right, w on the
    // left rail.
    std::vector<std::vector<int>> slots(n);
    slots[0] = {1, 4};  // block 2's closing edge is prepended (curve exits north)
    slots[1] = {2, 0};
    slots[2] = {3, 1};
    slots[3] = {2, 4};
    slots[4] = {0, 3};
    int s = 3, t = 4, far = 0;
    for (int j = 2; j <= q; ++j) {
        int u = 5 + 3 * (j - 2), v = u + 1, w = u + 2;
        slots[u] = {far, v, s};  // closing E, v SW, s NW
        slots[v] = {u, w};       // the next block's u lands between these
        slots[w] = {t, v};       // later: w_{j+1} S, closing W
        if (j == 2) {
            slots[0].insert(slots[0].begin(), u);
            slots[3] = {2, u, 4};
            slots[4].push_back(w);
        } else {
            auto& sv = slots[s];  // s = v_{j-1}, rotation {u_{j-1}, w_{j-1}}
            sv.insert(std::find(sv.begin(), sv.end(), t), u);
            slots[t].push_back(w);    // t = w_{j-1}: new w hangs south
            slots[far].push_back(u);  // closing curve exits west
        }
        far = t;
        s = v;
        t = w;
    }
    return build_plane_graph(n, std::move(slots));
}

namespace {

// Mutable rotation system for the seeded generator.
struct RotBuilder {
    std::vector<std::vector<int>> rot;

    explicit RotBuilder(int n) : rot(n) {}
    int add_vertex() {
        rot.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    }
    void insert_after(int v, int anchor, int nb) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), anchor);
        r.insert(it + 1, nb);
    }
    void erase(int v, int nb) {
        auto& r = rot[v];
        r.erase(std::find(r.begin(), r.end(), nb));
    }
    void replace(int v, int old_nb, int new_nb) {
        auto& r = rot[v];
        *std::find(r.begin(), r.end(), old_nb) = new_nb;
    }
};

} // namespace

PlaneGraph gen_random_tfp(int n, unsigned seed) {
    if (n < 3) throw BadParams("random_tfp: n must be >= 3");
    if (n == 3) {
        // Smallest case: a path (C3 would be a triangle).
        return build_plane_graph(3, {{1}, {0, 2}, {1}});
    }
    std::mt19937 rng(seed);
    RotBuilder b(4);
    b.rot[0] = {3, 1};
    b.rot[1] = {0, 2};
    b.rot[2] = {1, 3};
    b.rot[3] = {2, 0};

    while (static_cast<int>(b.rot.size()) < n) {
        bool subdivide = static_cast<int>(b.rot.size()) >= 6 && rng() % 5 == 0;
        if (subdivide) {
            // Subdivide a random edge: makes odd faces possible.
            std::vector<std::pair<int, int>> edges;
            for (size_t v = 0; v < b.rot.size(); ++v)
                for (int u : b.rot[v])
                    if (static_cast<int>(v) < u) edges.emplace_back(v, u);
            auto [u, v] = edges[rng() % edges.size()];
            int x = b.add_vertex();
            b.rot[x] = {u, v};
            b.replace(u, v, x);
            b.replace(v, u, x);
            continue;
        }
        // Insert a new vertex joined to two distance-2 vertices of a face.
        auto g = build_plane_graph(static_cast<int>(b.rot.size()), b.rot);
        auto fs = faces(g);
        std::vector<int> candidates;
        for (size_t i = 0; i < fs.size(); ++i)
            if (fs[i].length >= 4) candidates.push_back(static_cast<int>(i));
        const auto& f = fs[candidates[rng() % candidates.size()]].vertices;
        int L = static_cast<int>(f.size());
        int i = static_cast<int>(rng() % L);
        // walk f[i] -> f[i+1] -> f[i+2]; u and w are non-adjacent since the
        // graph is triangle-free, so the insertion keeps it simple
        int u = f[i], a = f[(i + 1) % L], w = f[(i + 2) % L], prev = f[(i + L - 1) % L];
        if (u == w) continue;  // face walk with a repeated vertex
        int x = b.add_vertex();
        b.rot[x] = {u, w};
        b.insert_after(u, prev, x);  // after the incoming face dart's origin
        b.insert_after(w, a, x);
    }

    // Seeded deletion pass: drop edges while keeping the graph connected with
    // minimum degree 2. Deletions cannot create triangles.
    auto connected_without = [&](int u, int v) {
        int nn = static_cast<int>(b.rot.size());
        std::vector<char> seen(nn, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : b.rot[x]) {
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
            }
        }
        return cnt == nn;
    };
    std::vector<std::pair<int, int>> edges;
    for (size_t v = 0; v < b.rot.size(); ++v)
        for (int u : b.rot[v])
            if (static_cast<int>(v) < u) edges.emplace_back(v, u);
    for (auto [u, v] : edges) {
        if (rng() % 4 != 0) continue;
        if (b.rot[u].size() <= 2 || b.rot[v].size() <= 2) continue;
        if (!connected_without(u, v)) continue;
        b.erase(u, v);
        b.erase(v, u);
    }
    return build_plane_graph(static_cast<int>(b.rot.size()), b.rot);
}

PlaneGraph gen_named(const GenSpec& spec) {
    switch (spec.family) {
        case Family::jones: return gen_jones(spec.n);
        case Family::hex: return gen_hex(spec.rows, spec.cols);
        case Family::stars: return gen_stars(spec.a);
        case Family::k23: return gen_k23();
        case Family::cube: return gen_cube();
        case Family::cycle: return gen_cycle(spec.length);
        case Family::random_tfp: return gen_random_tfp(spec.n, spec.seed);
    }
    throw BadParams("unknown family");
}

Family family_from_string(const std::string& s) {
    if (s == "jones") return Family::jones;
    if (s == "hex") return Family::hex;
    if (s == "stars") return Family::stars;
    if (s == "k23") return Family::k23;
    if (s == "cube") return Family::cube;
    if (s == "cycle") return Family::cycle;
    if (s == "random_tfp") return Family::random_tfp;
    throw BadParams("unknown family '" + s + "'");
}

} // namespace gen
} // namespace tfpmis
