#include "tfpmis/cycles4.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tfpmis {
namespace cycles4 {

namespace {

// Wedge-based side classification of a 4-cycle. At each cycle vertex the
// rotation splits into two arcs between the incoming and outgoing cycle
// edges; arc membership plus the components of g - V(C) yields the two sides.
struct Sides {
    int vert_count[2] = {0, 0};
    int chord_darts[2] = {0, 0};
    std::vector<int> comp_side;   // per component of g - V(C), or -1
    std::vector<int> comp_of;     // per vertex, -1 for cycle vertices
    std::vector<int> comp_size;
    int interior = 0;             // canonical interior side index
    int min_side_vertex[2] = {-1, -1};
};

Sides classify_sides(const PlaneGraph& g, const std::array<int, 4>& c) {
    int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < 4; ++i) pos[c[i]] = i;

    Sides s;
    s.comp_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (pos[v] >= 0 || s.comp_of[v] >= 0) continue;
        int id = static_cast<int>(s.comp_size.size());
        s.comp_size.push_back(0);
        std::queue<int> q;
        q.push(v);
        s.comp_of[v] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            s.comp_size[id]++;
            for (int y : g.rotation(x))
                if (pos[y] < 0 && s.comp_of[y] < 0) {
                    s.comp_of[y] = id;
                    q.push(y);
                }
        }
    }
    s.comp_side.assign(s.comp_size.size(), -1);

    for (int i = 0; i < 4; ++i) {
        int ci = c[i], nxt = c[(i + 1) % 4], prv = c[(i + 3) % 4];
        const auto& r = g.rotation(ci);
        int deg = static_cast<int>(r.size());
        int in = g.rotation_index(ci, nxt), ip = g.rotation_index(ci, prv);
        if (in < 0 || ip < 0)
            throw InternalInvariantViolation("classify_sides: consecutive cycle vertices not adjacent");
        // side 0: strictly after nxt, before prv; side 1: the other arc
        for (int side = 0; side < 2; ++side) {
            int from = side == 0 ? in : ip, to = side == 0 ? ip : in;
            for (int k = (from + 1) % deg; k != to; k = (k + 1) % deg) {
                int u = r[k];
                if (pos[u] >= 0) {
                    s.chord_darts[side]++;
                    continue;
                }
                int comp = s.comp_of[u];
                if (s.comp_side[comp] < 0) s.comp_side[comp] = side;
                else if (s.comp_side[comp] != side)
                    throw InternalInvariantViolation("classify_sides: inconsistent wedge sides");
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        if (pos[v] >= 0) continue;
        int side = s.comp_side[s.comp_of[v]];
        if (side < 0) continue;  // component not touching the cycle: exterior
        s.vert_count[side]++;
        if (s.min_side_vertex[side] < 0) s.min_side_vertex[side] = v;
    }

    if (s.vert_count[0] != s.vert_count[1])
        s.interior = s.vert_count[0] < s.vert_count[1] ? 0 : 1;
    else if (s.min_side_vertex[0] < 0)
        s.interior = 0;
    else
        s.interior = s.min_side_vertex[0] < s.min_side_vertex[1] ? 1 : 0;
    return s;
}

std::array<int, 4> canonical_cycle(int a, int x, int c, int y) {
    // cycle a-x-c-y; min vertex first, then its smaller cycle-neighbor
    std::array<int, 4> t{a, x, c, y};
    int mi = 0;
    for (int i = 1; i < 4; ++i)
        if (t[i] < t[mi]) mi = i;
    std::array<int, 4> f{t[mi], t[(mi + 1) % 4], t[(mi + 2) % 4], t[(mi + 3) % 4]};
    if (f[3] < f[1]) std::swap(f[1], f[3]);
    return f;
}

CycleWitness make_witness(const PlaneGraph& g, std::array<int, 4> cyc) {
    Sides s = classify_sides(g, cyc);
    CycleWitness w;
    w.vertices = canonical_cycle(cyc[0], cyc[1], cyc[2], cyc[3]);
    w.interior_vertex_count = s.vert_count[s.interior];
    w.separating = s.vert_count[0] > 0 && s.vert_count[1] > 0;
    if (w.separating) {
        w.kind = CycleKind::separating;
    } else {
        bool facial = (s.vert_count[0] == 0 && s.chord_darts[0] == 0) ||
                      (s.vert_count[1] == 0 && s.chord_darts[1] == 0);
        w.kind = facial ? CycleKind::facial : CycleKind::neither;
    }
    return w;
}

} // namespace

std::vector<CycleWitness> enumerate_4cycles(const PlaneGraph& g) {
    int n = g.vertex_count();
    // common-neighbor lists per diagonal pair
    std::map<std::pair<int, int>, std::vector<int>> common;
    for (int mid = 0; mid < n; ++mid) {
        const auto& r = g.rotation(mid);
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = i + 1; j < r.size(); ++j) {
                int a = std::min(r[i], r[j]), b = std::max(r[i], r[j]);
                common[{a, b}].push_back(mid);
            }
    }
    std::vector<CycleWitness> out;
    for (auto& [diag, mids] : common) {
        if (mids.size() < 2) continue;
        std::sort(mids.begin(), mids.end());
        auto [a, c] = diag;
        for (size_t i = 0; i < mids.size(); ++i)
            for (size_t j = i + 1; j < mids.size(); ++j) {
                // each 4-cycle has two diagonal pairs; keep the one holding
                // the minimum vertex
                if (a < mids[i]) out.push_back(make_witness(g, {a, mids[i], c, mids[j]}));
            }
    }
    std::sort(out.begin(), out.end(), [](const CycleWitness& x, const CycleWitness& y) {
        return x.vertices < y.vertices;
    });
    return out;
}

namespace {

// Greedy ordering with back-degree at most 5 (exists in planar graphs);
// returns positions, or throws NotPlanarOrder.
std::vector<int> back5_order(const PlaneGraph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), posn(n, -1);
    std::vector<char> removed(n, 0);
    std::set<std::pair<int, int>> pq;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pq.insert({deg[v], v});
    }
    for (int p = n - 1; p >= 0; --p) {
        auto [d, v] = *pq.begin();
        if (d > 5) throw NotPlanarOrder("no vertex of remaining degree <= 5");
        pq.erase(pq.begin());
        removed[v] = 1;
        posn[v] = p;
        for (int u : g.rotation(v))
            if (!removed[u]) {
                pq.erase({deg[u], u});
                deg[u]--;
                pq.insert({deg[u], u});
            }
    }
    return posn;
}

} // namespace

std::optional<CycleWitness> find_separating_4cycle_fast(const PlaneGraph& g) {
    int n = g.vertex_count();
    if (n < 5) return std::nullopt;
    std::vector<int> posn = back5_order(g);
    std::vector<int> vert_at(n);
    for (int v = 0; v < n; ++v) vert_at[posn[v]] = v;
    std::vector<std::vector<int>> back(n);  // back-neighbors by position, sorted
    for (int p = 0; p < n; ++p) {
        int v = vert_at[p];
        for (int u : g.rotation(v))
            if (posn[u] < p) back[p].push_back(posn[u]);
        std::sort(back[p].begin(), back[p].end());
    }
    auto test = [&](int a, int b, int c, int d) -> std::optional<CycleWitness> {
        CycleWitness w = make_witness(g, {a, b, c, d});
        if (w.separating) return w;
        return std::nullopt;
    };

    // Phase 1: cycles v_{i1} v_{i2} v_{i3} v_{i4} with i2 < max(i1,i3) < i4.
    for (int p4 = 0; p4 < n; ++p4) {
        const auto& bs = back[p4];
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = i + 1; j < bs.size(); ++j) {
                int plo = bs[i], phi = bs[j];
                int vhi = vert_at[phi], vlo = vert_at[plo];
                for (int p2 : back[phi]) {
                    int v2 = vert_at[p2];
                    if (v2 == vert_at[p4] || p2 == plo) continue;
                    if (!g.has_edge(v2, vlo)) continue;
                    if (auto w = test(vlo, v2, vhi, vert_at[p4])) return w;
                }
            }
    }

    // Phase 2: triples (a,b,c), a < b < c with v_a v_c, v_b v_c edges, grouped
    // by (a,b); at most 4 choices of the first cycle vertex per group.
    std::vector<std::array<int, 3>> triples;
    for (int pc = 0; pc < n; ++pc) {
        const auto& bs = back[pc];
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = i + 1; j < bs.size(); ++j)
                triples.push_back({bs[i], bs[j], pc});
    }
    std::sort(triples.begin(), triples.end());
    for (size_t lo = 0; lo < triples.size();) {
        size_t hi = lo;
        while (hi < triples.size() && triples[hi][0] == triples[lo][0] &&
               triples[hi][1] == triples[lo][1])
            ++hi;
        size_t t = hi - lo;
        int va = vert_at[triples[lo][0]], vb = vert_at[triples[lo][1]];
        for (size_t i = lo; i < lo + std::min<size_t>(t, 4); ++i)
            for (size_t j = lo; j < hi; ++j) {
                if (i == j) continue;
                if (auto w = test(va, vert_at[triples[i][2]], vb, vert_at[triples[j][2]]))
                    return w;
            }
        lo = hi;
    }
    return std::nullopt;
}

std::optional<CycleWitness> innermost_separating_4cycle(const PlaneGraph& g) {
    // Quick existence gate, then pick the minimum by (interior count, tuple):
    // any separating 4-cycle strictly inside another has a strictly smaller
    // interior, so the minimum has none inside.
    if (!find_separating_4cycle_fast(g)) return std::nullopt;
    std::optional<CycleWitness> best;
    for (const auto& w : enumerate_4cycles(g)) {
        if (!w.separating) continue;
        if (!best || w.interior_vertex_count < best->interior_vertex_count ||
            (w.interior_vertex_count == best->interior_vertex_count && w.vertices < best->vertices))
            best = w;
    }
    if (!best)
        throw InternalInvariantViolation("fast finder and enumeration disagree on existence");
    return best;
}

namespace {

SideSubgraph extract_side(const PlaneGraph& g, const std::array<int, 4>& cyc, int side) {
    Sides s = classify_sides(g, cyc);
    int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < 4; ++i) pos[cyc[i]] = i;
    std::vector<char> keep(n, 0);
    for (int i = 0; i < 4; ++i) keep[cyc[i]] = 1;
    for (int v = 0; v < n; ++v) {
        if (pos[v] >= 0) continue;
        int cs = s.comp_side[s.comp_of[v]];
        if (cs == side || (cs < 0 && side != s.interior)) keep[v] = 1;
    }
    std::vector<int> newid(n, -1), orig;
    for (int v = 0; v < n; ++v)
        if (keep[v]) {
            newid[v] = static_cast<int>(orig.size());
            orig.push_back(v);
        }
    std::vector<std::vector<int>> rot(orig.size());
    for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        if (pos[v] < 0) {
            for (int u : g.rotation(v)) {
                if (!keep[u])
                    throw InternalInvariantViolation("side vertex adjacent to dropped vertex");
                rot[newid[v]].push_back(newid[u]);
            }
            continue;
        }
        // cycle vertex: keep cycle edges and this side's wedge darts, in order
        int i = pos[v];
        int nxt = cyc[(i + 1) % 4], prv = cyc[(i + 3) % 4];
        const auto& r = g.rotation(v);
        int deg = static_cast<int>(r.size());
        int in = g.rotation_index(v, nxt), ip = g.rotation_index(v, prv);
        int from = side == 0 ? in : ip, to = side == 0 ? ip : in;
        rot[newid[v]].push_back(newid[r[from]]);
        for (int k = (from + 1) % deg; k != to; k = (k + 1) % deg) {
            int u = r[k];
            bool chord = pos[u] >= 0;
            if (chord || keep[u]) rot[newid[v]].push_back(newid[u]);
        }
        rot[newid[v]].push_back(newid[r[to]]);
    }
    SideSubgraph out;
    out.graph = build_plane_graph(static_cast<int>(orig.size()), std::move(rot));
    out.orig = std::move(orig);
    for (int i = 0; i < 4; ++i) out.cycle_local[i] = newid[cyc[i]];
    return out;
}

// Canonical directed face key (rotation-minimal, no reflection) in given ids.
std::vector<int> face_key(const std::vector<int>& walk) {
    int L = static_cast<int>(walk.size());
    std::vector<int> best = walk;
    for (int s = 1; s < L; ++s) {
        std::vector<int> cand(L);
        for (int i = 0; i < L; ++i) cand[i] = walk[(s + i) % L];
        if (cand < best) best = cand;
    }
    return best;
}

std::set<std::vector<int>> face_keyset(const PlaneGraph& g, const std::vector<int>& orig) {
    std::set<std::vector<int>> keys;
    for (const auto& f : faces(g)) {
        std::vector<int> walk(f.vertices.size());
        for (size_t i = 0; i < f.vertices.size(); ++i) walk[i] = orig[f.vertices[i]];
        keys.insert(face_key(walk));
    }
    return keys;
}

struct Pending {
    std::vector<int> key;  // face key in g ids
    int join_id;
    int side;  // 0 or 1 endpoint of the join
};

struct Work {
    PlaneGraph graph;
    std::vector<int> orig;
    std::vector<Pending> pending;
};

} // namespace

SweptDecomposition swept_decompose(const PlaneGraph& g) {
    SweptDecomposition out;
    std::vector<std::array<int, 2>> join_ends;
    std::vector<std::array<int, 4>> join_cliques;

    std::vector<Work> stack;
    stack.push_back({g, {}, {}});
    stack.back().orig.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) stack.back().orig[v] = v;

    while (!stack.empty()) {
        Work w = std::move(stack.back());
        stack.pop_back();
        auto inner = innermost_separating_4cycle(w.graph);
        if (!inner) {
            int idx = static_cast<int>(out.parts.size());
            out.parts.push_back({std::move(w.graph), std::move(w.orig)});
            for (const auto& p : w.pending) join_ends[p.join_id][p.side] = idx;
            continue;
        }
        Sides s = classify_sides(w.graph, inner->vertices);
        auto item_keys = face_keyset(w.graph, w.orig);
        SideSubgraph inn = extract_side(w.graph, inner->vertices, s.interior);
        SideSubgraph ext = extract_side(w.graph, inner->vertices, 1 - s.interior);
        for (auto& id : inn.orig) id = w.orig[id];
        for (auto& id : ext.orig) id = w.orig[id];

        int jid = static_cast<int>(join_ends.size());
        join_ends.push_back({-1, -1});
        std::array<int, 4> clique;
        for (int i = 0; i < 4; ++i) clique[i] = w.orig[inner->vertices[i]];
        join_cliques.push_back(clique);

        Work wi{std::move(inn.graph), std::move(inn.orig), {}};
        Work we{std::move(ext.graph), std::move(ext.orig), {}};
        auto keys_i = face_keyset(wi.graph, wi.orig);
        auto keys_e = face_keyset(we.graph, we.orig);

        // the one face of each side absent from the parent is the scooped
        // 4-face bounded by the splitting cycle
        auto fresh = [&](const std::set<std::vector<int>>& keys) {
            std::vector<std::vector<int>> nw;
            for (const auto& k : keys)
                if (!item_keys.count(k)) nw.push_back(k);
            if (nw.size() != 1)
                throw InternalInvariantViolation("swept split: expected exactly one new face");
            return nw.front();
        };
        wi.pending.push_back({fresh(keys_i), jid, 0});
        we.pending.push_back({fresh(keys_e), jid, 1});
        for (auto& p : w.pending) {
            if (keys_i.count(p.key)) wi.pending.push_back(std::move(p));
            else if (keys_e.count(p.key)) we.pending.push_back(std::move(p));
            else throw InternalInvariantViolation("swept split: pending face lost");
        }
        // interior part first: matches the sequential peeling order
        stack.push_back(std::move(we));
        stack.push_back(std::move(wi));
    }

    for (size_t j = 0; j < join_ends.size(); ++j) {
        if (join_ends[j][0] < 0 || join_ends[j][1] < 0)
            throw InternalInvariantViolation("swept join with unresolved endpoint");
        out.joins.push_back({join_ends[j][0], join_ends[j][1], join_cliques[j]});
    }
    for (size_t i = 0; i < out.parts.size(); ++i)
        for (size_t j = i + 1; j < out.parts.size(); ++j) {
            std::vector<int> a = out.parts[i].orig, b = out.parts[j].orig, inter;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            if (!inter.empty())
                out.shared_vertices[{static_cast<int>(i), static_cast<int>(j)}] = inter;
        }
    for (const auto& p : out.parts)
        out.s_hat = std::max(out.s_hat, p.graph.vertex_count());
    return out;
}

} // namespace cycles4
} // namespace tfpmis
