#include "tfpmis/treewidth.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace tfpmis {
namespace tw {

TdViolation validate_td(const AbstractGraph& g, const TreeDecomposition& td) {
    TdViolation v;
    int b = static_cast<int>(td.bags.size());

    // tree structure over bags
    for (auto [x, y] : td.tree_edges)
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) {
            v.kind = TdViolation::Kind::not_a_tree;
            v.message = "tree edge out of range";
            return v;
        }
    if (b > 0) {
        if (static_cast<int>(td.tree_edges.size()) != b - 1) {
            v.kind = TdViolation::Kind::not_a_tree;
            v.message = "bag tree must have exactly #bags-1 edges";
            return v;
        }
        std::vector<std::vector<int>> bt(b);
        for (auto [x, y] : td.tree_edges) {
            bt[x].push_back(y);
            bt[y].push_back(x);
        }
        std::vector<char> seen(b, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : bt[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    q.push(y);
                }
        }
        if (cnt != b) {
            v.kind = TdViolation::Kind::not_a_tree;
            v.message = "bag tree is disconnected";
            return v;
        }
    }

    // edge coverage
    std::vector<std::vector<int>> occ(g.vertex_count());
    for (int i = 0; i < b; ++i)
        for (int x : td.bags[i]) {
            if (x < 0 || x >= g.vertex_count()) {
                v.kind = TdViolation::Kind::not_a_tree;
                v.message = "bag contains out-of-range vertex";
                return v;
            }
            occ[x].push_back(i);
        }
    for (auto [x, y] : g.edges()) {
        bool covered = false;
        for (int i : occ[x])
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), y)) {
                covered = true;
                break;
            }
        if (!covered) {
            v.kind = TdViolation::Kind::uncovered_edge;
            v.edge = {x, y};
            v.message = "edge not contained in any bag";
            return v;
        }
    }

    // occurrence connectivity
    std::vector<std::vector<int>> bt(b);
    for (auto [x, y] : td.tree_edges) {
        bt[x].push_back(y);
        bt[y].push_back(x);
    }
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (occ[x].empty()) {
            v.kind = TdViolation::Kind::disconnected_occurrence;
            v.vertex = x;
            v.message = "vertex appears in no bag";
            return v;
        }
        std::vector<char> in_occ(b, 0), seen(b, 0);
        for (int i : occ[x]) in_occ[i] = 1;
        std::queue<int> q;
        q.push(occ[x][0]);
        seen[occ[x][0]] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j : bt[i])
                if (in_occ[j] && !seen[j]) {
                    seen[j] = 1;
                    ++cnt;
                    q.push(j);
                }
        }
        if (cnt != static_cast<int>(occ[x].size())) {
            v.kind = TdViolation::Kind::disconnected_occurrence;
            v.vertex = x;
            v.message = "vertex occurrences do not induce a subtree";
            return v;
        }
    }
    return v;
}

TreeDecomposition heuristic_td(const AbstractGraph& g, TdStrategy strategy) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());

    std::vector<char> gone(n, 0);
    std::vector<int> order;
    std::vector<std::vector<int>> bags;
    order.reserve(n);

    auto fill_of = [&](int v) {
        long long missing = 0;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
            for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                if (!adj[*it].count(*jt)) ++missing;
        return missing;
    };

    for (int step = 0; step < n; ++step) {
        int pick = -1;
        long long best = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long score = strategy == TdStrategy::min_degree
                                  ? static_cast<long long>(adj[v].size())
                                  : fill_of(v);
            if (pick < 0 || score < best) {
                pick = v;
                best = score;
            }
            if (strategy == TdStrategy::min_fill && best == 0) break;  // simplicial
        }
        std::vector<int> bag(adj[pick].begin(), adj[pick].end());
        bag.push_back(pick);
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
        order.push_back(pick);
        for (int u : adj[pick])
            for (int w : adj[pick])
                if (u < w && !adj[u].count(w)) {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
        for (int u : adj[pick]) adj[u].erase(pick);
        adj[pick].clear();
        gone[pick] = 1;
    }

    // bag of step i connects to the bag of the earliest-eliminated later
    // neighbor; bags without one chain to the next step
    std::vector<int> step_of(n);
    for (int i = 0; i < n; ++i) step_of[order[i]] = i;
    TreeDecomposition td;
    td.bags = std::move(bags);
    for (int i = 0; i < n; ++i) {
        int parent = -1;
        for (int u : td.bags[i]) {
            if (u == order[i]) continue;
            if (parent < 0 || step_of[u] < parent) parent = step_of[u];
        }
        if (parent < 0 && i + 1 < n) parent = i + 1;
        if (parent >= 0) td.tree_edges.push_back({i, parent});
    }
    return td;
}

AbstractGraph addcross(const PlaneGraph& g0) {
    if (!check_triangle_free(g0)) throw NotTriangleFree("addcross: input has a triangle");
    AbstractGraph g = underlying(g0);
    for (const auto& f : faces(g0)) {
        if (f.length != 4) continue;
        const auto& w = f.vertices;
        std::set<int> distinct(w.begin(), w.end());
        if (distinct.size() != 4) continue;  // degenerate walk, not a 4-face cycle
        g.add_edge(w[0], w[2]);
        g.add_edge(w[1], w[3]);
    }
    return g;
}

TreeDecomposition addcross_td(const PlaneGraph& g0, TdStrategy strategy) {
    if (!check_triangle_free(g0)) throw NotTriangleFree("addcross_td: input has a triangle");
    int n = g0.vertex_count();
    std::vector<std::vector<int>> four_faces;
    for (const auto& f : faces(g0)) {
        if (f.length != 4) continue;
        std::set<int> distinct(f.vertices.begin(), f.vertices.end());
        if (distinct.size() == 4) four_faces.push_back(f.vertices);
    }
    AbstractGraph apex(n + static_cast<int>(four_faces.size()));
    for (int v = 0; v < n; ++v)
        for (int u : g0.rotation(v))
            if (v < u) apex.add_edge(v, u);
    for (size_t i = 0; i < four_faces.size(); ++i)
        for (int v : four_faces[i]) apex.add_edge(n + static_cast<int>(i), v);

    TreeDecomposition td = heuristic_td(apex, strategy);
    for (auto& bag : td.bags) {
        std::vector<int> out;
        for (int v : bag) {
            if (v < n) out.push_back(v);
            else out.insert(out.end(), four_faces[v - n].begin(), four_faces[v - n].end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        bag = std::move(out);
    }
    return td;
}

TreeDecomposition cliquesum_td(const std::vector<std::pair<AbstractGraph, TreeDecomposition>>& parts,
                               const std::vector<CliqueJoin>& joins) {
    int p = static_cast<int>(parts.size());
    TreeDecomposition out;
    std::vector<int> offset(p, 0);
    for (int i = 0; i < p; ++i) {
        offset[i] = static_cast<int>(out.bags.size());
        for (const auto& bag : parts[i].second.bags) out.bags.push_back(bag);
        for (auto [x, y] : parts[i].second.tree_edges)
            out.tree_edges.push_back({x + offset[i], y + offset[i]});
    }
    auto bag_with = [&](int part, const std::vector<int>& clique) {
        const auto& td = parts[part].second;
        for (size_t i = 0; i < td.bags.size(); ++i) {
            bool all = true;
            for (int v : clique)
                if (!std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                    all = false;
                    break;
                }
            if (all) return static_cast<int>(i);
        }
        throw JoinNotInBag("no bag of part " + std::to_string(part) + " contains the join clique");
    };
    for (const auto& j : joins) {
        if (j.part_a < 0 || j.part_a >= p || j.part_b < 0 || j.part_b >= p)
            throw Error("cliquesum_td: join part index out of range");
        for (int pi : {j.part_a, j.part_b}) {
            const auto& g = parts[pi].first;
            for (size_t a = 0; a < j.clique.size(); ++a)
                for (size_t b = a + 1; b < j.clique.size(); ++b)
                    if (!g.has_edge(j.clique[a], j.clique[b]))
                        throw JoinNotClique("join set is not a clique in part " + std::to_string(pi));
        }
        out.tree_edges.push_back({offset[j.part_a] + bag_with(j.part_a, j.clique),
                                  offset[j.part_b] + bag_with(j.part_b, j.clique)});
    }
    if (p > 0 && static_cast<int>(joins.size()) != p - 1)
        throw Error("cliquesum_td: joins must form a tree over the parts");
    return out;
}

namespace {

struct DpNode {
    std::vector<int> bag;
    std::vector<int> children;
    int parent = -1;
};

} // namespace

MisDpResult mis_dp(const AbstractGraph& g, const TreeDecomposition& td, int w_max) {
    TdViolation v = validate_td(g, td);
    if (!v.ok()) throw Error("mis_dp: invalid tree decomposition: " + v.message);
    if (td.width() > w_max)
        throw WidthBudgetExceeded("mis_dp: width " + std::to_string(td.width()) +
                                  " exceeds budget " + std::to_string(w_max));
    MisDpResult res;
    res.width_used = td.width();
    if (g.vertex_count() == 0) return res;

    int b = static_cast<int>(td.bags.size());
    std::vector<DpNode> nodes(b);
    {
        std::vector<std::vector<int>> bt(b);
        for (auto [x, y] : td.tree_edges) {
            bt[x].push_back(y);
            bt[y].push_back(x);
        }
        std::vector<char> seen(b, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            nodes[u].bag = td.bags[u];
            for (int w : bt[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    nodes[u].children.push_back(w);
                    nodes[w].parent = u;
                    stack.push_back(w);
                }
        }
    }

    // f_u(S) = max |I| over independent I in the subtree below u with
    // I intersect bag(u) = S; children contribute via their overlap with S.
    std::vector<std::vector<int>> table(b);
    std::vector<std::vector<unsigned>> adjmask(b);

    // post-order
    std::vector<int> post;
    {
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            post.push_back(u);
            for (int c : nodes[u].children) stack.push_back(c);
        }
        std::reverse(post.begin(), post.end());
    }

    auto overlap_value = [&](int child, const std::vector<int>& pbag,
                             std::vector<int>& best_by_overlap, std::vector<unsigned>& child_over) {
        // child_over[T] = mask of parent's bag positions shared with T
        const auto& cbag = nodes[child].bag;
        int cs = static_cast<int>(cbag.size());
        std::vector<int> ppos(cs, -1);
        for (int i = 0; i < cs; ++i) {
            auto it = std::lower_bound(pbag.begin(), pbag.end(), cbag[i]);
            if (it != pbag.end() && *it == cbag[i]) ppos[i] = static_cast<int>(it - pbag.begin());
        }
        unsigned total = 1u << cs;
        child_over.assign(total, 0);
        for (unsigned t = 1; t < total; ++t) {
            unsigned low = t & (t - 1);
            int i = __builtin_ctz(t ^ low);
            child_over[t] = child_over[low] | (ppos[i] >= 0 ? 1u << ppos[i] : 0u);
        }
        // best f_child(T) - |T in parent bag| per overlap mask
        std::vector<int> shared_bits(total, 0);
        for (unsigned t = 1; t < total; ++t) {
            unsigned low = t & (t - 1);
            int i = __builtin_ctz(t ^ low);
            shared_bits[t] = shared_bits[low] + (ppos[i] >= 0 ? 1 : 0);
        }
        best_by_overlap.assign(1u << pbag.size(), -1);
        for (unsigned t = 0; t < total; ++t) {
            if (table[child][t] < 0) continue;
            int val = table[child][t] - shared_bits[t];
            unsigned ov = child_over[t];
            if (val > best_by_overlap[ov]) best_by_overlap[ov] = val;
        }
    };

    std::vector<std::vector<std::vector<int>>> child_best(b);  // per node, per child
    for (int u : post) {
        const auto& bag = nodes[u].bag;
        int bs = static_cast<int>(bag.size());
        adjmask[u].assign(bs, 0);
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j)
                if (i != j && g.has_edge(bag[i], bag[j])) adjmask[u][i] |= 1u << j;

        child_best[u].resize(nodes[u].children.size());
        std::vector<unsigned> scratch;
        for (size_t ci = 0; ci < nodes[u].children.size(); ++ci)
            overlap_value(nodes[u].children[ci], bag, child_best[u][ci], scratch);

        unsigned total = 1u << bs;
        table[u].assign(total, -1);
        for (unsigned s = 0; s < total; ++s) {
            bool indep = true;
            for (unsigned m = s; m;) {
                int i = __builtin_ctz(m);
                m &= m - 1;
                if (adjmask[u][i] & s) {
                    indep = false;
                    break;
                }
            }
            if (!indep) continue;
            int val = __builtin_popcount(s);
            bool feasible = true;
            for (size_t ci = 0; ci < nodes[u].children.size(); ++ci) {
                // restrict s to positions shared with the child
                unsigned ov = 0;
                const auto& cbag = nodes[nodes[u].children[ci]].bag;
                for (unsigned m = s; m;) {
                    int i = __builtin_ctz(m);
                    m &= m - 1;
                    if (std::binary_search(cbag.begin(), cbag.end(), bag[i])) ov |= 1u << i;
                }
                int cb = child_best[u][ci][ov];
                if (cb < 0) {
                    feasible = false;
                    break;
                }
                val += cb;
            }
            if (feasible) table[u][s] = val;
        }
    }

    // best root entry, then top-down replay choosing the smallest mask that
    // attains each optimum
    unsigned root_best_mask = 0;
    int alpha = -1;
    for (unsigned s = 0; s < table[0].size(); ++s)
        if (table[0][s] > alpha) {
            alpha = table[0][s];
            root_best_mask = s;
        }
    res.size = alpha;

    std::vector<char> chosen(g.vertex_count(), 0);
    struct Frame {
        int node;
        unsigned mask;
    };
    std::vector<Frame> stack{{0, root_best_mask}};
    while (!stack.empty()) {
        auto [u, s] = stack.back();
        stack.pop_back();
        const auto& bag = nodes[u].bag;
        for (unsigned m = s; m;) {
            int i = __builtin_ctz(m);
            m &= m - 1;
            chosen[bag[i]] = 1;
        }
        for (size_t ci = 0; ci < nodes[u].children.size(); ++ci) {
            int child = nodes[u].children[ci];
            const auto& cbag = nodes[child].bag;
            unsigned ov = 0;
            for (unsigned m = s; m;) {
                int i = __builtin_ctz(m);
                m &= m - 1;
                if (std::binary_search(cbag.begin(), cbag.end(), bag[i])) ov |= 1u << i;
            }
            int need = child_best[u][ci][ov];
            // find smallest child mask with matching overlap attaining `need`
            std::vector<int> ppos_inv;  // recompute overlap per child mask
            const auto& pbag = bag;
            unsigned found = 0;
            bool ok = false;
            for (unsigned t = 0; t < table[child].size(); ++t) {
                if (table[child][t] < 0) continue;
                unsigned tov = 0;
                int shared = 0;
                for (unsigned m = t; m;) {
                    int i = __builtin_ctz(m);
                    m &= m - 1;
                    auto it = std::lower_bound(pbag.begin(), pbag.end(), cbag[i]);
                    if (it != pbag.end() && *it == cbag[i]) {
                        tov |= 1u << (it - pbag.begin());
                        ++shared;
                    }
                }
                if (tov == ov && table[child][t] - shared == need) {
                    found = t;
                    ok = true;
                    break;
                }
            }
            if (!ok) throw InternalInvariantViolation("mis_dp: witness replay failed");
            stack.push_back({child, found});
        }
    }
    for (int v2 = 0; v2 < g.vertex_count(); ++v2)
        if (chosen[v2]) res.witness.push_back(v2);
    if (static_cast<int>(res.witness.size()) != alpha)
        throw InternalInvariantViolation("mis_dp: witness size mismatch");
    return res;
}

std::string emit_td(const TreeDecomposition& td, int n) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (auto [x, y] : td.tree_edges) out << x + 1 << " " << y + 1 << "\n";
    return out.str();
}

TdFile parse_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TdFile f;
    int nbags = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "s") {
            std::string kind;
            int wplus;
            if (!(ls >> kind >> nbags >> wplus >> f.n) || kind != "td")
                throw ParseError(".td: bad solution line");
            f.td.bags.assign(nbags, {});
            continue;
        }
        if (nbags < 0) throw ParseError(".td: missing 's td' line");
        if (tok == "b") {
            int i;
            if (!(ls >> i) || i < 1 || i > nbags) throw ParseError(".td: bad bag index");
            int v;
            while (ls >> v) f.td.bags[i - 1].push_back(v - 1);
            std::sort(f.td.bags[i - 1].begin(), f.td.bags[i - 1].end());
            continue;
        }
        int x = std::stoi(tok), y;
        if (!(ls >> y)) throw ParseError(".td: bad tree edge line");
        f.td.tree_edges.push_back({x - 1, y - 1});
    }
    if (nbags < 0) throw ParseError(".td: missing 's td' line");
    return f;
}

} // namespace tw
} // namespace tfpmis
