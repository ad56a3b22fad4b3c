// Python bindings for the main operations: generators, plane-graph queries,
// 4-cycle machinery, tree decompositions, augmentations, scattered sets,
// constrained 3-coloring, the solver pipelines, and the exact oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfpmis/coloring.hpp"
#include "tfpmis/cycles4.hpp"
#include "tfpmis/generators.hpp"
#include "tfpmis/oracle.hpp"
#include "tfpmis/scatter.hpp"
#include "tfpmis/solver.hpp"
#include "tfpmis/treewidth.hpp"

namespace py = pybind11;
using namespace tfpmis;

namespace {

tw::TreeDecomposition td_from(const std::vector<std::vector<int>>& bags,
                              const std::vector<std::pair<int, int>>& edges) {
    tw::TreeDecomposition td;
    td.bags = bags;
    for (auto& b : td.bags) std::sort(b.begin(), b.end());
    td.tree_edges = edges;
    return td;
}

py::dict td_dict(const tw::TreeDecomposition& td) {
    py::dict d;
    d["bags"] = td.bags;
    d["tree_edges"] = td.tree_edges;
    d["width"] = td.width();
    return d;
}

coloring::Coloring coloring_from(const std::vector<int>& colors) {
    coloring::Coloring c;
    c.color = colors;
    return c;
}

const char* status_name(coloring::SolveStatus s) {
    switch (s) {
        case coloring::SolveStatus::found: return "found";
        case coloring::SolveStatus::none: return "none";
        default: return "timeout";
    }
}

const char* answer_name(solver::Answer a) {
    switch (a) {
        case solver::Answer::yes: return "yes";
        case solver::Answer::no: return "no";
        default: return "unknown";
    }
}

solver::SolverConfig config_from(const std::string& mode, long long c_num, long long c_den,
                                 int w_max, int d_scatter, int t_sparsity, int timeout_ms) {
    solver::SolverConfig cfg;
    cfg.w_max = w_max;
    cfg.d_scatter = d_scatter;
    cfg.t_sparsity = t_sparsity;
    cfg.color_timeout = coloring::Millis(timeout_ms);
    if (mode == "theorem") {
        cfg.mode = solver::SolverConfig::Mode::theorem;
        cfg.c_theorem = solver::Rational{c_num, c_den};
    } else if (mode != "exact") {
        throw Error("mode must be 'exact' or 'theorem'");
    }
    return cfg;
}

py::dict report_dict(const solver::DecisionReport& r) {
    py::dict d;
    d["answer"] = answer_name(r.answer);
    d["path"] = r.path == solver::DecisionPath::dp ? "dp" : "theorem_shortcut";
    d["s_hat"] = r.s_hat;
    d["width_used"] = r.width_used;
    if (r.alpha) d["alpha"] = *r.alpha;
    if (r.witness) d["witness"] = *r.witness;
    if (!r.note.empty()) d["note"] = r.note;
    return d;
}

} // namespace

PYBIND11_MODULE(tfpmis, m) {
    m.doc() = "independent sets above (n+1)/3 in triangle-free planar graphs";

    py::register_exception<Error>(m, "TfpmisError");

    py::class_<PlaneGraph>(m, "PlaneGraph")
        .def(py::init([](int n, const std::vector<std::vector<int>>& rot) {
                 return build_plane_graph(n, rot);
             }),
             py::arg("n"), py::arg("rotations"))
        .def_property_readonly("n", &PlaneGraph::vertex_count)
        .def_property_readonly("m", &PlaneGraph::edge_count)
        .def("degree", &PlaneGraph::degree)
        .def("rotation", [](const PlaneGraph& g, int v) { return g.rotation(v); })
        .def("rotations", &PlaneGraph::rotations)
        .def("has_edge", &PlaneGraph::has_edge)
        .def("faces",
             [](const PlaneGraph& g) {
                 std::vector<std::vector<int>> out;
                 for (const auto& f : faces(g)) out.push_back(f.vertices);
                 return out;
             })
        .def("triangle_free", [](const PlaneGraph& g) { return check_triangle_free(g); })
        .def("degree_profile",
             [](const PlaneGraph& g) {
                 auto p = degree_profile(g);
                 return py::make_tuple(p.histogram, p.low_degree_count);
             })
        .def("edges", [](const PlaneGraph& g) { return underlying(g).edges(); })
        .def("to_pg", [](const PlaneGraph& g) { return emit_pg(g); })
        .def("__eq__", [](const PlaneGraph& a, const PlaneGraph& b) { return a == b; })
        .def("__repr__", [](const PlaneGraph& g) {
            return "PlaneGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_pg", &parse_pg);

    // generators
    m.def("gen_jones", &gen::gen_jones, py::arg("n"));
    m.def("gen_hex", &gen::gen_hex, py::arg("rows"), py::arg("cols"));
    m.def("gen_stars", &gen::gen_stars, py::arg("a"));
    m.def("gen_k23", &gen::gen_k23);
    m.def("gen_cube", &gen::gen_cube);
    m.def("gen_cycle", &gen::gen_cycle, py::arg("length"));
    m.def("gen_random_tfp", &gen::gen_random_tfp, py::arg("n"), py::arg("seed"));

    // 4-cycles and the swept decomposition
    auto witness_dict = [](const cycles4::CycleWitness& w) {
        py::dict d;
        d["vertices"] = w.vertices;
        d["separating"] = w.separating;
        d["interior_vertex_count"] = w.interior_vertex_count;
        d["kind"] = w.kind == cycles4::CycleKind::facial       ? "facial"
                    : w.kind == cycles4::CycleKind::separating ? "separating"
                                                               : "neither";
        return d;
    };
    m.def("enumerate_4cycles", [witness_dict](const PlaneGraph& g) {
        py::list out;
        for (const auto& w : cycles4::enumerate_4cycles(g)) out.append(witness_dict(w));
        return out;
    });
    m.def("find_separating_4cycle_fast", [witness_dict](const PlaneGraph& g) -> py::object {
        auto w = cycles4::find_separating_4cycle_fast(g);
        if (!w) return py::none();
        return witness_dict(*w);
    });
    m.def("innermost_separating_4cycle", [witness_dict](const PlaneGraph& g) -> py::object {
        auto w = cycles4::innermost_separating_4cycle(g);
        if (!w) return py::none();
        return witness_dict(*w);
    });
    m.def("swept_decompose", [](const PlaneGraph& g) {
        auto dec = cycles4::swept_decompose(g);
        py::dict d;
        py::list parts;
        for (auto& p : dec.parts) {
            py::dict pd;
            pd["graph"] = p.graph;
            pd["orig"] = p.orig;
            parts.append(pd);
        }
        d["parts"] = parts;
        py::list joins;
        for (auto& j : dec.joins) joins.append(py::make_tuple(j.part_a, j.part_b, j.clique));
        d["joins"] = joins;
        d["s_hat"] = dec.s_hat;
        return d;
    });

    // tree decompositions
    m.def(
        "heuristic_td",
        [](int n, const std::vector<std::pair<int, int>>& edges, const std::string& strategy) {
            auto td = tw::heuristic_td(AbstractGraph::from_edges(n, edges),
                                       strategy == "min_degree" ? tw::TdStrategy::min_degree
                                                                : tw::TdStrategy::min_fill);
            return td_dict(td);
        },
        py::arg("n"), py::arg("edges"), py::arg("strategy") = "min_fill");
    m.def("validate_td", [](int n, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::vector<int>>& bags,
                            const std::vector<std::pair<int, int>>& tree_edges) {
        auto v = tw::validate_td(AbstractGraph::from_edges(n, edges), td_from(bags, tree_edges));
        return py::make_tuple(v.ok(), v.message);
    });
    m.def("addcross", [](const PlaneGraph& g) { return tw::addcross(g).edges(); });
    m.def("addcross_td", [](const PlaneGraph& g) { return td_dict(tw::addcross_td(g)); });
    m.def(
        "mis_dp",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const std::vector<std::vector<int>>& bags,
           const std::vector<std::pair<int, int>>& tree_edges, int w_max) {
            auto r = tw::mis_dp(AbstractGraph::from_edges(n, edges), td_from(bags, tree_edges),
                                w_max);
            return py::make_tuple(r.size, r.witness);
        },
        py::arg("n"), py::arg("edges"), py::arg("bags"), py::arg("tree_edges"),
        py::arg("w_max") = 24);

    // augmentations
    m.def(
        "augment_l",
        [](int n, const std::vector<std::pair<int, int>>& edges, int l) {
            auto [d, stats] = augment::augment_l(AbstractGraph::from_edges(n, edges), l);
            std::vector<std::pair<int, int>> arcs;
            for (int v = 0; v < d.vertex_count(); ++v)
                for (int u : d.out_neighbors(v)) arcs.push_back({v, u});
            py::dict out;
            out["arcs"] = arcs;
            out["max_indegree_per_round"] = stats.max_indegree_per_round;
            out["m_d"] = stats.m_d;
            return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("l"));

    // scattered sets
    m.def(
        "spec_select",
        [](int z_count, const std::vector<std::vector<int>>& adj_s, int cap, int t) {
            scatter::BipartiteInstance h;
            h.z_count = z_count;
            h.adj_s = adj_s;
            auto r = scatter::spec_select(h, cap, t);
            py::dict d;
            d["Q"] = r.Q;
            d["X"] = r.X;
            d["K0"] = r.consts.K0.str();
            d["bucket_index"] = r.bucket_index;
            return d;
        },
        py::arg("z_count"), py::arg("adj_s"), py::arg("cap"), py::arg("t"));
    m.def(
        "fat_extract",
        [](int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& S,
           int d, int t) {
            auto r = scatter::fat_extract(AbstractGraph::from_edges(n, edges), S, d, t);
            py::dict out;
            out["Q"] = r.Q;
            out["X"] = r.X;
            out["m_d"] = r.m_d;
            out["K"] = r.K.str();
            out["q_ratio_ok"] = r.q_ratio_ok;
            out["x_ratio_ok"] = r.x_ratio_ok;
            return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("S"), py::arg("d"), py::arg("t"));
    m.def(
        "verify_scattered",
        [](int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& Q,
           const std::vector<int>& X, int d) {
            auto c = scatter::verify_scattered(AbstractGraph::from_edges(n, edges), Q, X, d);
            return py::make_tuple(c.ok, c.violating_pair);
        },
        py::arg("n"), py::arg("edges"), py::arg("Q"), py::arg("X"), py::arg("d"));

    // coloring
    m.def(
        "color3_exact",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const std::vector<int>& precoloring, int timeout_ms) {
            auto pre = precoloring.empty() ? coloring::Coloring(n) : coloring_from(precoloring);
            auto r = coloring::color3_exact(AbstractGraph::from_edges(n, edges), pre,
                                            coloring::Millis(timeout_ms));
            return py::make_tuple(status_name(r.status), r.coloring.color);
        },
        py::arg("n"), py::arg("edges"), py::arg("precoloring") = std::vector<int>{},
        py::arg("timeout_ms") = 10000);
    m.def("gimbel_bad_pattern", &coloring::gimbel_bad_pattern);
    m.def(
        "mono3_gadget",
        [](const PlaneGraph& g, int v, int timeout_ms) {
            auto r = coloring::mono3_gadget(g, v, coloring::Millis(timeout_ms));
            return py::make_tuple(status_name(r.status), r.coloring.color);
        },
        py::arg("g"), py::arg("v"), py::arg("timeout_ms") = 10000);
    m.def(
        "color3_monochromatic",
        [](const PlaneGraph& g, const std::vector<int>& Q, const std::vector<int>& X,
           int timeout_ms) {
            auto r = coloring::color3_monochromatic(g, Q, X, coloring::Millis(timeout_ms));
            py::dict d;
            d["status"] = status_name(r.status);
            d["has_coloring"] = r.has_coloring;
            d["coloring"] = r.coloring.color;
            d["q_prime"] = r.certificate.q_prime;
            d["dropped"] = r.certificate.dropped;
            return d;
        },
        py::arg("g"), py::arg("Q"), py::arg("X"), py::arg("timeout_ms") = 10000);
    m.def(
        "boost_independent_set",
        [](int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& X,
           const std::vector<int>& Q, const std::vector<int>& colors) {
            auto r = coloring::boost_independent_set(AbstractGraph::from_edges(n, edges), X, Q,
                                                     coloring_from(colors));
            return py::make_tuple(r.set, r.set_sizes);
        },
        py::arg("n"), py::arg("edges"), py::arg("X"), py::arg("Q"), py::arg("colors"));

    // solver
    m.def(
        "decide",
        [](const PlaneGraph& g, int k, const std::string& mode, long long c_num, long long c_den,
           int w_max, int d_scatter, int t_sparsity, int timeout_ms) {
            return report_dict(solver::decide(
                g, k, config_from(mode, c_num, c_den, w_max, d_scatter, t_sparsity, timeout_ms)));
        },
        py::arg("g"), py::arg("k"), py::arg("mode") = "exact", py::arg("c_num") = 1,
        py::arg("c_den") = 1, py::arg("w_max") = 24, py::arg("d_scatter") = 5,
        py::arg("t_sparsity") = 14, py::arg("timeout_ms") = 10000);
    m.def(
        "find_set",
        [](const PlaneGraph& g, int k, const std::string& mode, long long c_num, long long c_den,
           int w_max, int d_scatter, int t_sparsity, int timeout_ms) {
            auto r = solver::find_set(
                g, k, config_from(mode, c_num, c_den, w_max, d_scatter, t_sparsity, timeout_ms));
            py::dict d = report_dict(r.report);
            d["answer"] = answer_name(r.answer);
            if (r.set) d["set"] = *r.set;
            return d;
        },
        py::arg("g"), py::arg("k"), py::arg("mode") = "exact", py::arg("c_num") = 1,
        py::arg("c_den") = 1, py::arg("w_max") = 24, py::arg("d_scatter") = 5,
        py::arg("t_sparsity") = 14, py::arg("timeout_ms") = 10000);
    m.def(
        "analyze",
        [](const PlaneGraph& g, int augment_rounds, int alpha_max) {
            solver::AnalyzeOptions opts;
            opts.augment_rounds = augment_rounds;
            opts.alpha_max = alpha_max;
            auto r = solver::analyze(g, opts);
            py::dict d;
            d["n"] = r.n;
            d["m"] = r.m;
            d["triangle_free"] = r.triangle_free;
            d["separating_4cycles"] = r.separating_4cycles;
            d["s_hat"] = r.s_hat;
            d["low_degree_count"] = r.low_degree_count;
            d["width_plain"] = r.width_plain;
            d["width_addcross"] = r.width_addcross;
            d["m_d"] = r.augment_stats.m_d;
            if (r.alpha) d["alpha"] = *r.alpha;
            d["text"] = r.to_string();
            return d;
        },
        py::arg("g"), py::arg("augment_rounds") = 2, py::arg("alpha_max") = 40);

    // oracle
    m.def(
        "alpha_exact",
        [](int n, const std::vector<std::pair<int, int>>& edges, int max_n) {
            oracle::OracleBudget b;
            b.max_n = max_n;
            auto r = oracle::alpha_exact(AbstractGraph::from_edges(n, edges), b);
            return py::make_tuple(r.size, r.witness);
        },
        py::arg("n"), py::arg("edges"), py::arg("max_n") = 40);
    m.def(
        "verify_independent",
        [](int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& s) {
            auto c = oracle::verify_independent(AbstractGraph::from_edges(n, edges), s);
            return py::make_tuple(c.ok, c.violating_edge);
        },
        py::arg("n"), py::arg("edges"), py::arg("s"));
}
