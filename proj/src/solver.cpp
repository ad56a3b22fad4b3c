#include "tfpmis/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tfpmis {
namespace solver {

tw::TreeDecomposition pipeline_td(const PlaneGraph& g, const cycles4::SweptDecomposition& dec) {
    int n = g.vertex_count();
    std::vector<std::pair<AbstractGraph, tw::TreeDecomposition>> parts;
    for (const auto& part : dec.parts) {
        AbstractGraph crossed = tw::addcross(part.graph);
        AbstractGraph global(n);
        for (auto [u, v] : crossed.edges()) global.add_edge(part.orig[u], part.orig[v]);
        tw::TreeDecomposition td = tw::addcross_td(part.graph);
        for (auto& bag : td.bags) {
            for (auto& v : bag) v = part.orig[v];
            std::sort(bag.begin(), bag.end());
        }
        parts.push_back({std::move(global), std::move(td)});
    }
    std::vector<tw::CliqueJoin> joins;
    for (const auto& j : dec.joins)
        joins.push_back({j.part_a, j.part_b,
                         std::vector<int>(j.clique.begin(), j.clique.end())});
    if (parts.size() == 1) return parts.front().second;
    return tw::cliquesum_td(parts, joins);
}

namespace {

struct ExactState {
    std::optional<tw::MisDpResult> dp;
    int width_used = -1;
    bool width_exceeded = false;
};

ExactState run_exact(const PlaneGraph& g, const cycles4::SweptDecomposition& dec,
                     const SolverConfig& cfg) {
    AbstractGraph ga = underlying(g);
    tw::TreeDecomposition td = pipeline_td(g, dec);
    tw::TdViolation v = tw::validate_td(ga, td);
    if (!v.ok())
        throw InternalInvariantViolation("pipeline decomposition invalid: " + v.message);
    if (td.width() > cfg.w_max) {
        // one cheaper attempt before giving up
        tw::TreeDecomposition direct = tw::heuristic_td(ga, tw::TdStrategy::min_fill);
        if (direct.width() < td.width()) td = std::move(direct);
    }
    ExactState st;
    st.width_used = td.width();
    if (td.width() > cfg.w_max) {
        st.width_exceeded = true;
        return st;
    }
    st.dp = tw::mis_dp(ga, td, cfg.w_max);
    return st;
}

bool shortcut_fires(const SolverConfig& cfg, int s_hat, int k) {
    if (cfg.mode != SolverConfig::Mode::theorem) return false;
    if (!cfg.c_theorem) throw Error("theorem mode requires c_theorem");
    const Rational& c = *cfg.c_theorem;
    if (c.num <= 0 || c.den <= 0) throw Error("c_theorem must be positive");
    return c.num * s_hat >= static_cast<long long>(k) * c.den;
}

} // namespace

DecisionReport decide(const PlaneGraph& g, int k, const SolverConfig& cfg) {
    if (k < 0) throw Error("decide: k must be >= 0");
    if (!check_triangle_free(g)) throw NotTriangleFree("decide: input has a triangle");
    int n = g.vertex_count();
    auto dec = cycles4::swept_decompose(g);

    DecisionReport rep;
    rep.s_hat = dec.s_hat;
    if (shortcut_fires(cfg, dec.s_hat, k)) {
        rep.answer = Answer::yes;
        rep.path = DecisionPath::theorem_shortcut;
        rep.note = "c_theorem * s_hat >= k";
        return rep;
    }
    ExactState st = run_exact(g, dec, cfg);
    rep.path = DecisionPath::dp;
    rep.width_used = st.width_used;
    if (st.width_exceeded) {
        rep.answer = Answer::unknown;
        rep.note = "decomposition width " + std::to_string(st.width_used) + " exceeds budget " +
                   std::to_string(cfg.w_max);
        return rep;
    }
    rep.alpha = st.dp->size;
    rep.witness = st.dp->witness;
    rep.answer = 3 * st.dp->size >= n + k ? Answer::yes : Answer::no;
    return rep;
}

FindResult find_set(const PlaneGraph& g, int k, const SolverConfig& cfg) {
    if (k < 0) throw Error("find_set: k must be >= 0");
    if (!check_triangle_free(g)) throw NotTriangleFree("find_set: input has a triangle");
    int n = g.vertex_count();
    auto dec = cycles4::swept_decompose(g);

    FindResult res;
    res.report.s_hat = dec.s_hat;
    int need = (n + k + 2) / 3;  // ceil((n+k)/3)

    auto verify_and_accept = [&](const std::vector<int>& set) {
        if (static_cast<int>(set.size()) < need) return false;
        auto check = oracle::verify_independent(underlying(g), set);
        if (!check.ok)
            throw InternalInvariantViolation("find_set: candidate set is not independent");
        return true;
    };

    if (shortcut_fires(cfg, dec.s_hat, k)) {
        res.report.path = DecisionPath::theorem_shortcut;
        res.report.answer = Answer::yes;
        // constructive pipeline on the largest part
        int best = 0;
        for (size_t i = 1; i < dec.parts.size(); ++i)
            if (dec.parts[i].graph.vertex_count() > dec.parts[best].graph.vertex_count())
                best = static_cast<int>(i);
        const auto& g0 = dec.parts[best];
        std::vector<int> s_local;
        for (int v = 0; v < g0.graph.vertex_count(); ++v)
            if (g0.graph.degree(v) <= 4) s_local.push_back(v);
        scatter::ScatterResult sc =
            scatter::fat_extract(underlying(g0.graph), s_local, cfg.d_scatter, cfg.t_sparsity);
        std::vector<int> Q, X;
        for (int q : sc.Q) Q.push_back(g0.orig[q]);
        for (int x : sc.X) X.push_back(g0.orig[x]);
        coloring::MonoResult mono = coloring::color3_monochromatic(g, Q, X, cfg.color_timeout);
        if (mono.has_coloring) {
            coloring::BoostResult boost = coloring::boost_independent_set(
                underlying(g), X, mono.certificate.q_prime, mono.coloring);
            if (verify_and_accept(boost.set)) {
                res.answer = Answer::yes;
                res.set = boost.set;
                res.report.note = "constructive pipeline";
                return res;
            }
        }
        // pipeline came up short: fall back to the DP witness when affordable
        ExactState st = run_exact(g, dec, cfg);
        res.report.width_used = st.width_used;
        if (st.width_exceeded) {
            res.answer = Answer::unknown;
            res.report.note = "pipeline set too small and DP width over budget";
            return res;
        }
        res.report.alpha = st.dp->size;
        if (verify_and_accept(st.dp->witness)) {
            res.answer = Answer::yes;
            res.set = st.dp->witness;
            res.report.note = "theorem shortcut, DP witness";
            return res;
        }
        // shortcut said yes but alpha disproves it: invalid user constant
        throw Error("find_set: theorem shortcut contradicted by exact alpha; c_theorem invalid");
    }

    ExactState st = run_exact(g, dec, cfg);
    res.report.path = DecisionPath::dp;
    res.report.width_used = st.width_used;
    if (st.width_exceeded) {
        res.answer = res.report.answer = Answer::unknown;
        res.report.note = "decomposition width exceeds budget";
        return res;
    }
    res.report.alpha = st.dp->size;
    res.report.witness = st.dp->witness;
    if (3 * st.dp->size >= n + k) {
        if (!verify_and_accept(st.dp->witness))
            throw InternalInvariantViolation("find_set: DP witness too small");
        res.answer = res.report.answer = Answer::yes;
        res.set = st.dp->witness;
    } else {
        res.answer = res.report.answer = Answer::no;
    }
    return res;
}

AnalyzeReport analyze(const PlaneGraph& g, const AnalyzeOptions& opts) {
    AnalyzeReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.triangle_free = check_triangle_free(g);

    auto cycles = cycles4::enumerate_4cycles(g);
    r.total_4cycles = static_cast<int>(cycles.size());
    for (const auto& w : cycles) r.separating_4cycles += w.separating;

    auto dec = cycles4::swept_decompose(g);
    r.s_hat = dec.s_hat;
    r.part_count = static_cast<int>(dec.parts.size());
    r.bound_41_sqrt_s = 41.0 * std::sqrt(static_cast<double>(r.s_hat));

    auto prof = degree_profile(g);
    r.degree_histogram = prof.histogram;
    r.low_degree_count = prof.low_degree_count;
    r.low_degree_bound_holds = 5 * prof.low_degree_count >= r.n;

    AbstractGraph ga = underlying(g);
    r.width_plain = tw::heuristic_td(ga, tw::TdStrategy::min_fill).width();
    if (r.triangle_free) r.width_addcross = tw::addcross_td(g).width();

    r.augment_stats = augment::augment_l(ga, opts.augment_rounds).second;

    if (opts.scatter) {
        std::vector<int> all(r.n);
        for (int v = 0; v < r.n; ++v) all[v] = v;
        r.scatter_result = scatter::fat_extract(ga, all, opts.scatter->first, opts.scatter->second);
    }
    if (r.n <= opts.alpha_max) {
        r.alpha = oracle::alpha_exact(ga).size;
        r.alpha_bound_ok = 3 * *r.alpha >= r.n + 1;
    }
    if (opts.c) {
        // would the shortcut fire for k = 1?
        r.theorem_shortcut_would_fire = opts.c->num * r.s_hat >= opts.c->den;
        if (r.alpha)
            r.theorem_bound_ok = 3LL * *r.alpha * opts.c->den >=
                                 static_cast<long long>(r.n) * opts.c->den + opts.c->num * r.s_hat;
    }
    return r;
}

std::string AnalyzeReport::to_string() const {
    std::ostringstream o;
    o << "n " << n << "\nm " << m << "\ntriangle_free " << (triangle_free ? "yes" : "no") << "\n";
    o << "4cycles " << total_4cycles << " separating " << separating_4cycles << "\n";
    o << "s_hat " << s_hat << " parts " << part_count << "\n";
    o << "degrees";
    for (auto [d, c] : degree_histogram) o << " " << d << ":" << c;
    o << "\nlow_degree_count " << low_degree_count << " (n/5 bound "
      << (low_degree_bound_holds ? "holds" : "FAILS") << ")\n";
    o << "width_plain " << width_plain;
    if (width_addcross >= 0)
        o << " width_addcross " << width_addcross << " 41*sqrt(s_hat) " << bound_41_sqrt_s;
    o << "\naugment rounds " << augment_stats.rounds << " indegrees";
    for (int x : augment_stats.max_indegree_per_round) o << " " << x;
    o << " m_d " << augment_stats.m_d << "\n";
    if (scatter_result) {
        o << "scatter |Q| " << scatter_result->Q.size() << " |X| " << scatter_result->X.size()
          << " d " << scatter_result->d << " m_d " << scatter_result->m_d << " K "
          << scatter_result->K.str() << " certificates "
          << (scatter_result->q_ratio_ok && scatter_result->x_ratio_ok ? "ok" : "FAIL") << "\n";
    }
    if (alpha) {
        o << "alpha " << *alpha << " 3*alpha " << 3 * *alpha << " n+1 " << n + 1 << " ("
          << (alpha_bound_ok ? "bound holds" : "BOUND FAILS") << ")\n";
    }
    if (theorem_shortcut_would_fire)
        o << "theorem_shortcut(k=1) " << (*theorem_shortcut_would_fire ? "fires" : "no") << "\n";
    if (theorem_bound_ok)
        o << "3*alpha >= n + c*s_hat " << (*theorem_bound_ok ? "holds" : "FAILS") << "\n";
    return o.str();
}

} // namespace solver
} // namespace tfpmis
