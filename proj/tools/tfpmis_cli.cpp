// Command-line front end: gen, decide, find, analyze, tw, alpha, verify.
// Exit codes: 0 completed (including answer "no"), 2 usage or parse error,
// 3 budget exceeded / unknown, 4 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tfpmis/generators.hpp"
#include "tfpmis/solver.hpp"

using namespace tfpmis;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

AbstractGraph load_abstract(const std::string& path) {
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".pg")
        return underlying(parse_pg(read_file(path)));
    return parse_gr(read_file(path));
}

solver::Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    solver::Rational r;
    try {
        if (slash == std::string::npos) {
            r.num = std::stoll(s);
            r.den = 1;
        } else {
            r.num = std::stoll(s.substr(0, slash));
            r.den = std::stoll(s.substr(slash + 1));
        }
    } catch (...) {
        throw ParseError("bad rational '" + s + "'");
    }
    if (r.den <= 0 || r.num <= 0) throw ParseError("rational must be positive");
    return r;
}

std::string solution_text(const std::vector<int>& set) {
    std::ostringstream o;
    o << "s is " << set.size() << "\n";
    for (int v : set) o << v << "\n";
    return o.str();
}

std::vector<int> parse_solution(const std::string& text, int* claimed = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::vector<int> set;
    bool header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "s") {
            std::string kind;
            int size;
            if (!(ls >> kind >> size) || kind != "is") throw ParseError("bad solution header");
            if (claimed) *claimed = size;
            header = true;
            continue;
        }
        set.push_back(std::stoi(tok));
    }
    if (!header) throw ParseError("solution file missing 's is <size>' line");
    return set;
}

coloring::Millis global_timeout() {
    if (const char* env = std::getenv("TFPMIS_TIMEOUT_MS")) {
        long long ms = std::atoll(env);
        if (ms > 0) return coloring::Millis(ms);
    }
    return coloring::Millis(10000);
}

void print_report(const solver::DecisionReport& rep) {
    std::cout << "path " << (rep.path == solver::DecisionPath::dp ? "dp" : "theorem_shortcut")
              << "\ns_hat " << rep.s_hat << "\n";
    if (rep.alpha) std::cout << "alpha " << *rep.alpha << "\n";
    if (rep.width_used >= 0) std::cout << "width " << rep.width_used << "\n";
    if (!rep.note.empty()) std::cout << "note " << rep.note << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"independent sets above (n+1)/3 in triangle-free planar graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a named family member (.pg)");
    std::string family, gen_out;
    int gn = 0, rows = 1, cols = 1, a = 1, length = 3;
    unsigned seed = 0;
    gen_cmd->add_option("--family", family, "jones|hex|stars|k23|cube|cycle|random_tfp")
        ->required();
    gen_cmd->add_option("--n", gn, "vertex count (jones, random_tfp)");
    gen_cmd->add_option("--rows", rows);
    gen_cmd->add_option("--cols", cols);
    gen_cmd->add_option("--a", a, "stars: number of stars = rays");
    gen_cmd->add_option("--length", length, "cycle length");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("-o,--out", gen_out, "output path (stdout if absent)");

    // decide / find
    std::string in_path, find_out;
    int k = 0, wmax = 24, dscatter = 5, tsparse = 14;
    std::string mode = "exact", c_str;
    auto add_solver_opts = [&](CLI::App* cmd) {
        cmd->add_option("input", in_path, ".pg file")->required();
        cmd->add_option("--k", k, "excess over (n)/3")->required();
        cmd->add_option("--mode", mode, "exact|theorem");
        cmd->add_option("--c-theorem", c_str, "positive rational p/q for theorem mode");
        cmd->add_option("--wmax", wmax, "DP width budget");
        cmd->add_option("--d", dscatter, "scatter distance");
        cmd->add_option("--t", tsparse, "sparsity target");
    };
    auto* decide_cmd = app.add_subcommand("decide", "decide 3*alpha >= n+k");
    add_solver_opts(decide_cmd);
    auto* find_cmd = app.add_subcommand("find", "find a set of size >= ceil((n+k)/3)");
    add_solver_opts(find_cmd);
    find_cmd->add_option("-o,--out", find_out, "solution file path");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "structural report");
    std::string an_path, an_c;
    int an_augment = 2, an_alpha_max = 40;
    std::vector<int> an_scatter;
    analyze_cmd->add_option("input", an_path, ".pg file")->required();
    analyze_cmd->add_option("--augment", an_augment, "augmentation rounds");
    analyze_cmd->add_option("--scatter", an_scatter, "d t")->expected(2);
    analyze_cmd->add_option("--c", an_c, "rational for the theorem comparison");
    analyze_cmd->add_option("--alpha-max", an_alpha_max, "oracle budget");

    // tw
    auto* tw_cmd = app.add_subcommand("tw", "heuristic tree decomposition (.gr -> .td)");
    std::string tw_in, tw_out, strategy = "min_fill";
    tw_cmd->add_option("input", tw_in, ".gr file")->required();
    tw_cmd->add_option("-o,--out", tw_out, "output .td (stdout if absent)");
    tw_cmd->add_option("--strategy", strategy, "min_fill|min_degree");

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "exact independence number");
    std::string alpha_in, alpha_out;
    int alpha_max_n = 40;
    alpha_cmd->add_option("input", alpha_in, ".gr or .pg file")->required();
    alpha_cmd->add_option("--max-n", alpha_max_n, "oracle vertex cap");
    alpha_cmd->add_option("-o,--out", alpha_out, "write witness as a solution file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
    std::string v_graph, v_sol;
    verify_cmd->add_option("graph", v_graph, ".pg file")->required();
    verify_cmd->add_option("solution", v_sol, "solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen_cmd->parsed()) {
        gen::GenSpec spec;
        spec.family = gen::family_from_string(family);
        spec.n = gn;
        spec.rows = rows;
        spec.cols = cols;
        spec.a = a;
        spec.length = length;
        spec.seed = seed;
        PlaneGraph g = gen_named(spec);
        std::string text = emit_pg(g);
        if (gen_out.empty()) std::cout << text;
        else write_file(gen_out, text);
        return 0;
    }

    if (decide_cmd->parsed() || find_cmd->parsed()) {
        solver::SolverConfig cfg;
        cfg.w_max = wmax;
        cfg.d_scatter = dscatter;
        cfg.t_sparsity = tsparse;
        cfg.color_timeout = global_timeout();
        if (mode == "theorem") {
            cfg.mode = solver::SolverConfig::Mode::theorem;
            if (c_str.empty()) throw ParseError("theorem mode requires --c-theorem");
            cfg.c_theorem = parse_rational(c_str);
        } else if (mode != "exact") {
            throw ParseError("mode must be exact or theorem");
        }
        PlaneGraph g = parse_pg(read_file(in_path));
        if (decide_cmd->parsed()) {
            auto rep = solver::decide(g, k, cfg);
            std::cout << (rep.answer == solver::Answer::yes      ? "yes"
                          : rep.answer == solver::Answer::no     ? "no"
                                                                 : "unknown")
                      << "\n";
            print_report(rep);
            return rep.answer == solver::Answer::unknown ? 3 : 0;
        }
        auto res = solver::find_set(g, k, cfg);
        if (res.answer == solver::Answer::yes) {
            std::cout << "yes " << res.set->size() << "\n";
            if (!find_out.empty()) write_file(find_out, solution_text(*res.set));
            else std::cout << solution_text(*res.set);
            return 0;
        }
        if (res.answer == solver::Answer::no) {
            std::cout << "none\n";
            return 0;
        }
        std::cout << "unknown\n";
        return 3;
    }

    if (analyze_cmd->parsed()) {
        solver::AnalyzeOptions opts;
        opts.augment_rounds = an_augment;
        opts.alpha_max = an_alpha_max;
        if (!an_scatter.empty()) opts.scatter = {an_scatter[0], an_scatter[1]};
        if (!an_c.empty()) opts.c = parse_rational(an_c);
        PlaneGraph g = parse_pg(read_file(an_path));
        std::cout << solver::analyze(g, opts).to_string();
        return 0;
    }

    if (tw_cmd->parsed()) {
        AbstractGraph g = parse_gr(read_file(tw_in));
        tw::TdStrategy strat;
        if (strategy == "min_fill") strat = tw::TdStrategy::min_fill;
        else if (strategy == "min_degree") strat = tw::TdStrategy::min_degree;
        else throw ParseError("strategy must be min_fill or min_degree");
        auto td = tw::heuristic_td(g, strat);
        std::string text = emit_td(td, g.vertex_count());
        if (tw_out.empty()) std::cout << text;
        else write_file(tw_out, text);
        return 0;
    }

    if (alpha_cmd->parsed()) {
        AbstractGraph g = load_abstract(alpha_in);
        oracle::OracleBudget budget;
        budget.max_n = alpha_max_n;
        auto r = oracle::alpha_exact(g, budget);
        std::cout << r.size << "\n";
        if (!alpha_out.empty()) write_file(alpha_out, solution_text(r.witness));
        return 0;
    }

    if (verify_cmd->parsed()) {
        PlaneGraph g = parse_pg(read_file(v_graph));
        int claimed = -1;
        std::vector<int> set = parse_solution(read_file(v_sol), &claimed);
        for (int v : set)
            if (v < 0 || v >= g.vertex_count()) throw ParseError("solution vertex out of range");
        if (claimed != static_cast<int>(set.size())) {
            std::cout << "FAIL size: header says " << claimed << ", file lists " << set.size()
                      << "\n";
            return 0;
        }
        auto check = oracle::verify_independent(underlying(g), set);
        if (!check.ok) {
            std::cout << "FAIL edge " << check.violating_edge.first << " "
                      << check.violating_edge.second << "\n";
            return 0;
        }
        std::cout << "ok " << set.size() << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotTriangleFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const WidthBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
