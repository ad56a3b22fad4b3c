#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tfpmis/abstract_graph.hpp"
#include "tfpmis/plane_graph.hpp"
#include "tfpmis/treewidth.hpp"

using namespace tfpmis;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "cli_test_stdout.txt";
    std::string cmd = std::string(TFPMIS_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = -1;
#ifdef WEXITSTATUS
    if (status != -1) code = WEXITSTATUS(status);
#else
    code = status;
#endif
    return {code, ss.str()};
}

std::string first_line(const std::string& s) {
    auto nl = s.find('\n');
    return nl == std::string::npos ? s : s.substr(0, nl);
}

} // namespace

TEST_CASE("gen + decide round trip") {
    auto g = run_cli("gen --family jones --n 8 -o cli_j8.pg");
    REQUIRE(g.exit_code == 0);

    auto yes = run_cli("decide --k 1 cli_j8.pg");
    CHECK(yes.exit_code == 0);
    CHECK(first_line(yes.out) == "yes");

    auto no = run_cli("decide --k 2 cli_j8.pg");
    CHECK(no.exit_code == 0);
    CHECK(first_line(no.out) == "no");
}

TEST_CASE("gen validates family parameters (exit 2)") {
    auto r = run_cli("gen --family jones --n 6");
    CHECK(r.exit_code == 2);
}

TEST_CASE("gen output parses back identically") {
    auto r = run_cli("gen --family cube");
    REQUIRE(r.exit_code == 0);
    PlaneGraph g = parse_pg(r.out);
    CHECK(emit_pg(g) == r.out);
}

TEST_CASE("find writes a solution that verify accepts") {
    REQUIRE(run_cli("gen --family hex --rows 2 --cols 2 -o cli_hex.pg").exit_code == 0);
    auto f = run_cli("find --k 1 cli_hex.pg -o cli_hex.sol");
    REQUIRE(f.exit_code == 0);
    CHECK(first_line(f.out).substr(0, 3) == "yes");

    auto v = run_cli("verify cli_hex.pg cli_hex.sol");
    CHECK(v.exit_code == 0);
    CHECK(first_line(v.out).substr(0, 2) == "ok");

    // tamper: claim one vertex more
    std::ifstream in("cli_hex.sol");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::ofstream bad("cli_hex_bad.sol");
    bad << "s is 99\n" << text.substr(text.find('\n') + 1);
    bad.close();
    auto vb = run_cli("verify cli_hex.pg cli_hex_bad.sol");
    CHECK(vb.exit_code == 0);
    CHECK(first_line(vb.out).substr(0, 4) == "FAIL");
}

TEST_CASE("tw emits a valid PACE decomposition") {
    REQUIRE(run_cli("gen --family hex --rows 2 --cols 3 -o cli_h23.pg").exit_code == 0);
    // build a .gr from the .pg
    std::ifstream in("cli_h23.pg");
    std::stringstream ss;
    ss << in.rdbuf();
    AbstractGraph g = underlying(parse_pg(ss.str()));
    std::ofstream gr("cli_h23.gr");
    gr << emit_gr(g);
    gr.close();

    auto r = run_cli("tw cli_h23.gr -o cli_h23.td");
    REQUIRE(r.exit_code == 0);
    std::ifstream tin("cli_h23.td");
    std::stringstream ts;
    ts << tin.rdbuf();
    auto parsed = tw::parse_td(ts.str());
    CHECK(parsed.n == g.vertex_count());
    CHECK(tw::validate_td(g, parsed.td).ok());
    CHECK(tw::emit_td(parsed.td, parsed.n) == ts.str());
}

TEST_CASE("tw min_degree strategy") {
    auto r = run_cli("tw cli_h23.gr --strategy min_degree");
    REQUIRE(r.exit_code == 0);
    std::ifstream in("cli_h23.gr");
    std::stringstream ss;
    ss << in.rdbuf();
    AbstractGraph g = parse_gr(ss.str());
    CHECK(tw::validate_td(g, tw::parse_td(r.out).td).ok());
    CHECK(run_cli("tw cli_h23.gr --strategy bogus").exit_code == 2);
}

TEST_CASE("alpha on .gr input") {
    AbstractGraph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    std::ofstream gr("cli_c5.gr");
    gr << emit_gr(c5);
    gr.close();
    auto r = run_cli("alpha cli_c5.gr");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "2");
}

TEST_CASE("analyze runs and reports") {
    REQUIRE(run_cli("gen --family cube -o cli_cube.pg").exit_code == 0);
    auto r = run_cli("analyze cli_cube.pg --augment 2 --c 1/10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("s_hat 8") != std::string::npos);
    CHECK(r.out.find("alpha 4") != std::string::npos);

    auto s = run_cli("analyze cli_cube.pg --scatter 2 2");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("certificates ok") != std::string::npos);
}

TEST_CASE("decide on a graph with a triangle exits 2") {
    std::ofstream pg("cli_k3.pg");
    pg << "pg 3\n0: 1 2\n1: 2 0\n2: 0 1\n";
    pg.close();
    auto r = run_cli("decide --k 0 cli_k3.pg");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing input exits 2") {
    CHECK(run_cli("decide --k 0 no_such_file.pg").exit_code == 2);
    CHECK(run_cli("alpha no_such_file.gr").exit_code == 2);
}
