#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/config.hpp"
#include "cli/verify.hpp"

using namespace eqsteenrod::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "eqsteenrod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

/// Data rows: not the header, not a `#` comment.
std::size_t data_rows(const std::string& s) {
    std::size_t n = 0;
    const auto ls = lines(s);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        if (!ls[i].empty() && ls[i][0] != '#') ++n;
    }
    return n;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("eqsteenrod_test_" + name);
}

}  // namespace

TEST_CASE("decompose") {
    const Run r = run({"decompose", "--n", "2", "--gen-index", "1"});
    CHECK(r.code == 0);
    CHECK(data_rows(r.out) == 3);
    const Run bad = run({"decompose", "--n", "9", "--gen-index", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("n out of range") != std::string::npos);
    CHECK(run({"decompose", "--n", "2", "--gen-index", "0"}).code == 2);
}

TEST_CASE("basis") {
    const Run r = run({"basis", "--n", "1", "--profile", "bp", "--mod2", "--dim", "10", "--check"});
    CHECK(r.code == 0);
    CHECK(data_rows(r.out) == 7);
    CHECK(r.out.find("# check basis_series PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const Run zero = run({"basis", "--n", "3", "--dim", "0"});
    CHECK(zero.code == 0);
    CHECK(data_rows(zero.out) == 1);

    const Run j = run({"--format", "json", "basis", "--n", "2", "--dim", "6", "--check"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"checks\"") != std::string::npos);
    CHECK(run({"basis", "--n", "2", "--dim", "-1"}).code == 2);
    CHECK(run({"basis", "--n", "2", "--profile", "zz"}).code == 2);
}

TEST_CASE("tor") {
    const Run r = run({"tor", "--N", "3", "--dim", "12", "--compare"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# compare d_squared_zero PASS") != std::string::npos);
    CHECK(r.out.find("# compare expected_ranks PASS") != std::string::npos);
    const Run z = run({"tor", "--N", "0", "--dim", "0"});
    CHECK(z.code == 0);
    CHECK(data_rows(z.out) == 1);
    CHECK(lines(z.out).at(1) == "0\t0\t0\t1");
}

TEST_CASE("e2") {
    const Run r = run({"e2", "--dim", "16", "--collapse-check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# collapse_check D=16 PASS") != std::string::npos);
    CHECK(data_rows(run({"e2", "--dim", "3"}).out) == 3);
    CHECK(data_rows(run({"e2", "--dim", "0"}).out) == 1);
    CHECK(run({"e2", "--dim", "21", "--collapse-check"}).code == 2);
    CHECK(run({"e2", "--n", "2", "--collapse-check"}).code == 2);

    const Run p = run({"e2", "--dim", "16", "--permanent-cycles"});
    CHECK(p.code == 0);
    CHECK(p.out.find("# permanent t1") != std::string::npos);
    CHECK(p.out.find("excluded") != std::string::npos);

    const Run svg = run({"--format", "svg", "e2", "--dim", "8"});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(run({"--format", "svg", "tor", "--N", "1"}).code == 2);

    const Run g = run({"e2", "--n", "2", "--dim", "6"});
    CHECK(g.code == 0);
    CHECK(lines(g.out).at(0) == "dim\tw\tstab\torbit\tseq\tm");
}

TEST_CASE("verify") {
    const Run r = run({"verify", "--only", "gfp", "--cutoff", "30"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[1].rfind("gfp\t", 0) == 0);
    CHECK(ls[1].find("PASS") != std::string::npos);
    CHECK(ls[2] == "summary\t1/1 passed");

    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--only", "nonsense"}).code == 2);
    CHECK(run({"verify", "--only", "orbits", "--max-n", "5"}).code == 2);

    const Run two = run({"verify", "--only", "orbits,relation", "--max-n", "3"});
    CHECK(two.code == 0);
    CHECK(two.out.find("summary\t2/2 passed") != std::string::npos);
}

TEST_CASE("check list") {
    CHECK(check_names().size() == 9);
    for (const auto& n : check_names()) CHECK(is_check_name(n));
    CHECK_FALSE(is_check_name("all"));
    CHECK(tau_algebra_check(1, 4, 2));
    CHECK(tau_algebra_check(0, 4, 0));
}

TEST_CASE("config files") {
    std::istringstream good("# comment\n\nn = 2\n--dim=6\n");
    const auto cfg = parse_config(good);
    CHECK(cfg.at("n") == "2");
    CHECK(cfg.at("dim") == "6");
    std::istringstream dup("n = 1\nn = 2\n");
    CHECK_THROWS_AS(parse_config(dup), ConfigError);
    std::istringstream junk("novalue\n");
    CHECK_THROWS_AS(parse_config(junk), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/eqsteenrod.cfg"), ConfigError);

    const auto path = temp_file("cfg.ini");
    {
        std::ofstream f(path);
        f << "n = 2\ndim = 3\n";
    }
    const Run from_cfg = run({"--config", path.string(), "basis"});
    const Run direct = run({"basis", "--n", "2", "--dim", "3"});
    CHECK(from_cfg.code == 0);
    CHECK(from_cfg.out == direct.out);

    const Run flag_wins = run({"--config", path.string(), "basis", "--dim", "6"});
    CHECK(flag_wins.out == run({"basis", "--n", "2", "--dim", "6"}).out);

    {
        std::ofstream f(path);
        f << "colour = blue\n";
    }
    CHECK(run({"--config", path.string(), "basis"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("output file and determinism") {
    const auto path = temp_file("out.tsv");
    const Run r = run({"--out", path.string(), "tor", "--N", "3", "--dim", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"tor", "--N", "3", "--dim", "10"}).out);
    std::filesystem::remove(path);

    const std::vector<std::string> args{"verify", "--only", "orbits,koszul,collapse", "--max-n", "3"};
    CHECK(run(args).out == run(args).out);
    CHECK(run({"--format", "json", "e2", "--dim", "10"}).out == run({"--format", "json", "--seedless", "e2", "--dim", "10"}).out);
}

TEST_CASE("help and parse errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"basis", "--n", "x"}).code == 2);
}
