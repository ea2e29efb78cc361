#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cycroots/cli.hpp"
#include "fixtures.hpp"

using namespace cycroots;
using json = nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cycroots");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "cycroots_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

std::string csv_of(const MatrixXr& m) {
    std::ostringstream s;
    s.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            s << (j ? "," : "") << m(i, j);
        }
        s << "\n";
    }
    return s.str();
}

}  // namespace

TEST_CASE("analyze the 3-cyclic example") {
    const auto file = write_temp("a.csv", "# example\n" + csv_of(fixtures::three_cyclic_a()));
    const auto r = run({"analyze", file});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["h"] == 3);
    CHECK(j["partition"] == json::parse("[[1,2],[3,4],[5,6]]"));
    CHECK(j["perron_frobenius"]["all_pass"] == true);
    CHECK(j["jordan_form"]["r1"] == 2);
    CHECK(j["spectrum"].size() == 6);
}

TEST_CASE("count and branches") {
    const auto file = write_temp("a.csv", csv_of(fixtures::three_cyclic_a()));
    const auto r = run({"count", file, "--p", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["primary_roots"] == 64);
    CHECK(r.report()["enn_primary_roots"] == 2);

    const auto b = run({"branches", "--h", "3", "--p", "2"});
    REQUIRE(b.code == 0);
    CHECK(b.report()["j"] == json::parse("[0,1,0]"));
    CHECK(b.report()["E"] == json::parse("[0,2,1]"));
    CHECK(b.report()["q"] == 2);

    const auto none = run({"branches", "--h", "4", "--p", "2"});
    CHECK(none.code == 0);
    CHECK(none.report()["exists"] == false);
    CHECK(none.report()["j"].is_null());
}

TEST_CASE("roots round-trip through verify") {
    const auto a = write_temp("a.csv", csv_of(fixtures::three_cyclic_a()));
    const auto r = run({"roots", a, "--p", "2"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    REQUIRE(j["roots"].size() == 2);
    const auto rep = write_temp("roots.json", r.out);
    for (int k = 0; k < 2; ++k) {
        const auto v = run({"verify", a, "--root", rep, "--index", std::to_string(k), "--p", "2"});
        CHECK(v.code == 0);
        CHECK(v.report()["passes"] == true);
    }
    const auto single = write_temp("root0.json", j["roots"][0]["matrix"].dump());
    CHECK(run({"verify", a, "--root", single, "--p", "2"}).code == 0);

    const auto all = run({"roots", a, "--p", "2", "--all", "--cap", "5"});
    REQUIRE(all.code == 0);
    CHECK(all.report()["emitted"] == 5);
    CHECK(all.report()["truncated"] == true);
    CHECK(all.report()["total"] == 64);
}

TEST_CASE("output is deterministic") {
    const auto a = write_temp("a.csv", csv_of(fixtures::three_cyclic_a()));
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"analyze", a}, {"roots", a, "--p", "2"}, {"count", a, "--p", "5"}, {"stochastic-root", a, "--p", "2"}}) {
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("verify rejects a wrong root") {
    const auto a = write_temp("a.csv", csv_of(fixtures::three_cyclic_a()));
    const auto x = write_temp("neg.csv", csv_of(-fixtures::three_cyclic_root(true)));
    const auto v = run({"verify", a, "--root", x, "--p", "2"});
    CHECK(v.code == 1);
    CHECK(v.report()["is_root"] == true);
    CHECK(v.report()["passes"] == false);
}

TEST_CASE("reducible caveat: the 4-cycle is a root of its square") {
    const auto b = write_temp("b.csv", csv_of(fixtures::two_by_two_cycles()));
    const auto c = write_temp("c.csv", csv_of(fixtures::cycle_permutation(4)));
    const auto v = run({"verify", b, "--root", c, "--p", "2"});
    CHECK(v.code == 0);
    const auto an = run({"analyze", b}).report();
    CHECK(an["irreducible"] == false);
    CHECK(an["reducible_structure"]["completely_reducible"] == true);
    CHECK(an["reducible_structure"]["block_cyclic_indices"] == json::parse("[2,2]"));
}

TEST_CASE("JSON documents") {
    const auto dense = write_temp("d.json", R"({"format":"dense-complex","rows":2,"cols":2,
        "data":[[[0,0],[1,0]],[[4,0],[0,0]]]})");
    const auto r = run({"analyze", dense});
    REQUIRE(r.code == 0);
    CHECK(r.report()["h"] == 2);

    const auto pair = write_temp("p.json", R"({"format":"jordan-pair","n":2,"h":2,
        "Z":[[1,1],[2,-2]],"blocks":[{"eigenvalue":2,"size":1},{"eigenvalue":[-2,0],"size":1}]})");
    const auto c = run({"count", pair, "--p", "3"});
    REQUIRE(c.code == 0);
    CHECK(c.report()["enn_primary_roots"] == 1);
    CHECK(c.report()["h"] == 2);
}

TEST_CASE("exit codes") {
    const auto a = write_temp("a.csv", csv_of(fixtures::three_cyclic_a()));
    CHECK(run({}).code == 2);
    CHECK(run({"count", a}).code == 2);
    CHECK(run({"count", a, "--p", "two"}).code == 2);
    CHECK(run({"count", "/nonexistent/file.csv", "--p", "2"}).code == 2);
    CHECK(run({"roots", a, "--p", "2", "--all", "--enn"}).code == 2);

    const auto bad = write_temp("bad.json", R"({"format":"dense-real","rows":2,"data":[[1,2],[3]]})");
    const auto r = run({"analyze", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("data[1]") != std::string::npos);
    const auto badfmt = write_temp("badfmt.json", R"({"format":"sparse","data":[[1]]})");
    CHECK(run({"analyze", badfmt}).err.find("format") != std::string::npos);
    const auto badcsv = write_temp("bad.csv", "1,2\n3,x\n");
    CHECK(run({"analyze", badcsv}).code == 2);

    MatrixXr prim(2, 2);
    prim << 1, 2, 3, 1;
    const auto p = write_temp("prim.csv", csv_of(prim));
    const auto pr = run({"count", p, "--p", "2"});
    CHECK(pr.code == 1);
    CHECK(pr.err.find("primitive") != std::string::npos);

    MatrixXr swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(run({"stochastic-root", write_temp("swap.csv", csv_of(swap)), "--p", "2"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tolerance flags and environment") {
    const auto a = write_temp("a.csv", csv_of(fixtures::three_cyclic_a()));
    const auto x = write_temp("neg.csv", csv_of(-fixtures::three_cyclic_root(true)));
    CHECK(run({"verify", a, "--root", x, "--p", "2", "--k-max", "17"}).report()["enn"]["k_max"] == 17);
    CHECK(run({"--k-max", "13", "verify", a, "--root", x, "--p", "2"}).report()["enn"]["k_max"] == 13);
    setenv("CYCROOTS_K_MAX", "21", 1);
    CHECK(run({"verify", a, "--root", x, "--p", "2"}).report()["enn"]["k_max"] == 21);
    unsetenv("CYCROOTS_K_MAX");
    // A tiny root tolerance rejects the 12-digit printed root.
    const auto r = run({"roots", a, "--p", "2"});
    const auto rep = write_temp("roots.json", r.out);
    CHECK(run({"verify", a, "--root", rep, "--p", "2", "--tol-root", "1e-15"}).code == 1);
}
