#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fpoly/cli.hpp"
#include "fpoly/identities.hpp"

using namespace fpoly;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::string("cli_test_") + name;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kTriangle =
    R"({"n": 3, "marked": [1,2,3], "edges": [[2,3,"a"],[1,3,"b"],[1,2,"c"]]})";

}  // namespace

TEST_CASE("forest-poly on the triangle") {
    TempFile g("triangle.json", kTriangle);
    RunResult r = run({"forest-poly", "--graph", g.path, "--partition", "(1,2,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"poly\":\"b*c\",\"forests\":1}\n");

    r = run({"forest-poly", "--graph", g.path, "--partition", "(-,1,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"poly\":\"a*b + a*c\",\"forests\":2}\n");
}

TEST_CASE("forest-poly error paths") {
    TempFile g("triangle2.json", kTriangle);
    RunResult r = run({"forest-poly", "--graph", "no_such_file.json", "--partition", "(1,2,2)"});
    CHECK(r.code == 2);
    r = run({"forest-poly", "--graph", g.path, "--partition", "(1,2)"});
    CHECK(r.code == 2);
    r = run({"forest-poly", "--graph", g.path});
    CHECK(r.code == 2);
}

TEST_CASE("gen-identity emits parseable JSON") {
    RunResult r = run({"gen-identity", "--m", "4", "--c", "4", "--j", "1"});
    CHECK(r.code == 0);
    IdentityRecord rec = IdentityRecord::from_json(r.out);
    CHECK(rec.m == 4);
    CHECK(rec.sum.terms.size() == 8);
    CHECK(rec.sum == gen_identity(4, 4, 1).sum);
    // first term is the partner-c group with the lexicographically first B
    CHECK(r.out.find("{\"A\":\"(1,2,3,1)\",\"B\":\"(1,1,1,2)\",\"coeff\":\"1\"}") != std::string::npos);
}

TEST_CASE("verify-identity verdicts") {
    TempFile g("k4.json",
               R"({"n": 4, "marked": [1,2,3,4], "edges": [[1,2,"e12"],[1,3,"e13"],[1,4,"e14"],[2,3,"e23"],[2,4,"e24"],[3,4,"e34"]]})");
    TempFile id("id.json", gen_identity(4, 4, 1).to_json());
    RunResult r = run({"verify-identity", "--file", id.path, "--graph", g.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verified\":true") != std::string::npos);

    FormalSum bad = gen_identity(4, 4, 1).sum;
    bad.add(bad.terms.begin()->first, Rational(1, 3));
    TempFile id_bad("id_bad.json", bad.to_json());
    r = run({"verify-identity", "--file", id_bad.path, "--graph", g.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"verified\":false") != std::string::npos);
}

TEST_CASE("blocks") {
    RunResult r = run({"blocks", "--m", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"terms\":24") != std::string::npos);
    CHECK(r.out.find("\"c_independent\":true") != std::string::npos);
}

TEST_CASE("dim for m=3") {
    RunResult r = run({"dim", "--m", "3", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"m\":3,\"expected\":3,\"lower\":3,\"upper\":3,\"pass\":true}\n");
}

TEST_CASE("vy-check smoke run") {
    RunResult r = run({"vy-check", "--trials", "2", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("mtt-check") {
    TempFile g("triangle3.json", kTriangle);
    RunResult r = run({"mtt-check", "--graph", g.path, "--rows", "1,3", "--cols", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);
    CHECK(r.out.find("-b*c") != std::string::npos);
}

TEST_CASE("colexp-check") {
    RunResult r = run({"colexp-check", "--k", "2", "--trials", "5", "--seed", "3", "--dmin", "4",
                       "--dmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"all_zero\":true") != std::string::npos);
}

TEST_CASE("identical runs give identical bytes") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"gen-identity", "--m", "5", "--c", "2", "--j", "4"},
          std::vector<std::string>{"colexp-check", "--k", "3", "--trials", "2", "--seed", "19",
                                   "--dmin", "4", "--dmax", "4"},
          std::vector<std::string>{"dim", "--m", "3", "--seed", "42"}}) {
        RunResult r1 = run(args);
        RunResult r2 = run(args);
        CHECK(r1.code == r2.code);
        CHECK(r1.out == r2.out);
        CHECK_FALSE(r1.out.empty());
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"no-such-subcommand"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"gen-identity", "--m", "4"}).code == 2);
    CHECK(run({"gen-identity", "--m", "4", "--c", "4", "--j", "4"}).code == 2);
}
