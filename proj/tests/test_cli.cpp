#include <cstdio>
#include <fstream>
#include <sstream>

#include "adic/cli.hpp"
#include "doctest.h"

using namespace adic;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "cli_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ord prints the exact order") {
    Run r = run({"ord", "--ideal", "vars t1", "--cap", "8", "t1^3"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    CHECK(run({"ord", "--ideal", "vars *", "--cap", "4", "0"}).out == "inf\n");
}

TEST_CASE("parse output is idempotent") {
    Run first = run({"parse", "2*t2 + t1*t1 - 1/2"});
    CHECK(first.code == 0);
    std::string printed = first.out.substr(0, first.out.size() - 1);
    Run second = run({"parse", printed});
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("parse errors exit with code 2 and a position") {
    Run r = run({"parse", "t1^"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("3") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"ord", "--cap", "8", "t1"}).code == 2);  // missing --ideal
    CHECK(run({"gallery", "--cap", "4", "--only", "nonsense"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gallery") != std::string::npos);
}

TEST_CASE("nf and dist print canonical values") {
    Run nf = run({"nf", "--ideal", "vars t1", "--cap", "2", "1 + t1 + t1^5"});
    CHECK(nf.code == 0);
    CHECK(nf.out == "t1 + 1\n");
    Run dist = run({"dist", "--ideal", "vars t1", "--cap", "8", "1", "1 + t1^3"});
    CHECK(dist.code == 0);
    CHECK(dist.out == "1/2^3\n");
}

TEST_CASE("sum prints every level of a decaying stream") {
    Run r = run({"sum", "--ideal", "vars t1", "--cap", "3", "--stream",
                 "k : t1^k * delta(k)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi_0: 1\n") != std::string::npos);
    CHECK(r.out.find("pi_3: t1^3 + t1^2 + t1 + 1\n") != std::string::npos);
}

TEST_CASE("sum fails with exit 1 on a non-decaying stream") {
    Run r = run({"sum", "--ideal", "vars t1", "--cap", "3", "--stream",
                 "k : delta(k)"});
    CHECK(r.code == 1);
}

TEST_CASE("check thm6 walks all levels of a presentation file") {
    TempFile mod(
        "field: Q\n"
        "ideal: vars t1 t2\n"
        "gens: 1\n"
        "rel: t1^2\n");
    Run r = run({"check", "thm6", "--module", mod.path, "--cap", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS level 0") != std::string::npos);
    CHECK(r.out.find("PASS level 2") != std::string::npos);
    CHECK(r.out.find("OVERALL PASS") != std::string::npos);
}

TEST_CASE("nakayama reports coefficients for a generating family") {
    TempFile mod(
        "field: Q\n"
        "ideal: vars t1\n"
        "gens: 1\n");
    TempFile gens("1 + t1\n");
    Run r = run({"nakayama", "--module", mod.path, "--gens", gens.path,
                 "--cap", "4", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("c[0]") != std::string::npos);

    TempFile bad("t1\n");
    Run f = run({"nakayama", "--module", mod.path, "--gens", bad.path,
                 "--cap", "4", "1"});
    CHECK(f.code == 1);
    CHECK(f.out.find("NotGenerating") != std::string::npos);
}

TEST_CASE("gallery subsets run and mirror their verdicts in the exit code") {
    Run r = run({"gallery", "--cap", "3", "--only", "example6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("OVERALL PASS") != std::string::npos);
}

TEST_CASE("missing files are reported as errors, not crashes") {
    Run r = run({"check", "thm6", "--module", "does_not_exist.txt"});
    CHECK(r.code == 1);
    CHECK(r.err.find("does_not_exist") != std::string::npos);
}
