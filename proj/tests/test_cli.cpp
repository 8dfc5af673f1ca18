#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "alldiff/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = alldiff::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = "alldiff_cli_test_" + std::to_string(counter++) + ".txt";
        std::ofstream(path_) << text;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace

TEST_CASE("filter reproduces the revised schedule") {
    const auto r = run({"filter", "--generate", "revised-speeches", "--level", "gac"});
    CHECK(r.code == 0);
    CHECK(r.out == "sebastian: {5,6}\nfrederic: {3,4}\njan_georg: {2,5}\nmaarten: {3,4}\n");
}

TEST_CASE("filter at bound on a file") {
    TempFile f("var x1 : {1,2}\nvar x2 : {1,2}\nvar x3 : {2,3}\nalldifferent(x1,x2,x3)\n");
    const auto r = run({"filter", "--level", "bound", f.path()});
    CHECK(r.code == 0);
    CHECK(r.out == "x1: {1,2}\nx2: {1,2}\nx3: {3}\n");
}

TEST_CASE("filter reports infeasibility") {
    TempFile f("var x1 : {1,3}\nvar x2 : {1,3}\nvar x3 : {1,3}\nalldifferent(x1,x2,x3)\n");
    auto r = run({"filter", "--level", "gac", f.path()});
    CHECK(r.code == 1);
    CHECK(r.out == "INFEASIBLE\n");
    CHECK_FALSE(r.err.empty());

    r = run({"filter", "--level", "range", f.path()});
    CHECK(r.code == 0);
    CHECK(r.out == "x1: {1,3}\nx2: {1,3}\nx3: {1,3}\n");
}

TEST_CASE("filter defaults to gac and can dump the value graph") {
    const auto r = run({"filter", "--generate", "revised-speeches", "--dump-graph", "--stats"});
    CHECK(r.code == 0);
    CHECK(r.err.find("constraint 1:") != std::string::npos);
    CHECK(r.err.find("sebastian: ") != std::string::npos);
    CHECK(r.err.find("prunings: 4") != std::string::npos);
}

TEST_CASE("solve prints the first solution") {
    auto r = run({"solve", "--generate", "nqueens", "--n", "4", "--level", "range"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q1 = 2\nq2 = 4\nq3 = 1\nq4 = 3\n", 0) == 0);

    r = run({"solve", "--generate", "nqueens", "--n", "3", "--stats"});
    CHECK(r.code == 1);
    CHECK(r.out == "NO SOLUTION\n");
    CHECK(r.err.find("nodes: ") != std::string::npos);
}

TEST_CASE("count") {
    auto r = run({"count", "--generate", "nqueens", "--n", "6", "--level", "decomp"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run({"count", "--generate", "nqueens", "--n", "2"});
    CHECK(r.code == 1);
    CHECK(r.out == "0\n");
}

TEST_CASE("random instances follow the seed") {
    const std::vector<std::string> args{"filter", "--generate", "random", "--vars", "5",
                                        "--lo", "1", "--hi", "6", "--seed", "42"};
    CHECK(run(args).out == run(args).out);
    CHECK(run(args).code == 0);
}

TEST_CASE("bench prints a row per level") {
    auto r = run({"bench", "--generate", "nqueens", "--n", "5", "--mode", "count"});
    CHECK(r.code == 0);
    CHECK(r.out.find("instance: nqueens vars=15 constraints=3") == 0);
    for (const char* level : {"\ndecomp ", "\nbound ", "\nrange ", "\ngac "}) {
        CHECK(r.out.find(level) != std::string::npos);
    }
    r = run({"bench", "--generate", "speeches", "--level", "bound", "--repeat", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\nbound ") != std::string::npos);
    CHECK(r.out.find("\ngac ") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"filter"}).code == 2);
    CHECK(run({"filter", "--generate", "speeches", "--level", "arc"}).code == 2);
    CHECK(run({"filter", "--generate", "chess"}).code == 2);
    CHECK(run({"filter", "--generate", "nqueens", "--n", "0"}).code == 2);
    CHECK(run({"filter", "no_such_file.txt"}).code == 2);
    CHECK(run({"bench", "--generate", "speeches", "--repeat", "0"}).code == 2);

    TempFile bad("var a : [1,2\n");
    const auto r = run({"filter", bad.path()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("filter") != std::string::npos);
    CHECK(run({"bench", "--help"}).code == 0);
}
