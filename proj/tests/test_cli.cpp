#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "argkit/cli.hpp"

using argkit::cli_main;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "argkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ARGKIT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("solve prints one extension per line") {
    const Run r = run({"solve", "-s", "na", "-f", data("naive_f.apx")});
    CHECK(r.rc == 0);
    CHECK(r.out == "[a,c]\n[a,d]\n");
    CHECK(run({"solve", "-s", "stg", "-f", data("stagle.tgf")}).out == "[b]\n[c]\n");
    CHECK(run({"solve", "-s", "stb", "-f", data("stagle.apx"), "--iccma"}).out == "[]\n");
}

TEST_CASE("equiv reports kernel verdicts and oracle witnesses") {
    const Run sta = run({"equiv", "-s", "sta", data("stagle.apx"), data("stagle_kernel.apx")});
    CHECK(sta.rc == 1);
    CHECK(sta.out == "NOT\n% witness\n");
    const Run stg = run({"equiv", "-s", "stg", data("stagle.apx"), data("stagle_kernel.apx")});
    CHECK(stg.rc == 0);
    CHECK(stg.out == "EQUIVALENT\n");
    const Run na = run({"equiv", "-s", "na", data("naive_f.apx"), data("naive_g.apx")});
    CHECK(na.rc == 0);
    CHECK(na.out == "EQUIVALENT\n");
    const Run stb = run({"equiv", "-s", "stb", data("naive_f.apx"), data("naive_g.apx")});
    CHECK(stb.rc == 1);
    CHECK(stb.out.rfind("NOT\n", 0) == 0);
}

TEST_CASE("exact, verify and hierarchy") {
    CHECK(run({"exact", "-s", "co", "-n", "3"}).out == "+-\n");
    CHECK(run({"exact", "-s", "na", "-n", "2"}).out == "eps\n");
    const Run v = run({"verify", "-s", "co", "-x", "+", "-n", "2"});
    CHECK(v.rc == 1);
    CHECK(v.out.rfind("counterexample\n% F\n", 0) == 0);
    const Run ok = run({"verify", "-s", "stb", "-x", "p", "-n", "2"});
    CHECK(ok.rc == 0);
    CHECK(ok.out == "no counterexample up to n=2\n");
    const Run h = run({"hierarchy"});
    CHECK(h.rc == 0);
    CHECK(h.out.find(" -> +-\n") != std::string::npos);
}

TEST_CASE("kernel and vclass") {
    const Run k = run({"kernel", "-k", "stb", "-f", data("stagle.apx")});
    CHECK(k.out == "arg(a).\narg(b).\narg(c).\natt(a,a).\natt(b,c).\natt(c,b).\n");
    const Run c = run({"vclass", "-x", "p", "-f", data("stagle_kernel.apx")});
    CHECK(c.rc == 0);
    CHECK(c.out == "% +\n([], [])\n([b], [b,c])\n([c], [b,c])\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).rc == 2);
    CHECK(run({"solve", "-s", "xx", "-f", data("stagle.apx")}).rc == 2);
    CHECK(run({"solve", "-s", "co"}).rc == 2);
    CHECK(run({"solve", "-s", "co", "-f", data("missing.apx")}).rc == 2);
    CHECK(run({"kernel", "-k", "sta", "-f", data("stagle.apx")}).rc == 2);
    CHECK(run({"vclass", "-x", "q", "-f", data("stagle.apx")}).rc == 2);
    CHECK(run({"exact", "-s", "co", "-n", "9"}).rc == 2);
    CHECK(run({"equiv", "-s", "co", data("stagle.apx")}).rc == 2);
}

TEST_CASE("parse errors are reported with their location") {
    const Run r = run({"solve", "-s", "co", "-f", data("naive_f.apx"), "--format", "tgf"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("solve") != std::string::npos);
}
