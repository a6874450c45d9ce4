#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string bin() {
    const char* b = std::getenv("EQUIV_ALG_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string corpus(const std::string& name) {
    const char* c = std::getenv("EQUIV_ALG_CORPUS");
    REQUIRE(c != nullptr);
    return std::string(c) + "/" + name;
}

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("bundled corpus actions validate") {
    for (const char* name : {"swap_c2.json", "twisted_c2_f5.json", "c3_twist_f13.json"}) {
        auto r = run("validate-action --in " + corpus(name));
        CHECK(r.code == 0);
        CHECK(contains(r.out, "check weak action axioms: ok"));
    }
}

TEST_CASE("crossed product emits a file that re-validates") {
    auto r = run("crossed-product --in " + corpus("swap_c2.json") + " --out /tmp/equiv_cli_m2.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "crossed product dim: 4"));
    CHECK(contains(r.out, "center dim: 1"));
    auto v = run("validate-algebra --in /tmp/equiv_cli_m2.json");
    CHECK(v.code == 0);
    CHECK(contains(v.out, "center dim: 1"));
}

TEST_CASE("obstruction reports the nontrivial class of the projective datum") {
    auto r = run("obstruction --in " + corpus("proj_comm_f5.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "nontrivial class"));
    CHECK(contains(r.out, "sigma(1;1) = 3"));
    CHECK(contains(r.out, "check sigma is a 2-cocycle: ok"));
}

TEST_CASE("usage and file errors exit with code 2") {
    CHECK(run("no-such-command").code == 2);
    CHECK(run("validate-algebra --in /tmp/equiv_cli_missing.json").code == 2);
    {
        std::ofstream bad("/tmp/equiv_cli_bad.json");
        bad << "{ not json";
    }
    CHECK(run("validate-action --in /tmp/equiv_cli_bad.json").code == 2);
    CHECK(run("validate-action").code == 2);  // --in is required
}

TEST_CASE("mathematical failures exit with code 1") {
    // the coordinate swap of k x k is not inner, so it is not 1-compatible
    std::ofstream f("/tmp/equiv_cli_dcomp.json");
    f << R"({"algebra":{"field":{"prime":13},"dim":2,"basis":["e1","e2"],)"
      << R"("mul":[[0,0,0,1],[1,1,1,1]],"unit":[1,1]},"sigma":[[0,1],[1,0]],"d":1})";
    f.close();
    auto r = run("d-compatible --in /tmp/equiv_cli_dcomp.json");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "d-compatible: no"));
}

TEST_CASE("reports are byte-identical across runs") {
    std::string args = "appendix-a-suite --in " + corpus("twisted_c2_f5.json");
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("k0 and orbit reports on the swap action") {
    auto k = run("k0-action --in " + corpus("swap_c2.json"));
    CHECK(k.code == 0);
    CHECK(contains(k.out, "k0 rank: 2"));
    CHECK(contains(k.out, "k0 permutation for g=1: [1,0]"));
    auto o = run("orbit-census --in " + corpus("swap_c2.json"));
    CHECK(o.code == 0);
    CHECK(contains(o.out, "module orbits: 1"));
    CHECK(contains(o.out, "equivariant orbits: 1"));
}

TEST_CASE("tubular table 1 check emits weak actions that re-validate") {
    auto r = run("tubular --type 6,3,2 --check-table1 --field prime:13 --out /tmp/equiv_cli_tub_");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dualizing element order: 6"));
    for (int i = 1; i <= 3; ++i) {
        auto v = run("validate-action --in /tmp/equiv_cli_tub_g" + std::to_string(i) + ".json");
        CHECK(v.code == 0);
    }
    auto c = run("cyclic-classify --in /tmp/equiv_cli_tub_g2.json");
    CHECK(c.code == 0);
    CHECK(contains(c.out, "cyclic order: 3"));
}
