#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "hopf/cli.hpp"
#include "hopf/io.hpp"

using namespace hopf;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path dir() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / "hopfctl_test_cli";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string file(const std::string& name) { return (dir() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("construct, verify, classify") {
    std::string a = file("a.json");
    Run c = run({"construct", "a_tau_mu", "--p", "5", "--q", "2", "--mu", "1", "-o", a});
    CHECK(c.code == 0);
    Run v = run({"verify", a});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "PASS"));
    CHECK(contains(v.out, "antipode right: ok"));
    Run k = run({"classify", a});
    CHECK(k.code == 0);
    CHECK(k.out == "A(tau,1)\n");
    Run i = run({"invariants", a});
    CHECK(i.code == 0);
    CHECK(contains(i.out, "dim: 20"));
    CHECK(contains(i.out, "group_order: 10"));
    CHECK(contains(i.out, "trace_s2: 0"));
    CHECK(contains(i.out, "radford_s4: ok"));
}

TEST_CASE("every family constructs and verifies") {
    std::vector<std::vector<std::string>> families{
        {"group_algebra", "--n", "6"},
        {"sweedler"},
        {"taft", "--q", "3", "--tau", "2"},
        {"a_tau_mu", "--p", "3", "--q", "2", "--mu", "0"},
        {"taft_tensor_group", "--p", "3", "--q", "2"},
        {"unit_braided"},
        {"group_braided", "--p", "3"},
        {"nichols_h4"},
    };
    for (const auto& fam : families) {
        std::string path = file(fam[0] + ".json");
        std::vector<std::string> args{"construct"};
        args.insert(args.end(), fam.begin(), fam.end());
        args.insert(args.end(), {"-o", path});
        Run c = run(args);
        CHECK_MESSAGE(c.code == 0, fam[0] << ": " << c.err);
        Run v = run({"verify", path});
        CHECK_MESSAGE(v.code == 0, fam[0]);
        CHECK(contains(v.out, "PASS"));
    }
}

TEST_CASE("failed verification exits 1") {
    HopfAlgebra h = sweedler();
    h.antipode->at(3, 1) = -h.antipode->at(3, 1);
    std::string path = file("bad.json");
    write_manifest(path, {"1", h});
    Run v = run({"verify", path});
    CHECK(v.code == 1);
    CHECK(contains(v.out, "FAIL"));
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"construct", "taft", "--q", "3", "--tau", "3", "-o", file("x.json")}).code == 2);
    CHECK(run({"construct", "a_tau_mu", "--p", "4", "--q", "2", "--mu", "0", "-o", file("x.json")}).code == 2);
    CHECK(run({"verify", file("does-not-exist.json")}).code == 2);
    CHECK(run({"dim5-check", "--case", "D"}).code == 2);
    {
        std::ofstream(file("garbage.json")) << "{\"schema_version\": \"2\"}";
    }
    Run g = run({"verify", file("garbage.json")});
    CHECK(g.code == 2);
    CHECK_FALSE(g.err.empty());
    run({"construct", "sweedler", "-o", file("s.json")});
    Run k = run({"classify", file("s.json")});
    CHECK(k.code == 2);
    CHECK(contains(k.err, "4p"));
}

TEST_CASE("dualize and bosonize") {
    std::string s = file("s.json"), n = file("n.json"), t = file("t.json");
    REQUIRE(run({"construct", "sweedler", "-o", s}).code == 0);
    REQUIRE(run({"construct", "nichols_h4", "-o", n}).code == 0);
    REQUIRE(run({"construct", "taft", "--q", "3", "--tau", "1", "-o", t}).code == 0);

    Run b = run({"bosonize", n, s, "-o", file("b.json")});
    CHECK(b.code == 0);
    CHECK(b.out == "dim: 8\n");
    CHECK(run({"verify", file("b.json")}).code == 0);
    CHECK(contains(run({"invariants", file("b.json")}).out, "group_order: 2"));

    Run mismatch = run({"bosonize", n, t, "-o", file("m.json")});
    CHECK(mismatch.code == 2);
    CHECK(contains(mismatch.err, "different base"));

    CHECK(run({"dualize", s, "-o", file("sd.json")}).code == 0);
    CHECK(run({"verify", file("sd.json")}).code == 0);
    CHECK(run({"dualize", n, "-o", file("nd.json")}).code == 0);
    CHECK(run({"verify", file("nd.json")}).code == 0);
    // the dual of H_4 is H_4 up to isomorphism; the invariants agree
    Run i1 = run({"invariants", s}), i2 = run({"invariants", file("sd.json")});
    CHECK(contains(i2.out, "group_order: 2"));
    CHECK(contains(i1.out, "pointed: yes"));
    CHECK(contains(i2.out, "pointed: yes"));
}

TEST_CASE("dim5-check") {
    Run b = run({"dim5-check", "--case", "B"});
    CHECK(b.code == 0);
    std::size_t pos = 0;
    for (const char* step : {"gamma=1", "alpha=0", "zeta4=1", "mismatch uv - iota vs uv + iota", "INCONSISTENT"}) {
        std::size_t at = b.out.find(step, pos);
        CHECK_MESSAGE(at != std::string::npos, step);
        pos = at;
    }
    Run a = run({"dim5-check", "--case", "A"});
    CHECK(a.code == 0);
    CHECK(contains(a.out, "g=1"));
    CHECK(contains(a.out, "INCONSISTENT"));
    Run c = run({"dim5-check", "--case", "C"});
    CHECK(contains(c.out, "mismatch uv - 2*iota vs uv + iota"));
}

TEST_CASE("output is deterministic") {
    std::string p1 = file("d1.json"), p2 = file("d2.json");
    run({"construct", "a_tau_mu", "--p", "3", "--q", "2", "--mu", "1", "-o", p1});
    run({"construct", "a_tau_mu", "--p", "3", "--q", "2", "--mu", "1", "-o", p2});
    CHECK(slurp(p1) == slurp(p2));
    CHECK(run({"invariants", p1}).out == run({"invariants", p2}).out);
    CHECK(run({"dim5-check", "--case", "C"}).out == run({"dim5-check", "--case", "C"}).out);
}
