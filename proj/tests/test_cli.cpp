// CLI tests, run in-process against cli::run with captured streams: the exit
// code contract (0 / 2 / 3), the golden expansions, JSON round-tripping, and
// the results cache under QMORDELL_CACHE_DIR.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmordell/cli.hpp"
#include "qmordell/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qmordell;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// a scoped temporary directory wired into QMORDELL_CACHE_DIR
struct CacheDirGuard {
    fs::path dir;
    CacheDirGuard() {
        dir = fs::temp_directory_path() / ("qmordell-test-" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        ::setenv("QMORDELL_CACHE_DIR", dir.c_str(), 1);
    }
    ~CacheDirGuard() {
        ::unsetenv("QMORDELL_CACHE_DIR");
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

}  // namespace

TEST_CASE("expand: golden coefficient rows") {
    const RunResult zp = run_cli({"expand", "zp", "--p", "3", "--depth", "8"});
    CHECK(zp.code == 0);
    CHECK(contains(zp.out, "coefficients: [1, 2, 0, 2, 6, 0, 0, 4]"));
    CHECK(contains(zp.out, "valuation: 0"));
    CHECK(contains(zp.out, "order: 8"));

    const RunResult phi = run_cli({"expand", "phi", "--depth", "5"});
    CHECK(phi.code == 0);
    CHECK(contains(phi.out, "[1, 2, 0, 0, 2]"));

    const RunResult eta = run_cli({"expand", "eta", "--eta", "1:6,3:6", "--depth", "6"});
    CHECK(eta.code == 0);
    CHECK(contains(eta.out, "valuation: 1"));
}

TEST_CASE("expand: usage errors exit 2") {
    const RunResult bad_p = run_cli({"expand", "zp", "--p", "5"});
    CHECK(bad_p.code == 2);
    CHECK(contains(bad_p.err, "p must be one of 3,7,11,23"));

    const RunResult unknown = run_cli({"expand", "warble"});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown series name"));

    const RunResult half = run_cli({"expand", "ztp", "--p", "3", "--arg-mult", "1", "--depth", "20"});
    CHECK(half.code == 2);
    CHECK(contains(half.err, "arg_mult = 2"));

    CHECK(run_cli({"expand", "eta", "--eta", "garbage", "--depth", "10"}).code == 2);
    CHECK(run_cli({"expand", "zp", "--p", "3", "--depth", "0"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);  // a subcommand is required
}

TEST_CASE("json output round-trips byte-identically") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"expand", "xp", "--p", "7", "--depth", "30", "--format", "json"},
          std::vector<std::string>{"expand", "xtp", "--p", "3", "--k", "2", "--depth", "12",
                                   "--format", "json"},
          std::vector<std::string>{"solve", "--p", "7", "--k", "3", "--format", "json"}}) {
        const RunResult r = run_cli(args);
        REQUIRE(r.code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
    // and through the typed deserializer as well
    const RunResult r = run_cli({"expand", "zp", "--p", "11", "--depth", "25", "--format", "json"});
    const QSeries s = qseries_from_json(nlohmann::json::parse(r.out));
    CHECK(to_json(s).dump(2) + "\n" == r.out);
    CHECK(s.order() == 25);
    CHECK(s.coefficient(11) == Rational(2));
}

TEST_CASE("solve: text contract and exit codes") {
    const RunResult plain = run_cli({"solve", "--p", "3", "--k", "4"});
    CHECK(plain.code == 0);
    CHECK(contains(plain.out, "c_1 = 32/5"));
    CHECK(contains(plain.out, "residual=ok"));

    const RunResult tilde = run_cli({"solve", "--p", "3", "--k", "4", "--tilde"});
    CHECK(tilde.code == 0);
    CHECK(contains(tilde.out, "ctilde_1 = -1/10"));
    CHECK(contains(tilde.out, "relation=ok"));

    const RunResult classical = run_cli({"solve", "--classical", "--k", "2"});
    CHECK(classical.code == 0);
    CHECK(contains(classical.out, "constants: none"));

    CHECK(run_cli({"solve", "--p", "5", "--k", "1"}).code == 2);
    CHECK(run_cli({"solve", "--k", "1"}).code == 2);  // needs --p or --classical
    CHECK(run_cli({"solve", "--classical", "--k", "2", "--tilde"}).code == 2);
    CHECK(run_cli({"solve", "--p", "3"}).code == 2);  // --k is required
    // depth too small to determine the constants
    CHECK(run_cli({"solve", "--p", "3", "--k", "6", "--depth", "3"}).code == 2);
}

TEST_CASE("solve: csv format") {
    const RunResult r = run_cli({"solve", "--p", "7", "--k", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "j,value\n1,21/4\n2,-6\n");
}

TEST_CASE("solve: depth monotonicity of the constants") {
    const RunResult d40 = run_cli({"solve", "--p", "3", "--k", "3", "--depth", "40", "--format", "csv"});
    const RunResult d80 = run_cli({"solve", "--p", "3", "--k", "3", "--depth", "80", "--format", "csv"});
    CHECK(d40.code == 0);
    CHECK(d80.code == 0);
    CHECK(d40.out == d80.out);
}

TEST_CASE("rep: representation count rows") {
    const RunResult r = run_cli({"rep", "--p", "7", "--max", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=0, count=1"));
    CHECK(contains(r.out, "n=8, count=4"));
    CHECK(contains(r.out, "n=10, count=0"));

    const RunResult tri = run_cli({"rep", "--p", "3", "--max", "6", "--tri", "--format", "csv"});
    CHECK(tri.code == 0);
    CHECK(contains(tri.out, "n,count"));
    CHECK(contains(tri.out, "3,2"));  // tri_count(3,3) = 2

    CHECK(run_cli({"rep", "--p", "6", "--max", "5"}).code == 2);
    CHECK(run_cli({"rep", "--max", "5"}).code == 2);  // --p required
}

TEST_CASE("verify: ids, --all, and failure modes") {
    const RunResult two = run_cli({"verify", "s3k4", "t3k4", "--depth", "40"});
    CHECK(two.code == 0);
    CHECK(contains(two.out, "s3k4: pass"));
    CHECK(contains(two.out, "2/2 pass"));

    const RunResult all = run_cli({"verify", "--all", "--depth", "40"});
    CHECK(all.code == 0);
    CHECK(contains(all.out, "20/20 examples pass"));
    CHECK(contains(all.out, "27/27 lemma identities pass"));

    CHECK(run_cli({"verify", "nosuchid"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);                    // ids or --all
    CHECK(run_cli({"verify", "s3k1", "--all"}).code == 2);   // not both
    CHECK(run_cli({"verify", "s3k1", "--depth", "-3"}).code == 2);

    const RunResult json = run_cli({"verify", "s7k2", "--depth", "40", "--format", "json"});
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed.at("all_pass").get<bool>());
    CHECK(parsed.at("reports").size() == 1);
}

TEST_CASE("table: constants for all k up to --k-max") {
    const RunResult r = run_cli({"table", "--p", "3", "--k-max", "4", "--depth", "50"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "k=1: none"));
    CHECK(contains(r.out, "k=3: c_1 = 4"));
    CHECK(contains(r.out, "k=4: c_1 = 32/5"));

    const RunResult csv = run_cli({"table", "--p", "7", "--k-max", "3", "--depth", "60",
                                   "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(contains(csv.out, "p,k,j,value"));
    CHECK(contains(csv.out, "7,2,1,8/3"));
    CHECK(contains(csv.out, "7,3,2,-6"));

    CHECK(run_cli({"table", "--k-max", "2"}).code == 2);  // --p required
}

TEST_CASE("--output writes the body to a file") {
    const fs::path path = fs::temp_directory_path() / "qmordell-cli-out.txt";
    fs::remove(path);
    const RunResult r = run_cli({"expand", "phi", "--depth", "5", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(contains(content.str(), "[1, 2, 0, 0, 2]"));
    fs::remove(path);
}

TEST_CASE("results cache: store, reuse, and key layout") {
    CacheDirGuard guard;
    const RunResult first = run_cli({"solve", "--p", "7", "--k", "3", "--format", "json"});
    REQUIRE(first.code == 0);
    const fs::path file = guard.dir / "results.json";
    REQUIRE(fs::exists(file));

    std::ifstream in(file);
    nlohmann::json stored;
    in >> stored;
    REQUIRE(stored.contains("7:3"));
    CHECK(stored["7:3"]["constants"][0]["value"] == "21/4");

    // second run must reproduce the identical output from the cache
    const RunResult second = run_cli({"solve", "--p", "7", "--k", "3", "--format", "json"});
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    // tilde and classical use distinct keys
    CHECK(run_cli({"solve", "--p", "7", "--k", "3", "--tilde"}).code == 0);
    CHECK(run_cli({"solve", "--classical", "--k", "5"}).code == 0);
    std::ifstream in2(file);
    nlohmann::json stored2;
    in2 >> stored2;
    CHECK(stored2.contains("7:3"));
    CHECK(stored2.contains("7:3:tilde"));
    CHECK(stored2.contains("classical:5"));

    // a different depth is a cache miss, not a stale hit
    const RunResult deeper = run_cli({"solve", "--p", "7", "--k", "3", "--depth", "99",
                                      "--format", "json"});
    CHECK(deeper.code == 0);
    CHECK(contains(deeper.out, "\"verified_depth\": 99"));
}

TEST_CASE("cache corruption is tolerated") {
    CacheDirGuard guard;
    {
        std::ofstream out(guard.dir / "results.json");
        out << "{ not json";
    }
    const RunResult r = run_cli({"solve", "--p", "3", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "c_1 = 4"));
}
