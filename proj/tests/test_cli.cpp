#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "autoseq/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"autoseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = autoseq::cli::run(static_cast<int>(argv.size()), argv.data(),
                               out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("eval prints exact values") {
  auto r = run({"eval", "thue_morse", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval", "thue_morse", "1"}).out == "1@1/2\n");
  CHECK(run({"eval", "constant:1", "0"}).out == "1\n");
  CHECK(run({"eval", "dirichlet:5:2=i", "7"}).out == "1@1/4\n");
  CHECK(run({"eval", "ap_indicator:1,4", "5"}).out == "1\n");
  CHECK(run({"eval", "ap_indicator:1,4", "6"}).out == "0\n");
  CHECK(run({"eval", "periodic:0,1,1", "--base", "3", "4"}).out == "1\n");
}

TEST_CASE("eval on a malformed file exits 2 naming the field") {
  TempFile file("missing_base.json", R"({
    "schema_version": 1, "kind": "dfao", "digit_order": "lsb",
    "states": ["s0"], "initial": "s0",
    "transitions": {"s0": ["s0", "s0"]}, "output": {"s0": "0"}
  })");
  auto r = run({"eval", file.path, "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("missing field: base") != std::string::npos);
}

TEST_CASE("eval loads machines from files") {
  auto canonical = run({"minimize", "thue_morse"});
  REQUIRE(canonical.code == 0);
  TempFile file("tm.json", canonical.out);
  CHECK(run({"eval", file.path, "6"}).out == "1\n");
  CHECK(run({"eval", file.path, "1"}).out == "1@1/2\n");
}

TEST_CASE("kernel golden output") {
  auto r = run({"kernel", "thue_morse"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "schema_version: 1\n"
        "kind: kernel\n"
        "s0: 2\n"
        "s0_with_identity: 2\n"
        "k0: 4\n"
        "representatives[0].i: 1\n"
        "representatives[0].r: 0\n"
        "representatives[1].i: 1\n"
        "representatives[1].r: 1\n");
}

TEST_CASE("equal command and exit codes") {
  auto same = run({"equal", "thue_morse", "thue_morse"});
  CHECK(same.code == 0);
  CHECK(same.out == "equal\n");
  auto diff = run({"equal", "constant:1", "power_indicator:2"});
  CHECK(diff.code == 1);
  CHECK(diff.out == "counterexample: 0\n");
}

TEST_CASE("minimized machine equals the original") {
  auto canonical = run({"minimize", "thue_morse"});
  TempFile file("tm_min.json", canonical.out);
  auto r = run({"equal", file.path, "thue_morse"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
}

TEST_CASE("check-mult exit codes") {
  CHECK(run({"check-mult", "constant:1", "--N", "1000"}).code == 0);
  auto r = run({"check-mult", "thue_morse", "--N", "100"});
  CHECK(r.code == 1);
  CHECK(r.out.find("status: counterexample\n") != std::string::npos);
  CHECK(r.out.find("witness_m: 2\n") != std::string::npos);
  CHECK(r.out.find("witness_n: 3\n") != std::string::npos);
}

TEST_CASE("classify golden outcomes and exit codes") {
  auto chi = run({"classify", "dirichlet:5:2=i"});
  CHECK(chi.code == 0);
  CHECK(chi.out.find("variant: character\n") != std::string::npos);
  CHECK(chi.out.find("Q: 5\n") != std::string::npos);

  auto tm = run({"classify", "thue_morse"});
  CHECK(tm.code == 1);
  CHECK(tm.out.find("variant: not_multiplicative\n") != std::string::npos);
  CHECK(tm.out.find("witness_m: 2\n") != std::string::npos);

  auto pow2 = run({"classify", "power_indicator:2", "--P", "10000"});
  CHECK(pow2.code == 0);
  CHECK(pow2.out.find("variant: vanishing_on_large_primes\n") !=
        std::string::npos);
  CHECK(pow2.out.find("exceptional: 2\n") != std::string::npos);

  // A starved character search drops to the inconclusive branch.
  auto starved = run({"classify", "dirichlet:5:2=i", "--Qmax", "3", "--P",
                      "1000"});
  CHECK(starved.code == 1);
  CHECK(starved.out.find("variant: inconclusive\n") != std::string::npos);
}

TEST_CASE("probe golden output") {
  auto r = run({"probe", "power_indicator:2", "--A", "1", "--C", "1", "--m0",
                "1", "--r", "0"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "schema_version: 1\n"
        "kind: probe\n"
        "A: 1\n"
        "C: 1\n"
        "m0: 1\n"
        "r: 0\n"
        "preperiod: (none)\n"
        "period: 1\n");
}

TEST_CASE("proof subcommands") {
  auto rA = run({"proof", "build-rA", "--primes", "3,5", "--q", "2", "--A",
                 "15"});
  CHECK(rA.code == 0);
  CHECK(rA.out.find("r_A: 94\n") != std::string::npos);

  auto lte = run({"proof", "lte-witness", "--p", "3", "--q", "2", "--A", "1",
                  "--C", "1", "--m0", "1", "--r", "1", "--k", "2"});
  CHECK(lte.code == 0);
  CHECK(lte.out.find("n_k: 2\n") != std::string::npos);

  auto lte_fail = run({"proof", "lte-witness", "--p", "7", "--q", "2", "--A",
                       "0", "--C", "1", "--m0", "1", "--r", "1", "--k", "1"});
  CHECK(lte_fail.code == 1);

  auto patch = run({"proof", "unit-patch", "--q", "2", "--alpha", "2",
                    "--alpha1", "3", "--Y", "5:1"});
  CHECK(patch.code == 0);
  CHECK(patch.out.find("full_coverage: true\n") != std::string::npos);

  auto uncovered = run({"proof", "unit-patch", "--q", "2", "--alpha", "1",
                        "--alpha1", "3"});
  CHECK(uncovered.code == 1);
  CHECK(uncovered.out.find("coverage_missing: 3 5 7\n") != std::string::npos);

  auto shifts = run({"proof", "find-shifts", "constant:1", "--r", "1", "--A",
                     "1"});
  CHECK(shifts.code == 0);
  CHECK(shifts.out.find("i: 2\n") != std::string::npos);
  CHECK(shifts.out.find("j: 3\n") != std::string::npos);

  auto geom = run({"proof", "find-geometric", "power_indicator:2", "--r",
                   "1"});
  CHECK(geom.code == 1);
  CHECK(geom.out.find("found: false\n") != std::string::npos);

  auto stats = run({"proof", "alpha-stats", "constant:1", "--P", "100"});
  CHECK(stats.code == 0);
  CHECK(stats.out.find("histogram.1: 13\n") != std::string::npos);
}

TEST_CASE("json format is valid and stable") {
  auto r = run({"classify", "dirichlet:5:2=i", "--format", "json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["variant"] == "character");
  CHECK(doc["Q"] == "5");
  CHECK(doc["character"]["values"]["2"] == "1/4");
  auto again = run({"classify", "dirichlet:5:2=i", "--format", "json"});
  CHECK(again.out == r.out);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* spec : {"thue_morse", "rudin_shapiro", "power_indicator:2",
                           "dirichlet:5:2=i"}) {
    auto a = run({"classify", spec, "--P", "10000", "--format", "json"});
    auto b = run({"classify", spec, "--P", "10000", "--format", "json"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"eval", "unknown_generator:3", "1"}).code == 2);
  CHECK(run({"eval", "thue_morse", "1", "--base", "3"}).code == 2);
  CHECK(run({"eval", "thue_morse:bogus", "1"}).code == 2);
  CHECK(run({"eval", "dirichlet:5:2=q", "1"}).code == 2);
  CHECK(run({"eval", "dirichlet:8:3=-1", "1"}).code == 2);  // not generating
  CHECK(run({"classify", "periodic:"}).code == 2);
  CHECK(run({"probe", "thue_morse", "--A", "1", "--C", "1", "--r", "2"})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
}
