#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fvslab/families.hpp"
#include "fvslab/report.hpp"

using namespace fvslab;

// End-to-end runs of the installed CLI binary. The test binary sits next to
// fvslab in the build tree; ctest runs from the build directory.
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FVSLAB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string tmp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("round trips: pdg, psk, cf survive print/parse") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    PlaneDigraph g = gen_random_plane_digraph(8, 31 + seed);
    CHECK(structurally_equal(g, parse_pdg_string(print_pdg(g))));
    Skeleton s = gen_random_skeleton(6, 87 + seed);
    CHECK(print_psk(parse_psk_string(print_psk(s))) == print_psk(s));
    Rng rng(seed);
    CoatingFunction h = gen_random_coating_function(s, rng);
    CHECK(parse_cf_string(print_cf(s, h), s) == h);
  }
}

TEST_CASE("report schema is stable (golden)") {
  VerificationReport r;
  r.command = "demo";
  r.pass("alpha", "1", "1", "thm");
  r.add("beta", false, "2", "3");
  r.skipped("gamma", "budget");
  r.elapsed_ms = 7;
  const std::string golden = R"({
  "report_v": 1,
  "command": "demo",
  "checks": [
    {
      "name": "alpha",
      "status": "pass",
      "expected": "1",
      "actual": "1",
      "citation": "thm"
    },
    {
      "name": "beta",
      "status": "fail",
      "expected": "2",
      "actual": "3"
    },
    {
      "name": "gamma",
      "status": "skipped",
      "actual": "budget"
    }
  ],
  "elapsed_ms": 7
})";
  CHECK(r.to_json() == golden);
  CHECK(!r.all_pass());
  CHECK(r.any_skipped());
}

TEST_CASE("cli: gen/verify/solve round trip with exit codes") {
  auto c5 = tmp_path("c5.pdg");
  auto gen = run("gen dicycle --g 5 -o " + c5 + " --claims " + tmp_path("c5.json"));
  CHECK(gen.exit_code == 0);
  CHECK(run("verify digirth " + c5 + " --expect 5").exit_code == 0);
  CHECK(run("verify digirth " + c5 + " --expect 6").exit_code == 2);
  CHECK(run("verify digirth no_such_file.pdg").exit_code == 4);

  auto solve = run("solve fvs " + c5);
  CHECK(solve.exit_code == 0);
  auto j = nlohmann::json::parse(solve.out);
  CHECK(j["size"] == 1);
  CHECK(j["optimal"] == true);

  auto oracle = run("solve fvs " + c5 + " --oracle");
  CHECK(nlohmann::json::parse(oracle.out)["size"] == 1);

  // Claims sidecar parses and carries the family tag.
  std::ifstream claims(tmp_path("c5.json"));
  auto cj = nlohmann::json::parse(claims);
  CHECK(cj["family"] == "dicycle");
}

TEST_CASE("cli: normal verification with --jobs merges deterministically") {
  auto o2 = tmp_path("o2.pdg");
  auto o3 = tmp_path("o3.pdg");
  REQUIRE(run("gen ok --k 2 -o " + o2).exit_code == 0);
  REQUIRE(run("gen ok --k 3 -o " + o3).exit_code == 0);
  auto serial = run("verify normal " + o2 + " " + o3);
  auto parallel = run("verify --jobs 2 normal " + o2 + " " + o3);
  CHECK(serial.exit_code == 0);
  auto js = nlohmann::json::parse(serial.out);
  auto jp = nlohmann::json::parse(parallel.out);
  CHECK(js["checks"] == jp["checks"]);
}

TEST_CASE("cli: coat, search coating, verify coating and recursive") {
  auto skel = tmp_path("ring.psk");
  Skeleton ring = skeleton_of(gen_dicycle(4).graph);
  {
    std::ofstream out(skel);
    out << print_psk(ring);
  }
  auto cf = tmp_path("ring.cf");
  CHECK(run("search coating " + skel + " --g 5 -o " + cf).exit_code == 0);
  CHECK(run("verify coating " + skel + " " + cf).exit_code == 0);
  auto coat = run("coat " + skel + " " + cf + " -o " + tmp_path("ring_coating.pdg"));
  CHECK(coat.exit_code == 0);
  CHECK(run("verify digirth " + tmp_path("ring_coating.pdg") + " --expect 5").exit_code == 0);
  // Chain family certificate via json.
  {
    std::ofstream out(tmp_path("fam6.json"));
    SmallDigirthFamily fam = gen_small_digirth_family(6, 1);
    nlohmann::json j;
    j["base_g"] = 6;
    j["class_values"] = fam.base.values;
    out << j.dump();
  }
  CHECK(run("verify recursive " + tmp_path("fam6.json") + " --g 6").exit_code == 0);
}

TEST_CASE("cli: arboricity, tau, svg determinism") {
  auto skel = tmp_path("glk.psk");
  REQUIRE(run("gen glk --k 1 --l 1 -o " + skel).exit_code == 0);
  auto arbo = run("verify arboricity " + skel);
  CHECK(arbo.exit_code == 0);
  auto j = nlohmann::json::parse(arbo.out);
  CHECK(j["a_f"] == "12/7");
  bool has12 = false;
  for (auto& g : j["admissible_g"]) has12 |= g == 12;
  CHECK(has12);

  auto tau = run("report tau --from 6 --to 8");
  auto jt = nlohmann::json::parse(tau.out);
  CHECK(jt["tau"].size() == 3);
  CHECK(jt["tau"][1]["lower"] == "2/11");

  auto c4 = tmp_path("c4.pdg");
  REQUIRE(run("gen dicycle --g 4 -o " + c4).exit_code == 0);
  auto svg1 = run("dump svg " + c4);
  auto svg2 = run("dump svg " + c4);
  CHECK(svg1.out == svg2.out);  // byte-identical
  CHECK(svg1.out.find("<svg") == 0);
}
