#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using json = nlohmann::json;

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ZPW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json parse(const CliResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("norm emits a v1 document with the hand value") {
  auto r = run_cli("norm -p 3 --set 0,1");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["schema"] == "v1");
  CHECK(j["command"] == "norm");
  CHECK(j["p"] == 3);
  CHECK(j["set"] == json::array({0, 1}));
  CHECK(j["norm"].get<double>() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(j["err_bound"].get<double>() >= 0.0);
  CHECK_FALSE(j.contains("spectrum"));
}

TEST_CASE("spectrum flag attaches per-frequency rows") {
  auto r = run_cli("norm -p 3 --set 0,1 --spectrum");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  REQUIRE(j.contains("spectrum"));
  auto vals = j["spectrum"]["values"];
  REQUIRE(vals.size() == 3);
  CHECK(vals[0]["gamma"] == 0);
  CHECK(vals[0]["abs"].get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("set files ingest like literals") {
  {
    std::ofstream f("cli_pts.txt");
    f << "# sample points\n0\n1   # trailing comment\n\n  5\n";
  }
  auto file = run_cli("norm -p 11 --set-file cli_pts.txt");
  auto lit = run_cli("norm -p 11 --set 0,1,5");
  REQUIRE(file.code == 0);
  REQUIRE(lit.code == 0);
  CHECK(file.out == lit.out);
  std::remove("cli_pts.txt");
}

TEST_CASE("validation failures exit 2") {
  CHECK(run_cli("norm -p 9 --set 0,1").code == 2);        // composite modulus
  CHECK(run_cli("norm -p 7").code == 2);                  // no set given
  CHECK(run_cli("norm -p 3 --set 0,1 --format csv").code == 2);
  CHECK(run_cli("verify nosuchsuite").code == 2);
  CHECK(run_cli("search -p 13 -n 13 --strategy exhaustive --seed 1").code == 2);
  CHECK(run_cli("search -p 13 -n 3 --strategy foo --seed 1").code == 2);
  CHECK(run_cli("energy -p 5 --set 0,1 -k 99").code == 2);
  CHECK(run_cli("trace -p 101 --set 0,1 --eps -1").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("verify runs a suite and reports counters") {
  auto r = run_cli("verify parseval -p 13 --trials 3 --seed 5");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["command"] == "verify");
  CHECK(j["suite"] == "parseval");
  CHECK(j["seed"] == 5);
  CHECK(j["passed"] == true);
  CHECK(j["failures"] == 0);
  CHECK(j["trials"].get<int>() > 0);
}

TEST_CASE("quad reproduces the two-term integral") {
  auto r = run_cli("quad --freqs 0,1 --coeffs 1,1");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["command"] == "quad");
  CHECK(j["value"].get<double>() ==
        doctest::Approx(4.0 / 3.14159265358979323846).epsilon(1e-6));
  CHECK(j["converged"] == true);
}

TEST_CASE("energy supports both domains") {
  auto r = run_cli("energy -p 101 --set 0,1,5 -k 2 --domain z");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["domain"] == "integers");
  CHECK(j["t_k"] == "15");
  auto rr = run_cli("energy -p 5 --set 0,1 -k 2 --spectral");
  REQUIRE(rr.code == 0);
  auto jj = parse(rr);
  CHECK(jj["domain"] == "residues");
  CHECK(jj["t_k"] == "6");
  CHECK(jj.contains("spectral_estimate"));
  // spectral estimates are defined on residues only
  CHECK(run_cli("energy -p 5 --set 0,1 -k 2 --domain z --spectral").code == 2);
}

TEST_CASE("trace output is byte-stable and the branch is reported") {
  const std::string fixture =
      "trace -p 4801 --set 0,1,-1,-4,-11,-60,-233,-741 --eps 0 --C 0.35 "
      "--k-override 2";
  auto a = run_cli(fixture);
  auto b = run_cli(fixture);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = parse(a);
  CHECK(j["branch"] == "scattered");
  CHECK(j["scattered"]["t_k_integer"] == "45");

  auto d = run_cli("trace -p 101 --set 0,1 --eps 0.1 --C 1.0");
  REQUIRE(d.code == 0);
  CHECK(parse(d)["branch"] == "degenerate");
}

TEST_CASE("human format prints flat key-value lines") {
  auto r = run_cli("norm -p 3 --set 0,1 --format human");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("norm: ") != std::string::npos);
  CHECK(r.out.find("schema") == std::string::npos);
}

TEST_CASE("thread cap does not change results") {
  const std::string base =
      "search -p 13 -n 3 --strategy exhaustive --seed 1 --format json";
  auto one = run_cli(base + " --threads 1");
  auto two = run_cli(base + " --threads 2");
  REQUIRE(one.code == 0);
  CHECK(one.out == two.out);
}

TEST_CASE("search defaults to csv and reports bound columns") {
  auto r = run_cli("search -p 13 -n 3 --strategy exhaustive --seed 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.substr(0, 38) ==
        "p,n,strategy,best_norm,err_bound,bound");
  CHECK(r.out.find("13,3,exhaustive,") != std::string::npos);
  // heuristic runs in machine-readable modes demand a reproducible seed
  CHECK(run_cli("search -p 13 -n 3 --strategy local").code == 2);
  CHECK(run_cli("search -p 13 -n 3 --strategy local --format json").code == 2);
  auto ok = run_cli(
      "search -p 13 -n 3 --strategy local --seed 7 --budget 500 --format json");
  REQUIRE(ok.code == 0);
  auto j = parse(ok);
  CHECK(j["strategy"] == "local");
  CHECK(j["budget_exhausted"] == true);
  CHECK(j["best_norm"].get<double>() >= 1.0);
}

TEST_CASE("dilate reports hits and misses with exit 0") {
  auto hit = run_cli("dilate -p 11 --gens 3 --targets 1");
  REQUIRE(hit.code == 0);
  auto j = parse(hit);
  CHECK(j["found"] == true);
  CHECK(j["q"] == 4);
  auto miss = run_cli("dilate -p 11 --gens 1,2 --targets 1,1");
  REQUIRE(miss.code == 0);
  auto m = parse(miss);
  CHECK(m["found"] == false);
  CHECK_FALSE(m.contains("q"));
}

TEST_CASE("gap enumeration round-trips a literal") {
  auto r = run_cli("gap -p 31 --gap \"0; 1,10; 3,2\"");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["proper"] == true);
  CHECK(j["dimension"] == 2);
  CHECK(j["nominal_size"] == "6");
  CHECK(j["distinct_size"] == 6);
  CHECK(j["members"] == json::array({0, 1, 2, 10, 11, 12}));
}

TEST_CASE("gap --cover reports the best progression cover of a set") {
  // {0,3,6,9} is itself a 4-term progression of step 3, so the scan
  // must find a full cover.
  auto r = run_cli("gap -p 13 --set 0,3,6,9 --cover");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["command"] == "gap-cover");
  CHECK(j["p"] == 13);
  CHECK(j["step"] == 3);
  CHECK(j["base"] == 0);
  CHECK(j["length"] == 4);
  CHECK(j["captured"] == 4);
  CHECK(j["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gap requires either a literal or --cover") {
  auto r = run_cli("gap -p 13");
  CHECK(r.code == 2);
}

TEST_CASE("taper kernel check holds at the hand value") {
  auto r = run_cli("vdp-check -p 13 -n 1");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["value_at_zero"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(j["bound"].get<double>() == doctest::Approx(39.0));
  CHECK(j["holds"] == true);
}
