// zpw: batch computations on subsets of Z_p with machine-readable output.
//
// Exit codes: 0 success, 1 property violation (a must-hold check failed),
// 2 usage or validation error.

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zpw/bounds.hpp"
#include "zpw/dlvp.hpp"
#include "zpw/energy.hpp"
#include "zpw/json_io.hpp"
#include "zpw/parallel.hpp"
#include "zpw/scattered.hpp"
#include "zpw/spectral.hpp"
#include "zpw/structure.hpp"
#include "zpw/suites.hpp"
#include "zpw/zp_set.hpp"

namespace {

using zpw::io::json;

struct Common {
  std::int64_t p = 0;
  std::string set_literal;
  std::string set_file;
  std::uint64_t seed = 1;
  bool seed_given = false;
  int threads = 0;
  std::string format = "json";
  std::string precision = "float64";
};

void add_prime(CLI::App* cmd, Common& c, bool required) {
  auto* opt = cmd->add_option("-p,--prime", c.p, "odd prime modulus");
  if (required) opt->required();
}

void add_set(CLI::App* cmd, Common& c) {
  cmd->add_option("--set", c.set_literal,
                  "set literal, comma-separated residues (e.g. 0,1,4)");
  cmd->add_option("--set-file", c.set_file,
                  "file with one integer per line, '#' comments allowed");
}

void add_output(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  cmd->add_option("--threads", c.threads, "worker thread cap (0 = hardware)");
  cmd->add_option("--precision", c.precision, "accumulation precision")
      ->check(CLI::IsMember({"float64", "extended"}));
  cmd->add_option("--seed", c.seed, "seed for randomized procedures")
      ->trigger_on_parse()
      ->each([&c](const std::string&) { c.seed_given = true; });
}

zpw::PrimeContext make_context(const Common& c) {
  const auto policy = c.precision == "extended"
                          ? zpw::PrecisionPolicy::extended
                          : zpw::PrecisionPolicy::float64;
  return zpw::PrimeContext(c.p, policy);
}

zpw::ZpSet load_set(const zpw::PrimeContext& ctx, const Common& c) {
  if (!c.set_file.empty()) return zpw::read_set_file(ctx, c.set_file);
  if (!c.set_literal.empty()) return zpw::parse_set_literal(ctx, c.set_literal);
  throw std::invalid_argument("need --set or --set-file");
}

void apply_threads(const Common& c) { zpw::set_worker_threads(c.threads); }

void emit(const json& doc, const Common& c) {
  if (c.format == "csv")
    throw std::invalid_argument(
        "csv output is only defined for the search command");
  if (c.format == "human") {
    for (const auto& [key, value] : doc.items()) {
      if (key == "schema" || key == "command") continue;
      std::cout << key << ": " << value.dump() << "\n";
    }
    return;
  }
  std::cout << doc.dump(2) << "\n";
}

int cmd_norm(const Common& c, bool with_spectrum) {
  apply_threads(c);
  auto ctx = make_context(c);
  auto A = load_set(ctx, c);
  auto nr = zpw::wiener_norm(A);
  json doc = zpw::io::make_document("norm");
  doc["p"] = c.p;
  doc["set"] = A.members();
  doc.update(zpw::io::json_norm(nr));
  if (with_spectrum) doc["spectrum"] = zpw::io::json_spectrum(
      zpw::indicator_spectrum(A));
  emit(doc, c);
  return 0;
}

int cmd_energy(const Common& c, int k, const std::string& domain,
               bool spectral) {
  apply_threads(c);
  auto ctx = make_context(c);
  auto A = load_set(ctx, c);
  zpw::EnergyReport rep;
  if (domain == "z") {
    auto reps = A.signed_members();
    rep = zpw::nk_profile(std::span<const std::int64_t>(reps), k);
  } else {
    rep = zpw::nk_profile(A, k);
  }
  if (spectral) {
    if (domain == "z")
      throw std::invalid_argument(
          "--spectral applies to the residue domain only");
    auto est = zpw::t_k_spectral(A, k);
    rep.spectral_estimate = est.value;
  }
  json doc = zpw::io::make_document("energy");
  doc["p"] = c.p;
  doc["set"] = A.members();
  doc.update(zpw::io::json_energy(rep));
  emit(doc, c);
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite, int trials,
               const std::string& primes_csv) {
  apply_threads(c);
  zpw::SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = c.seed;
  if (!primes_csv.empty()) cfg.primes = zpw::parse_int_list(primes_csv);
  if (c.p != 0) cfg.primes.push_back(c.p);
  for (std::int64_t q : cfg.primes)
    zpw::PrimeContext probe(q);  // reject non-primes before the suite runs
  auto res = zpw::run_suite(suite, cfg);
  if (c.format == "human") {
    std::cout << res.name << ": " << res.trials << " trials, " << res.failures
              << " failures -> " << (res.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& n : res.notes) std::cout << "  " << n << "\n";
  } else {
    json doc = zpw::io::make_document("verify");
    doc["seed"] = c.seed;
    doc.update(zpw::io::json_suite(res));
    emit(doc, c);
  }
  return res.passed() ? 0 : 1;
}

int cmd_trace(const Common& c, double eps, double C,
              std::optional<int> k_override) {
  apply_threads(c);
  auto ctx = make_context(c);
  auto A = load_set(ctx, c);
  auto rep = zpw::trace_theorem3(A, eps, C, k_override);
  json doc = zpw::io::make_document("trace");
  doc.update(zpw::io::json_trace(rep));
  emit(doc, c);
  for (const auto& q : rep.inequalities)
    if (q.must_hold && !q.holds) return 1;
  return 0;
}

int cmd_search(const Common& c, std::int64_t n, const std::string& strategy,
               std::int64_t budget, bool orbit_reduce) {
  apply_threads(c);
  const auto strat = strategy == "local" ? zpw::SearchStrategy::local_search
                                         : zpw::SearchStrategy::exhaustive;
  if (strat == zpw::SearchStrategy::local_search && !c.seed_given &&
      c.format != "human")
    throw std::invalid_argument(
        "local search in machine-readable mode needs an explicit --seed");
  auto ctx = make_context(c);
  auto res = zpw::extremal_search(ctx, n, strat, c.seed, budget, orbit_reduce);
  if (c.format == "csv") {
    std::cout << zpw::io::csv_search(c.p, n, strategy, res);
  } else if (c.format == "human") {
    std::cout << "best_norm: " << res.best_norm << " (err <= " << res.err_bound
              << ")\nbest_set:";
    for (auto v : res.best_set) std::cout << ' ' << v;
    std::cout << "\nevaluated: " << res.evaluated << "\n";
  } else {
    json doc = zpw::io::make_document("search");
    doc["seed"] = c.seed;
    doc.update(zpw::io::json_search(c.p, n, strategy, res));
    emit(doc, c);
  }
  return 0;
}

int cmd_dilate(const Common& c, const std::string& gens_csv,
               const std::string& targets_csv) {
  apply_threads(c);
  auto ctx = make_context(c);
  auto gens = zpw::parse_int_list(gens_csv);
  auto targets = zpw::parse_int_list(targets_csv);
  auto witness = zpw::find_dilate(ctx, gens, targets);
  json doc = zpw::io::make_document("dilate");
  doc["p"] = c.p;
  doc.update(zpw::io::json_dilate(gens, targets,
                                  witness ? &*witness : nullptr));
  emit(doc, c);
  return 0;
}

int cmd_gap(const Common& c, const std::string& literal, bool cover) {
  apply_threads(c);
  auto ctx = make_context(c);
  if (cover) {
    if (!literal.empty())
      throw std::invalid_argument("--cover and --gap are mutually exclusive");
    auto A = load_set(ctx, c);
    auto r = zpw::best_ap_cover(A);
    json doc = zpw::io::make_document("gap-cover");
    doc["p"] = c.p;
    doc["set"] = A.members();
    doc.update(zpw::io::json_ap_cover(r));
    emit(doc, c);
    return 0;
  }
  if (literal.empty())
    throw std::invalid_argument("need a --gap literal (or --cover with a set)");
  auto P = zpw::parse_gap_literal(ctx, literal);
  zpw::validate_gap(ctx, P);
  auto e = zpw::gap_enumerate(ctx, P);
  json doc = zpw::io::make_document("gap");
  doc["p"] = c.p;
  doc.update(zpw::io::json_gap(P, e));
  emit(doc, c);
  return 0;
}

int cmd_vdp_check(const Common& c, std::int64_t n) {
  apply_threads(c);
  auto ctx = make_context(c);
  auto V = zpw::vdp_polynomial(n, ctx);
  auto S = zpw::evaluate(V);
  auto nr = zpw::wiener_norm_poly(V);
  json doc = zpw::io::make_document("vdp-check");
  doc["p"] = c.p;
  doc["n"] = n;
  doc["value_at_zero"] = S.values[0].real();
  doc["norm"] = nr.value;
  doc["err_bound"] = nr.err_bound;
  doc["bound"] = 3.0 * static_cast<double>(c.p);
  const bool holds = nr.value <= 3.0 * static_cast<double>(c.p) + nr.err_bound;
  doc["holds"] = holds;
  emit(doc, c);
  return holds ? 0 : 1;
}

int cmd_quad(const Common& c, const std::string& freqs_csv,
             const std::string& coeffs_csv) {
  apply_threads(c);
  auto freqs = zpw::parse_int_list(freqs_csv);
  auto coeff_ints = zpw::parse_int_list(coeffs_csv);
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(coeff_ints.size());
  for (auto v : coeff_ints) coeffs.emplace_back(static_cast<double>(v), 0.0);
  auto res = zpw::continuous_l1(freqs, coeffs);
  json doc = zpw::io::make_document("quad");
  doc["frequencies"] = freqs;
  doc["coefficients"] = coeff_ints;
  doc.update(zpw::io::json_quad(res));
  emit(doc, c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener norm, additive energy, and structure computations "
               "on subsets of Z_p"};
  app.require_subcommand(1);

  Common c_norm, c_energy, c_verify, c_trace, c_search, c_dilate, c_gap,
      c_vdp, c_quad;

  auto* norm = app.add_subcommand("norm", "spectrum L1 norm of a set");
  add_prime(norm, c_norm, true);
  add_set(norm, c_norm);
  add_output(norm, c_norm, "json");
  bool with_spectrum = false;
  norm->add_flag("--spectrum", with_spectrum, "include the full spectrum");

  auto* energy = app.add_subcommand("energy", "k-fold representation energy");
  add_prime(energy, c_energy, true);
  add_set(energy, c_energy);
  add_output(energy, c_energy, "json");
  int k = 2;
  std::string domain = "zp";
  bool spectral = false;
  energy->add_option("-k", k, "fold count")->check(CLI::Range(1, 16));
  energy->add_option("--domain", domain, "zp = residues, z = integers")
      ->check(CLI::IsMember({"zp", "z"}));
  energy->add_flag("--spectral", spectral, "attach the spectral estimate");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  int trials = 0;
  std::string primes_csv;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--trials", trials, "trial count (0 = suite default)");
  verify->add_option("--primes", primes_csv, "comma-separated prime list");
  add_prime(verify, c_verify, false);
  add_output(verify, c_verify, "json");

  auto* trace = app.add_subcommand("trace", "instrumented proof pipeline");
  add_prime(trace, c_trace, true);
  add_set(trace, c_trace);
  add_output(trace, c_trace, "json");
  double eps = 0.1, C = 1.0;
  std::optional<int> k_override;
  int k_override_raw = -1;
  trace->add_option("--eps", eps, "shell exponent offset, >= 0");
  trace->add_option("--C", C, "density exponent constant, > 0");
  trace->add_option("--k-override", k_override_raw,
                    "force the fold count in the scattered branch");

  auto* search = app.add_subcommand("search", "minimal-norm n-subset search");
  add_prime(search, c_search, true);
  add_output(search, c_search, "csv");
  std::int64_t n_search = 0;
  std::string strategy = "exhaustive";
  std::int64_t budget = 10000;
  bool orbit_reduce = false;
  search->add_option("-n", n_search, "subset size")->required();
  search->add_option("--strategy", strategy, "search strategy")
      ->check(CLI::IsMember({"exhaustive", "local"}));
  search->add_option("--budget", budget, "evaluation budget");
  search->add_flag("--orbit-reduce", orbit_reduce,
                   "pin 0 and 1 into the subset (affine orbit representative)");

  auto* dilate = app.add_subcommand("dilate", "smallest shrinking dilation");
  add_prime(dilate, c_dilate, true);
  add_output(dilate, c_dilate, "json");
  std::string gens_csv, targets_csv;
  dilate->add_option("--gens", gens_csv, "generators, comma-separated")
      ->required();
  dilate->add_option("--targets", targets_csv,
                     "window radii, comma-separated")->required();

  auto* gap = app.add_subcommand("gap", "enumerate a progression literal");
  add_prime(gap, c_gap, true);
  add_set(gap, c_gap);
  add_output(gap, c_gap, "json");
  std::string gap_literal;
  bool gap_cover = false;
  gap->add_option("--gap", gap_literal, "literal 'x0; x1,..,xd; w1,..,wd'");
  gap->add_flag("--cover", gap_cover,
                "scan dilations for the best single-progression cover of the set");

  auto* vdp = app.add_subcommand("vdp-check", "taper kernel norm check");
  add_prime(vdp, c_vdp, true);
  add_output(vdp, c_vdp, "json");
  std::int64_t n_vdp = 1;
  vdp->add_option("-n", n_vdp, "plateau radius, 4n <= p")->required();

  auto* quad = app.add_subcommand("quad", "L1 quadrature of a trig polynomial");
  add_output(quad, c_quad, "json");
  std::string freqs_csv, coeffs_csv;
  quad->add_option("--freqs", freqs_csv, "integer frequencies")->required();
  quad->add_option("--coeffs", coeffs_csv, "integer coefficients")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*norm) return cmd_norm(c_norm, with_spectrum);
    if (*energy) return cmd_energy(c_energy, k, domain, spectral);
    if (*verify) return cmd_verify(c_verify, suite, trials, primes_csv);
    if (*trace) {
      if (trace->count("--k-override")) k_override = k_override_raw;
      return cmd_trace(c_trace, eps, C, k_override);
    }
    if (*search)
      return cmd_search(c_search, n_search, strategy, budget, orbit_reduce);
    if (*dilate) return cmd_dilate(c_dilate, gens_csv, targets_csv);
    if (*gap) return cmd_gap(c_gap, gap_literal, gap_cover);
    if (*vdp) return cmd_vdp_check(c_vdp, n_vdp);
    if (*quad) return cmd_quad(c_quad, freqs_csv, coeffs_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
