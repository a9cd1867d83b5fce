#include "zpw/json_io.hpp"

#include <cmath>
#include <sstream>

namespace zpw::io {

namespace {

std::string big_str(const BigInt& v) { return v.str(); }

json json_ineq(const IneqPair& q) {
  json j;
  j["name"] = q.name;
  j["lhs"] = q.lhs;
  j["rhs"] = q.rhs;
  j["relation"] = q.relation;
  j["must_hold"] = q.must_hold;
  j["holds"] = q.holds;
  if (!q.note.empty()) j["note"] = q.note;
  return j;
}

}  // namespace

json make_document(const std::string& command) {
  json j;
  j["schema"] = "v1";
  j["command"] = command;
  return j;
}

json json_norm(const NormResult& r) {
  json j;
  j["norm"] = r.value;
  j["err_bound"] = r.err_bound;
  return j;
}

json json_spectrum(const Spectrum& s) {
  json j;
  j["p"] = s.ctx.p();
  j["err_bound_per_value"] = s.err_bound;
  json vals = json::array();
  for (Eigen::Index g = 0; g < s.values.size(); ++g) {
    json row;
    row["gamma"] = static_cast<std::int64_t>(g);
    row["re"] = s.values[g].real();
    row["im"] = s.values[g].imag();
    row["abs"] = std::abs(s.values[g]);
    vals.push_back(std::move(row));
  }
  j["values"] = std::move(vals);
  return j;
}

json json_energy(const EnergyReport& r) {
  json j;
  j["k"] = r.k;
  j["domain"] = r.domain == Domain::residues ? "residues" : "integers";
  j["t_k"] = big_str(r.t_k);
  j["profile_mass"] = big_str(r.profile_mass());
  j["max_count"] = big_str(r.max_count());
  json prof = json::array();
  for (const auto& [x, c] : r.nk_profile) {
    json row;
    row["x"] = x;
    row["count"] = big_str(c);
    prof.push_back(std::move(row));
  }
  j["profile"] = std::move(prof);
  if (r.spectral_estimate) j["spectral_estimate"] = *r.spectral_estimate;
  return j;
}

json json_suite(const SuiteResult& r) {
  json j;
  j["suite"] = r.name;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  j["notes"] = r.notes;
  return j;
}

json json_trace(const TraceReport& r) {
  json j;
  j["p"] = r.p;
  j["set_size"] = r.set_size;
  j["eps"] = r.eps;
  j["C"] = r.C;
  json params;
  params["norm"] = r.norm.value;
  params["norm_err_bound"] = r.norm.err_bound;
  params["K"] = r.K;
  params["K_clamped"] = r.K_clamped;
  params["d_eps"] = r.d_eps;
  params["eta"] = r.eta;
  params["M"] = r.M;
  params["m"] = r.m;
  params["l_0"] = r.l_0;
  params["I"] = r.I;
  j["parameters"] = std::move(params);
  j["branch"] = to_string(r.branch);
  if (r.localized) {
    json loc;
    loc["q"] = r.q;
    loc["x0"] = r.x0;
    loc["captured"] = r.captured;
    j["localize"] = std::move(loc);
  }
  if (!r.deltas.empty()) j["shell_deltas"] = r.deltas;
  if (r.branch == TraceBranch::sparse_shell) {
    json sp;
    sp["l"] = r.sparse_l;
    sp["delta"] = r.sparse_delta;
    if (r.shell_check) {
      json sc;
      sc["applicable"] = r.shell_check->applicable;
      sc["bound"] = r.shell_check->bound;
      sc["measured_norm"] = r.shell_check->measured_norm;
      sc["inner_count"] = r.shell_check->inner_count;
      sc["outer_count"] = r.shell_check->outer_count;
      sp["concentration"] = std::move(sc);
    }
    if (!r.shell_check_note.empty()) sp["note"] = r.shell_check_note;
    j["sparse_shell"] = std::move(sp);
  }
  if (r.branch == TraceBranch::scattered) {
    json sc;
    sc["k"] = r.k;
    sc["q_size"] = r.q_size;
    sc["budget_exhausted"] = r.budget_exhausted;
    if (!r.budget_exhausted) {
      sc["t_k_integer"] = big_str(r.t_k_integer);
      sc["t_k_residue"] = big_str(r.t_k_residue);
    }
    j["scattered"] = std::move(sc);
  }
  json ineqs = json::array();
  for (const auto& q : r.inequalities) ineqs.push_back(json_ineq(q));
  j["inequalities"] = std::move(ineqs);
  j["verdict"] = r.verdict;
  return j;
}

json json_dilate(const std::vector<std::int64_t>& generators,
                 const std::vector<std::int64_t>& targets,
                 const DilateWitness* witness) {
  json j;
  j["generators"] = generators;
  j["targets"] = targets;
  j["found"] = witness != nullptr;
  if (witness) {
    j["q"] = witness->q;
    j["achieved"] = witness->achieved;
  }
  return j;
}

json json_gap(const GapDescriptor& g, const GapEnumeration& e) {
  json j;
  j["x0"] = g.x0;
  j["generators"] = g.generators;
  j["widths"] = g.widths;
  j["dimension"] = g.dimension();
  j["nominal_size"] = big_str(g.size());
  j["distinct_size"] = e.set.size();
  j["proper"] = e.proper;
  j["members"] = e.set.members();
  return j;
}

json json_ap_cover(const ApCoverResult& r) {
  json j;
  j["step"] = r.step;
  j["base"] = r.base;
  j["length"] = r.length;
  j["captured"] = r.captured;
  j["ratio"] = r.ratio;
  return j;
}

json json_quad(const ContinuousL1Result& r) {
  json j;
  j["value"] = r.value;
  j["samples_used"] = r.samples_used;
  j["convergence_gap"] = r.convergence_gap;
  j["converged"] = r.converged;
  return j;
}

json json_search(std::int64_t p, std::int64_t n, const std::string& strategy,
                 const SearchResult& r) {
  json j;
  j["p"] = p;
  j["n"] = n;
  j["strategy"] = strategy;
  j["best_norm"] = r.best_norm;
  j["err_bound"] = r.err_bound;
  j["best_set"] = r.best_set;
  j["evaluated"] = r.evaluated;
  j["budget_exhausted"] = r.budget_exhausted;
  if (r.bound_mediumsize) {
    j["bound_mediumsize"] = *r.bound_mediumsize;
    j["ratio_mediumsize"] = r.best_norm / *r.bound_mediumsize;
  }
  if (r.bound_charsmall) {
    j["bound_charsmall"] = *r.bound_charsmall;
    j["ratio_charsmall"] = r.best_norm / *r.bound_charsmall;
  }
  return j;
}

std::string csv_search(std::int64_t p, std::int64_t n,
                       const std::string& strategy, const SearchResult& r) {
  std::ostringstream out;
  out.precision(17);
  out << "p,n,strategy,best_norm,err_bound,bound_mediumsize,bound_charsmall,"
         "ratio_mediumsize,ratio_charsmall,best_set\n";
  out << p << ',' << n << ',' << strategy << ',' << r.best_norm << ','
      << r.err_bound << ',';
  if (r.bound_mediumsize)
    out << *r.bound_mediumsize;
  out << ',';
  if (r.bound_charsmall)
    out << *r.bound_charsmall;
  out << ',';
  if (r.bound_mediumsize)
    out << r.best_norm / *r.bound_mediumsize;
  out << ',';
  if (r.bound_charsmall)
    out << r.best_norm / *r.bound_charsmall;
  out << ',' << '"';
  for (std::size_t i = 0; i < r.best_set.size(); ++i) {
    if (i) out << ' ';
    out << r.best_set[i];
  }
  out << '"' << '\n';
  return out.str();
}

}  // namespace zpw::io
