// Copyright 2026 The AQC Shield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqcs/metrics/metrics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace aqcs {

namespace {

Verdict bound(std::string name, double lhs, double rhs) {
  Verdict v;
  v.name = std::move(name);
  v.slack = rhs - lhs;
  v.passed = v.slack >= -kVerdictSlack;
  return v;
}

}  // namespace

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(fmt::format("trace_distance: dimensions {} and {} differ", a.dim(), b.dim()));
  }
  return std::clamp(0.5 * trace_norm(hermitian_part(a.matrix() - b.matrix())), 0.0, 1.0);
}

double trace_distance(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("trace_distance: dimension mismatch");
  const StateVector ua = a.normalized();
  const StateVector ub = b.normalized();
  return std::min(1.0, (ua - ub * ub.dot(ua)).norm());
}

PhiBudget phi_budget(double coupling_strength, double total_time, double width, double tau, std::size_t k_order,
                     std::size_t total_pulses, double beta, double alpha) {
  const double jt = coupling_strength * total_time;
  const double cycles = static_cast<double>(total_pulses) / static_cast<double>(k_order);
  const double cycle_time = static_cast<double>(k_order) * (tau + width);
  const double x = 2.0 * beta * cycle_time;
  PhiBudget b;
  b.term1 = alpha * jt * jt / cycles;
  b.term2 = jt * width / (tau + width);
  b.term3 = x > 0.0 ? jt * (std::expm1(x) / x - 1.0) : 0.0;
  b.total = b.term1 + b.term2 + b.term3;
  b.third_term_valid = b.term3 <= jt;
  b.magnus_convergent = coupling_strength * cycle_time < std::numbers::pi;
  return b;
}

double calibrate_alpha(double phi, double coupling_strength, double total_time, double width, double tau,
                       std::size_t k_order, std::size_t total_pulses, double beta) {
  const double jt = coupling_strength * total_time;
  if (jt == 0.0 || !std::isfinite(phi)) return 0.0;
  // term3 is left out: term1 alone has to cover the ideal-pulse residual.
  const PhiBudget b = phi_budget(coupling_strength, total_time, width, tau, k_order, total_pulses, beta, 0.0);
  const double cycles = static_cast<double>(total_pulses) / static_cast<double>(k_order);
  return std::max(0.0, phi - b.term2) * cycles / (jt * jt);
}

ErrorPrediction dd_error_prediction(const ScalingRule& rule, double n) {
  if (n < 2.0) throw std::invalid_argument("dd_error_prediction: n must be at least 2");
  const double ratio = rule.coupling_strength / rule.delta0;
  ErrorPrediction p;
  p.t1 = ratio * ratio * std::pow(n, -rule.eps1);
  p.t2 = std::pow(n, -rule.eps2);
  p.t3 = ratio * std::pow(n, 1.0 - rule.eps1);
  p.total = p.t1 + p.t2 + p.t3;
  return p;
}

RunParameters run_parameters(const PulseSchedule& schedule, const SystemBathSpec& bath, double beta, double alpha) {
  RunParameters p;
  p.n = schedule.group().num_qubits();
  p.coupling_strength = bath.coupling_strength;
  p.tau = schedule.tau();
  p.width = schedule.width();
  p.k_order = schedule.pulses_per_cycle();
  p.total_pulses = schedule.total_pulses();
  p.total_time = schedule.total_time();
  p.beta = beta;
  p.alpha = alpha;
  return p;
}

double ErrorReport::slack_eq3() const { return verdict("eq3").slack; }

double ErrorReport::slack_eq5() const {
  const Verdict& v = verdict("eq5");
  return v.checked ? v.slack : std::numeric_limits<double>::quiet_NaN();
}

bool ErrorReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.checked || v.passed; });
}

const Verdict& ErrorReport::verdict(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return v;
  }
  throw std::out_of_range("ErrorReport: no verdict named " + name);
}

ErrorReport error_report(const ProtectedRun& run, const RunParameters& parameters) {
  const RunArtifacts& c = run.coupled;
  const RunArtifacts& u = run.uncoupled;
  if (c.rho_final.dim() != u.rho_final.dim() || c.total_time != u.total_time ||
      c.rho_final.dim() != run.system_dim * run.bath_dim) {
    throw std::invalid_argument("error_report: coupled and uncoupled runs do not share a model");
  }
  if (std::abs(parameters.total_time - c.total_time) > 1e-9 * (1.0 + c.total_time)) {
    throw std::invalid_argument("error_report: parameters describe a different run time");
  }

  ErrorReport r;
  r.parameters = parameters;
  const DensityMatrix ideal_system = DensityMatrix::pure(run.ground_final);
  const DensityMatrix ideal_joint(kron(ideal_system.matrix(), run.bath_final.matrix()), 1e-8);
  r.delta_ad = run.delta_ad;
  r.d_D = trace_distance(c.rho_final, u.rho_final);
  r.delta_S = trace_distance(c.rho_system, ideal_system);
  r.d_tot = trace_distance(c.rho_final, ideal_joint);
  r.d_ad_joint = trace_distance(u.rho_final, ideal_joint);
  r.phi = c.phi;
  r.phi_uncoupled = u.phi;
  r.diagnostics = c.diagnostics;

  const RunParameters& p = parameters;
  r.budget = phi_budget(p.coupling_strength, p.total_time, p.width, p.tau, p.k_order, p.total_pulses, p.beta, p.alpha);
  r.alpha_required = calibrate_alpha(r.phi, p.coupling_strength, p.total_time, p.width, p.tau, p.k_order,
                                     p.total_pulses, p.beta);

  r.verdicts.push_back(bound("monotonicity", r.delta_S, r.d_tot));
  r.verdicts.push_back(bound("triangle", r.d_tot, r.d_D + r.delta_ad));
  r.verdicts.push_back(bound("eq3", r.delta_S, r.d_D + r.delta_ad));
  Verdict eq5 = bound("eq5", r.d_D, std::min(1.0, std::expm1(r.phi) / 2.0));
  if (!(r.phi <= 1.0)) {
    eq5.checked = false;
    eq5.passed = true;
  }
  r.verdicts.push_back(eq5);
  return r;
}

std::string csv_header() { return "n,J,tau,w,K,L,T,delta_ad,d_D,delta_S,d_tot,phi,slack_eq3,slack_eq5"; }

std::string csv_row(const ErrorReport& r) {
  const RunParameters& p = r.parameters;
  return fmt::format("{},{:.17g},{:.17g},{:.17g},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}", p.n,
                     p.coupling_strength, p.tau, p.width, p.k_order, p.total_pulses, p.total_time, r.delta_ad, r.d_D,
                     r.delta_S, r.d_tot, r.phi, r.slack_eq3(), r.slack_eq5());
}

std::string to_json(const ErrorReport& r) {
  const RunParameters& p = r.parameters;
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["J"] = p.coupling_strength;
  j["tau"] = p.tau;
  j["w"] = p.width;
  j["K"] = p.k_order;
  j["L"] = p.total_pulses;
  j["T"] = p.total_time;
  j["delta_ad"] = r.delta_ad;
  j["d_D"] = r.d_D;
  j["delta_S"] = r.delta_S;
  j["d_tot"] = r.d_tot;
  j["phi"] = r.phi;
  j["slack_eq3"] = r.slack_eq3();
  j["slack_eq5"] = r.slack_eq5();
  nlohmann::ordered_json verdicts;
  for (const auto& v : r.verdicts) {
    verdicts[v.name] = {{"checked", v.checked}, {"passed", v.passed}, {"slack", v.slack}};
  }
  j["verdicts"] = verdicts;
  j["all_passed"] = r.all_passed();
  j["d_ad_joint"] = r.d_ad_joint;
  j["phi_uncoupled"] = r.phi_uncoupled;
  j["beta"] = p.beta;
  j["budget"] = {{"alpha", p.alpha},
                 {"term1", r.budget.term1},
                 {"term2", r.budget.term2},
                 {"term3", r.budget.term3},
                 {"total", r.budget.total},
                 {"third_term_valid", r.budget.third_term_valid},
                 {"magnus_convergent", r.budget.magnus_convergent}};
  j["alpha_required"] = r.alpha_required;
  if (r.prediction) {
    j["prediction"] = {{"t1", r.prediction->t1}, {"t2", r.prediction->t2}, {"t3", r.prediction->t3},
                       {"total", r.prediction->total}};
  }
  j["diagnostics"] = {{"accepted_steps", r.diagnostics.accepted_steps},
                      {"rejected_steps", r.diagnostics.rejected_steps},
                      {"max_local_error", r.diagnostics.max_local_error},
                      {"unitarity_error", r.diagnostics.unitarity_error},
                      {"branch_ok", r.diagnostics.branch_ok}};
  return j.dump(2) + "\n";
}

}  // namespace aqcs
