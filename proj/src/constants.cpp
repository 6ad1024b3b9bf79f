#include "lfbounds/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lfbounds/errors.hpp"
#include "lfbounds/numeric.hpp"

namespace lfb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// loglog that yields NaN instead of throwing, so a failed check stays a failed check.
double loglog_or_nan(double x) { return x > kE ? std::log(std::log(x)) : kNaN; }

HypothesisCheck at_least(std::string id, std::string statement, double lhs, double rhs) {
  return {std::move(id), std::move(statement), lhs, rhs, lhs >= rhs};
}

HypothesisCheck in_range(std::string id, std::string statement, double value, double upper) {
  return {std::move(id), std::move(statement), value, upper, value > 0.0 && value <= upper};
}

double T1_floor(const LFunctionProfile& p, double exponent_C, double C3) {
  return std::max({std::exp(std::exp(2.0 * exponent_C)), std::exp(4.0 * p.euler_order / p.degree), C3, kExpESquared});
}

void throw_if_failed(const std::vector<HypothesisCheck>& checks, const std::string& where) {
  std::vector<std::string> failed;
  std::ostringstream msg;
  msg << where << ": hypothesis violated:";
  for (const auto& c : checks) {
    if (c.passed) continue;
    failed.push_back(c.id);
    msg << ' ' << c.id << " (" << c.statement << "; lhs=" << c.lhs << ", rhs=" << c.rhs << ")";
  }
  if (!failed.empty()) throw HypothesisError(std::move(failed), msg.str());
}

// (1 + log(1 + (C3 LL + 3/2)/T1)/L) (1 + log(1 + log(1 + (2 C3 LL + 1)/T1)/L)/LL) with L = log T1.
double b1_correction(double C3, double T1) {
  const double L = std::log(T1);
  const double LL = loglog(T1);
  const double f1 = 1.0 + std::log1p((C3 * LL + 1.5) / T1) / L;
  const double f2 = 1.0 + std::log1p(std::log1p((2.0 * C3 * LL + 1.0) / T1) / L) / LL;
  return f1 * f2;
}

void check_b1_inputs(const LFunctionProfile& p, double C1, double C3, double T1, double T2) {
  const double ll = loglog_or_nan(T1);
  throw_if_failed({in_range("C1-range", "0 < C1 <= 1", C1, 1.0),
                   at_least("C3-floor", "C3 >= 1", C3, 1.0),
                   at_least("T1-floor", "T1 >= exp(e^2)", T1, kExpESquared),
                   at_least("T2-floor", "T2 >= max{T + 1, exp(e^2)}", T2, std::max(p.T + 1.0, kExpESquared)),
                   at_least("T1-loglog-margin", "T1 - 2 C3 loglog T1 >= 0", T1 - 2.0 * C3 * ll, 0.0)},
                  "compute_b1");
}

}  // namespace

std::string to_string(BoundKind kind) { return kind == BoundKind::kLog ? "a1" : "a2"; }

std::vector<std::string> BoundEvaluation::failed_conditions() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.id);
  return out;
}

std::vector<HypothesisCheck> check_hypotheses(const LFunctionProfile& p, const BoundParams& q, BoundKind kind) {
  const bool derivative = kind == BoundKind::kLogDerivative;
  std::vector<HypothesisCheck> checks;
  checks.push_back(in_range("C1-range", "0 < C1 <= 1", q.C1, 1.0));
  checks.push_back(in_range("C2-range", "0 < C2 <= 2 C1", q.C2, 2.0 * q.C1));
  checks.push_back(at_least("C3-floor", "C3 >= 1", q.C3, 1.0));
  double exponent_C = q.C2;
  if (derivative) {
    const double c4 = q.C4.value_or(kNaN);
    checks.push_back(in_range("C4-range", "0 < C4 <= C2 / 2.0001", c4, q.C2 / kC4Divisor));
    exponent_C = kRegionShift * q.C2 + c4;
  }
  checks.push_back(at_least("t0-above-T1", "t0 >= T1", q.t0, q.T1));
  if (derivative)
    checks.push_back(at_least("T1-floor", "T1 >= max{exp(e^(2(1.00006 C2 + C4))), e^(4m/d), C3, exp(e^2)} + 1",
                              q.T1, T1_floor(p, exponent_C, q.C3) + 1.0));
  else
    checks.push_back(at_least("T1-floor", "T1 >= max{exp(e^(2 C2)), e^(4m/d), C3, exp(e^2)}", q.T1,
                              T1_floor(p, exponent_C, q.C3)));
  const double gap = derivative ? 1.5 : 0.5;
  checks.push_back(at_least("t0-T2-gap",
                            derivative ? "t0 - C3 loglog(c t0) - 3/2 >= T2" : "t0 - C3 loglog(c t0) - 1/2 >= T2",
                            q.t0 - q.C3 * loglog_or_nan(p.c * q.t0) - gap, q.T2));
  checks.push_back(at_least("T2-floor", "T2 >= max{T + 1, exp(e^2)}", q.T2, std::max(p.T + 1.0, kExpESquared)));
  checks.push_back(at_least("T1-loglog-margin",
                            derivative ? "T1 - 2 C3 loglog T1 >= 1" : "T1 - 2 C3 loglog T1 >= 0",
                            q.T1 - 2.0 * q.C3 * loglog_or_nan(q.T1), derivative ? 1.0 : 0.0));
  return checks;
}

BoundEvaluation evaluate_bound(const LFunctionProfile& p, const BoundParams& q, BoundKind kind) {
  BoundEvaluation ev{kind, check_hypotheses(p, q, kind), std::nullopt};
  if (!ev.failed_conditions().empty()) return ev;

  const double m = static_cast<double>(p.euler_order);
  BoundConstants bc;
  bc.K = compute_K(p, q.C1, q.T2);
  if (kind == BoundKind::kLog) {
    bc.b = bc.K / m * b1_correction(q.C3, q.T1);
    bc.R = compute_R(q.C2, q.C3, q.T1);
    bc.a = m / q.C2 * std::exp((1.0 + log_plus(bc.b) / loglog(q.T1)) * bc.R);
    bc.sigma_region = {q.C2, q.C2};
  } else {
    const double C4 = *q.C4;
    const double T1m = q.T1 - 1.0;
    bc.b = bc.K / m * b1_correction(q.C3, T1m);
    bc.R = compute_R(q.C2, q.C3, T1m);
    const double lp = log_plus(bc.b);
    bc.a = kA2Prefactor * m / (q.C2 * C4) *
           std::exp(2.0 * C4 * (1.0 + lp / loglog(q.T1)) + (1.0 + lp / loglog(T1m)) * bc.R);
    bc.sigma_region = {kRegionShift * q.C2 + C4, C4};
  }
  ev.constants = bc;
  return ev;
}

double compute_K(const LFunctionProfile& p, double C1, double t0_prime) {
  throw_if_failed({in_range("C1-range", "0 < C1 <= 1", C1, 1.0),
                   at_least("t0prime-floor", "t0' >= max{T + 1, exp(e^2)}", t0_prime,
                            std::max(p.T + 1.0, kExpESquared))},
                  "compute_K");
  const double L = std::log(t0_prime);
  const double LL = loglog(t0_prime);
  const double m = static_cast<double>(p.euler_order);
  const double inner = p.ell * LL / L + m / L * (std::log(LL) + std::log(1.0 / C1) + kEulerGamma * C1 / LL) +
                       log_plus(p.C) / L;
  return p.degree / 4.0 + C1 * p.degree / (2.0 * LL) + (1.0 + 2.0 * C1 / LL) * inner;
}

double compute_b1(const LFunctionProfile& p, double C1, double C3, double T1, double T2) {
  check_b1_inputs(p, C1, C3, T1, T2);
  return compute_K(p, C1, T2) / static_cast<double>(p.euler_order) * b1_correction(C3, T1);
}

double compute_R(double C2, double C3, double T1) {
  if (!(C3 >= 1.0)) throw HypothesisError("C3-floor");
  const double denom = 1.0 - 1.0 / (4.0 * C3 * loglog(T1));
  if (!(denom > 0.0)) throw DomainError("compute_R: 1 - 1/(4 C3 loglog T1) must be positive");
  return (2.0 * C2 + 1.0 / (2.0 * C3)) / denom;
}

BoundConstants compute_a1(const LFunctionProfile& p, const BoundParams& q) {
  auto ev = evaluate_bound(p, q, BoundKind::kLog);
  throw_if_failed(ev.checks, "compute_a1");
  return *ev.constants;
}

BoundConstants compute_a2(const LFunctionProfile& p, const BoundParams& q) {
  auto ev = evaluate_bound(p, q, BoundKind::kLogDerivative);
  throw_if_failed(ev.checks, "compute_a2");
  return *ev.constants;
}

DedekindSplit dedekind_split(double C1, double T1, double T2, double C3) {
  // Any n >= 2 gives the same shape checks; T = 7778 for the Dedekind profile.
  LFunctionProfile shape = profile_dedekind(2, 1.0);
  check_b1_inputs(shape, C1, C3, T1, T2);
  const double L = std::log(T2);
  const double LL = loglog(T2);
  const double spread = 1.0 + 2.0 * C1 / LL;
  const double F = b1_correction(C3, T1);
  const double k1 = 0.25 + C1 / (2.0 * LL) +
                    spread * (LL / L + (std::log(LL) + std::log(1.0 / C1) + kEulerGamma * C1 / LL) / L);
  const double k2 = spread * std::log(kDedekindC) / L;
  return {k1 * F, k2 * F};
}

ElementaryBounds elementary_bounds(int m, double B, double c, double t, double t0, double sigma) {
  if (m < 1) throw DomainError("elementary_bounds: m must be a positive integer");
  if (!(B > 0.0)) throw DomainError("elementary_bounds: B must be positive");
  if (!(c >= 1.0)) throw DomainError("elementary_bounds: c must be >= 1");
  if (!(t0 > kE)) throw DomainError("elementary_bounds: t0 must exceed e");
  if (!(std::abs(t) >= t0)) throw DomainError("elementary_bounds: |t| must be >= t0");
  const double ct = c * std::abs(t);
  const double ll = loglog(ct);
  if (!(sigma >= 1.0 + B / ll)) throw DomainError("elementary_bounds: sigma below 1 + B / loglog(c|t|)");
  const double md = static_cast<double>(m);
  return {md * std::log(ll) + md * std::log(1.0 / B) + md * kEulerGamma * B / loglog(t0), md / B * ll};
}

BoundParams published_params(const LFunctionProfile& p, BoundKind kind) {
  BoundParams q;
  q.C3 = 1000.0;
  const bool derivative = kind == BoundKind::kLogDerivative;
  if (p.family == "dedekind") {
    q.C1 = derivative ? 0.32 : 0.25;
    q.C2 = derivative ? 0.64 : 0.5;
    q.T1 = 10188.0;
    q.T2 = 7794.0;
    q.t0 = 9650.0 + 1000.0 * std::log(std::log(p.c));
  } else {
    q.C1 = derivative ? 0.34 : 0.25;
    q.C2 = derivative ? 0.67 : 0.5;
    q.T1 = 1e4;
    if (p.family == "dirichlet") {
      q.T2 = 7788.0;
      q.t0 = 10450.0 + 1000.0 * std::log(std::log(p.c));
    } else {
      q.T2 = 7778.0;
      q.t0 = 1e4;
    }
  }
  if (derivative) q.C4 = q.C2 / kC4Divisor;
  return q;
}

int published_decimals(BoundKind kind) { return kind == BoundKind::kLog ? 2 : 3; }

}  // namespace lfb
