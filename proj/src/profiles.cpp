#include "lfbounds/profiles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lfbounds/errors.hpp"
#include "lfbounds/numeric.hpp"

namespace lfb {

namespace {

void check_rademacher_domain(double alpha, double t0) {
  if (!(alpha >= 1.0)) throw DomainError("rademacher prefactor: alpha must be >= 1");
  if (!(t0 >= std::exp(2.0 * alpha))) throw DomainError("rademacher prefactor: t0 must be >= e^(2 alpha)");
}

// (1/alpha) exp(alpha (1/2 + gamma / log t0)), the bound for zeta(1 + eta) / log(q|t|).
double zeta_one_plus_eta_factor(double alpha, double t0) {
  return std::exp(alpha * (0.5 + kEulerGamma / std::log(t0))) / alpha;
}

// 1 + ((2 + alpha/log t0)/t0)^2, bounding |1+s|^2 / t^2.
double shift_factor_squared(double alpha, double t0) {
  const double r = (2.0 + alpha / std::log(t0)) / t0;
  return 1.0 + r * r;
}

}  // namespace

LFunctionProfile profile_zeta() { return {"zeta", 1.0, 1, 1.0, 1.0, 1.0, 50.0}; }

LFunctionProfile profile_dirichlet(long long q, double alpha, double t0) {
  if (q < 2) throw DomainError("profile_dirichlet: modulus q must be >= 2, got " + std::to_string(q));
  const double pref = rademacher_prefactor_dirichlet(alpha, t0);
  if (!(pref <= 1.0))
    throw std::logic_error("profile_dirichlet: Rademacher prefactor " + std::to_string(pref) + " exceeds 1");
  return {"dirichlet", 1.0, 1, 1.0, 1.0, static_cast<double>(q), t0};
}

LFunctionProfile profile_dedekind(int n_K, double abs_disc, double alpha, double t0) {
  if (n_K < 2) throw DomainError("profile_dedekind: degree n_K must be >= 2, got " + std::to_string(n_K));
  if (!(abs_disc >= 1.0)) throw DomainError("profile_dedekind: |Delta_K| must be >= 1");
  const double pref = rademacher_prefactor_dedekind(alpha, t0, n_K);
  if (!(pref <= kDedekindC))
    throw std::logic_error("profile_dedekind: Rademacher prefactor " + std::to_string(pref) + " exceeds 1.9");
  const double n = static_cast<double>(n_K);
  return {"dedekind", n, n_K, n, kDedekindC, kDedekindConductorScale * std::pow(abs_disc, 1.0 / n), t0};
}

double rademacher_prefactor_dirichlet(double alpha, double t0) {
  check_rademacher_domain(alpha, t0);
  const double gamma_part = std::sqrt(shift_factor_squared(alpha, t0)) / (2.0 * kPi);
  return zeta_one_plus_eta_factor(alpha, t0) * std::pow(gamma_part, 0.25);
}

double rademacher_prefactor_dedekind(double alpha, double t0, int n_K, double conductor_scale) {
  check_rademacher_domain(alpha, t0);
  if (n_K < 1) throw DomainError("rademacher_prefactor_dedekind: n_K must be positive");
  const double n = static_cast<double>(n_K);
  const double raw = 3.0 / std::pow(2.0 * kPi, 0.25) * std::pow(shift_factor_squared(alpha, t0), 5.0 / 8.0) *
                     std::pow(zeta_one_plus_eta_factor(alpha, t0), n);
  return raw / std::pow(conductor_scale, n / 4.0);
}

}  // namespace lfb
