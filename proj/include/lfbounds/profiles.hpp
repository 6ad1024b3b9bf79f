#pragma once

#include <string>

namespace lfb {

/// Explicit convexity data for one L-function:
///   log|L(s)| <= (d/4) log(c|t|) + ell * loglog(c|t|) + log^+ C   for |t| >= T, sigma >= 1/2.
struct LFunctionProfile {
  std::string family;  // "zeta", "dirichlet" or "dedekind"
  double degree = 1.0;
  int euler_order = 1;
  double ell = 1.0;
  double C = 1.0;
  double c = 1.0;
  double T = 50.0;
};

inline constexpr double kRademacherAlpha = 1.8;
inline constexpr double kRademacherT0 = 7778.0;
// Conductor scale for Dedekind zeta-functions: c = 5.552 |Delta_K|^(1/n_K).
inline constexpr double kDedekindConductorScale = 5.552;
inline constexpr double kDedekindC = 1.9;

/// Backlund's bounds: (d, m, ell, C, c, T) = (1, 1, 1, 1, 1, 50).
LFunctionProfile profile_zeta();

/// Primitive Dirichlet character modulo q >= 2. Throws DomainError for q < 2 and
/// std::logic_error if the Rademacher prefactor at (alpha, t0) exceeds 1.
LFunctionProfile profile_dirichlet(long long q, double alpha = kRademacherAlpha, double t0 = kRademacherT0);

/// Dedekind zeta-function of a field of degree n_K >= 2 with |Delta_K| = abs_disc >= 1.
/// Throws std::logic_error if the normalized Rademacher prefactor exceeds 1.9.
LFunctionProfile profile_dedekind(int n_K, double abs_disc, double alpha = kRademacherAlpha,
                                  double t0 = kRademacherT0);

/// Constant in front of (q|t|)^(1/4) log(q|t|) in Rademacher's bound for L(s, chi)
/// with eta = alpha / log(q|t|):
///   (1/alpha) exp(alpha (1/2 + gamma/log t0)) ((1/2pi) sqrt(1 + ((2 + alpha/log t0)/t0)^2))^(1/4).
/// Requires alpha >= 1 and t0 >= e^(2 alpha).
double rademacher_prefactor_dirichlet(double alpha, double t0);

/// Constant in front of (c|t|)^(n/4) log^n(c|t|) for zeta_K with c = scale |Delta_K|^(1/n):
/// the displayed Rademacher prefactor divided by scale^(n/4).
double rademacher_prefactor_dedekind(double alpha, double t0, int n_K,
                                     double conductor_scale = kDedekindConductorScale);

}  // namespace lfb
