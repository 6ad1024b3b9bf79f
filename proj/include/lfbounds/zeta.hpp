#pragma once

#include <complex>
#include <cstdint>

namespace lfb {

/// s = sigma + i t. The engine supports sigma in [0.4, 3], |t| <= 1e5, s != 1.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;
};

struct EvaluatedValue {
  std::complex<double> value;
  double abs_error_bound = 0.0;  // truncation remainder plus floating-point rounding budget
  std::int64_t terms_used = 0;   // Dirichlet terms plus Bernoulli corrections
};

inline constexpr double kZetaSigmaMin = 0.4;
inline constexpr double kZetaSigmaMax = 3.0;
inline constexpr double kZetaTMax = 1e5;
inline constexpr double kZetaMinTolerance = 1e-13;

/// zeta(s) by Euler-Maclaurin summation with N >= max(20, ceil(1.1|t|)) and as many
/// Bernoulli corrections as needed for the remainder bound to clear abs_tol.
/// Throws DomainError outside the supported domain or for abs_tol < 1e-13, and
/// ConvergenceError ("tolerance unreachable") when the rounding budget alone exceeds abs_tol.
EvaluatedValue zeta(ComplexPoint s, double abs_tol = 1e-10);

/// zeta'(s) by term-wise differentiation of the same expansion; the remainder of the
/// differentiated series is bounded by a Cauchy estimate on a circle of radius 1/log N.
/// Requires s at least 1e-3 inside the supported domain.
EvaluatedValue zeta_prime(ComplexPoint s, double abs_tol = 1e-10);

/// 1 / |zeta(sigma0 + i t)| with relative error <= 1e-8, for sigma0 in [0.9, 1).
/// Throws DomainError if |zeta| < 1e-3 at the point.
double inv_abs_zeta(double sigma0, double t);

}  // namespace lfb
