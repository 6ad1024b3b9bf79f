#pragma once

#include <cstdint>
#include <functional>

namespace lfb {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t panels = 0;
  std::int64_t evaluations = 0;
};

/// Per-panel record for traces of panelled integrals.
struct PanelRecord {
  double lo = 0.0;
  double hi = 0.0;
  QuadratureResult result;
};

using RealFunction = std::function<double(double)>;

/// Romberg integration: trapezoid refinements with Richardson extrapolation.
/// Converged at level k >= 2 when |R(k,k) - R(k-1,k-1)| <= max(rel_tol |R(k,k)|, abs_tol);
/// error_estimate is that last diagonal difference. Level k uses 2^k + 1 nodes.
/// Throws DomainError unless a < b and max_levels in [3, 24]; throws
/// ConvergenceError if max_levels is reached without convergence.
QuadratureResult romberg(const RealFunction& f, double a, double b, double rel_tol, int max_levels = 16,
                         double abs_tol = 0.0);

struct InvZetaIntegralOptions {
  double panel_width = 10.0;
  double rel_tol = 1e-10;
  int max_levels = 16;
  unsigned threads = 1;
  std::function<void(const PanelRecord&)> panel_trace;  // called in ascending panel order
};

/// Integral of 1/|zeta(sigma0 + i u)| over [lo, hi] as a sum of Romberg panels of
/// fixed width (the last one may be shorter). Panel sums are accumulated in ascending
/// panel order with compensated summation. lo == hi yields an empty result.
QuadratureResult integrate_inv_abs_zeta(double sigma0, double lo, double hi, const InvZetaIntegralOptions& opts = {});

/// Integral of u^(a1 loglog u / (log u)^(2 sigma0 - 1)) over [lo, hi], lo >= e^2,
/// computed in v = log u as exp(v + a1 v^(2 - 2 sigma0) log v) on unit-width panels,
/// each bisected recursively if Romberg fails to converge on it.
QuadratureResult integrate_envelope(double sigma0, double a1, double lo, double hi, double rel_tol = 1e-12);

}  // namespace lfb
