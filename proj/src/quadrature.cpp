#include "lfbounds/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "lfbounds/errors.hpp"
#include "lfbounds/numeric.hpp"
#include "lfbounds/parallel.hpp"
#include "lfbounds/zeta.hpp"

namespace lfb {

QuadratureResult romberg(const RealFunction& f, double a, double b, double rel_tol, int max_levels, double abs_tol) {
  if (!(a < b)) throw DomainError("romberg: require a < b");
  if (max_levels < 3 || max_levels > 24) throw DomainError("romberg: max_levels must lie in [3, 24]");
  if (!(rel_tol > 0.0)) throw DomainError("romberg: rel_tol must be positive");

  std::vector<double> prev, cur;
  const double fa = f(a), fb = f(b);
  std::int64_t evals = 2;
  double h = b - a;
  prev.push_back(0.5 * h * (fa + fb));

  for (int k = 1; k <= max_levels; ++k) {
    h *= 0.5;
    const std::int64_t fresh = std::int64_t{1} << (k - 1);
    CompensatedSum mid;
    for (std::int64_t i = 0; i < fresh; ++i) mid += f(a + (2 * i + 1) * h);
    evals += fresh;

    cur.assign(static_cast<std::size_t>(k) + 1, 0.0);
    cur[0] = 0.5 * prev[0] + h * mid.value();
    double pow4 = 1.0;
    for (int j = 1; j <= k; ++j) {
      pow4 *= 4.0;
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (pow4 - 1.0);
    }
    const double diff = std::abs(cur[k] - prev[k - 1]);
    if (!std::isfinite(cur[k])) break;
    if (k >= 2 && diff <= std::max(rel_tol * std::abs(cur[k]), abs_tol)) return {cur[k], diff, 1, evals};
    prev.swap(cur);
  }
  std::ostringstream msg;
  msg << "romberg: non-convergent on [" << a << ", " << b << "] after " << max_levels << " levels";
  throw ConvergenceError(msg.str());
}

QuadratureResult integrate_inv_abs_zeta(double sigma0, double lo, double hi, const InvZetaIntegralOptions& opts) {
  if (!(sigma0 >= 0.9 && sigma0 < 1.0)) throw DomainError("integrate_inv_abs_zeta: sigma0 must lie in [0.9, 1)");
  if (!(lo >= 0.0 && lo <= hi && hi <= 3e4)) throw DomainError("integrate_inv_abs_zeta: require 0 <= lo <= hi <= 3e4");
  if (!(opts.panel_width > 0.0)) throw DomainError("integrate_inv_abs_zeta: panel_width must be positive");
  if (lo == hi) return {};

  const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / opts.panel_width - 1e-9));
  std::vector<PanelRecord> panels(count);
  for (std::size_t i = 0; i < count; ++i) {
    panels[i].lo = lo + static_cast<double>(i) * opts.panel_width;
    panels[i].hi = i + 1 == count ? hi : lo + static_cast<double>(i + 1) * opts.panel_width;
  }
  const RealFunction integrand = [sigma0](double u) { return inv_abs_zeta(sigma0, u); };
  parallel_for(count, opts.threads, [&](std::size_t i) {
    try {
      panels[i].result = romberg(integrand, panels[i].lo, panels[i].hi, opts.rel_tol, opts.max_levels);
    } catch (const ConvergenceError& e) {
      std::ostringstream msg;
      msg << "integrate_inv_abs_zeta: panel [" << panels[i].lo << ", " << panels[i].hi << "] did not converge: "
          << e.what();
      throw ConvergenceError(msg.str());
    }
  });

  QuadratureResult total;
  CompensatedSum value, error;
  for (const auto& p : panels) {
    value += p.result.value;
    error += p.result.error_estimate;
    total.evaluations += p.result.evaluations;
    if (opts.panel_trace) opts.panel_trace(p);
  }
  total.value = value.value();
  total.error_estimate = error.value();
  total.panels = static_cast<std::int64_t>(count);
  return total;
}

namespace {

void envelope_panel(const RealFunction& g, double a, double b, double rel_tol, int depth,
                    std::vector<QuadratureResult>& out) {
  try {
    out.push_back(romberg(g, a, b, rel_tol, 12));
  } catch (const ConvergenceError&) {
    if (depth >= 20) throw;
    const double m = 0.5 * (a + b);
    envelope_panel(g, a, m, rel_tol, depth + 1, out);
    envelope_panel(g, m, b, rel_tol, depth + 1, out);
  }
}

}  // namespace

QuadratureResult integrate_envelope(double sigma0, double a1, double lo, double hi, double rel_tol) {
  if (!(lo >= std::exp(2.0))) throw DomainError("integrate_envelope: lo must be >= e^2");
  if (!(hi > lo)) throw DomainError("integrate_envelope: require hi > lo");
  if (!(a1 >= 0.0)) throw DomainError("integrate_envelope: a1 must be non-negative");
  if (!(sigma0 > 0.5 && sigma0 < 1.0)) throw DomainError("integrate_envelope: sigma0 must lie in (1/2, 1)");

  const double power = 2.0 - 2.0 * sigma0;
  const RealFunction g = [a1, power](double v) { return std::exp(v + a1 * std::pow(v, power) * std::log(v)); };
  const double vlo = std::log(lo), vhi = std::log(hi);

  std::vector<QuadratureResult> parts;
  double a = vlo;
  while (a < vhi) {
    const double b = std::min(std::floor(a) + 1.0, vhi);
    envelope_panel(g, a, b, rel_tol, 0, parts);
    a = b;
  }
  QuadratureResult total;
  CompensatedSum value, error;
  for (const auto& p : parts) {
    value += p.value;
    error += p.error_estimate;
    total.evaluations += p.evaluations;
  }
  total.value = value.value();
  total.error_estimate = error.value();
  total.panels = static_cast<std::int64_t>(parts.size());
  return total;
}

}  // namespace lfb
