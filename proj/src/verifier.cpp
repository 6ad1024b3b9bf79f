#include "lfbounds/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "lfbounds/errors.hpp"
#include "lfbounds/numeric.hpp"
#include "lfbounds/parallel.hpp"

namespace lfb {

std::string to_string(SigmaMode mode) { return mode == SigmaMode::kRegionEdges ? "region-edges" : "interior-grid"; }

SampleGrid make_sample_grid(std::size_t count, SigmaRegion region, SigmaMode mode, double t_lo, double t_hi,
                            std::uint64_t seed, double c) {
  if (!(t_lo >= 1e4 && t_hi >= t_lo && t_hi <= kZetaTMax)) throw DomainError("make_sample_grid: need 1e4 <= t_lo <= t_hi <= 1e5");
  if (!(region.A > 0.0 && region.B > 0.0)) throw DomainError("make_sample_grid: region offsets must be positive");
  if (!(c >= 1.0)) throw DomainError("make_sample_grid: c must be >= 1");

  // Plastic-number recurrence.
  constexpr double g = 1.32471795724474602596;
  constexpr double alpha_u = 1.0 / g, alpha_v = 1.0 / (g * g);
  std::mt19937_64 rng(seed);
  const double u0 = static_cast<double>(rng() >> 11) * 0x1p-53;
  const double v0 = static_cast<double>(rng() >> 11) * 0x1p-53;

  SampleGrid grid;
  grid.sigma_mode = mode;
  grid.region = region;
  grid.c = c;
  grid.t_lo = t_lo;
  grid.t_hi = t_hi;
  grid.seed = seed;
  grid.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double k = static_cast<double>(i + 1);
    const double u = std::fmod(u0 + k * alpha_u, 1.0);
    const double v = std::fmod(v0 + k * alpha_v, 1.0);
    const double t = t_lo + u * (t_hi - t_lo);
    const double ll = loglog(c * t);
    const double lo = 0.5 + region.A / ll, hi = 1.0 + region.B / ll;
    const double sigma = mode == SigmaMode::kRegionEdges ? (i % 2 == 0 ? lo : hi) : lo + v * (hi - lo);
    grid.samples.push_back({sigma, t});
  }
  return grid;
}

namespace {

void summarize(BoundCheckReport& r) {
  std::vector<double> ratios;
  ratios.reserve(r.samples.size());
  for (const auto& s : r.samples) {
    ratios.push_back(s.ratio);
    if (s.violated) ++r.violations;
    if (s.elementary_bound) {
      if (s.observed > *s.elementary_bound) ++r.elementary_violations;
      if (*s.elementary_bound > s.bound) ++r.elementary_not_dominated;
    }
  }
  if (ratios.empty()) return;
  std::sort(ratios.begin(), ratios.end());
  r.min_ratio = ratios.front();
  const std::size_t n = ratios.size();
  r.median_ratio = n % 2 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
}

void require_grid(const SampleGrid& grid, const char* who) {
  for (const auto& s : grid.samples)
    if (!(s.t >= 1e4)) throw DomainError(std::string(who) + ": samples must have t >= 1e4");
}

std::string where(const ComplexPoint& s) {
  std::ostringstream o;
  o << std::setprecision(17) << " at sigma = " << s.sigma << ", t = " << s.t;
  return o.str();
}

template <class Fn>
BoundCheckReport run_checks(BoundKind kind, const SampleGrid& grid, double a, double b, unsigned threads, Fn&& per_sample) {
  const auto start = std::chrono::steady_clock::now();
  BoundCheckReport r;
  r.kind = kind;
  r.a = a;
  r.b = b;
  r.region = grid.region;
  r.samples.resize(grid.samples.size());
  parallel_for(grid.samples.size(), threads, [&](std::size_t i) {
    const auto& s = grid.samples[i];
    try {
      r.samples[i] = per_sample(s);
    } catch (const DomainError& e) {
      throw DomainError(e.what() + where(s));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(e.what() + where(s));
    }
  });
  summarize(r);
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double ratio_of(double bound, double observed) {
  return observed > 0.0 ? bound / observed : std::numeric_limits<double>::infinity();
}

}  // namespace

BoundCheckReport check_log_bound(const SampleGrid& grid, double a1, double b1, unsigned threads) {
  require_grid(grid, "check_log_bound");
  return run_checks(BoundKind::kLog, grid, a1, b1, threads, [&](const ComplexPoint& s) {
    const auto z = zeta(s, 1e-11);
    const double mod = std::abs(z.value);
    if (!(mod > z.abs_error_bound)) throw ConvergenceError("check_log_bound: |zeta| not resolved");
    const double observed = std::max(std::abs(std::log(mod - z.abs_error_bound)), std::abs(std::log(mod + z.abs_error_bound)));
    const double ct = grid.c * s.t;
    const double bound = a1 * std::pow(b1 * std::log(ct), 2.0 * (1.0 - s.sigma)) * loglog(ct);
    SampleCheck c{s.sigma, s.t, observed, bound, ratio_of(bound, observed), std::nullopt, observed > bound};
    return c;
  });
}

BoundCheckReport check_logder_bound(const SampleGrid& grid, double a2, double b2, unsigned threads) {
  require_grid(grid, "check_logder_bound");
  return run_checks(BoundKind::kLogDerivative, grid, a2, b2, threads, [&](const ComplexPoint& s) {
    const auto z = zeta(s, 1e-11);
    const auto d = zeta_prime(s, 1e-11);
    const double mod = std::abs(z.value);
    if (!(mod > z.abs_error_bound)) throw ConvergenceError("check_logder_bound: |zeta| not resolved");
    const double observed = (std::abs(d.value) + d.abs_error_bound) / (mod - z.abs_error_bound);
    const double ct = grid.c * s.t;
    const double ll = loglog(ct);
    const double bound = a2 * std::pow(b2 * std::log(ct), 2.0 * (1.0 - s.sigma)) * ll * ll;
    SampleCheck c{s.sigma, s.t, observed, bound, ratio_of(bound, observed), std::nullopt, observed > bound};
    // The right edge is computed as 1 + B/ll; allow its rounding.
    if (s.sigma >= 1.0 + grid.region.B / ll * (1.0 - 1e-12))
      c.elementary_bound = elementary_bounds(1, grid.region.B, grid.c, s.t, 1e4, std::max(s.sigma, 1.0 + grid.region.B / ll)).logder_bound;
    return c;
  });
}

std::size_t VerificationSuite::total_samples() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.samples.size();
  return n;
}

std::size_t VerificationSuite::total_violations() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.violations + r.elementary_violations;
  return n;
}

bool VerificationSuite::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
}

VerificationSuite run_default_suite(std::size_t samples_per_bound, std::uint64_t seed, unsigned threads) {
  const auto zeta_profile = profile_zeta();
  const auto c1 = compute_a1(zeta_profile, published_params(zeta_profile, BoundKind::kLog));
  const auto c2 = compute_a2(zeta_profile, published_params(zeta_profile, BoundKind::kLogDerivative));
  const std::size_t edges = samples_per_bound / 2, interior = samples_per_bound - edges;

  VerificationSuite suite;
  for (const auto& [mode, count] : {std::pair{SigmaMode::kRegionEdges, edges}, std::pair{SigmaMode::kInteriorGrid, interior}}) {
    suite.reports.push_back(check_log_bound(make_sample_grid(count, c1.sigma_region, mode, 1e4, 3e4, seed), c1.a, c1.b, threads));
    suite.reports.push_back(
        check_logder_bound(make_sample_grid(count, c2.sigma_region, mode, 1e4, 3e4, seed + 1), c2.a, c2.b, threads));
  }
  return suite;
}

void write_samples_csv(const BoundCheckReport& report, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  out << "kind,sigma,t,observed,bound,ratio,elementary_bound,violated\n";
  for (const auto& s : report.samples) {
    out << to_string(report.kind) << ',' << s.sigma << ',' << s.t << ',' << s.observed << ',' << s.bound << ',' << s.ratio << ',';
    if (s.elementary_bound) out << *s.elementary_bound;
    out << ',' << (s.violated ? 1 : 0) << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace lfb
