#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lfbounds/constants.hpp"
#include "lfbounds/zeta.hpp"

namespace lfb {

enum class SigmaMode { kRegionEdges, kInteriorGrid };

std::string to_string(SigmaMode mode);

/// Sample points (sigma, t) in sigma in [1/2 + A/loglog(ct), 1 + B/loglog(ct)], t in [t_lo, t_hi].
struct SampleGrid {
  std::vector<ComplexPoint> samples;
  SigmaMode sigma_mode = SigmaMode::kInteriorGrid;
  SigmaRegion region;
  double c = 1.0;
  double t_lo = 1e4;
  double t_hi = 3e4;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSampleSeed = 20240611;

/// Deterministic low-discrepancy grid: an additive recurrence over (u, v) in [0,1)^2
/// started at a seed-derived offset. kRegionEdges alternates between the two edges.
SampleGrid make_sample_grid(std::size_t count, SigmaRegion region, SigmaMode mode, double t_lo = 1e4,
                            double t_hi = 3e4, std::uint64_t seed = kDefaultSampleSeed, double c = 1.0);

struct SampleCheck {
  double sigma = 0.0;
  double t = 0.0;
  double observed = 0.0;  // upper estimate of the observed quantity, engine error included
  double bound = 0.0;
  double ratio = 0.0;     // bound / observed
  std::optional<double> elementary_bound;  // log-derivative only, sigma >= 1 + B / loglog t
  bool violated = false;
};

struct BoundCheckReport {
  BoundKind kind = BoundKind::kLog;
  double a = 0.0;
  double b = 0.0;
  SigmaRegion region;
  std::vector<SampleCheck> samples;
  std::size_t violations = 0;
  std::size_t elementary_violations = 0;   // observed above the elementary bound
  std::size_t elementary_not_dominated = 0;  // elementary bound above the main bound
  double min_ratio = 0.0;
  double median_ratio = 0.0;
  double runtime_seconds = 0.0;

  bool ok() const { return violations == 0 && elementary_violations == 0; }
};

/// |log|zeta(s)|| <= a1 (b1 log t)^(2(1-sigma)) loglog t at every sample.
BoundCheckReport check_log_bound(const SampleGrid& grid, double a1, double b1, unsigned threads = 1);

/// |zeta'/zeta(s)| <= a2 (b2 log t)^(2(1-sigma)) (loglog t)^2 at every sample; samples with
/// sigma >= 1 + B/loglog t are also compared with the elementary bound (1/B) loglog t.
BoundCheckReport check_logder_bound(const SampleGrid& grid, double a2, double b2, unsigned threads = 1);

/// The default suite: for each bound, half region-edge and half interior samples, using
/// the published zeta constants and their regions.
struct VerificationSuite {
  std::vector<BoundCheckReport> reports;
  std::size_t total_samples() const;
  std::size_t total_violations() const;
  bool ok() const;
};

VerificationSuite run_default_suite(std::size_t samples_per_bound = 200, std::uint64_t seed = kDefaultSampleSeed,
                                    unsigned threads = 1);

/// kind,sigma,t,observed,bound,ratio,elementary_bound,violated
void write_samples_csv(const BoundCheckReport& report, std::ostream& out);

}  // namespace lfb
