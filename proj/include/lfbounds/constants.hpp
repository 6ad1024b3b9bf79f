#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfbounds/profiles.hpp"

namespace lfb {

// Literals of the log-derivative corollary. They are load-bearing; do not simplify.
inline constexpr double kC4Divisor = 2.0001;      // 0 < C4 <= C2 / 2.0001
inline constexpr double kRegionShift = 1.00006;   // region lower offset 1.00006 C2 + C4
inline constexpr double kA2Prefactor = 1.0002;    // a2 = 1.0002 m / (C2 C4) exp(...)
inline constexpr double kPowerShiftSlack = 1.00009;  // moving the disc centre inside the exponent 2(1 - Re z)
inline constexpr double kLogLogRatioLower = 0.99995;  // loglog(|t| - 1) / loglog|t| for |t| >= exp(e^2)
inline constexpr double kLogLogRatioUpper = 1.00005;  // loglog(|t| + 1) / loglog|t| for |t| >= exp(e^2)

enum class BoundKind {
  kLog,            // |log L(s)| <= a1 (b1 log(c|t|))^(2(1-sigma)) loglog(c|t|)
  kLogDerivative,  // |L'/L(s)| <= a2 (b2 log(c|t|))^(2(1-sigma)) (loglog(c|t|))^2
};

std::string to_string(BoundKind kind);

/// Free parameters of the log bound (C4 absent) and the log-derivative bound (C4 present).
struct BoundParams {
  double C1 = 0.25;
  double C2 = 0.5;
  double C3 = 1000.0;
  std::optional<double> C4;
  double T1 = 1e4;
  double T2 = 7778.0;
  double t0 = 1e4;
};

/// sigma in [1/2 + A / loglog(c|t|), 1 + B / loglog(c|t|)].
struct SigmaRegion {
  double A = 0.0;
  double B = 0.0;
};

struct BoundConstants {
  double K = 0.0;
  double b = 0.0;
  double R = 0.0;
  double a = 0.0;
  SigmaRegion sigma_region;
};

struct HypothesisCheck {
  std::string id;
  std::string statement;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
};

/// Every hypothesis of the log bound (kLog) or log-derivative bound (kLogDerivative),
/// evaluated without throwing. Conditions whose terms are undefined are reported as failed.
std::vector<HypothesisCheck> check_hypotheses(const LFunctionProfile& profile, const BoundParams& params,
                                              BoundKind kind);

/// Result of check_hypotheses plus the constants when every check passed.
struct BoundEvaluation {
  BoundKind kind = BoundKind::kLog;
  std::vector<HypothesisCheck> checks;
  std::optional<BoundConstants> constants;

  bool admissible() const { return constants.has_value(); }
  std::vector<std::string> failed_conditions() const;
};

BoundEvaluation evaluate_bound(const LFunctionProfile& profile, const BoundParams& params, BoundKind kind);

/// Radius factor K of the HBC step:
///   d/4 + C1 d/(2 LL) + (1 + 2C1/LL)(ell LL/L + (m/L)(log LL + log(1/C1) + gamma C1/LL) + log^+C / L)
/// with L = log t0', LL = loglog t0'. Requires 0 < C1 <= 1 and t0' >= max{T + 1, exp(e^2)}.
double compute_K(const LFunctionProfile& profile, double C1, double t0_prime);

/// b1 = K(T2)/m times the two T1-dependent correction factors.
double compute_b1(const LFunctionProfile& profile, double C1, double C3, double T1, double T2);

/// R = (2 C2 + 1/(2 C3)) / (1 - 1/(4 C3 loglog T1)).
double compute_R(double C2, double C3, double T1);

/// a1 and its region (C2, C2). Throws HypothesisError naming each violated condition.
BoundConstants compute_a1(const LFunctionProfile& profile, const BoundParams& params);

/// a2 and its region (1.00006 C2 + C4, C4). Requires params.C4.
BoundConstants compute_a2(const LFunctionProfile& profile, const BoundParams& params);

/// For the Dedekind shape (d = m = ell = n_K, C = 1.9): b1(n_K) = K1 + K2 / n_K.
struct DedekindSplit {
  double K1 = 0.0;
  double K2 = 0.0;
};
DedekindSplit dedekind_split(double C1, double T1, double T2, double C3);

/// Unconditional bounds valid for sigma >= 1 + B / loglog(c|t|):
///   |log L| <= m logloglog(c|t|) + m log(1/B) + m gamma B / loglog t0,  |L'/L| <= (m/B) loglog(c|t|).
struct ElementaryBounds {
  double log_bound = 0.0;
  double logder_bound = 0.0;
};
ElementaryBounds elementary_bounds(int m, double B, double c, double t, double t0, double sigma);

/// The parameter sets used for the published constants of each family.
BoundParams published_params(const LFunctionProfile& profile, BoundKind kind);

/// Number of decimals at which the published a-constant is displayed (2 for a1, 3 for a2).
int published_decimals(BoundKind kind);

}  // namespace lfb
