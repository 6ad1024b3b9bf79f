#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lfbounds/constants.hpp"

namespace lfb {

/// Inputs of the conditional Mertens bound. T2 defaults to T1 - C3 loglog T1 - 1/2.
struct MertensInputs {
  double sigma0 = 0.98;
  double C1 = 0.5;
  double C2 = 0.5;
  double C3 = 1000.0;
  double T1 = 2.6e7;
  std::optional<double> T2;
  double lambda = 2.0;
  double integral_bound = 5.95e14;  // upper bound for int_0^T1 du / |zeta(sigma0 + iu)|

  double resolved_T2() const;
};

/// |M(x)| <= additive_one + coef_sigma0 x^sigma0 + coef_kappa x^kappa  for log10 x >= log10_x_min.
/// x_min itself overflows a double for the parameters of interest, so only its log10 is kept.
struct MertensBoundSpec {
  double sigma0 = 0.0;
  double lambda = 0.0;
  double T1 = 0.0;
  double epsilon0 = 0.0;
  double kappa = 0.0;
  double integral_bound = 0.0;
  double coef_sigma0 = 0.0;
  double coef_kappa = 0.0;
  double additive_one = 1.0;
  double log10_x_min = 0.0;
};

/// Hypotheses of the Mertens theorem for (sigma0, C1, C2, C3, T1, T2), evaluated without throwing.
std::vector<HypothesisCheck> check_mertens_hypotheses(double sigma0, double C1, double C2, double C3, double T1,
                                                      double T2);

/// eps0 = (1/C2) b^(2(1-sigma0)) exp((1 + log^+ b / loglog T1) R(C2, C3, T1)) loglog T1 / (log T1)^(2 sigma0 - 1)
/// with b = b1 of the zeta profile at (C1, C3, T1, T2). Throws HypothesisError for a
/// violated hypothesis, and with condition "epsilon0-below-one" when eps0 >= 1.
double compute_epsilon0(double sigma0, double C1, double C2, double C3, double T1, double T2);

/// Coefficients of the bound for given eps0 in (0, 1) and lambda in (0, T1], with
/// kappa = (sigma0 + eps0)/(1 + eps0) and x_min = (T1/lambda)^((1 + eps0)/(1 - sigma0)).
MertensBoundSpec mertens_bound(double sigma0, double lambda, double T1, double epsilon0, double integral_bound);

/// compute_epsilon0 followed by mertens_bound.
MertensBoundSpec mertens_from_inputs(const MertensInputs& in);

/// A final bound |M(x)| <= A x^a + B x^b.
struct PowerBound {
  double A = 555.71;
  double a = 0.99;
  double B = 1.94e14;
  double b = 0.98;
};

/// From |M(u)| <= A u^a + B u^b: |m(x)| <= A_m / x^(1-a) + B_m / x^(1-b) with
/// A_m = A (1 + 1/(1-a)), B_m = B (1 + 1/(1-b)).
struct MBound {
  double A_m = 0.0;
  double B_m = 0.0;
};
MBound derive_m_bound(const PowerBound& bound);

/// log10 of the unique x* with A x*^a + B x*^b = x*, to within 1e-9 in log10.
/// Throws DomainError if x* < 1 or if the bound stays above x on (1, 10^2000).
double crossover_trivial_log10(const PowerBound& bound);

/// mu(n), M(n) = sum mu(k), m(n) = sum mu(k)/k for 1 <= n <= N; index 0 is unused.
struct MobiusTable {
  std::int64_t N = 0;
  std::vector<std::int8_t> mu;
  std::vector<std::int64_t> M_prefix;
  std::vector<double> m_prefix;
};

inline constexpr std::int64_t kMobiusTableLimit = 1'000'000'000;
inline constexpr std::int64_t kMobiusSegment = std::int64_t{1} << 20;

/// Segmented sieve. Calls visit(lo, mu) for consecutive segments covering [1, N] in
/// ascending order; mu[i] = mu(lo + i). Segments within a batch are sieved in parallel.
void for_each_mobius_segment(std::int64_t N, unsigned threads,
                             const std::function<void(std::int64_t, std::span<const std::int8_t>)>& visit);

/// Full table; throws ResourceError for N > 1e9.
MobiusTable sieve_mobius(std::int64_t N, unsigned threads = 1);

struct RangeVerification {
  std::int64_t N = 0;
  std::int64_t violations_M = 0;        // |M(x)| > A x^a + B x^b
  std::int64_t violations_m = 0;        // |m(x)| > A_m x^(a-1) + B_m x^(b-1)
  std::int64_t violations_trivial = 0;  // |M(x)| > x
  std::optional<std::int64_t> first_violation;
  std::string first_violation_kind;
  double max_ratio_M = 0.0;  // max |M(x)| / bound
  std::int64_t argmax_ratio_M = 0;
  double max_ratio_m = 0.0;
  std::int64_t argmax_ratio_m = 0;
  double runtime_seconds = 0.0;

  bool ok() const { return violations_M == 0 && violations_m == 0 && violations_trivial == 0; }
};

/// Checks every integer 1 <= x <= table.N.
RangeVerification verify_bound_on_range(const MobiusTable& table, const PowerBound& bound);

/// Same check without materializing the table.
RangeVerification verify_bound_streaming(std::int64_t N, const PowerBound& bound, unsigned threads = 1);

}  // namespace lfb
