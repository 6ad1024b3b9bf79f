#include "lfbounds/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "lfbounds/errors.hpp"
#include "lfbounds/numeric.hpp"

namespace lfb {

namespace {

#include "bernoulli_table.inc"

constexpr double kU = std::numeric_limits<double>::epsilon() / 2;            // 2^-53
constexpr long double kULd = std::numeric_limits<long double>::epsilon() / 2;  // 2^-64

// 2 pi = kTwoPiHi + kTwoPiLo, with kTwoPiHi carrying 44 significant bits so that
// k * kTwoPiHi is exact in long double for k < 2^20.
constexpr long double kTwoPiHi = 0x1.921fb54442c00p+2L;
constexpr long double kTwoPiLo = 2.48934886875864535690338706839e-13L;
constexpr long double kInvTwoPi = 0.159154943091895335768883763372514362L;

constexpr int kMaxDoublings = 2;

// log n for n < size, long double precision. Built once, immutable afterwards.
const std::vector<long double>& log_table() {
  static const std::vector<long double> table = [] {
    const std::size_t size = static_cast<std::size_t>(std::ceil(1.1 * kZetaTMax)) * (1u << kMaxDoublings) + 64;
    std::vector<long double> v(size);
    v[0] = 0.0L;
    for (std::size_t n = 1; n < size; ++n) v[n] = std::log(static_cast<long double>(n));
    return v;
  }();
  return table;
}

// theta mod 2 pi in [-pi, pi], theta >= 0.
inline double reduce_phase(long double theta) {
  const long double k = std::floor(theta * kInvTwoPi + 0.5L);
  return static_cast<double>((theta - k * kTwoPiHi) - k * kTwoPiLo);
}

// Worst-case relative error of one computed term n^-s (t >= 0 in the phase term).
inline double term_rel_error(double sigma, double t, double logn) {
  return (10.0 + 2.0 * sigma * logn) * kU + 3.0 * static_cast<double>(kULd) * t * logn;
}

struct Expansion {
  std::complex<double> value;
  double truncation = 0.0;
  double rounding = 0.0;
  std::int64_t terms = 0;
};

// One Euler-Maclaurin evaluation with t >= 0 and cutoff N. Returns the value and
// the smallest truncation bound reachable within the Bernoulli table such that
// truncation + rounding <= abs_tol, or the best available if none is.
Expansion expand(double sigma, double t, std::int64_t N, double abs_tol, bool derivative) {
  const auto& logs = log_table();
  const std::complex<double> s{sigma, t};

  CompensatedSum re, im;
  double rounding = 0.0;
  for (std::int64_t n = 1; n < N; ++n) {
    const long double L = logs[static_cast<std::size_t>(n)];
    const double Ld = static_cast<double>(L);
    double mag = std::exp(-sigma * Ld);
    const double phase = reduce_phase(static_cast<long double>(t) * L);
    if (derivative) mag *= -Ld;
    re += mag * std::cos(phase);
    im += -mag * std::sin(phase);
    rounding += std::abs(mag) * term_rel_error(sigma, t, Ld);
  }

  const long double LN_ld = logs[static_cast<std::size_t>(N)];
  const double LN = static_cast<double>(LN_ld);
  const double Nd = static_cast<double>(N);
  const double phaseN = reduce_phase(static_cast<long double>(t) * LN_ld);
  const std::complex<double> Ns = std::exp(-sigma * LN) * std::complex<double>{std::cos(phaseN), -std::sin(phaseN)};
  const double tail_rel = term_rel_error(sigma, t, LN) + 16.0 * kU;

  // N^{-s}/2 + N^{1-s}/(s-1), or their s-derivatives.
  const std::complex<double> sm1 = s - 1.0;
  std::complex<double> tail;
  if (!derivative)
    tail = 0.5 * Ns + Nd * Ns / sm1;
  else
    tail = -0.5 * LN * Ns - Nd * Ns * (LN / sm1 + 1.0 / (sm1 * sm1));
  rounding += std::abs(tail) * tail_rel;

  // Bernoulli corrections T_k = B_2k/(2k)! * prod_{j=0}^{2k-2} (s+j) * N^{1-s-2k},
  // carried as coef * N^{-s} with coef = B_2k/(2k)! * prod (s+j)/N.
  const double r = 1.0 / LN;  // Cauchy radius for the derivative remainder
  std::complex<double> poch = s / Nd;         // prod_{j=0}^{2k-2} (s+j)/N
  std::complex<double> harmonic = 1.0 / s;    // sum_{j=0}^{2k-2} 1/(s+j)
  double poch_r = (std::abs(s) + r) / Nd;     // same product with |s+j| + r
  std::complex<double> corr{0.0, 0.0};
  double corr_abs = 0.0;

  auto remainder_bound = [&](int nu) {
    // Bound after nu corrections uses B_{2nu+2}, prod_{j=0}^{2nu}: the current `poch`
    // when it has been advanced to index nu + 1.
    const double b = std::abs(static_cast<double>(kBernoulliOverFactorial[nu]));
    const double j = 2.0 * nu + 1.0;
    if (!derivative)
      return std::abs(s + j) / (sigma + j) * b * std::abs(poch) * std::abs(Ns);
    return kE / r * (std::abs(s + j) + r) / (sigma - r + j) * b * poch_r * std::abs(Ns);
  };

  Expansion out;
  out.terms = (N - 1) + 2;
  double best_total = std::numeric_limits<double>::infinity();
  std::complex<double> best_value;
  double best_trunc = 0.0, best_round = 0.0;
  std::int64_t best_terms = 0;

  const std::complex<double> base{re.value(), im.value()};
  for (int nu = 0; nu < kBernoulliOrder; ++nu) {
    // `poch` currently holds the product for index nu + 1.
    const double trunc = remainder_bound(nu);
    const double round = rounding + corr_abs * 8.0 * (nu + 2) * kU;
    const double total = trunc + round;
    if (total < best_total) {
      best_total = total;
      best_value = base + tail + corr;
      best_trunc = trunc;
      best_round = round;
      best_terms = out.terms + nu;
    }
    if (total <= abs_tol) break;
    if (nu + 1 >= kBernoulliOrder) break;

    // Add correction nu + 1.
    const double b = static_cast<double>(kBernoulliOverFactorial[nu]);
    std::complex<double> term = b * poch * Ns;
    if (derivative) term *= (-LN + harmonic);
    corr += term;
    corr_abs += std::abs(term);

    const double j1 = 2.0 * nu + 1.0, j2 = 2.0 * nu + 2.0;
    poch *= (s + j1) / Nd * ((s + j2) / Nd);
    harmonic += 1.0 / (s + j1) + 1.0 / (s + j2);
    poch_r *= (std::abs(s + j1) + r) / Nd * ((std::abs(s + j2) + r) / Nd);
  }
  out.value = best_value;
  out.truncation = best_trunc;
  out.rounding = best_round;
  out.terms = best_terms;
  return out;
}

void check_domain(ComplexPoint s, double abs_tol, double margin, const char* who) {
  std::ostringstream msg;
  if (!std::isfinite(s.sigma) || !std::isfinite(s.t)) {
    msg << who << ": non-finite argument";
  } else if (s.sigma < kZetaSigmaMin + margin || s.sigma > kZetaSigmaMax - margin) {
    msg << who << ": sigma=" << s.sigma << " outside [" << kZetaSigmaMin + margin << ", " << kZetaSigmaMax - margin << "]";
  } else if (std::abs(s.t) > kZetaTMax - margin) {
    msg << who << ": |t|=" << std::abs(s.t) << " exceeds " << kZetaTMax - margin;
  } else if (std::abs(std::complex<double>{s.sigma - 1.0, s.t}) < 1e-8) {
    msg << who << ": s is too close to the pole at 1";
  } else if (!(abs_tol >= kZetaMinTolerance)) {
    msg << who << ": abs_tol must be >= " << kZetaMinTolerance;
  } else {
    return;
  }
  throw DomainError(msg.str());
}

EvaluatedValue evaluate(ComplexPoint s, double abs_tol, bool derivative, const char* who) {
  const double t = std::abs(s.t);
  std::int64_t N = std::max<std::int64_t>(20, static_cast<std::int64_t>(std::ceil(1.1 * t)));
  Expansion e;
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, N *= 2) {
    e = expand(s.sigma, t, N, abs_tol, derivative);
    if (e.truncation + e.rounding <= abs_tol) break;
    // A larger cutoff only helps when truncation, not rounding, is the obstacle.
    if (e.rounding > abs_tol || attempt == kMaxDoublings) {
      std::ostringstream msg;
      msg << who << ": tolerance unreachable at s=" << s.sigma << "+" << s.t << "i (abs_tol=" << abs_tol
          << ", best bound=" << e.truncation + e.rounding << ")";
      throw ConvergenceError(msg.str());
    }
  }
  std::complex<double> v = e.value;
  if (s.t < 0.0) v = std::conj(v);
  return {v, e.truncation + e.rounding, e.terms};
}

}  // namespace

EvaluatedValue zeta(ComplexPoint s, double abs_tol) {
  check_domain(s, abs_tol, 0.0, "zeta");
  return evaluate(s, abs_tol, false, "zeta");
}

EvaluatedValue zeta_prime(ComplexPoint s, double abs_tol) {
  check_domain(s, abs_tol, 1e-3, "zeta_prime");
  return evaluate(s, abs_tol, true, "zeta_prime");
}

double inv_abs_zeta(double sigma0, double t) {
  if (!(sigma0 >= 0.9 && sigma0 < 1.0)) throw DomainError("inv_abs_zeta: sigma0 must lie in [0.9, 1)");
  const EvaluatedValue z = zeta({sigma0, t}, 1e-11);
  const double mod = std::abs(z.value);
  if (!(mod >= 1e-3)) throw DomainError("inv_abs_zeta: |zeta| < 1e-3 at t=" + std::to_string(t));
  return 1.0 / mod;
}

}  // namespace lfb
