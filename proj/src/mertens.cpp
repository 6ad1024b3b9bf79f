#include "lfbounds/mertens.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "lfbounds/errors.hpp"
#include "lfbounds/numeric.hpp"
#include "lfbounds/parallel.hpp"

namespace lfb {

double MertensInputs::resolved_T2() const { return T2 ? *T2 : T1 - C3 * loglog(T1) - 0.5; }

std::vector<HypothesisCheck> check_mertens_hypotheses(double sigma0, double C1, double C2, double C3, double T1,
                                                      double T2) {
  auto ll = [](double x) { return x > kE ? std::log(std::log(x)) : std::nan(""); };
  auto at_least = [](std::string id, std::string st, double lhs, double rhs) {
    return HypothesisCheck{std::move(id), std::move(st), lhs, rhs, lhs >= rhs};
  };
  std::vector<HypothesisCheck> c;
  c.push_back({"C1-range", "0 < C1 <= 1", C1, 1.0, C1 > 0.0 && C1 <= 1.0});
  c.push_back({"C2-range", "0 < C2 <= 2 C1", C2, 2.0 * C1, C2 > 0.0 && C2 <= 2.0 * C1});
  c.push_back(at_least("C3-floor", "C3 >= 1", C3, 1.0));
  c.push_back({"sigma0-below-one", "sigma0 < 1", sigma0, 1.0, sigma0 < 1.0});
  c.push_back(at_least("sigma0-floor", "sigma0 >= 1/2 + C2 / loglog T1", sigma0, 0.5 + C2 / ll(T1)));
  const double decreasing_from = sigma0 > 0.5 ? std::exp(std::exp(1.0 / (2.0 * sigma0 - 1.0))) : std::nan("");
  c.push_back(at_least("T1-floor", "T1 >= max{exp(e^(2 C2)), exp(e^2), C3, exp(exp(1/(2 sigma0 - 1)))}", T1,
                       std::max({std::exp(std::exp(2.0 * C2)), kExpESquared, C3, decreasing_from})));
  c.push_back(at_least("T1-T2-gap", "T1 - C3 loglog T1 - 1/2 >= T2", T1 - C3 * ll(T1) - 0.5, T2));
  c.push_back(at_least("T2-floor", "T2 >= exp(e^2)", T2, kExpESquared));
  c.push_back(at_least("T1-loglog-margin", "T1 - 2 C3 loglog T1 >= 0", T1 - 2.0 * C3 * ll(T1), 0.0));
  return c;
}

double compute_epsilon0(double sigma0, double C1, double C2, double C3, double T1, double T2) {
  const auto checks = check_mertens_hypotheses(sigma0, C1, C2, C3, T1, T2);
  std::vector<std::string> failed;
  std::ostringstream msg;
  msg << "compute_epsilon0: hypothesis violated:";
  for (const auto& c : checks)
    if (!c.passed) {
      failed.push_back(c.id);
      msg << ' ' << c.id << " (" << c.statement << ")";
    }
  if (!failed.empty()) throw HypothesisError(std::move(failed), msg.str());

  const double b = compute_b1(profile_zeta(), C1, C3, T1, T2);
  const double LL = loglog(T1);
  const double eps = std::pow(b, 2.0 * (1.0 - sigma0)) / C2 * std::exp((1.0 + log_plus(b) / LL) * compute_R(C2, C3, T1)) *
                     LL / std::pow(std::log(T1), 2.0 * sigma0 - 1.0);
  if (!(eps < 1.0)) {
    std::ostringstream m2;
    m2 << "compute_epsilon0: theorem inapplicable, epsilon0 = " << eps << " >= 1";
    throw HypothesisError({"epsilon0-below-one"}, m2.str());
  }
  return eps;
}

MertensBoundSpec mertens_bound(double sigma0, double lambda, double T1, double epsilon0, double integral_bound) {
  if (!(epsilon0 > 0.0 && epsilon0 < 1.0)) throw HypothesisError({"epsilon0-below-one"}, "mertens_bound: epsilon0 must lie in (0, 1)");
  if (!(lambda > 0.0 && lambda <= T1)) throw HypothesisError({"lambda-range"}, "mertens_bound: lambda must lie in (0, T1]");
  if (!(sigma0 > 0.5 && sigma0 < 1.0)) throw DomainError("mertens_bound: sigma0 must lie in (1/2, 1)");
  if (!(integral_bound > 0.0)) throw DomainError("mertens_bound: integral bound must be positive");

  const double shift = 1.0 + lambda / T1;
  const double shift_s = std::pow(shift, sigma0);
  MertensBoundSpec b;
  b.sigma0 = sigma0;
  b.lambda = lambda;
  b.T1 = T1;
  b.epsilon0 = epsilon0;
  b.integral_bound = integral_bound;
  b.kappa = (sigma0 + epsilon0) / (1.0 + epsilon0);
  b.coef_sigma0 = shift_s * integral_bound / (kPi * sigma0);
  b.coef_kappa = 1.0 + std::pow(lambda, epsilon0) / kPi * shift_s *
                           (1.0 / epsilon0 + 2.0 / (lambda * (1.0 - epsilon0)) * shift);
  b.additive_one = 1.0;
  b.log10_x_min = (1.0 + epsilon0) / (1.0 - sigma0) * std::log10(T1 / lambda);
  return b;
}

MertensBoundSpec mertens_from_inputs(const MertensInputs& in) {
  const double eps = compute_epsilon0(in.sigma0, in.C1, in.C2, in.C3, in.T1, in.resolved_T2());
  return mertens_bound(in.sigma0, in.lambda, in.T1, eps, in.integral_bound);
}

MBound derive_m_bound(const PowerBound& p) {
  auto inside = [](double e) { return e > 0.0 && e < 1.0; };
  if (!inside(p.a) || !inside(p.b)) throw DomainError("derive_m_bound: exponents must lie in (0, 1)");
  if (!(p.A > 0.0) || !(p.B >= 0.0)) throw DomainError("derive_m_bound: coefficients must be positive");
  return {p.A * (1.0 + 1.0 / (1.0 - p.a)), p.B * (1.0 + 1.0 / (1.0 - p.b))};
}

double crossover_trivial_log10(const PowerBound& p) {
  if (!(p.a > 0.0 && p.a < 1.0) || !(p.b > 0.0 && p.b < 1.0)) throw DomainError("crossover: exponents must lie in (0, 1)");
  if (!(p.A > 0.0) || !(p.B >= 0.0)) throw DomainError("crossover: require A > 0, B >= 0");
  // h(L) = log10(A 10^(aL) + B 10^(bL)) - L is strictly decreasing, since its slope
  // is a weighted mean of a and b minus 1.
  auto h = [&](double L) {
    const double x = std::log10(p.A) + p.a * L;
    if (p.B == 0.0) return x - L;
    const double y = std::log10(p.B) + p.b * L;
    const double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log10(1.0 + std::pow(10.0, lo - hi)) - L;
  };
  constexpr double kUpper = 2000.0;
  const double h0 = h(0.0);
  if (h0 < 0.0) throw DomainError("crossover: no crossover above 1 (bound is below x already at x = 1)");
  if (h0 == 0.0) return 0.0;
  if (h(kUpper) > 0.0) throw DomainError("crossover: no crossover below 10^2000");
  double lo = 0.0, hi = kUpper;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

std::vector<std::uint32_t> small_primes(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

// mu(n) for n in [lo, hi), using all primes <= sqrt(hi - 1).
void sieve_segment(std::int64_t lo, std::int64_t hi, const std::vector<std::uint32_t>& primes,
                   std::vector<std::int8_t>& mu, std::vector<std::uint32_t>& prod) {
  const auto len = static_cast<std::size_t>(hi - lo);
  mu.assign(len, 1);
  prod.assign(len, 1);
  for (const std::uint32_t p32 : primes) {
    const std::int64_t p = p32;
    if (p * p >= hi) break;
    for (std::int64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
      const auto i = static_cast<std::size_t>(m - lo);
      mu[i] = static_cast<std::int8_t>(-mu[i]);
      prod[i] *= static_cast<std::uint32_t>(p);
    }
    const std::int64_t pp = p * p;
    for (std::int64_t m = (lo + pp - 1) / pp * pp; m < hi; m += pp) mu[static_cast<std::size_t>(m - lo)] = 0;
  }
  for (std::size_t i = 0; i < len; ++i) {
    // A squarefree n with prod < n has exactly one prime factor above sqrt(hi).
    if (mu[i] != 0 && static_cast<std::int64_t>(prod[i]) < lo + static_cast<std::int64_t>(i))
      mu[i] = static_cast<std::int8_t>(-mu[i]);
  }
}

}  // namespace

void for_each_mobius_segment(std::int64_t N, unsigned threads,
                             const std::function<void(std::int64_t, std::span<const std::int8_t>)>& visit) {
  if (N < 1) throw DomainError("sieve: N must be positive");
  if (N > kMobiusTableLimit * 4) throw ResourceError("sieve: N exceeds 4e9");
  const auto primes = small_primes(static_cast<std::int64_t>(std::sqrt(static_cast<double>(N))) + 2);
  const unsigned workers = resolve_threads(threads);
  const std::int64_t count = (N + kMobiusSegment - 1) / kMobiusSegment;

  std::vector<std::vector<std::int8_t>> mu(workers);
  std::vector<std::vector<std::uint32_t>> prod(workers);
  for (std::int64_t first = 0; first < count; first += workers) {
    const std::int64_t batch = std::min<std::int64_t>(workers, count - first);
    parallel_for(static_cast<std::size_t>(batch), workers, [&](std::size_t w) {
      const std::int64_t lo = 1 + (first + static_cast<std::int64_t>(w)) * kMobiusSegment;
      sieve_segment(lo, std::min(lo + kMobiusSegment, N + 1), primes, mu[w], prod[w]);
    });
    for (std::int64_t w = 0; w < batch; ++w) visit(1 + (first + w) * kMobiusSegment, mu[static_cast<std::size_t>(w)]);
  }
}

MobiusTable sieve_mobius(std::int64_t N, unsigned threads) {
  if (N > kMobiusTableLimit) throw ResourceError("sieve_mobius: N exceeds the table limit 1e9");
  MobiusTable t;
  t.N = N;
  t.mu.assign(static_cast<std::size_t>(N) + 1, 0);
  t.M_prefix.assign(static_cast<std::size_t>(N) + 1, 0);
  t.m_prefix.assign(static_cast<std::size_t>(N) + 1, 0.0);
  std::int64_t M = 0;
  CompensatedSum m;
  for_each_mobius_segment(N, threads, [&](std::int64_t lo, std::span<const std::int8_t> mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const auto n = static_cast<std::size_t>(lo) + i;
      t.mu[n] = mu[i];
      M += mu[i];
      if (mu[i] != 0) m += mu[i] / static_cast<double>(n);
      t.M_prefix[n] = M;
      t.m_prefix[n] = m.value();
    }
  });
  return t;
}

namespace {

struct RangeChecker {
  PowerBound bound;
  MBound mb;
  RangeVerification r;

  explicit RangeChecker(const PowerBound& b) : bound(b), mb(derive_m_bound(b)) {}

  void flag(std::int64_t x, const char* kind) {
    if (!r.first_violation) {
      r.first_violation = x;
      r.first_violation_kind = kind;
    }
  }

  void check(std::int64_t x, std::int64_t M, double m) {
    const double lx = std::log(static_cast<double>(x));
    const double bM = bound.A * std::exp(bound.a * lx) + bound.B * std::exp(bound.b * lx);
    const double bm = mb.A_m * std::exp((bound.a - 1.0) * lx) + mb.B_m * std::exp((bound.b - 1.0) * lx);
    const double absM = static_cast<double>(M < 0 ? -M : M);
    const double ratio_M = absM / bM, ratio_m = std::abs(m) / bm;
    if (ratio_M > r.max_ratio_M) {
      r.max_ratio_M = ratio_M;
      r.argmax_ratio_M = x;
    }
    if (ratio_m > r.max_ratio_m) {
      r.max_ratio_m = ratio_m;
      r.argmax_ratio_m = x;
    }
    if (absM > bM) {
      ++r.violations_M;
      flag(x, "M");
    }
    if (std::abs(m) > bm) {
      ++r.violations_m;
      flag(x, "m");
    }
    if ((M < 0 ? -M : M) > x) {
      ++r.violations_trivial;
      flag(x, "trivial");
    }
  }
};

}  // namespace

RangeVerification verify_bound_on_range(const MobiusTable& table, const PowerBound& bound) {
  const auto start = std::chrono::steady_clock::now();
  RangeChecker c(bound);
  c.r.N = table.N;
  for (std::int64_t x = 1; x <= table.N; ++x)
    c.check(x, table.M_prefix[static_cast<std::size_t>(x)], table.m_prefix[static_cast<std::size_t>(x)]);
  c.r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c.r;
}

RangeVerification verify_bound_streaming(std::int64_t N, const PowerBound& bound, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  RangeChecker c(bound);
  c.r.N = N;
  std::int64_t M = 0;
  CompensatedSum m;
  for_each_mobius_segment(N, threads, [&](std::int64_t lo, std::span<const std::int8_t> mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const std::int64_t x = lo + static_cast<std::int64_t>(i);
      M += mu[i];
      if (mu[i] != 0) m += mu[i] / static_cast<double>(x);
      c.check(x, M, m.value());
    }
  });
  c.r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c.r;
}

}  // namespace lfb
