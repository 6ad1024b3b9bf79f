#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "lfbounds/errors.hpp"

namespace lfb {

// Euler-Mascheroni constant, 36 significant digits.
inline constexpr long double kEulerGammaLd = 0.577215664901532860606512090082402431L;
inline constexpr double kEulerGamma = static_cast<double>(kEulerGammaLd);

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

// exp(e^2): the recurring lower threshold for T1, T2 and t0'.
inline const double kExpESquared = std::exp(std::exp(2.0));

/// log^+ u = max{0, log u} for u > 0.
inline double log_plus(double u) {
  if (!(u > 0.0)) throw DomainError("log_plus: argument must be positive, got " + std::to_string(u));
  return u > 1.0 ? std::log(u) : 0.0;
}

/// log log x, defined here only for x > e so that the result is positive.
inline double loglog(double x) {
  if (!(x > kE)) throw DomainError("loglog: argument must exceed e, got " + std::to_string(x));
  return std::log(std::log(x));
}

/// log log log x for x > e; negative when x < e^e.
inline double logloglog(double x) { return std::log(loglog(x)); }

/// Smallest multiple of 10^-decimals that is >= x. Values within a relative
/// 1e-12 of a grid point are treated as lying on it.
inline double ceil_decimals(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double v = x * scale;
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-12 * std::abs(v)) return r / scale;
  return std::ceil(v) / scale;
}

/// Rounds x > 0 up at `digits` significant figures.
inline double ceil_significant(double x, int digits) {
  if (!(x > 0.0)) throw DomainError("ceil_significant: argument must be positive");
  const int exponent = static_cast<int>(std::floor(std::log10(x)));
  const int decimals = digits - 1 - exponent;
  return ceil_decimals(x, decimals);
}

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace lfb
