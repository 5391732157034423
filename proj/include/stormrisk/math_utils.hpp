#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace stormrisk {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// log(1 + e^x) without overflow
inline double log1pexp(double x) {
  if (x > 35.0) return x;
  if (x < -35.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

// log(1 - e^u) for u < 0
inline double log1mexp(double u) {
  if (u >= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (u > -M_LN2) return std::log(-std::expm1(u));
  return std::log1p(-std::exp(u));
}

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

// log binomial coefficient, real arguments
inline double lchoose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double mean(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("mean of empty series");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double sample_variance(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("variance needs >= 2 values");
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

inline double sample_sd(std::span<const double> x) { return std::sqrt(sample_variance(x)); }

// type-7 quantile (linear interpolation between order statistics)
inline double quantile(std::vector<double> x, double q) {
  if (x.empty()) throw std::invalid_argument("quantile of empty series");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile level outside [0,1]");
  std::sort(x.begin(), x.end());
  const double h = (static_cast<double>(x.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= x.size()) return x.back();
  return x[lo] + (h - std::floor(h)) * (x[lo + 1] - x[lo]);
}

// fraction of draws <= v (empirical CDF)
inline double empirical_cdf(std::span<const double> draws, double v) {
  if (draws.empty()) throw std::invalid_argument("empirical_cdf of empty draws");
  std::size_t c = 0;
  for (double d : draws)
    if (d <= v) ++c;
  return static_cast<double>(c) / static_cast<double>(draws.size());
}

}  // namespace stormrisk
