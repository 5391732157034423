#include "stormrisk/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "stormrisk/math_utils.hpp"

namespace stormrisk {

namespace {

void check_sigma(const GevParams& p) {
  if (!(p.sigma > 0.0)) throw std::invalid_argument("gev: sigma must be > 0");
}

constexpr double kLog2Pi = 1.8378770664093454836;

bool is_count(double x) { return x >= 0.0 && x == std::floor(x) && std::isfinite(x); }

}  // namespace

bool gev_in_support(double x, const GevParams& p) {
  check_sigma(p);
  if (std::abs(p.xi) < kGevXiTol) return true;
  return 1.0 + p.xi * (x - p.mu) / p.sigma > 0.0;
}

double gev_t(double x, const GevParams& p) {
  check_sigma(p);
  const double z = (x - p.mu) / p.sigma;
  if (std::abs(p.xi) < kGevXiTol) return std::exp(-z);
  const double w = 1.0 + p.xi * z;
  if (w <= 0.0) throw std::domain_error("gev_t: x outside support");
  // (1 + xi z)^(-1/xi) via log1p keeps the xi -> 0 limit accurate
  return std::exp(-std::log1p(p.xi * z) / p.xi);
}

double gev_logpdf(double x, const GevParams& p) {
  check_sigma(p);
  const double z = (x - p.mu) / p.sigma;
  if (std::abs(p.xi) < kGevXiTol) {
    return -std::log(p.sigma) - z - std::exp(-z);
  }
  const double w = 1.0 + p.xi * z;
  if (w <= 0.0) return kNegInf;
  const double log_t = -std::log1p(p.xi * z) / p.xi;  // log t(x)
  const double t = std::exp(log_t);
  return -std::log(p.sigma) + (p.xi + 1.0) * log_t - t;
}

double gev_pdf(double x, const GevParams& p) { return std::exp(gev_logpdf(x, p)); }

double gev_cdf(double x, const GevParams& p) {
  check_sigma(p);
  const double z = (x - p.mu) / p.sigma;
  if (std::abs(p.xi) < kGevXiTol) return std::exp(-std::exp(-z));
  const double w = 1.0 + p.xi * z;
  if (w <= 0.0) return p.xi > 0.0 ? 0.0 : 1.0;
  return std::exp(-std::exp(-std::log1p(p.xi * z) / p.xi));
}

double gev_quantile(double u, const GevParams& p) {
  check_sigma(p);
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("gev_quantile: u must lie in (0,1)");
  const double g = -std::log(u);  // > 0
  if (std::abs(p.xi) < kGevXiTol) return p.mu - p.sigma * std::log(g);
  // mu + sigma ((-log u)^(-xi) - 1)/xi, stable for small xi
  return p.mu + p.sigma * std::expm1(-p.xi * std::log(g)) / p.xi;
}

double gev_sample(const GevParams& p, Rng& rng) { return gev_quantile(rng.uniform(), p); }

double family_logpdf(double x, const FamilyParams& f) {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Lognormal>) {
          if (!(d.sigma > 0.0)) throw std::invalid_argument("lognormal: sigma must be > 0");
          if (!(x > 0.0)) return kNegInf;
          const double z = (std::log(x) - d.mu) / d.sigma;
          return -std::log(x) - std::log(d.sigma) - 0.5 * kLog2Pi - 0.5 * z * z;
        } else if constexpr (std::is_same_v<T, NegativeBinomial>) {
          if (!(d.r > 0.0) || !(d.p > 0.0) || d.p > 1.0)
            throw std::invalid_argument("negbinom: need r > 0 and p in (0,1]");
          if (!is_count(x)) return kNegInf;
          if (d.p == 1.0) return x == 0.0 ? 0.0 : kNegInf;
          return std::lgamma(x + d.r) - std::lgamma(d.r) - std::lgamma(x + 1.0) +
                 d.r * std::log(d.p) + x * std::log1p(-d.p);
        } else if constexpr (std::is_same_v<T, Poisson>) {
          if (d.lambda < 0.0) throw std::invalid_argument("poisson: lambda must be >= 0");
          if (!is_count(x)) return kNegInf;
          if (d.lambda == 0.0) return x == 0.0 ? 0.0 : kNegInf;
          return x * std::log(d.lambda) - d.lambda - std::lgamma(x + 1.0);
        } else if constexpr (std::is_same_v<T, Binomial>) {
          if (d.n < 0 || d.theta < 0.0 || d.theta > 1.0)
            throw std::invalid_argument("binomial: need n >= 0 and theta in [0,1]");
          if (!is_count(x) || x > static_cast<double>(d.n)) return kNegInf;
          const double n = static_cast<double>(d.n);
          if (d.theta == 0.0) return x == 0.0 ? 0.0 : kNegInf;
          if (d.theta == 1.0) return x == n ? 0.0 : kNegInf;
          return lchoose(n, x) + x * std::log(d.theta) + (n - x) * std::log1p(-d.theta);
        } else if constexpr (std::is_same_v<T, Normal>) {
          if (!(d.var > 0.0)) throw std::invalid_argument("normal: variance must be > 0");
          const double z = x - d.mu;
          return -0.5 * (kLog2Pi + std::log(d.var)) - 0.5 * z * z / d.var;
        } else if constexpr (std::is_same_v<T, BetaDist>) {
          if (!(d.a > 0.0) || !(d.b > 0.0)) throw std::invalid_argument("beta: need a, b > 0");
          if (!(x > 0.0 && x < 1.0)) return kNegInf;
          const double lbeta = std::lgamma(d.a) + std::lgamma(d.b) - std::lgamma(d.a + d.b);
          return (d.a - 1.0) * std::log(x) + (d.b - 1.0) * std::log1p(-x) - lbeta;
        } else if constexpr (std::is_same_v<T, GammaDist>) {
          if (!(d.shape > 0.0) || !(d.rate > 0.0))
            throw std::invalid_argument("gamma: need shape, rate > 0");
          if (!(x > 0.0)) return kNegInf;
          return d.shape * std::log(d.rate) - std::lgamma(d.shape) +
                 (d.shape - 1.0) * std::log(x) - d.rate * x;
        } else if constexpr (std::is_same_v<T, InverseGamma>) {
          if (!(d.alpha > 0.0) || !(d.beta > 0.0))
            throw std::invalid_argument("invgamma: need alpha, beta > 0");
          if (!(x > 0.0)) return kNegInf;
          return d.alpha * std::log(d.beta) - std::lgamma(d.alpha) -
                 (d.alpha + 1.0) * std::log(x) - d.beta / x;
        } else {
          static_assert(std::is_same_v<T, UniformDist>);
          if (!(d.lo < d.hi)) throw std::invalid_argument("uniform: need lo < hi");
          if (x < d.lo || x > d.hi) return kNegInf;
          return -std::log(d.hi - d.lo);
        }
      },
      f);
}

double family_sample(const FamilyParams& f, Rng& rng) {
  return std::visit(
      [&rng](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Lognormal>) {
          if (!(d.sigma > 0.0)) throw std::invalid_argument("lognormal: sigma must be > 0");
          return std::exp(rng.normal(d.mu, d.sigma));
        } else if constexpr (std::is_same_v<T, NegativeBinomial>) {
          if (!(d.r > 0.0) || !(d.p > 0.0) || d.p > 1.0)
            throw std::invalid_argument("negbinom: need r > 0 and p in (0,1]");
          if (d.p == 1.0) return 0.0;
          // gamma-Poisson mixture; keeps real-valued r exact
          const double lambda = rng.gamma(d.r, d.p / (1.0 - d.p));
          return static_cast<double>(rng.poisson(lambda));
        } else if constexpr (std::is_same_v<T, Poisson>) {
          if (d.lambda < 0.0) throw std::invalid_argument("poisson: lambda must be >= 0");
          return static_cast<double>(rng.poisson(d.lambda));
        } else if constexpr (std::is_same_v<T, Binomial>) {
          if (d.n < 0 || d.theta < 0.0 || d.theta > 1.0)
            throw std::invalid_argument("binomial: need n >= 0 and theta in [0,1]");
          return static_cast<double>(rng.binomial(d.n, d.theta));
        } else if constexpr (std::is_same_v<T, Normal>) {
          if (!(d.var > 0.0)) throw std::invalid_argument("normal: variance must be > 0");
          return rng.normal(d.mu, std::sqrt(d.var));
        } else if constexpr (std::is_same_v<T, BetaDist>) {
          if (!(d.a > 0.0) || !(d.b > 0.0)) throw std::invalid_argument("beta: need a, b > 0");
          return rng.beta(d.a, d.b);
        } else if constexpr (std::is_same_v<T, GammaDist>) {
          if (!(d.shape > 0.0) || !(d.rate > 0.0))
            throw std::invalid_argument("gamma: need shape, rate > 0");
          return rng.gamma(d.shape, d.rate);
        } else if constexpr (std::is_same_v<T, InverseGamma>) {
          if (!(d.alpha > 0.0) || !(d.beta > 0.0))
            throw std::invalid_argument("invgamma: need alpha, beta > 0");
          return 1.0 / rng.gamma(d.alpha, d.beta);
        } else {
          static_assert(std::is_same_v<T, UniformDist>);
          if (!(d.lo < d.hi)) throw std::invalid_argument("uniform: need lo < hi");
          return rng.uniform(d.lo, d.hi);
        }
      },
      f);
}

}  // namespace stormrisk
