#pragma once

#include <variant>

#include "stormrisk/rng.hpp"

namespace stormrisk {

// Generalized extreme value distribution, parameterized by location mu,
// scale sigma > 0 and shape xi. xi < 0 gives a reverse-Weibull tail with
// finite upper endpoint mu - sigma/xi; xi = 0 is the Gumbel limit.
struct GevParams {
  double mu = 0.0;
  double sigma = 1.0;
  double xi = 0.0;
};

// |xi| below this threshold is evaluated on the Gumbel branch; the general
// branch uses log1p/expm1 so the two agree to rounding at the crossover.
inline constexpr double kGevXiTol = 1e-12;

bool gev_in_support(double x, const GevParams& p);

// t(x) = (1 + xi (x-mu)/sigma)^(-1/xi), exp(-(x-mu)/sigma) at xi = 0.
// Throws std::domain_error outside the support.
double gev_t(double x, const GevParams& p);

// log density; -inf outside the support (MCMC proposals must be rejectable).
double gev_logpdf(double x, const GevParams& p);
double gev_pdf(double x, const GevParams& p);

// exp(-t(x)); clamps to 0/1 outside support according to shape sign.
double gev_cdf(double x, const GevParams& p);

// exact inverse CDF on u in (0,1); throws std::domain_error otherwise
double gev_quantile(double u, const GevParams& p);

double gev_sample(const GevParams& p, Rng& rng);

// Standard families used by the seasonal hierarchy and the priors.
struct Lognormal {
  double mu, sigma;  // log-scale mean and sd
};
struct NegativeBinomial {
  double r, p;  // real r > 0; mean r(1-p)/p
};
struct Poisson {
  double lambda;
};
struct Binomial {
  long n;
  double theta;
};
struct Normal {
  double mu, var;
};
struct BetaDist {
  double a, b;
};
struct GammaDist {
  double shape, rate;
};
struct InverseGamma {
  double alpha, beta;
};
struct UniformDist {
  double lo, hi;
};

using FamilyParams = std::variant<Lognormal, NegativeBinomial, Poisson, Binomial, Normal,
                                  BetaDist, GammaDist, InverseGamma, UniformDist>;

// log pmf for the discrete families, log pdf for the continuous ones.
// Invalid parameters throw std::invalid_argument; out-of-support x gives -inf.
double family_logpdf(double x, const FamilyParams& f);

double family_sample(const FamilyParams& f, Rng& rng);

}  // namespace stormrisk
