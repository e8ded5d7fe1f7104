#pragma once

namespace momentfit::specfun {

/// Natural logarithm of a positive quantity. Finite for every in-range
/// argument of the kernels below.
struct LogValue {
  double value;
};

/// ln Gamma(x) for x > 0.
///
/// Lanczos approximation with g = 607/128 and the 15-term Godfrey
/// coefficient set (committed in specfun.cpp); arguments below 0.5 are
/// shifted up through ln Gamma(x) = ln Gamma(x+1) - ln x. Accuracy is a
/// couple of ulp of the result everywhere on [1e-6, 1e6].
///
/// Throws DomainError for x <= 0 or non-finite x.
LogValue log_gamma(double x);

/// ln R_W(k) = m*lnGamma(1 + n/k) - n*lnGamma(1 + m/k).
///
/// The log of the scale-free Weibull moment ratio E^m(X^n)/E^n(X^m).
/// Strictly decreasing in k for fixed n > m > 0, positive, and -> 0+ as
/// k -> infinity. Throws DomainError unless k > 0 and n > m > 0.
double log_weibull_ratio(double k, double n, double m);

/// ln R_G(alpha) = m*lnGamma(n+alpha) + n*lnGamma(alpha)
///               - n*lnGamma(m+alpha) - m*lnGamma(alpha).
///
/// The log of the Gamma moment ratio E^m(X^n)/E^n(X^m). Strictly
/// decreasing in alpha, positive, -> 0+ as alpha -> infinity.
/// Throws DomainError unless alpha > 0 and n > m > 0.
double log_gamma_ratio(double alpha, double n, double m);

/// ln G(sigma) = sigma^2 * (n - m) / 2.
///
/// The log of the Log-normal moment ratio E(X^n)^{1/n} / E(X^m)^{1/m}.
/// Strictly increasing in sigma. Throws DomainError unless sigma > 0 and
/// n > m > 0.
double log_lognormal_ratio(double sigma, double n, double m);

}  // namespace momentfit::specfun
