#pragma once

#include <string>
#include <variant>

namespace momentfit {

/// Weibull(k, lambda): shape k > 0, scale lambda > 0.
struct WeibullParams {
  double k;
  double lambda;
};

/// Gamma(alpha, beta): shape alpha > 0, scale beta > 0.
struct GammaParams {
  double alpha;
  double beta;
};

/// LogNormal(mu, sigma): log-location mu (any finite real), log-scale
/// sigma > 0.
struct LogNormalParams {
  double mu;
  double sigma;
};

enum class DistKind { Weibull, Gamma, LogNormal };

/// Exactly one of the three parameter records.
using DistributionParams =
    std::variant<WeibullParams, GammaParams, LogNormalParams>;

DistKind kind(const DistributionParams& params) noexcept;
const char* kind_name(DistKind kind) noexcept;

/// Throws DomainError unless the active record satisfies its invariants.
void validate(const DistributionParams& params);

/// Density f(x; params).
///
/// Zero for x < 0 and, for the Log-normal, at x = 0 (continuity limit).
/// At exactly x = 0 a Weibull with k < 1 or a Gamma with alpha < 1
/// diverges; the IEEE infinity is returned there.
double pdf(const DistributionParams& params, double x);

/// i-th raw moment E(X^i) for i > 0, computed as exp of the log-domain
/// form. Throws DomainError when the log-domain value exceeds the
/// representable range; callers should switch to log_theoretical_moment.
double theoretical_moment(const DistributionParams& params, double i);

/// ln E(X^i) for i > 0:
///   Weibull    i*ln(lambda) + lnGamma(1 + i/k)
///   Gamma      i*ln(beta) + lnGamma(i + alpha) - lnGamma(alpha)
///   LogNormal  mu*i + sigma^2 * i^2 / 2
double log_theoretical_moment(const DistributionParams& params, double i);

}  // namespace momentfit
