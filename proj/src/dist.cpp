#include "momentfit/dist.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "momentfit/errors.hpp"
#include "momentfit/specfun.hpp"

namespace momentfit {
namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;
// exp() overflows past this; used to detect non-representable moments.
constexpr double kMaxExpArg = 709.0;

void require_finite_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << v;
    throw DomainError(os.str());
  }
}

double weibull_pdf(const WeibullParams& p, double x) {
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (p.k < 1.0) return std::numeric_limits<double>::infinity();
    return p.k == 1.0 ? 1.0 / p.lambda : 0.0;
  }
  const double z = x / p.lambda;
  // Log form keeps z^(k-1) from overflowing for extreme shapes.
  const double log_f =
      std::log(p.k / p.lambda) + (p.k - 1.0) * std::log(z) - std::pow(z, p.k);
  return std::exp(log_f);
}

double gamma_pdf(const GammaParams& p, double x) {
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (p.alpha < 1.0) return std::numeric_limits<double>::infinity();
    return p.alpha == 1.0 ? 1.0 / p.beta : 0.0;
  }
  const double log_f = (p.alpha - 1.0) * std::log(x) - x / p.beta -
                       p.alpha * std::log(p.beta) -
                       specfun::log_gamma(p.alpha).value;
  return std::exp(log_f);
}

double lognormal_pdf(const LogNormalParams& p, double x) {
  if (x <= 0.0) return 0.0;
  const double z = (std::log(x) - p.mu) / p.sigma;
  return kInvSqrt2Pi / (p.sigma * x) * std::exp(-0.5 * z * z);
}

}  // namespace

DistKind kind(const DistributionParams& params) noexcept {
  return static_cast<DistKind>(params.index());
}

const char* kind_name(DistKind kind) noexcept {
  switch (kind) {
    case DistKind::Weibull:
      return "weibull";
    case DistKind::Gamma:
      return "gamma";
    case DistKind::LogNormal:
      return "lognormal";
  }
  return "unknown";
}

void validate(const DistributionParams& params) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeibullParams>) {
          require_finite_positive(p.k, "weibull shape k");
          require_finite_positive(p.lambda, "weibull scale lambda");
        } else if constexpr (std::is_same_v<T, GammaParams>) {
          require_finite_positive(p.alpha, "gamma shape alpha");
          require_finite_positive(p.beta, "gamma scale beta");
        } else {
          if (!std::isfinite(p.mu)) {
            throw DomainError("lognormal mu must be finite");
          }
          require_finite_positive(p.sigma, "lognormal sigma");
        }
      },
      params);
}

double pdf(const DistributionParams& params, double x) {
  validate(params);
  return std::visit(
      [x](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeibullParams>) {
          return weibull_pdf(p, x);
        } else if constexpr (std::is_same_v<T, GammaParams>) {
          return gamma_pdf(p, x);
        } else {
          return lognormal_pdf(p, x);
        }
      },
      params);
}

double theoretical_moment(const DistributionParams& params, double i) {
  const double log_moment = log_theoretical_moment(params, i);
  if (log_moment > kMaxExpArg) {
    std::ostringstream os;
    os << "moment of order " << i << " is not representable (ln E(X^i) = "
       << log_moment << "); use log_theoretical_moment";
    throw DomainError(os.str());
  }
  return std::exp(log_moment);
}

double log_theoretical_moment(const DistributionParams& params, double i) {
  validate(params);
  if (!(std::isfinite(i) && i > 0.0)) {
    std::ostringstream os;
    os << "moment order must be positive and finite, got " << i;
    throw DomainError(os.str());
  }
  return std::visit(
      [i](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeibullParams>) {
          return i * std::log(p.lambda) +
                 specfun::log_gamma(1.0 + i / p.k).value;
        } else if constexpr (std::is_same_v<T, GammaParams>) {
          return i * std::log(p.beta) + specfun::log_gamma(i + p.alpha).value -
                 specfun::log_gamma(p.alpha).value;
        } else {
          return p.mu * i + 0.5 * p.sigma * p.sigma * i * i;
        }
      },
      params);
}

}  // namespace momentfit
