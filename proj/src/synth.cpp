#include "momentfit/synth.hpp"

#include <cmath>

#include "momentfit/errors.hpp"

namespace momentfit {
namespace {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators"). The increment is the 64-bit golden ratio.
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Acklam's inverse normal CDF approximation.
constexpr double kAcklamA[6] = {
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kAcklamB[5] = {
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01,  -1.328068155288572e+01};
constexpr double kAcklamC[6] = {
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kAcklamD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kAcklamPLow = 0.02425;

double acklam_tail(double p) {
  const double q = std::sqrt(-2.0 * std::log(p));
  return (((((kAcklamC[0] * q + kAcklamC[1]) * q + kAcklamC[2]) * q +
            kAcklamC[3]) *
               q +
           kAcklamC[4]) *
              q +
          kAcklamC[5]) /
         ((((kAcklamD[0] * q + kAcklamD[1]) * q + kAcklamD[2]) * q +
           kAcklamD[3]) *
              q +
          1.0);
}

double weibull_variate(const WeibullParams& p, SeededGenerator& gen) {
  const double u = gen.next_uniform();
  return p.lambda * std::pow(-std::log(u), 1.0 / p.k);
}

double lognormal_variate(const LogNormalParams& p, SeededGenerator& gen) {
  const double z = normal_quantile(gen.next_uniform());
  return std::exp(p.mu + p.sigma * z);
}

// Marsaglia & Tsang's squeeze method for unit-scale Gamma with shape >= 1.
double gamma_variate_shape_ge1(double alpha, SeededGenerator& gen) {
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  while (true) {
    const double z = normal_quantile(gen.next_uniform());
    const double b = 1.0 + c * z;
    if (b <= 0.0) continue;
    const double v = b * b * b;
    const double u = gen.next_uniform();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double gamma_variate(const GammaParams& p, SeededGenerator& gen) {
  if (p.alpha >= 1.0) {
    return p.beta * gamma_variate_shape_ge1(p.alpha, gen);
  }
  // Shape < 1: draw at shape alpha+1 and apply the U^{1/alpha} boost.
  const double boost =
      std::pow(gen.next_uniform(), 1.0 / p.alpha);
  return p.beta * gamma_variate_shape_ge1(p.alpha + 1.0, gen) * boost;
}

}  // namespace

std::uint64_t SeededGenerator::next_u64() noexcept {
  state_ += kGolden;
  return mix(state_);
}

double SeededGenerator::next_uniform() noexcept {
  // 53 bits plus a half-step offset: values lie strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

SeededGenerator SeededGenerator::split(std::uint64_t stream_index) const
    noexcept {
  return SeededGenerator(mix(state_ ^ (stream_index * kGolden + 1)));
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_quantile requires p in (0, 1)");
  }
  if (p < kAcklamPLow) return acklam_tail(p);
  if (p > 1.0 - kAcklamPLow) return -acklam_tail(1.0 - p);
  const double q = p - 0.5;
  const double r = q * q;
  return (((((kAcklamA[0] * r + kAcklamA[1]) * r + kAcklamA[2]) * r +
            kAcklamA[3]) *
               r +
           kAcklamA[4]) *
              r +
          kAcklamA[5]) *
         q /
         (((((kAcklamB[0] * r + kAcklamB[1]) * r + kAcklamB[2]) * r +
            kAcklamB[3]) *
               r +
           kAcklamB[4]) *
              r +
          1.0);
}

std::vector<double> sample(const DistributionParams& params,
                           std::size_t count, SeededGenerator& gen) {
  validate(params);
  if (count == 0) throw DomainError("sample count must be >= 1");

  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = std::visit(
        [&gen](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, WeibullParams>) {
            return weibull_variate(p, gen);
          } else if constexpr (std::is_same_v<T, GammaParams>) {
            return gamma_variate(p, gen);
          } else {
            return lognormal_variate(p, gen);
          }
        },
        params);
    values.push_back(x);
  }
  return values;
}

}  // namespace momentfit
