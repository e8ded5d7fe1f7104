#pragma once

#include <cstdint>
#include <vector>

#include "momentfit/dist.hpp"

namespace momentfit {

/// Deterministic pseudo-random source: a SplitMix64 counter stream
/// (Steele, Lea & Flood constants, committed in synth.cpp). The same seed
/// reproduces the same stream; no platform entropy is consulted.
/// Independent streams come from split(), which derives a decorrelated
/// seed from a stream index.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) noexcept : state_(seed) {}

  /// Next raw 64-bit word.
  std::uint64_t next_u64() noexcept;

  /// Next uniform variate in the open interval (0, 1): 53 random bits
  /// offset by half a grid step, so neither endpoint is ever produced.
  double next_uniform() noexcept;

  /// Generator for an independent stream identified by index.
  SeededGenerator split(std::uint64_t stream_index) const noexcept;

 private:
  std::uint64_t state_;
};

/// Inverse of the standard normal CDF, evaluated with Acklam's rational
/// approximation (coefficients committed in synth.cpp). Relative error is
/// below 1.2e-9 on (0, 1); only arithmetic, log and sqrt are used, keeping
/// the variate stream reproducible.
double normal_quantile(double p);

/// Draws `count` variates from the given distribution:
///   Weibull    inverse transform, x = lambda * (-ln U)^{1/k}
///   LogNormal  exp(mu + sigma * Z) with Z = normal_quantile(U)
///   Gamma      Marsaglia-Tsang squeeze over a normal proposal for
///              shape >= 1, with the U^{1/alpha} boost below shape 1
/// All outputs are strictly positive. Throws DomainError on invalid
/// params or count == 0.
std::vector<double> sample(const DistributionParams& params,
                           std::size_t count, SeededGenerator& gen);

}  // namespace momentfit
