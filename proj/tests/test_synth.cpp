#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "momentfit/dist.hpp"
#include "momentfit/errors.hpp"
#include "momentfit/synth.hpp"

using momentfit::DistributionParams;
using momentfit::DomainError;
using momentfit::GammaParams;
using momentfit::LogNormalParams;
using momentfit::normal_quantile;
using momentfit::sample;
using momentfit::SeededGenerator;
using momentfit::theoretical_moment;
using momentfit::WeibullParams;

namespace {

struct MomentStats {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
};

MomentStats sample_moment(const std::vector<double>& xs, double order) {
  double sum = 0.0;
  for (const double x : xs) sum += std::pow(x, order);
  const double n = static_cast<double>(xs.size());
  const double mean = sum / n;
  double var = 0.0;
  for (const double x : xs) {
    const double d = std::pow(x, order) - mean;
    var += d * d;
  }
  var /= n - 1.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace

TEST_CASE("identical seeds give bit-identical streams") {
  for (const DistributionParams params :
       {DistributionParams{WeibullParams{2.0, 3.0}},
        DistributionParams{GammaParams{2.0, 1.0}},
        DistributionParams{LogNormalParams{0.5, 0.8}}}) {
    SeededGenerator a(987654321);
    SeededGenerator b(987654321);
    const auto xs = sample(params, 500, a);
    const auto ys = sample(params, 500, b);
    CHECK(xs == ys);

    SeededGenerator c(987654322);
    CHECK(sample(params, 500, c) != xs);
  }
}

TEST_CASE("split streams are decorrelated and reproducible") {
  SeededGenerator root(5);
  SeededGenerator s0 = root.split(0);
  SeededGenerator s1 = root.split(1);
  SeededGenerator s0_again = root.split(0);
  CHECK(s0.next_u64() != s1.next_u64());
  CHECK(SeededGenerator(root).next_u64() != s0_again.next_u64());
  SeededGenerator s0_b = root.split(0);
  SeededGenerator s0_c = root.split(0);
  CHECK(s0_b.next_u64() == s0_c.next_u64());
}

TEST_CASE("uniform variates stay strictly inside (0,1)") {
  SeededGenerator gen(17);
  for (int i = 0; i < 100000; ++i) {
    const double u = gen.next_uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("unit-exponential Weibull equals the inverse transform exactly") {
  SeededGenerator probe(712);
  const double u1 = probe.next_uniform();
  const double u2 = probe.next_uniform();

  SeededGenerator gen(712);
  const auto xs = sample(WeibullParams{1.0, 1.0}, 2, gen);
  CHECK(xs[0] == -std::log(u1));
  CHECK(xs[1] == -std::log(u2));
}

TEST_CASE("lognormal with vanishing sigma degenerates to exp(mu)") {
  SeededGenerator gen(3);
  for (const double x : sample(LogNormalParams{0.0, 1e-12}, 1000, gen)) {
    CHECK(std::abs(x - 1.0) < 1e-9);
  }
}

TEST_CASE("all sampled values are strictly positive") {
  for (const DistributionParams params :
       {DistributionParams{WeibullParams{0.4, 1.0}},
        DistributionParams{GammaParams{0.4, 2.0}},
        DistributionParams{LogNormalParams{-1.0, 2.0}}}) {
    SeededGenerator gen(99);
    const auto xs = sample(params, 20000, gen);
    CHECK(*std::min_element(xs.begin(), xs.end()) > 0.0);
  }
}

TEST_CASE("gamma sample mean is consistent with the distribution mean") {
  SeededGenerator gen(42);
  const auto xs = sample(GammaParams{2.0, 1.0}, 100000, gen);
  const auto stats = sample_moment(xs, 1.0);
  CHECK(std::abs(stats.mean - 2.0) <= 3.0 * stats.stderr_of_mean);
}

TEST_CASE("first two sample moments match theory within four sigma") {
  const std::vector<std::pair<DistributionParams, std::uint64_t>> cases{
      {WeibullParams{2.0, 3.0}, 1001},
      {WeibullParams{0.7, 1.5}, 1002},
      {GammaParams{2.5, 1.5}, 1003},
      {GammaParams{0.6, 2.0}, 1004},
      {LogNormalParams{1.0, 0.5}, 1005},
      {LogNormalParams{-0.5, 1.0}, 1006},
  };
  for (const auto& c : cases) {
    SeededGenerator gen(c.second);
    const auto xs = sample(c.first, 100000, gen);
    for (const double order : {1.0, 2.0}) {
      const auto stats = sample_moment(xs, order);
      const double want = theoretical_moment(c.first, order);
      CAPTURE(momentfit::kind_name(momentfit::kind(c.first)));
      CAPTURE(order);
      CHECK(std::abs(stats.mean - want) <= 4.0 * stats.stderr_of_mean);
    }
  }
}

TEST_CASE("normal quantile approximation") {
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_quantile(0.975) ==
        doctest::Approx(1.9599639845400542).epsilon(1e-8));
  CHECK(normal_quantile(0.01) ==
        doctest::Approx(-2.3263478740408411).epsilon(1e-8));
  CHECK(normal_quantile(1e-5) ==
        doctest::Approx(-4.2648907939228246).epsilon(1e-8));
  CHECK(normal_quantile(0.3) ==
        doctest::Approx(-0.52440051270804078).epsilon(1e-8));
  CHECK(normal_quantile(0.9999) ==
        doctest::Approx(3.7190164854556806).epsilon(1e-8));
  for (double p : {0.001, 0.02, 0.2, 0.6, 0.98, 0.999}) {
    CHECK(normal_quantile(p) ==
          doctest::Approx(-normal_quantile(1.0 - p)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
}

TEST_CASE("sampling rejects invalid requests") {
  SeededGenerator gen(1);
  CHECK_THROWS_AS(sample(WeibullParams{0.0, 1.0}, 10, gen), DomainError);
  CHECK_THROWS_AS(sample(WeibullParams{1.0, 1.0}, 0, gen), DomainError);
}
