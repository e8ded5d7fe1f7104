#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "momentfit/empirical.hpp"
#include "momentfit/errors.hpp"
#include "momentfit/estimate.hpp"

using momentfit::compute_raw_moments;
using momentfit::DomainError;
using momentfit::EmptyDataError;
using momentfit::load_samples;
using momentfit::MissingColumnError;
using momentfit::MomentPair;
using momentfit::NegativeValueError;
using momentfit::OverflowAtOrderError;
using momentfit::ParseError;
using momentfit::SampleFormat;
using momentfit::SampleSummary;

TEST_CASE("raw moments of small hand-computed datasets") {
  {
    const std::vector<double> data{1, 1, 1, 1};
    const std::vector<double> orders{1, 2};
    const SampleSummary s = compute_raw_moments(data, orders);
    CHECK(s.count == 4);
    CHECK(s.moments[0] == std::pair{1.0, 1.0});
    CHECK(s.moments[1] == std::pair{2.0, 1.0});
    CHECK(s.min_value == 1.0);
    CHECK(s.max_value == 1.0);
  }
  {
    const std::vector<double> data{1, 2, 3};
    const std::vector<double> orders{1, 2};
    const SampleSummary s = compute_raw_moments(data, orders);
    CHECK(s.moments[0].second == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.moments[1].second ==
          doctest::Approx(14.0 / 3.0).epsilon(1e-15));
  }
  {
    const std::vector<double> data{0.5, 2.0};
    const std::vector<double> orders{1, 3};
    const SampleSummary s = compute_raw_moments(data, orders);
    CHECK(s.moments[0].second == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(s.moments[1].second == doctest::Approx(4.0625).epsilon(1e-15));
  }
}

TEST_CASE("raw moment error taxonomy") {
  const std::vector<double> orders{1.0};
  CHECK_THROWS_AS(compute_raw_moments({}, orders), EmptyDataError);

  const std::vector<double> negative{1.0, -3.0, 2.0};
  try {
    compute_raw_moments(negative, orders);
    FAIL("expected NegativeValueError");
  } catch (const NegativeValueError& e) {
    CHECK(e.index() == 1);
    CHECK(e.value() == -3.0);
    CHECK(std::string(e.code_string()) == "DOMAIN_ERROR");
  }

  const std::vector<double> huge{1e300, 1e300};
  const std::vector<double> second{2.0};
  try {
    compute_raw_moments(huge, second);
    FAIL("expected OverflowAtOrderError");
  } catch (const OverflowAtOrderError& e) {
    CHECK(e.order() == 2.0);
  }

  const std::vector<double> data{1.0, 2.0};
  const std::vector<double> duplicate{1.0, 1.0};
  CHECK_THROWS_AS(compute_raw_moments(data, duplicate), DomainError);
  const std::vector<double> nonpositive{0.0};
  CHECK_THROWS_AS(compute_raw_moments(data, nonpositive), DomainError);
  const std::vector<double> infinite{
      std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(compute_raw_moments(infinite, orders), DomainError);
}

TEST_CASE("moments are permutation invariant") {
  std::mt19937_64 rng(808);
  std::lognormal_distribution<double> draw(0.0, 1.5);
  std::vector<double> data(2000);
  for (auto& x : data) x = draw(rng);

  const std::vector<double> orders{1.0, 2.0, 5.0};
  const SampleSummary base = compute_raw_moments(data, orders);
  for (int shuffle = 0; shuffle < 5; ++shuffle) {
    std::shuffle(data.begin(), data.end(), rng);
    const SampleSummary s = compute_raw_moments(data, orders);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      CHECK(s.moments[i].second ==
            doctest::Approx(base.moments[i].second).epsilon(1e-12));
    }
  }
}

TEST_CASE("compensated summation agrees with naive sums at small N") {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> draw(0.01, 100.0);
  std::vector<double> data(1000);
  for (auto& x : data) x = draw(rng);

  const std::vector<double> orders{0.5, 1.0, 2.0, 3.0};
  const SampleSummary s = compute_raw_moments(data, orders);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    double naive = 0.0;
    for (const double x : data) naive += std::pow(x, orders[i]);
    naive /= static_cast<double>(data.size());
    CHECK(s.moments[i].second == doctest::Approx(naive).epsilon(1e-12));
  }
}

TEST_CASE("non-degenerate data yields strictly feasible moment pairs") {
  std::mt19937_64 rng(1010);
  std::gamma_distribution<double> draw(2.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> data(200);
    for (auto& x : data) x = draw(rng);
    for (const auto& [n, m] :
         std::vector<std::pair<double, double>>{{2.0, 1.0}, {3.5, 1.2}}) {
      const std::vector<double> orders{n, m};
      const SampleSummary s = compute_raw_moments(data, orders);
      const auto mp = MomentPair::from_moments(
          n, m, s.moments[0].second, s.moments[1].second);
      CHECK(mp.log_ratio() > 0.0);
    }
  }
}

TEST_CASE("degenerate data is accepted here and fails only at fit time") {
  const std::vector<double> data{3.0, 3.0, 3.0};
  const std::vector<double> orders{2.0, 1.0};
  const SampleSummary s = compute_raw_moments(data, orders);
  const auto mp =
      MomentPair::from_moments(2, 1, s.moments[0].second, s.moments[1].second);
  CHECK_FALSE(mp.feasible());
}

TEST_CASE("plain format parsing") {
  std::istringstream in("1.0\n2.5\n# note\n\n3\n");
  CHECK(load_samples(in, SampleFormat::Plain) ==
        std::vector<double>{1.0, 2.5, 3.0});

  std::istringstream inline_comment("1.5 # half\n 2.5\t\n");
  CHECK(load_samples(inline_comment, SampleFormat::Plain) ==
        std::vector<double>{1.5, 2.5});

  std::istringstream crlf("1.0\r\n2.0\r\n");
  CHECK(load_samples(crlf, SampleFormat::Plain) ==
        std::vector<double>{1.0, 2.0});

  std::istringstream bad("abc\n");
  try {
    load_samples(bad, SampleFormat::Plain);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }

  std::istringstream bad_later("1.0\n2.0\n3..5\n");
  try {
    load_samples(bad_later, SampleFormat::Plain);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("csv format parsing") {
  std::istringstream in("x,y\n1,9\n2,8\n");
  CHECK(load_samples(in, SampleFormat::Csv, "x") ==
        std::vector<double>{1.0, 2.0});

  std::istringstream other("x,y\n1,9\n2,8\n");
  CHECK(load_samples(other, SampleFormat::Csv, "y") ==
        std::vector<double>{9.0, 8.0});

  std::istringstream missing("x,y\n1,9\n");
  CHECK_THROWS_AS(load_samples(missing, SampleFormat::Csv, "z"),
                  MissingColumnError);

  std::istringstream ragged("x,y\n1,9\n2\n");
  try {
    load_samples(ragged, SampleFormat::Csv, "x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream empty("");
  CHECK_THROWS_AS(load_samples(empty, SampleFormat::Csv, "x"), ParseError);
}
