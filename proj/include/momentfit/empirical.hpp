#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace momentfit {

/// Raw sample moments of the requested orders plus basic data diagnostics.
struct SampleSummary {
  std::size_t count = 0;
  /// (order, (1/N) * sum x_j^order) in the order requested.
  std::vector<std::pair<double, double>> moments;
  double min_value = 0.0;
  double max_value = 0.0;
};

/// Computes E(X^i) ~ (1/N) sum x_j^i for each requested order with
/// compensated (Neumaier) summation, so high-order power sums do not wash
/// out the precision of low-order moments.
///
/// Throws EmptyDataError for empty input, NegativeValueError on the first
/// value < 0 (support of all three families is nonnegative), DomainError
/// for non-finite values or invalid orders, and OverflowAtOrderError when a
/// power sum leaves the double range.
SampleSummary compute_raw_moments(std::span<const double> data,
                                  std::span<const double> orders);

enum class SampleFormat { Plain, Csv };

/// Reads sample values from a stream.
///
/// Plain format: one decimal value per line; '#' starts a comment; blank
/// lines are skipped. Csv format: a header row names the columns and
/// `column` selects one. Parsing is locale-independent (decimal point
/// only). Throws ParseError with a 1-based line number on malformed input
/// and MissingColumnError when the csv header lacks `column`.
std::vector<double> load_samples(std::istream& in, SampleFormat format,
                                 const std::string& column = "");

}  // namespace momentfit
