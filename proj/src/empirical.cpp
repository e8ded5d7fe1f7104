#include "momentfit/empirical.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "momentfit/errors.hpp"

namespace momentfit {
namespace {

// Neumaier's variant of Kahan summation: the carry also absorbs the case
// where the addend exceeds the running sum.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      carry_ += (sum_ - t) + value;
    } else {
      carry_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_value(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("cannot parse '" + std::string(token) + "' as a number",
                     line_no);
  }
  return value;
}

std::vector<std::string_view> split_csv_row(std::string_view row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(row.substr(start)));
      break;
    }
    fields.push_back(trim(row.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::vector<double> load_plain(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body{line};
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    values.push_back(parse_value(body, line_no));
  }
  return values;
}

std::vector<double> load_csv(std::istream& in, const std::string& column) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("csv stream has no header row", 1);
  }
  const auto header = split_csv_row(line);
  std::size_t column_index = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) {
      column_index = i;
      break;
    }
  }
  if (column_index == header.size()) {
    throw MissingColumnError(column);
  }

  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != header.size()) {
      std::ostringstream os;
      os << "csv row has " << fields.size() << " fields, header has "
         << header.size();
      throw ParseError(os.str(), line_no);
    }
    values.push_back(parse_value(fields[column_index], line_no));
  }
  return values;
}

}  // namespace

SampleSummary compute_raw_moments(std::span<const double> data,
                                  std::span<const double> orders) {
  if (data.empty()) throw EmptyDataError();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) {
      std::ostringstream os;
      os << "non-finite sample value at index " << i;
      throw DomainError(os.str());
    }
    if (data[i] < 0.0) throw NegativeValueError(i, data[i]);
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!(std::isfinite(orders[i]) && orders[i] > 0.0)) {
      std::ostringstream os;
      os << "moment order must be positive and finite, got " << orders[i];
      throw DomainError(os.str());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (orders[j] == orders[i]) {
        std::ostringstream os;
        os << "duplicate moment order " << orders[i];
        throw DomainError(os.str());
      }
    }
  }

  SampleSummary summary;
  summary.count = data.size();
  summary.min_value = data.front();
  summary.max_value = data.front();
  for (const double x : data) {
    if (x < summary.min_value) summary.min_value = x;
    if (x > summary.max_value) summary.max_value = x;
  }

  summary.moments.reserve(orders.size());
  const double inv_n = 1.0 / static_cast<double>(data.size());
  for (const double order : orders) {
    CompensatedSum sum;
    for (const double x : data) {
      sum.add(std::pow(x, order));
    }
    const double mean = sum.value() * inv_n;
    if (!std::isfinite(mean)) throw OverflowAtOrderError(order);
    summary.moments.emplace_back(order, mean);
  }
  return summary;
}

std::vector<double> load_samples(std::istream& in, SampleFormat format,
                                 const std::string& column) {
  switch (format) {
    case SampleFormat::Plain:
      return load_plain(in);
    case SampleFormat::Csv:
      return load_csv(in, column);
  }
  throw DomainError("unknown sample format");
}

}  // namespace momentfit
