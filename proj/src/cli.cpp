#include "momentfit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "momentfit/dist.hpp"
#include "momentfit/empirical.hpp"
#include "momentfit/errors.hpp"
#include "momentfit/estimate.hpp"
#include "momentfit/synth.hpp"

namespace momentfit::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string one_line(std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  return message;
}

double parse_number(const std::string& token, const std::string& what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("cannot parse '" + token + "' as a number in " + what);
  }
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

DistKind parse_dist(const std::string& name) {
  if (name == "weibull") return DistKind::Weibull;
  if (name == "gamma") return DistKind::Gamma;
  if (name == "lognormal") return DistKind::LogNormal;
  throw ParseError("unknown distribution '" + name +
                   "' (expected weibull, gamma or lognormal)");
}

std::pair<double, double> parse_pair(const std::string& s,
                                     const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) {
    throw ParseError("expected two comma-separated values for " + what +
                     ", got '" + s + "'");
  }
  return {parse_number(parts[0], what), parse_number(parts[1], what)};
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> values;
  for (const auto& part : split(s, ',')) {
    values.push_back(parse_number(part, what));
  }
  return values;
}

DistributionParams parse_params(DistKind kind, const std::string& s) {
  double first = std::nan("");
  double second = std::nan("");
  const char* first_key = "";
  const char* second_key = "";
  switch (kind) {
    case DistKind::Weibull:
      first_key = "k";
      second_key = "lambda";
      break;
    case DistKind::Gamma:
      first_key = "alpha";
      second_key = "beta";
      break;
    case DistKind::LogNormal:
      first_key = "mu";
      second_key = "sigma";
      break;
  }
  for (const auto& part : split(s, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value in --params, got '" + part + "'");
    }
    const std::string key = part.substr(0, eq);
    const double value = parse_number(part.substr(eq + 1), "--params");
    if (key == first_key) {
      first = value;
    } else if (key == second_key) {
      second = value;
    } else {
      throw ParseError("unknown parameter '" + key + "' for " +
                       kind_name(kind) + " (expected " + first_key + ", " +
                       second_key + ")");
    }
  }
  if (std::isnan(first) || std::isnan(second)) {
    throw ParseError(std::string("--params must set both ") + first_key +
                     " and " + second_key + " for " + kind_name(kind));
  }
  switch (kind) {
    case DistKind::Weibull:
      return WeibullParams{first, second};
    case DistKind::Gamma:
      return GammaParams{first, second};
    case DistKind::LogNormal:
      return LogNormalParams{first, second};
  }
  throw DomainError("unknown distribution kind");
}

ordered_json params_to_json(const DistributionParams& params) {
  ordered_json j;
  std::visit(
      [&j](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeibullParams>) {
          j["k"] = p.k;
          j["lambda"] = p.lambda;
        } else if constexpr (std::is_same_v<T, GammaParams>) {
          j["alpha"] = p.alpha;
          j["beta"] = p.beta;
        } else {
          j["mu"] = p.mu;
          j["sigma"] = p.sigma;
        }
      },
      params);
  return j;
}

ordered_json fit_to_json(DistKind kind, const FitResult& result,
                         double tolerance) {
  ordered_json j;
  j["dist"] = kind_name(kind);
  j["params"] = params_to_json(result.params);
  j["iterations"] = result.iterations;
  j["final_bracket_width"] = result.final_bracket_width;
  j["log_ratio_residual"] = result.log_ratio_residual;
  j["tolerance"] = tolerance;
  return j;
}

struct FitArgs {
  std::string dist;
  std::string orders;
  std::string moments;
  double tol = 1e-10;
};

struct FitDataArgs {
  std::string dist;
  std::string orders;
  std::string input;
  std::string format = "plain";
  std::string column;
  double tol = 1e-10;
};

struct MomentsArgs {
  std::string dist;
  std::string params;
  std::string orders;
};

struct PdfArgs {
  std::string dist;
  std::string params;
  double from = 0.0;
  double to = 1.0;
  int points = 100;
};

struct SampleArgs {
  std::string dist;
  std::string params;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

int do_fit(const FitArgs& args, std::ostream& out) {
  const DistKind kind = parse_dist(args.dist);
  const auto [n, m] = parse_pair(args.orders, "--orders");
  const auto [vn, vm] = parse_pair(args.moments, "--moments");
  SolverConfig cfg;
  cfg.delta = args.tol;
  const FitResult result =
      fit(kind, MomentPair::from_moments(n, m, vn, vm), cfg);
  out << fit_to_json(kind, result, cfg.delta).dump() << '\n';
  return 0;
}

int do_fit_data(const FitDataArgs& args, std::istream& in, std::ostream& out) {
  const DistKind kind = parse_dist(args.dist);
  const auto [n, m] = parse_pair(args.orders, "--orders");

  SampleFormat format;
  if (args.format == "plain") {
    format = SampleFormat::Plain;
  } else if (args.format == "csv") {
    format = SampleFormat::Csv;
  } else {
    throw ParseError("unknown --format '" + args.format +
                     "' (expected plain or csv)");
  }
  if (format == SampleFormat::Csv && args.column.empty()) {
    throw ParseError("--format csv requires --column");
  }

  std::vector<double> data;
  if (args.input == "-") {
    data = load_samples(in, format, args.column);
  } else {
    std::ifstream file(args.input);
    if (!file) {
      throw DomainError("cannot open input file '" + args.input + "'");
    }
    data = load_samples(file, format, args.column);
  }

  const double orders[2] = {n, m};
  const SampleSummary summary = compute_raw_moments(data, orders);
  SolverConfig cfg;
  cfg.delta = args.tol;
  const FitResult result =
      fit(kind,
          MomentPair::from_moments(n, m, summary.moments[0].second,
                                   summary.moments[1].second),
          cfg);

  ordered_json j = fit_to_json(kind, result, cfg.delta);
  j["count"] = summary.count;
  ordered_json sample_moments = ordered_json::array();
  for (const auto& [order, value] : summary.moments) {
    ordered_json entry;
    entry["order"] = order;
    entry["value"] = value;
    sample_moments.push_back(std::move(entry));
  }
  j["sample_moments"] = sample_moments;
  out << j.dump() << '\n';
  return 0;
}

int do_moments(const MomentsArgs& args, std::ostream& out) {
  const DistKind kind = parse_dist(args.dist);
  const DistributionParams params = parse_params(kind, args.params);
  const std::vector<double> orders = parse_list(args.orders, "--orders");
  if (orders.empty()) throw ParseError("--orders must list at least one order");

  ordered_json j = ordered_json::array();
  for (const double order : orders) {
    // Evaluated before any json node exists; a throw mid-initializer-list
    // would leak the list's json_ref temporaries.
    const double value = theoretical_moment(params, order);
    ordered_json entry;
    entry["order"] = order;
    entry["value"] = value;
    j.push_back(std::move(entry));
  }
  out << j.dump() << '\n';
  return 0;
}

int do_pdf(const PdfArgs& args, std::ostream& out) {
  const DistKind kind = parse_dist(args.dist);
  const DistributionParams params = parse_params(kind, args.params);
  if (args.points < 1) throw ParseError("--points must be >= 1");
  if (!(args.from <= args.to)) {
    throw ParseError("--from must not exceed --to");
  }

  out << "x,pdf\n" << std::setprecision(17);
  for (int i = 0; i < args.points; ++i) {
    const double x =
        args.points == 1
            ? args.from
            : args.from + (args.to - args.from) *
                              (static_cast<double>(i) /
                               static_cast<double>(args.points - 1));
    out << x << ',' << pdf(params, x) << '\n';
  }
  return 0;
}

int do_sample(const SampleArgs& args, std::ostream& out) {
  const DistKind kind = parse_dist(args.dist);
  const DistributionParams params = parse_params(kind, args.params);
  SeededGenerator gen(args.seed);
  const std::vector<double> values = sample(params, args.count, gen);
  out << std::setprecision(17);
  for (const double v : values) {
    out << v << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{
        "Moment-pair parameter estimation for Weibull, Gamma and "
        "Log-normal distributions"};
    app.require_subcommand(1);

    FitArgs fit_args;
    auto* fit_cmd = app.add_subcommand(
        "fit", "Fit parameters from a pair of raw moments");
    fit_cmd->add_option("--dist", fit_args.dist,
                        "Distribution: weibull, gamma or lognormal")
        ->required();
    fit_cmd->add_option("--orders", fit_args.orders,
                        "Moment orders N,M with N > M > 0 (decimals allowed)")
        ->required();
    fit_cmd->add_option("--moments", fit_args.moments,
                        "Observed moment values VN,VM")
        ->required();
    fit_cmd->add_option("--tol", fit_args.tol, "Bisection interval tolerance")
        ->capture_default_str();

    FitDataArgs fit_data_args;
    auto* fit_data_cmd = app.add_subcommand(
        "fit-data", "Compute raw moments from a data file, then fit");
    fit_data_cmd->add_option("--dist", fit_data_args.dist,
                             "Distribution: weibull, gamma or lognormal")
        ->required();
    fit_data_cmd->add_option("--orders", fit_data_args.orders,
                             "Moment orders N,M with N > M > 0")
        ->required();
    fit_data_cmd->add_option("--input", fit_data_args.input,
                             "Input path, or - for stdin")
        ->required();
    fit_data_cmd->add_option("--format", fit_data_args.format,
                             "Input format: plain or csv")
        ->capture_default_str();
    fit_data_cmd->add_option("--column", fit_data_args.column,
                             "Column name for csv input");
    fit_data_cmd->add_option("--tol", fit_data_args.tol,
                             "Bisection interval tolerance")
        ->capture_default_str();

    MomentsArgs moments_args;
    auto* moments_cmd = app.add_subcommand(
        "moments", "Evaluate theoretical raw moments");
    moments_cmd->add_option("--dist", moments_args.dist,
                            "Distribution: weibull, gamma or lognormal")
        ->required();
    moments_cmd->add_option("--params", moments_args.params,
                            "Parameters, e.g. k=2,lambda=3")
        ->required();
    moments_cmd->add_option("--orders", moments_args.orders,
                            "Comma-separated moment orders")
        ->required();

    PdfArgs pdf_args;
    auto* pdf_cmd = app.add_subcommand(
        "pdf", "Emit density values over a grid as CSV");
    pdf_cmd->add_option("--dist", pdf_args.dist,
                        "Distribution: weibull, gamma or lognormal")
        ->required();
    pdf_cmd->add_option("--params", pdf_args.params,
                        "Parameters, e.g. mu=0,sigma=1")
        ->required();
    pdf_cmd->add_option("--from", pdf_args.from, "Grid start")->required();
    pdf_cmd->add_option("--to", pdf_args.to, "Grid end")->required();
    pdf_cmd->add_option("--points", pdf_args.points, "Grid size")
        ->capture_default_str();

    SampleArgs sample_args;
    auto* sample_cmd = app.add_subcommand(
        "sample", "Draw reproducible random variates, one per line");
    sample_cmd->add_option("--dist", sample_args.dist,
                           "Distribution: weibull, gamma or lognormal")
        ->required();
    sample_cmd->add_option("--params", sample_args.params,
                           "Parameters, e.g. alpha=2,beta=1")
        ->required();
    sample_cmd->add_option("--count", sample_args.count, "Number of variates")
        ->required();
    sample_cmd->add_option("--seed", sample_args.seed, "Stream seed")
        ->capture_default_str();

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      throw ParseError(e.what());
    }

    if (fit_cmd->parsed()) return do_fit(fit_args, out);
    if (fit_data_cmd->parsed()) return do_fit_data(fit_data_args, in, out);
    if (moments_cmd->parsed()) return do_moments(moments_args, out);
    if (pdf_cmd->parsed()) return do_pdf(pdf_args, out);
    if (sample_cmd->parsed()) return do_sample(sample_args, out);
    throw ParseError("no subcommand given");
  } catch (const Error& e) {
    err << e.code_string() << ": " << one_line(e.what()) << '\n';
    return e.exit_status();
  } catch (const std::exception& e) {
    err << "DOMAIN_ERROR: " << one_line(e.what()) << '\n';
    return 1;
  }
}

}  // namespace momentfit::cli
