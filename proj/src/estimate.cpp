#include "momentfit/estimate.hpp"

#include <cmath>
#include <sstream>

#include "momentfit/errors.hpp"
#include "momentfit/specfun.hpp"

namespace momentfit {
namespace {

struct BisectOutcome {
  double estimate = 0.0;
  int iterations = 0;
  double final_width = 0.0;
};

// Interval-halving on a strictly monotone function. The loop guard and the
// midpoint return mirror the convergence argument: the bracket always
// straddles the target and its width halves every pass, so the midpoint of
// the final interval is within delta/2 of the root.
BisectOutcome bisect(const MonotoneFn& ratio, double target, double lo,
                     double hi, const SolverConfig& cfg) {
  BisectOutcome out;
  while (hi - lo > cfg.delta) {
    if (out.iterations >= cfg.max_iterations) {
      std::ostringstream os;
      os << "bisection did not reach width " << cfg.delta << " within "
         << cfg.max_iterations << " iterations (width " << hi - lo << ")";
      throw IterationLimitError(os.str());
    }
    ++out.iterations;
    const double mid = 0.5 * (lo + hi);
    const bool overshoot = ratio.fn(mid) > target;
    if (ratio.direction == Monotonicity::Decreasing) {
      // Decreasing ratio above the target means the root lies to the right.
      (overshoot ? lo : hi) = mid;
    } else {
      (overshoot ? hi : lo) = mid;
    }
  }
  out.estimate = 0.5 * (lo + hi);
  out.final_width = hi - lo;
  return out;
}

void require_feasible(double log_target, const char* fn) {
  if (!(log_target > 0.0)) {
    std::ostringstream os;
    os << fn << ": moment pair is infeasible (log ratio " << log_target
       << " <= 0); no distribution in the family matches";
    throw InfeasibleRatioError(os.str());
  }
}

}  // namespace

MomentPair::MomentPair(double n, double m, double log_moment_n,
                       double log_moment_m)
    : n_(n), m_(m), log_moment_n_(log_moment_n), log_moment_m_(log_moment_m) {
  if (!(std::isfinite(n_) && std::isfinite(m_) && n_ > m_ && m_ > 0.0)) {
    std::ostringstream os;
    os << "moment orders must satisfy n > m > 0, got n=" << n_ << " m=" << m_;
    throw DomainError(os.str());
  }
  if (!(std::isfinite(log_moment_n_) && std::isfinite(log_moment_m_))) {
    throw DomainError("log moment values must be finite");
  }
}

MomentPair MomentPair::from_moments(double n, double m, double moment_n,
                                    double moment_m) {
  if (!(std::isfinite(moment_n) && moment_n > 0.0 &&
        std::isfinite(moment_m) && moment_m > 0.0)) {
    std::ostringstream os;
    os << "moment values must be positive and finite, got E(X^n)=" << moment_n
       << " E(X^m)=" << moment_m;
    throw DomainError(os.str());
  }
  return MomentPair(n, m, std::log(moment_n), std::log(moment_m));
}

MomentPair MomentPair::from_log_moments(double n, double m,
                                        double log_moment_n,
                                        double log_moment_m) {
  return MomentPair(n, m, log_moment_n, log_moment_m);
}

double MomentPair::moment_n() const noexcept { return std::exp(log_moment_n_); }

double MomentPair::moment_m() const noexcept { return std::exp(log_moment_m_); }

double MomentPair::log_ratio() const noexcept {
  return m_ * log_moment_n_ - n_ * log_moment_m_;
}

double MomentPair::log_order_ratio() const noexcept {
  return log_moment_n_ / n_ - log_moment_m_ / m_;
}

void validate(const SolverConfig& cfg) {
  if (!(std::isfinite(cfg.delta) && cfg.delta > 0.0)) {
    throw DomainError("solver delta must be positive");
  }
  if (cfg.max_iterations < 1) {
    throw DomainError("solver max_iterations must be >= 1");
  }
  if (!(std::isfinite(cfg.bracket_lo) && std::isfinite(cfg.bracket_hi) &&
        cfg.bracket_lo > 0.0 && cfg.bracket_lo < cfg.bracket_hi)) {
    throw DomainError("solver bracket must satisfy 0 < bracket_lo < bracket_hi");
  }
  if (cfg.max_expansions < 0) {
    throw DomainError("solver max_expansions must be >= 0");
  }
}

Bracket select_bracket(double log_target, const MonotoneFn& ratio,
                       const SolverConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(log_target)) {
    throw DomainError("bracket target must be finite");
  }
  Bracket b{cfg.bracket_lo, cfg.bracket_hi, 0};
  const bool decreasing = ratio.direction == Monotonicity::Decreasing;

  // The lo endpoint must sit on or above the target for a decreasing
  // ratio (on or below for an increasing one); mirrored at hi.
  auto lo_ok = [&] {
    const double v = ratio.fn(b.lo);
    return decreasing ? v >= log_target : v <= log_target;
  };
  auto hi_ok = [&] {
    const double v = ratio.fn(b.hi);
    return decreasing ? v <= log_target : v >= log_target;
  };

  for (int i = 0; !lo_ok(); ++i) {
    if (i >= cfg.max_expansions) {
      std::ostringstream os;
      os << "bracket expansion exhausted at lo=" << b.lo << " after "
         << cfg.max_expansions << " halvings; target " << log_target
         << " not straddled";
      throw BracketExhaustedError(os.str());
    }
    b.lo *= 0.5;
    ++b.expansions;
  }
  for (int i = 0; !hi_ok(); ++i) {
    if (i >= cfg.max_expansions) {
      std::ostringstream os;
      os << "bracket expansion exhausted at hi=" << b.hi << " after "
         << cfg.max_expansions << " doublings; target " << log_target
         << " not straddled";
      throw BracketExhaustedError(os.str());
    }
    b.hi *= 2.0;
    ++b.expansions;
  }
  return b;
}

FitResult fit_weibull(const MomentPair& mp, const SolverConfig& cfg) {
  validate(cfg);
  const double target = mp.log_ratio();
  require_feasible(target, "fit_weibull");

  const MonotoneFn ratio{
      [&mp](double k) {
        return specfun::log_weibull_ratio(k, mp.n(), mp.m());
      },
      Monotonicity::Decreasing};
  const Bracket bracket = select_bracket(target, ratio, cfg);
  const BisectOutcome out = bisect(ratio, target, bracket.lo, bracket.hi, cfg);

  const double k = out.estimate;
  const double log_lambda =
      (mp.log_moment_m() - specfun::log_gamma(1.0 + mp.m() / k).value) /
      mp.m();
  return FitResult{WeibullParams{k, std::exp(log_lambda)}, out.iterations,
                   bracket.expansions, out.final_width,
                   ratio.fn(k) - target};
}

FitResult fit_gamma(const MomentPair& mp, const SolverConfig& cfg) {
  validate(cfg);
  const double target = mp.log_ratio();
  require_feasible(target, "fit_gamma");

  const MonotoneFn ratio{
      [&mp](double alpha) {
        return specfun::log_gamma_ratio(alpha, mp.n(), mp.m());
      },
      Monotonicity::Decreasing};
  const Bracket bracket = select_bracket(target, ratio, cfg);
  const BisectOutcome out = bisect(ratio, target, bracket.lo, bracket.hi, cfg);

  const double alpha = out.estimate;
  const double log_beta = (mp.log_moment_m() + specfun::log_gamma(alpha).value -
                           specfun::log_gamma(mp.m() + alpha).value) /
                          mp.m();
  return FitResult{GammaParams{alpha, std::exp(log_beta)}, out.iterations,
                   bracket.expansions, out.final_width,
                   ratio.fn(alpha) - target};
}

FitResult fit_lognormal(const MomentPair& mp, const SolverConfig& cfg) {
  validate(cfg);
  const double target = mp.log_order_ratio();
  if (!(target > 0.0)) {
    std::ostringstream os;
    os << "fit_lognormal: moment pair is infeasible (ln g = " << target
       << " <= 0); no distribution in the family matches";
    throw InfeasibleRatioError(os.str());
  }

  const MonotoneFn ratio{
      [&mp](double sigma) {
        return specfun::log_lognormal_ratio(sigma, mp.n(), mp.m());
      },
      Monotonicity::Increasing};
  const Bracket bracket = select_bracket(target, ratio, cfg);
  const BisectOutcome out = bisect(ratio, target, bracket.lo, bracket.hi, cfg);

  const double sigma = out.estimate;
  const double mu = mp.log_moment_m() / mp.m() - 0.5 * sigma * sigma * mp.m();
  return FitResult{LogNormalParams{mu, sigma}, out.iterations,
                   bracket.expansions, out.final_width,
                   ratio.fn(sigma) - target};
}

FitResult fit(DistKind kind, const MomentPair& mp, const SolverConfig& cfg) {
  switch (kind) {
    case DistKind::Weibull:
      return fit_weibull(mp, cfg);
    case DistKind::Gamma:
      return fit_gamma(mp, cfg);
    case DistKind::LogNormal:
      return fit_lognormal(mp, cfg);
  }
  throw DomainError("unknown distribution kind");
}

}  // namespace momentfit
