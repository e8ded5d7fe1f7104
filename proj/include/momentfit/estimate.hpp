#pragma once

#include <functional>

#include "momentfit/dist.hpp"

namespace momentfit {

/// A pair of observed raw moments E(X^n), E(X^m) of distinct positive
/// orders n > m > 0. Values are stored in the log domain so that
/// high-order moments beyond the double range stay usable; everything the
/// solvers consume is log-domain anyway.
class MomentPair {
 public:
  /// From raw moment values (both must be positive and finite).
  static MomentPair from_moments(double n, double m, double moment_n,
                                 double moment_m);

  /// From ln E(X^n), ln E(X^m) directly.
  static MomentPair from_log_moments(double n, double m, double log_moment_n,
                                     double log_moment_m);

  double n() const noexcept { return n_; }
  double m() const noexcept { return m_; }
  double log_moment_n() const noexcept { return log_moment_n_; }
  double log_moment_m() const noexcept { return log_moment_m_; }
  double moment_n() const noexcept;
  double moment_m() const noexcept;

  /// ln r = m*ln E(X^n) - n*ln E(X^m), the log of the scale-free ratio
  /// E^m(X^n)/E^n(X^m) the Weibull and Gamma solvers invert.
  double log_ratio() const noexcept;

  /// ln g = (1/n)*ln E(X^n) - (1/m)*ln E(X^m), the log of
  /// E(X^n)^{1/n}/E(X^m)^{1/m} the Log-normal solver inverts.
  double log_order_ratio() const noexcept;

  /// Lyapunov feasibility: ln r > 0. Pairs violating this admit no
  /// solution in any of the three families.
  bool feasible() const noexcept { return log_ratio() > 0.0; }

 private:
  MomentPair(double n, double m, double log_moment_n, double log_moment_m);

  double n_;
  double m_;
  double log_moment_n_;
  double log_moment_m_;
};

/// Bisection controls. delta is the absolute width tolerance on the
/// parameter interval (the loop guard is `while hi - lo > delta`);
/// [bracket_lo, bracket_hi] is the initial search interval, grown
/// geometrically up to max_expansions halvings/doublings per side.
struct SolverConfig {
  double delta = 1e-10;
  int max_iterations = 200;
  double bracket_lo = 1e-2;
  double bracket_hi = 1e3;
  int max_expansions = 60;
};

void validate(const SolverConfig& cfg);

/// Estimated parameters plus convergence diagnostics.
struct FitResult {
  DistributionParams params;
  int iterations = 0;
  int expansions = 0;
  double final_bracket_width = 0.0;
  /// ln R(estimate) - ln target, the residual of the inverted ratio.
  double log_ratio_residual = 0.0;
};

enum class Monotonicity { Decreasing, Increasing };

/// A strictly monotone scalar function together with its direction.
struct MonotoneFn {
  std::function<double(double)> fn;
  Monotonicity direction;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int expansions = 0;
};

/// Grows [cfg.bracket_lo, cfg.bracket_hi] geometrically (halve lo, double
/// hi) until the target value is straddled: for a decreasing ratio,
/// fn(lo) >= log_target >= fn(hi), mirrored for an increasing one. At most
/// cfg.max_expansions steps per side; throws BracketExhaustedError if the
/// straddle is not achieved.
Bracket select_bracket(double log_target, const MonotoneFn& ratio,
                       const SolverConfig& cfg);

/// Weibull fit: bisects ln R_W(k) = ln r for the shape, then backs out the
/// scale from lambda = (E(X^m)/Gamma(1 + m/k))^{1/m}.
FitResult fit_weibull(const MomentPair& mp, const SolverConfig& cfg = {});

/// Gamma fit: bisects ln R_G(alpha) = ln r for the shape, then
/// beta = (E(X^m) * Gamma(alpha)/Gamma(m + alpha))^{1/m}.
FitResult fit_gamma(const MomentPair& mp, const SolverConfig& cfg = {});

/// Log-normal fit: bisects ln G(sigma) = ln g for sigma, then
/// mu = (1/m)*ln E(X^m) - sigma^2 * m / 2.
FitResult fit_lognormal(const MomentPair& mp, const SolverConfig& cfg = {});

/// Dispatch on distribution kind.
FitResult fit(DistKind kind, const MomentPair& mp,
              const SolverConfig& cfg = {});

}  // namespace momentfit
