#pragma once

// Iteration of the Serre functor and the AR translate on the generator
// G = sum of projectives, with Hom-growth measurements and entropy fits.

#include <gentle/invariants.hpp>
#include <gentle/serre.hpp>
#include <gentle/twisted.hpp>

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

enum class Functor { Serre, Tau };
const char* to_string(Functor f);

struct OrbitStep {
  int n = 0;
  TwistedComplex complex;
  int left = 0;
  int right = 0;
  HomProfile profile;  // against the probe object
};

struct OrbitRecord {
  Functor functor = Functor::Serre;
  std::vector<OrbitStep> steps;  // steps[0] is the start object
};

struct Budget {
  int cutoff = kDefaultCutoff;
  int max_terms = 20000;
};

/// Iterates the functor `count` times.  Throws Error(BudgetExceeded) when a
/// complex outgrows the budget.
OrbitRecord orbit(const TwistedComplex& start, Functor f, int count, const TwistedComplex& probe,
                  const Budget& budget = {});

/// Smallest m <= max_steps with tau^m X isomorphic to X[r]; returns (m, r)
/// with r in bracket notation, so X[r] = shift(X, -r).
std::optional<std::pair<int, int>> detect_periodicity(const OrbitRecord& orbit, int max_steps, std::mt19937_64& rng);

/// (1/N) log sum_n dim_n e^{-nt}, evaluated stably.
double estimator(const HomProfile& profile, double t, int n);

struct LimitFit {
  double limit = 0;
  double log_coeff = 0;
  double inv_coeff = 0;
};

/// Least squares fit of L + k log(N)/N + c_r/N over the points given, where
/// the constant c_r depends on N mod period.  Orbits that are periodic up to
/// shift produce such residue-dependent corrections.
LimitFit fit_limit(const std::vector<std::pair<int, double>>& points, int period = 1);

struct SlopeFit {
  bool found = false;
  Rational slope;
  int lag = 0;
  int threshold = 0;  // first N from which the lag differences are constant
};

/// Declares an exact slope when the lag-L differences of values[N] (N from
/// 1) are constant over the last quarter of the range, for the smallest such
/// L.
SlopeFit exact_slope(const std::vector<long>& values);

struct EntropyEstimate {
  std::string functor;
  double t = 0;
  std::vector<std::pair<int, double>> sequence;
  int period = 1;
  double fitted_limit = 0;
};

struct GrowthBounds {
  double mass_constant = 0;    // c with mass(N) <= c N
  double support_constant = 0; // n' with support inside [-n'N, n'N]
  SlopeFit mass_slope;
  bool linear = false;
};

struct DynamicsRun {
  int n_max = 0;
  OrbitRecord serre_orbit;
  OrbitRecord tau_orbit;
  SlopeFit min_degree;
  SlopeFit max_degree;
  GrowthBounds growth;
  /// Additivity over summands of G: profiles against G agree with the sum
  /// of profiles against each projective, checked on every step.
  bool additive = true;
};

/// Throws Error(InfiniteGlobalDimension), Error(GradedSerreUnsupported) or
/// Error(BudgetExceeded).
DynamicsRun run_dynamics(const ContextPtr& ctx, int n_max, const Budget& budget = {});

/// Smallest lag after which the profiles repeat up to a degree translation,
/// over the second half of the orbit; the fallback when none is found.
int orbit_period(const OrbitRecord& rec, int fallback = 1);

/// Estimates for S, tau and S^2 at each t.
std::vector<EntropyEstimate> entropy_estimate(const DynamicsRun& run, const std::vector<double>& t_grid);

struct Tolerances {
  double slope_tol = 0.1;
  double shift_tol = 0.02;
  double square_tol = 0.05;
  double rho_tol = 1e-9;
};

struct SlopeReport {
  bool disc = false;
  Rational omega_min, omega_max;
  SlopeFit min_degree, max_degree;
  bool slopes_match = false;  // only scored off the disc
  struct Row {
    double t;
    double serre_fit, serre_closed;
    double tau_fit, tau_closed;
    double square_fit;
    bool serre_pass, tau_pass, shift_pass, square_pass;
  };
  std::vector<Row> rows;
  bool pass = false;
};

SlopeReport slope_report(const DynamicsRun& run, const std::vector<EntropyEstimate>& estimates,
                         const SurfaceInvariants& inv, const Tolerances& tol = {});

}  // namespace gentle
