#pragma once

// JSON and CSV artifacts produced by the command line front-end.

#include <gentle/algebra.hpp>
#include <gentle/dynamics.hpp>
#include <gentle/error.hpp>

#include <string>
#include <vector>

namespace gentle {

/// Process exit code for an error kind: 2 validation, 3 precondition,
/// 4 internal inconsistency.
int exit_code(ErrorKind kind);

/// Closed-form report; every group records the route that produced it.
std::string analyze_json(const GentleAlgebra& alg, const std::string& input);

/// Both Coxeter polynomial routes and the spectral radius verdict.  Throws
/// Error(CartanNotUnimodular) and, for graded input,
/// Error(GradedSerreUnsupported).
std::string coxeter_json(const GentleAlgebra& alg, const std::string& input, const Tolerances& tol = {});

struct SimulationArtifacts {
  std::string summary_json;
  std::string orbit_tau_csv;
  std::string orbit_serre_csv;
  std::string estimates_serre_csv;
  std::string estimates_tau_csv;
  std::string estimates_square_csv;
  bool pass = false;
};

SimulationArtifacts simulate(const GentleAlgebra& alg, const std::string& input, int n_max,
                             const std::vector<double>& t_grid, const Budget& budget = {},
                             const Tolerances& tol = {});

struct MergedReport {
  std::string json;
  std::string plot_csv;
};

/// Merges analyze.json, and simulate.json / coxeter.json when present, from
/// a directory.  Throws Error(MissingArtifact) without analyze.json.
MergedReport merge_reports(const std::string& directory);

/// Formats a double with enough digits to round-trip, deterministically.
std::string format_double(double x);

}  // namespace gentle
