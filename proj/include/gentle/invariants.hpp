#pragma once

// Closed-form quantities computed from genus, stop counts and winding numbers
// of a graded marked surface.

#include <gentle/polynomial.hpp>
#include <gentle/rational.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gentle {

enum class ComponentKind { Mixed, FullyStopped };

struct BoundaryComponent {
  ComponentKind kind = ComponentKind::Mixed;
  int stops = 0;
  std::optional<int> winding;

  static BoundaryComponent mixed(int stops, std::optional<int> winding) {
    return {ComponentKind::Mixed, stops, winding};
  }
  static BoundaryComponent fully_stopped(std::optional<int> winding = std::nullopt) {
    return {ComponentKind::FullyStopped, 0, winding};
  }
};

struct SurfaceInvariants {
  int genus = 0;
  std::vector<BoundaryComponent> components;

  /// Validates the type invariants; throws Error(SyntaxError).
  void check() const;
  int mixed_count() const;
  bool is_disc() const;
};

struct EntropyFunction {
  Rational slope_pos;
  Rational slope_neg;
  bool disc_special_case = false;

  Rational operator()(const Rational& t) const { return sgn(t) >= 0 ? slope_pos * t : slope_neg * t; }
};

struct SerreDimensions {
  Rational upper;
  Rational lower;
  bool equal = false;
};

enum class Verdict { Pass, Fail, Skipped };
const char* to_string(Verdict v);

struct Classification {
  bool is_disc = false;
  bool all_windings_zero = false;
  bool entropy_is_t = false;
  bool affine_A_trivial = false;
};

std::set<Rational> omega_set(const SurfaceInvariants& inv);
EntropyFunction serre_entropy(const SurfaceInvariants& inv);
EntropyFunction tau_entropy(const SurfaceInvariants& inv);
SerreDimensions serre_dimensions(const SurfaceInvariants& inv);
Verdict check_poincare_hopf(const SurfaceInvariants& inv);
IntegerPolynomial coxeter_polynomial_surface(const SurfaceInvariants& inv, int quiver_excess);
/// Throws Error(InconsistentInvariants) when the three characterisations of
/// the zero-winding case disagree, which only happens on unrealisable data.
Classification classify(const SurfaceInvariants& inv);
std::vector<Rational> evaluate_entropy(const EntropyFunction& f, const std::vector<Rational>& t_grid);

std::string invariants_to_json(const SurfaceInvariants& inv);
SurfaceInvariants invariants_from_json(const std::string& text);
std::string entropy_to_json(const EntropyFunction& f);

}  // namespace gentle
