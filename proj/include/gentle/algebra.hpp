#pragma once

// Graded gentle presentations, their path bases, thread decompositions and
// Cartan/Coxeter data.
//
// Conventions used throughout the library: paths are written left to right,
// so the path "ab" is a followed by b and the relation pair (a, b) kills it.
// C(u, v) counts the nonzero paths from u to v.

#include <gentle/polynomial.hpp>
#include <gentle/rational.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
  int degree = 0;
};

/// A half-edge of the quiver at a vertex: each vertex has two ends, and each
/// end holds at most one incoming and one outgoing arrow occurrence.  An
/// incoming and outgoing arrow share an end exactly when they form a relation.
struct HalfEdge {
  int vertex = 0;
  int end = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

enum class ThreadKind { Permitted, Forbidden };

struct Thread {
  ThreadKind kind = ThreadKind::Forbidden;
  std::vector<int> arrows;
  /// Vertices visited in order; a trivial thread has just its anchor.
  std::vector<int> vertices;
  /// Per visited vertex: the half-edge end (forbidden threads) or the side,
  /// 0 for A and 1 for B (permitted threads).
  std::vector<int> slots;
  bool cyclic = false;

  int anchor() const { return vertices.front(); }
  bool trivial() const { return arrows.empty(); }
};

class GentleAlgebra {
public:
  /// Validates the gentle conditions.  Throws Error(SyntaxError) for malformed
  /// data and Error(NotGentle) naming the failed condition.
  GentleAlgebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                std::vector<std::pair<int, int>> relations);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }
  bool is_relation(int a, int b) const;

  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& id) const;      // -1 if absent

  const std::vector<int>& outgoing(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& incoming(int v) const { return in_[static_cast<std::size_t>(v)]; }

  bool trivially_graded() const;
  bool is_finite_dimensional() const;

  /// End of the vertex at which the arrow leaves / arrives.
  int out_end(int a) const { return out_end_[static_cast<std::size_t>(a)]; }
  int in_end(int a) const { return in_end_[static_cast<std::size_t>(a)]; }
  /// Arrow occupying the slot, or -1.
  int out_slot(HalfEdge h) const;
  int in_slot(HalfEdge h) const;

  /// Same presentation with every arrow degree replaced.
  GentleAlgebra with_degrees(const std::vector<int>& degrees) const;

private:
  void validate();
  void label_half_edges();

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::pair<int, int>> relations_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> out_end_, in_end_;
};

/// Parses the JSON presentation format.  Diagnostics carry the line and
/// column for syntax errors and the JSON field path for semantic errors.
GentleAlgebra parse_presentation(const std::string& text);
GentleAlgebra load_presentation(const std::string& path);
std::string presentation_to_json(const GentleAlgebra& alg);

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  int degree = 0;
  int length() const { return static_cast<int>(arrows.size()); }
};

/// All nonzero paths with composition and factor lookup tables.
class PathBasis {
public:
  /// Throws Error(InfiniteDimensional) when the algebra is infinite
  /// dimensional.
  explicit PathBasis(const GentleAlgebra& alg);

  int size() const { return static_cast<int>(paths_.size()); }
  const Path& path(int i) const { return paths_[static_cast<std::size_t>(i)]; }
  int identity(int v) const { return identity_[static_cast<std::size_t>(v)]; }
  int of_arrow(int a) const { return arrow_path_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& between(int u, int v) const;
  /// Index of p followed by q, or -1 when the product vanishes.
  int compose(int p, int q) const { return compose_[static_cast<std::size_t>(p * size() + q)]; }
  /// q with p = prefix * q, or -1.
  int strip_prefix(int p, int prefix) const;
  /// q with p = q * suffix, or -1.
  int strip_suffix(int p, int suffix) const;
  int find(int source, const std::vector<int>& arrows) const;
  std::string name(int p, const GentleAlgebra& alg) const;

private:
  std::vector<Path> paths_;
  std::vector<int> identity_;
  std::vector<int> arrow_path_;
  std::vector<std::vector<std::vector<int>>> between_;
  std::vector<int> compose_;
  std::map<std::pair<int, std::vector<int>>, int> lookup_;
};

struct ThreadDecomposition {
  std::vector<Thread> forbidden;
  std::vector<Thread> permitted;
};

ThreadDecomposition threads(const GentleAlgebra& alg);

/// False exactly when some oriented cycle has every consecutive pair of
/// arrows in a relation, i.e. some forbidden thread closes up.
bool has_finite_global_dimension(const GentleAlgebra& alg);

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix cartan_matrix(const PathBasis& basis, int vertex_count);
/// Degree-refined Cartan data: degree -> matrix of path counts.
std::map<int, IntMatrix> graded_cartan(const PathBasis& basis, int vertex_count);

struct CoxeterData {
  IntMatrix cartan;
  IntMatrix coxeter;
  IntegerPolynomial char_poly;
  long double spectral_radius = 0;
  std::vector<long double> root_moduli;
  bool cyclotomic_certificate = false;
};

/// Exact determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);
/// Characteristic polynomial det(tI - M) by fraction-free elimination.
IntegerPolynomial characteristic_polynomial(const IntMatrix& m);
/// Throws Error(CartanNotUnimodular) or Error(InfiniteDimensional).
CoxeterData coxeter(const GentleAlgebra& alg);
long double log_spectral_radius(const CoxeterData& cd);

}  // namespace gentle
