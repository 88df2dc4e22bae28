#pragma once

// Twisted complexes over a gentle algebra: objects of the perfect derived
// category written as finite sums of shifted indecomposable projectives with
// path-valued twisting maps.
//
// A term (v, p) is the projective at v placed in position p.  The component
// from term i to term j is a combination of paths from v_i to v_j of degree
// p_i - p_j + 1, and composition is path concatenation.  With these
// conventions the degree-n cohomology of Hom(X, Y) is Hom(X, Y[n]), and
// shift(X, k) moves every term k positions up, which is X[-k].

#include <gentle/algebra.hpp>
#include <gentle/linalg.hpp>

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gentle {

/// Algebra together with its path basis, shared by all complexes over it.
struct AlgebraContext {
  explicit AlgebraContext(GentleAlgebra a)
      : alg(std::move(a)), basis(alg), finite_global_dimension(has_finite_global_dimension(alg)) {}
  GentleAlgebra alg;
  PathBasis basis;
  bool finite_global_dimension;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;
ContextPtr make_context(const GentleAlgebra& alg);

/// Linear combination of basis paths, keyed by path index.
using PathComb = linalg::SparseVec;

/// Product of combinations (left to right).
PathComb multiply(const AlgebraContext& ctx, const PathComb& f, const PathComb& g);

struct Term {
  int vertex = 0;
  int position = 0;
  auto operator<=>(const Term&) const = default;
};

class TwistedComplex {
public:
  explicit TwistedComplex(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& context() const { return ctx_; }
  int size() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& term(int i) const { return terms_[static_cast<std::size_t>(i)]; }
  /// Outgoing components of term i, keyed by target term.
  const std::map<int, PathComb>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const PathComb& map(int i, int j) const;

  int add_term(int vertex, int position);
  void set_map(int i, int j, PathComb c);

  /// Degree constraint and the Maurer-Cartan identity; throws
  /// Error(InvalidComplex).
  void check() const;

private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
  std::vector<std::map<int, PathComb>> rows_;
};

using HomProfile = std::map<int, long>;

TwistedComplex projective(const ContextPtr& ctx, int v);
/// Direct sum of all indecomposable projectives.
TwistedComplex generator(const ContextPtr& ctx);
TwistedComplex direct_sum(const TwistedComplex& x, const TwistedComplex& y);
TwistedComplex shift(const TwistedComplex& x, int k);
/// Removes identity components by Gaussian elimination and sorts terms.
TwistedComplex minimize(const TwistedComplex& x);
/// (left length, right length); throws Error(EmptyComplex).
std::pair<int, int> lengths(const TwistedComplex& x);

/// The Hom complex between two twisted complexes.  Basis elements are
/// triples (term of X, term of Y, path) graded by path degree plus the
/// position difference.
class HomComplex {
public:
  struct Element {
    int source_term;
    int target_term;
    int path;
    int degree;
  };

  /// Throws Error(AlgebraMismatch) for complexes over different algebras.
  HomComplex(const TwistedComplex& x, const TwistedComplex& y);

  const std::vector<Element>& elements() const { return elements_; }
  /// Indices of basis elements of degree n.
  std::vector<int> degree_part(int n) const;
  linalg::SparseVec differential(int element) const;
  HomProfile cohomology() const;
  /// Basis of the degree-n cocycles.
  std::vector<linalg::SparseVec> cocycles(int n) const;

private:
  long long key(int i, int j, int p) const {
    return (static_cast<long long>(i) * targets_ + j) * paths_ + p;
  }

  const TwistedComplex& x_;
  const TwistedComplex& y_;
  long long paths_ = 0;
  long long targets_ = 0;
  std::unordered_map<long long, int> index_;
  std::vector<Element> elements_;
  std::map<int, std::vector<int>> by_degree_;
  std::vector<std::vector<std::pair<int, const PathComb*>>> x_incoming_;
};

HomProfile hom_profile(const TwistedComplex& x, const TwistedComplex& y);

/// Cone of a closed degree-zero morphism f given in the HomComplex(x, y)
/// basis.
TwistedComplex cone(const TwistedComplex& x, const TwistedComplex& y, const linalg::SparseVec& f);

/// Isomorphism test in the homotopy category: compares minimal models and
/// searches for a degree-zero cocycle whose identity part is invertible.
bool isomorphic(const TwistedComplex& x, const TwistedComplex& y, std::mt19937_64& rng, int attempts = 4);

/// Random object built from shifted projectives and cones of random closed
/// maps, with at most max_terms terms before minimisation.
TwistedComplex random_complex(const ContextPtr& ctx, std::mt19937_64& rng, int max_terms = 5);

/// Seed from GENTLE_SEED, or the given default.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace gentle
