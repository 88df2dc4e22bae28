#pragma once

// Sparse exact linear algebra over the rationals.  Vectors are sorted
// (index, coefficient) lists without explicit zeros.

#include <gentle/rational.hpp>

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gentle::linalg {

using SparseVec = std::vector<std::pair<int, Rational>>;

/// y += s * x
void axpy(SparseVec& y, const Rational& s, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& s);
void normalize(SparseVec& v);  // sort, merge duplicates, drop zeros

/// Incremental row echelon basis using leading-index pivots.
class Echelon {
public:
  /// Reduces v against the basis; returns true (and stores it) if v was
  /// independent.
  bool insert(SparseVec v);
  /// Leading-term reduction without storing.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

private:
  std::unordered_map<int, std::size_t> pivot_;
  std::vector<SparseVec> rows_;
};

/// Kernel of the linear map sending basis vector i to images[i].
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images);

std::size_t rank(const std::vector<SparseVec>& rows);

/// Dense helpers used for small square matrices.
using DenseMatrix = std::vector<std::vector<Rational>>;
std::size_t dense_rank(DenseMatrix m);

}  // namespace gentle::linalg
