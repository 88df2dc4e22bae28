#include <gentle/linalg.hpp>

#include <algorithm>

namespace gentle::linalg {

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
    } else {
      out.emplace_back(i, c);
    }
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  v = std::move(out);
}

void axpy(SparseVec& y, const Rational& s, const SparseVec& x) {
  if (sgn(s) == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, s * ix->second);
      ++ix;
    } else {
      Rational c = iy->second + s * ix->second;
      if (sgn(c) != 0) out.emplace_back(iy->first, std::move(c));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rational& s) {
  SparseVec out;
  if (sgn(s) == 0) return out;
  out.reserve(x.size());
  for (const auto& [i, c] : x) out.emplace_back(i, s * c);
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_.find(v[pos].first);
    if (it == pivot_.end()) {
      ++pos;
      continue;
    }
    const SparseVec& row = rows_[it->second];
    Rational s = -v[pos].second / row.front().second;
    // Entries before pos are untouched since row's leading index is v[pos].first.
    axpy(v, s, row);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  // Full leading-term reduction: only the leading entry needs to be a
  // non-pivot for independence, so stop at the first free index.
  while (!v.empty()) {
    auto it = pivot_.find(v.front().first);
    if (it == pivot_.end()) break;
    const SparseVec& row = rows_[it->second];
    Rational s = -v.front().second / row.front().second;
    axpy(v, s, row);
  }
  if (v.empty()) return false;
  pivot_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::size_t rank(const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images) {
  // Rows carry (image, combination); reduce on the image part only.
  struct Row {
    SparseVec image;
    SparseVec comb;
  };
  std::unordered_map<int, std::size_t> pivot;
  std::vector<Row> rows;
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Row r{images[i], SparseVec{{static_cast<int>(i), Rational(1)}}};
    while (!r.image.empty()) {
      auto it = pivot.find(r.image.front().first);
      if (it == pivot.end()) break;
      const Row& p = rows[it->second];
      Rational s = -r.image.front().second / p.image.front().second;
      axpy(r.image, s, p.image);
      axpy(r.comb, s, p.comb);
    }
    if (r.image.empty()) {
      out.push_back(std::move(r.comb));
    } else {
      pivot.emplace(r.image.front().first, rows.size());
      rows.push_back(std::move(r));
    }
  }
  return out;
}

std::size_t dense_rank(DenseMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational s = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= s * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace gentle::linalg
