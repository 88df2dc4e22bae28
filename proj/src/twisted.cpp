#include <gentle/error.hpp>
#include <gentle/twisted.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace gentle {

ContextPtr make_context(const GentleAlgebra& alg) { return std::make_shared<const AlgebraContext>(alg); }

PathComb multiply(const AlgebraContext& ctx, const PathComb& f, const PathComb& g) {
  PathComb out;
  for (const auto& [p, a] : f)
    for (const auto& [q, b] : g) {
      const int r = ctx.basis.compose(p, q);
      if (r >= 0) out.emplace_back(r, a * b);
    }
  linalg::normalize(out);
  return out;
}

const PathComb& TwistedComplex::map(int i, int j) const {
  static const PathComb empty;
  const auto& r = rows_[static_cast<std::size_t>(i)];
  auto it = r.find(j);
  return it == r.end() ? empty : it->second;
}

int TwistedComplex::add_term(int vertex, int position) {
  terms_.push_back({vertex, position});
  rows_.emplace_back();
  return size() - 1;
}

void TwistedComplex::set_map(int i, int j, PathComb c) {
  auto& r = rows_[static_cast<std::size_t>(i)];
  if (c.empty()) {
    r.erase(j);
  } else {
    r[j] = std::move(c);
  }
}

void TwistedComplex::check() const {
  const PathBasis& basis = ctx_->basis;
  for (int i = 0; i < size(); ++i) {
    for (const auto& [j, c] : row(i)) {
      for (const auto& [p, coef] : c) {
        const Path& path = basis.path(p);
        if (path.source != term(i).vertex || path.target != term(j).vertex)
          throw Error(ErrorKind::InvalidComplex, "component " + std::to_string(i) + "->" + std::to_string(j) +
                                                     " uses a path with the wrong endpoints");
        if (path.degree != term(i).position - term(j).position + 1)
          throw Error(ErrorKind::InvalidComplex, "component " + std::to_string(i) + "->" + std::to_string(j) +
                                                     " violates the degree constraint");
      }
    }
  }
  for (int i = 0; i < size(); ++i) {
    std::map<int, PathComb> sq;
    for (const auto& [j, c] : row(i))
      for (const auto& [k, d] : row(j)) {
        PathComb prod = multiply(*ctx_, c, d);
        linalg::axpy(sq[k], Rational(1), prod);
      }
    for (const auto& [k, v] : sq)
      if (!v.empty())
        throw Error(ErrorKind::InvalidComplex,
                    "Maurer-Cartan identity fails at " + std::to_string(i) + "->" + std::to_string(k));
  }
}

TwistedComplex projective(const ContextPtr& ctx, int v) {
  TwistedComplex x(ctx);
  x.add_term(v, 0);
  return x;
}

TwistedComplex generator(const ContextPtr& ctx) {
  TwistedComplex x(ctx);
  for (int v = 0; v < ctx->alg.vertex_count(); ++v) x.add_term(v, 0);
  return x;
}

TwistedComplex direct_sum(const TwistedComplex& x, const TwistedComplex& y) {
  if (x.context() != y.context()) throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
  TwistedComplex s(x.context());
  for (const auto& t : x.terms()) s.add_term(t.vertex, t.position);
  for (const auto& t : y.terms()) s.add_term(t.vertex, t.position);
  for (int i = 0; i < x.size(); ++i)
    for (const auto& [j, c] : x.row(i)) s.set_map(i, j, c);
  for (int i = 0; i < y.size(); ++i)
    for (const auto& [j, c] : y.row(i)) s.set_map(x.size() + i, x.size() + j, c);
  return s;
}

TwistedComplex shift(const TwistedComplex& x, int k) {
  TwistedComplex s(x.context());
  for (const auto& t : x.terms()) s.add_term(t.vertex, t.position + k);
  const Rational sign = (k % 2 == 0) ? 1 : -1;
  for (int i = 0; i < x.size(); ++i)
    for (const auto& [j, c] : x.row(i)) s.set_map(i, j, linalg::scaled(c, sign));
  return s;
}

namespace {

Rational identity_coefficient(const PathComb& c, int identity_path) {
  for (const auto& [p, a] : c)
    if (p == identity_path) return a;
  return 0;
}

}  // namespace

TwistedComplex minimize(const TwistedComplex& x) {
  const AlgebraContext& ctx = *x.context();
  const int n = x.size();
  std::vector<std::map<int, PathComb>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = x.row(i);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  while (true) {
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i) {
      if (!alive[static_cast<std::size_t>(i)]) continue;
      for (const auto& [j, c] : rows[static_cast<std::size_t>(i)]) {
        if (x.term(i).vertex != x.term(j).vertex) continue;
        if (sgn(identity_coefficient(c, ctx.basis.identity(x.term(i).vertex))) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;

    // Invert t = lambda e + nilpotent part as a geometric series.
    const PathComb& t = rows[static_cast<std::size_t>(pi)].at(pj);
    const int e = ctx.basis.identity(x.term(pi).vertex);
    const Rational lambda = identity_coefficient(t, e);
    PathComb nil = t;
    linalg::axpy(nil, -lambda, PathComb{{e, Rational(1)}});
    nil = linalg::scaled(nil, -1 / lambda);
    PathComb power{{e, Rational(1)}};
    PathComb inverse = power;
    while (true) {
      power = multiply(ctx, power, nil);
      if (power.empty()) break;
      linalg::axpy(inverse, Rational(1), power);
    }
    inverse = linalg::scaled(inverse, 1 / lambda);

    const std::map<int, PathComb> from_i = rows[static_cast<std::size_t>(pi)];
    for (int a = 0; a < n; ++a) {
      if (!alive[static_cast<std::size_t>(a)] || a == pi || a == pj) continue;
      auto& ra = rows[static_cast<std::size_t>(a)];
      auto it = ra.find(pj);
      if (it == ra.end()) continue;
      const PathComb left = multiply(ctx, it->second, inverse);
      for (const auto& [b, cb] : from_i) {
        if (b == pi || b == pj || !alive[static_cast<std::size_t>(b)]) continue;
        PathComb upd = ra[b];
        linalg::axpy(upd, Rational(-1), multiply(ctx, left, cb));
        if (upd.empty()) {
          ra.erase(b);
        } else {
          ra[b] = std::move(upd);
        }
      }
    }
    alive[static_cast<std::size_t>(pi)] = alive[static_cast<std::size_t>(pj)] = false;
    for (auto& r : rows) {
      r.erase(pi);
      r.erase(pj);
    }
    rows[static_cast<std::size_t>(pi)].clear();
    rows[static_cast<std::size_t>(pj)].clear();
  }

  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (alive[static_cast<std::size_t>(i)]) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Term& ta = x.term(a);
    const Term& tb = x.term(b);
    return std::tie(ta.position, ta.vertex) < std::tie(tb.position, tb.vertex);
  });
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  TwistedComplex out(x.context());
  for (int i : order) index[static_cast<std::size_t>(i)] = out.add_term(x.term(i).vertex, x.term(i).position);
  for (int i : order)
    for (const auto& [j, c] : rows[static_cast<std::size_t>(i)])
      out.set_map(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)], c);
  return out;
}

std::pair<int, int> lengths(const TwistedComplex& x) {
  if (x.empty()) throw Error(ErrorKind::EmptyComplex, "lengths of the zero object");
  int lo = x.term(0).position, hi = lo;
  for (const auto& t : x.terms()) {
    lo = std::min(lo, t.position);
    hi = std::max(hi, t.position);
  }
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Hom complexes

HomComplex::HomComplex(const TwistedComplex& x, const TwistedComplex& y) : x_(x), y_(y) {
  if (x.context() != y.context()) throw Error(ErrorKind::AlgebraMismatch, "Hom between different algebras");
  const PathBasis& basis = x.context()->basis;
  paths_ = basis.size();
  targets_ = y.size();
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j)
      for (int p : basis.between(x.term(i).vertex, y.term(j).vertex)) {
        const int deg = basis.path(p).degree + y.term(j).position - x.term(i).position;
        by_degree_[deg].push_back(static_cast<int>(elements_.size()));
        index_[key(i, j, p)] = static_cast<int>(elements_.size());
        elements_.push_back({i, j, p, deg});
      }
  x_incoming_.resize(static_cast<std::size_t>(x.size()));
  for (int l = 0; l < x.size(); ++l)
    for (const auto& [i, c] : x.row(l)) x_incoming_[static_cast<std::size_t>(i)].emplace_back(l, &c);
}

std::vector<int> HomComplex::degree_part(int n) const {
  auto it = by_degree_.find(n);
  return it == by_degree_.end() ? std::vector<int>{} : it->second;
}

linalg::SparseVec HomComplex::differential(int element) const {
  const Element& e = elements_[static_cast<std::size_t>(element)];
  const AlgebraContext& ctx = *x_.context();
  const PathBasis& basis = ctx.basis;
  auto index_of = [&](int i, int j, int p) {
    auto it = index_.find(key(i, j, p));
    if (it == index_.end()) throw Error(ErrorKind::InvalidComplex, "Hom differential leaves the basis");
    return it->second;
  };
  linalg::SparseVec out;
  for (const auto& [k, comb] : y_.row(e.target_term))
    for (const auto& [q, lambda] : comb) {
      const int r = basis.compose(e.path, q);
      if (r >= 0) out.emplace_back(index_of(e.source_term, k, r), lambda);
    }
  const Rational sign = (e.degree % 2 == 0) ? -1 : 1;
  for (const auto& [l, comb] : x_incoming_[static_cast<std::size_t>(e.source_term)])
    for (const auto& [q, lambda] : *comb) {
      const int r = basis.compose(q, e.path);
      if (r >= 0) out.emplace_back(index_of(l, e.target_term, r), sign * lambda);
    }
  linalg::normalize(out);
  return out;
}

HomProfile HomComplex::cohomology() const {
  std::map<int, std::size_t> rank;
  for (const auto& [n, idx] : by_degree_) {
    linalg::Echelon ech;
    for (int k : idx) ech.insert(differential(k));
    rank[n] = ech.rank();
  }
  HomProfile out;
  for (const auto& [n, idx] : by_degree_) {
    const long r_out = static_cast<long>(rank[n]);
    auto prev = rank.find(n - 1);
    const long r_in = prev == rank.end() ? 0 : static_cast<long>(prev->second);
    const long h = static_cast<long>(idx.size()) - r_out - r_in;
    if (h != 0) out[n] = h;
  }
  return out;
}

std::vector<linalg::SparseVec> HomComplex::cocycles(int n) const {
  const std::vector<int> idx = degree_part(n);
  std::vector<linalg::SparseVec> images;
  for (int k : idx) images.push_back(differential(k));
  std::vector<linalg::SparseVec> out;
  for (auto& v : linalg::kernel(images)) {
    for (auto& [pos, c] : v) pos = idx[static_cast<std::size_t>(pos)];
    linalg::normalize(v);
    out.push_back(std::move(v));
  }
  return out;
}

HomProfile hom_profile(const TwistedComplex& x, const TwistedComplex& y) { return HomComplex(x, y).cohomology(); }

TwistedComplex cone(const TwistedComplex& x, const TwistedComplex& y, const linalg::SparseVec& f) {
  HomComplex hom(x, y);
  TwistedComplex c = direct_sum(shift(x, -1), y);
  for (const auto& [k, coef] : f) {
    const auto& e = hom.elements()[static_cast<std::size_t>(k)];
    if (e.degree != 0) throw Error(ErrorKind::InvalidComplex, "cone of a map of nonzero degree");
    PathComb comp = c.map(e.source_term, x.size() + e.target_term);
    linalg::axpy(comp, coef, PathComb{{e.path, Rational(1)}});
    c.set_map(e.source_term, x.size() + e.target_term, std::move(comp));
  }
  c.check();
  return c;
}

namespace {

linalg::SparseVec random_combination(const std::vector<linalg::SparseVec>& basis, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  linalg::SparseVec f;
  for (const auto& z : basis) linalg::axpy(f, Rational(coef(rng)), z);
  return f;
}

}  // namespace

bool isomorphic(const TwistedComplex& x, const TwistedComplex& y, std::mt19937_64& rng, int attempts) {
  const TwistedComplex mx = minimize(x);
  const TwistedComplex my = minimize(y);
  std::vector<Term> tx = mx.terms(), ty = my.terms();
  std::sort(tx.begin(), tx.end());
  std::sort(ty.begin(), ty.end());
  if (tx != ty) return false;
  if (tx.empty()) return true;

  HomComplex hom(mx, my);
  const auto z = hom.cocycles(0);
  if (z.empty()) return false;
  const PathBasis& basis = mx.context()->basis;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const linalg::SparseVec f = random_combination(z, rng, 50);
    // Identity part, block diagonal over equal terms.
    std::map<Term, std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (int i = 0; i < mx.size(); ++i) blocks[mx.term(i)].first.push_back(i);
    for (int j = 0; j < my.size(); ++j) blocks[my.term(j)].second.push_back(j);
    std::map<std::pair<int, int>, Rational> ident;
    for (const auto& [k, c] : f) {
      const auto& e = hom.elements()[static_cast<std::size_t>(k)];
      if (e.path == basis.identity(mx.term(e.source_term).vertex) && mx.term(e.source_term) == my.term(e.target_term))
        ident[{e.source_term, e.target_term}] = c;
    }
    bool ok = true;
    for (const auto& [term, members] : blocks) {
      const auto& [rows, cols] = members;
      linalg::DenseMatrix m(rows.size(), std::vector<Rational>(cols.size()));
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) {
          auto it = ident.find({rows[a], cols[b]});
          if (it != ident.end()) m[a][b] = it->second;
        }
      if (linalg::dense_rank(m) != rows.size()) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

TwistedComplex random_complex(const ContextPtr& ctx, std::mt19937_64& rng, int max_terms) {
  const int n = ctx->alg.vertex_count();
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> pos(-1, 1);
  std::uniform_int_distribution<int> coin(0, 3);
  auto random_projective = [&] { return shift(projective(ctx, vertex(rng)), pos(rng)); };

  TwistedComplex x = random_projective();
  for (int round = 0; round < 2 * max_terms && x.size() < max_terms; ++round) {
    TwistedComplex y = random_projective();
    const bool forward = coin(rng) < 2;
    const TwistedComplex& src = forward ? x : y;
    const TwistedComplex& dst = forward ? y : x;
    HomComplex hom(src, dst);
    auto z = hom.cocycles(0);
    if (!z.empty()) {
      linalg::SparseVec f = random_combination(z, rng, 3);
      if (!f.empty()) {
        x = cone(src, dst, f);
        continue;
      }
    }
    if (coin(rng) == 0) x = direct_sum(x, y);
  }
  return minimize(x);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("GENTLE_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      return fallback;
    }
  }
  return fallback;
}

}  // namespace gentle
