#include <gentle/error.hpp>
#include <gentle/serre.hpp>

#include <algorithm>

namespace gentle {

namespace {

using linalg::SparseVec;

// Coordinates shared by every vertex: projective part (generator, path) and
// injective part (input term, dual path).
constexpr int kInjectiveOffset = 1 << 28;

struct Generator {
  int vertex;
  SparseVec differential;  // keys gen * P + path, into the degree above
  SparseVec comparison;    // keys term * P + path, into the injective part
};

class Resolver {
public:
  Resolver(const TwistedComplex& x, int cutoff) : x_(x), ctx_(*x.context()), cutoff_(cutoff) {
    np_ = ctx_.basis.size();
    for (int i = 0; i < x.size(); ++i) terms_at_[x.term(i).position].push_back(i);
  }

  TwistedComplex run() {
    auto [lo, hi] = lengths(x_);
    for (int k = hi;; --k) {
      if (lo - k > cutoff_)
        throw Error(ErrorKind::InfiniteGlobalDimension,
                    "projective replacement exceeds " + std::to_string(cutoff_) + " degrees");
      const bool added = step(k);
      if (!added && k < lo) break;
    }
    TwistedComplex out(x_.context());
    std::map<std::pair<int, int>, int> index;
    for (const auto& [k, gens] : gens_)
      for (std::size_t g = 0; g < gens.size(); ++g)
        index[{k, static_cast<int>(g)}] = out.add_term(gens[g].vertex, k);
    for (const auto& [k, gens] : gens_)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::map<int, PathComb> comps;
        for (const auto& [key, c] : gens[g].differential) comps[key / np_].emplace_back(key % np_, c);
        for (auto& [h, comb] : comps) {
          linalg::normalize(comb);
          out.set_map(index.at({k, static_cast<int>(g)}), index.at({k + 1, h}), std::move(comb));
        }
      }
    return minimize(out);
  }

private:
  const std::vector<Generator>& gens(int k) const {
    static const std::vector<Generator> none;
    auto it = gens_.find(k);
    return it == gens_.end() ? none : it->second;
  }

  const std::vector<int>& terms(int k) const {
    static const std::vector<int> none;
    auto it = terms_at_.find(k);
    return it == terms_at_.end() ? none : it->second;
  }

  // Basis keys of the cone piece P^{k+1}_w + M^k_w.
  std::vector<int> cone_basis(int k, int w) const {
    std::vector<int> keys;
    const auto& g = gens(k + 1);
    for (std::size_t h = 0; h < g.size(); ++h)
      for (int p : ctx_.basis.between(w, g[h].vertex)) keys.push_back(static_cast<int>(h) * np_ + p);
    for (int i : terms(k))
      for (int r : ctx_.basis.between(x_.term(i).vertex, w)) keys.push_back(kInjectiveOffset + i * np_ + r);
    return keys;
  }

  // Nakayama image of the twisting maps on a dual path r* of term i.
  void injective_differential(int i, int r, const Rational& coef, SparseVec& out) const {
    for (const auto& [j, comb] : x_.row(i))
      for (const auto& [c, lambda] : comb) {
        const int q = ctx_.basis.strip_prefix(r, c);
        if (q >= 0) out.emplace_back(kInjectiveOffset + j * np_ + q, coef * lambda);
      }
  }

  // Cone differential restricted to a basis key, landing in degree k + 1.
  SparseVec cone_differential(int k, int key) const {
    SparseVec out;
    if (key >= kInjectiveOffset) {
      const int i = (key - kInjectiveOffset) / np_;
      const int r = (key - kInjectiveOffset) % np_;
      injective_differential(i, r, Rational(1), out);
    } else {
      const Generator& g = gens(k + 1)[static_cast<std::size_t>(key / np_)];
      const int p = key % np_;
      for (const auto& [dk, c] : g.differential) {
        const int r = ctx_.basis.compose(p, dk % np_);
        if (r >= 0) out.emplace_back((dk / np_) * np_ + r, c);
      }
      for (const auto& [mk, c] : g.comparison) {
        const int q = ctx_.basis.strip_suffix((mk - kInjectiveOffset) % np_, p);
        if (q >= 0) out.emplace_back(kInjectiveOffset + ((mk - kInjectiveOffset) / np_) * np_ + q, c);
      }
    }
    linalg::normalize(out);
    return out;
  }

  // Action of the arrow a: w -> v on a cone element at v.
  SparseVec act(int k, int a, const SparseVec& z) const {
    const int ap = ctx_.basis.of_arrow(a);
    SparseVec out;
    for (const auto& [key, c] : z) {
      if (key >= kInjectiveOffset) {
        const int i = (key - kInjectiveOffset) / np_;
        const int q = ctx_.basis.strip_suffix((key - kInjectiveOffset) % np_, ap);
        if (q >= 0) out.emplace_back(kInjectiveOffset + i * np_ + q, c);
      } else {
        const int r = ctx_.basis.compose(ap, key % np_);
        if (r >= 0) out.emplace_back((key / np_) * np_ + r, c);
      }
    }
    (void)k;
    linalg::normalize(out);
    return out;
  }

  bool step(int k) {
    const int n = ctx_.alg.vertex_count();
    std::vector<std::vector<SparseVec>> cycles(static_cast<std::size_t>(n));
    bool any = false;
    for (int w = 0; w < n; ++w) {
      const std::vector<int> keys = cone_basis(k, w);
      std::vector<SparseVec> images;
      images.reserve(keys.size());
      for (int key : keys) images.push_back(cone_differential(k, key));
      for (auto& v : linalg::kernel(images)) {
        for (auto& [pos, c] : v) pos = keys[static_cast<std::size_t>(pos)];
        linalg::normalize(v);
        cycles[static_cast<std::size_t>(w)].push_back(std::move(v));
      }
      any = any || !cycles[static_cast<std::size_t>(w)].empty();
    }
    if (!any) return false;

    std::vector<Generator> fresh;
    for (int w = 0; w < n; ++w) {
      const auto& zw = cycles[static_cast<std::size_t>(w)];
      if (zw.empty()) continue;
      linalg::Echelon span;
      for (int i : terms(k - 1))
        for (int r : ctx_.basis.between(x_.term(i).vertex, w)) {
          SparseVec b;
          injective_differential(i, r, Rational(1), b);
          linalg::normalize(b);
          span.insert(std::move(b));
        }
      for (int a : ctx_.alg.outgoing(w))
        for (const auto& z : cycles[static_cast<std::size_t>(ctx_.alg.arrow(a).target)]) span.insert(act(k, a, z));
      for (const auto& z : zw) {
        if (!span.insert(z)) continue;
        Generator g{w, {}, {}};
        for (const auto& [key, c] : z) {
          if (key >= kInjectiveOffset) {
            g.comparison.emplace_back(key, -c);
          } else {
            g.differential.emplace_back(key, c);
          }
        }
        fresh.push_back(std::move(g));
      }
    }
    if (fresh.empty()) return false;
    gens_[k] = std::move(fresh);
    return true;
  }

  const TwistedComplex& x_;
  const AlgebraContext& ctx_;
  int cutoff_;
  int np_ = 0;
  std::map<int, std::vector<int>> terms_at_;
  std::map<int, std::vector<Generator>> gens_;
};

}  // namespace

TwistedComplex serre(const TwistedComplex& x, int cutoff) {
  if (!x.context()->alg.trivially_graded())
    throw Error(ErrorKind::GradedSerreUnsupported,
                "the Serre functor is implemented for trivially graded algebras only");
  if (!x.context()->finite_global_dimension)
    throw Error(ErrorKind::InfiniteGlobalDimension, "an oriented cycle of relations makes the global dimension infinite");
  if (x.empty()) return x;
  return Resolver(x, cutoff).run();
}

TwistedComplex tau(const TwistedComplex& x, int cutoff) { return minimize(shift(serre(x, cutoff), 1)); }

}  // namespace gentle
