#include "oracles.hpp"

#include <gentle/algebra.hpp>
#include <gentle/error.hpp>

#include <doctest.h>

#include <random>

using namespace gentle;

namespace {

GentleAlgebra parse(const std::string& text) { return parse_presentation(text); }

ErrorKind error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidComplex;
}

const char* kA2 = R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"}],"relations":[]})";
const char* kKronecker =
    R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"1","to":"2"}],"relations":[]})";

}  // namespace

TEST_CASE("parsing reports malformed input as a syntax error") {
  CHECK(error_of("{") == ErrorKind::SyntaxError);
  CHECK(error_of(R"({"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"9"}],"relations":[]})") ==
        ErrorKind::SyntaxError);
  CHECK(error_of(R"({"vertices":["1","1"],"arrows":[],"relations":[]})") == ErrorKind::SyntaxError);
  CHECK(error_of(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"}],"relations":[["a","q"]]})") ==
        ErrorKind::SyntaxError);
}

TEST_CASE("syntax errors carry a location") {
  try {
    parse("{\n  \"vertices\": [1]\n}");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("vertices") != std::string::npos);
  }
}

TEST_CASE("round trip through JSON") {
  const GentleAlgebra k = parse(kKronecker);
  const GentleAlgebra again = parse(presentation_to_json(k));
  CHECK(again.vertex_count() == 2);
  CHECK(again.arrow_count() == 2);
  CHECK(again.trivially_graded());
}

TEST_CASE("Kronecker is gentle and three parallel arrows are not") {
  CHECK_NOTHROW(parse(kKronecker));
  CHECK(error_of(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"1","to":"2"},)"
                 R"({"id":"c","from":"1","to":"2"}],"relations":[]})") == ErrorKind::NotGentle);
}

TEST_CASE("gentleness agrees with exhaustive end labelling on small quivers") {
  // All quivers with up to 3 vertices and up to 4 arrows (as multisets of
  // ordered vertex pairs); all relation sets when there are at most 8
  // composable pairs, a fixed random sample otherwise.
  std::mt19937_64 rng(7);
  long checked = 0, gentle_count = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) pairs.emplace_back(s, t);
    const int np = static_cast<int>(pairs.size());
    for (int m = 0; m <= 4; ++m) {
      std::vector<int> pick(static_cast<std::size_t>(m), 0);
      while (true) {
        oracle::Quiver q;
        q.vertices = n;
        for (int p : pick) q.arrows.push_back(pairs[static_cast<std::size_t>(p)]);
        std::vector<std::pair<int, int>> composable;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            if (q.arrows[static_cast<std::size_t>(a)].second == q.arrows[static_cast<std::size_t>(b)].first)
              composable.emplace_back(a, b);
        const int k = static_cast<int>(composable.size());
        std::vector<unsigned long> masks;
        if (k <= 8) {
          for (unsigned long mask = 0; mask < (1ul << k); ++mask) masks.push_back(mask);
        } else {
          for (int i = 0; i < 64; ++i) masks.push_back(rng() & ((1ul << k) - 1));
        }
        for (unsigned long mask : masks) {
          q.relations.clear();
          for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) q.relations.push_back(composable[static_cast<std::size_t>(i)]);
          const bool expected = oracle::gentle_by_ends(q);
          bool accepted = true;
          try {
            oracle::build(q);
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotGentle);
            accepted = false;
          }
          CHECK(accepted == expected);
          ++checked;
          gentle_count += expected;
        }
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == np - 1) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(i)];
      }
    }
  }
  MESSAGE(checked << " presentations, " << gentle_count << " gentle");
  CHECK(gentle_count > 100);
}

TEST_CASE("finite dimensionality") {
  CHECK(parse(kA2).is_finite_dimensional());
  const GentleAlgebra loop_rel =
      parse(R"({"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"1"}],"relations":[["a","a"]]})");
  CHECK(loop_rel.is_finite_dimensional());
  CHECK(PathBasis(loop_rel).size() == 2);
  const GentleAlgebra loop = parse(R"({"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"1"}],"relations":[]})");
  CHECK_FALSE(loop.is_finite_dimensional());
  try {
    PathBasis b(loop);
    FAIL("expected InfiniteDimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfiniteDimensional);
  }
}

TEST_CASE("path basis and Cartan matrix match path enumeration on the corpus") {
  for (const auto& file : oracle::corpus_files()) {
    CAPTURE(file);
    const GentleAlgebra alg = load_presentation(file);
    const auto paths = oracle::enumerate_paths(oracle::from_algebra(alg));
    CHECK(alg.is_finite_dimensional() == paths.finite);
    if (!paths.finite) continue;
    const PathBasis basis(alg);
    const IntMatrix c = cartan_matrix(basis, alg.vertex_count());
    long total = 0;
    for (int u = 0; u < alg.vertex_count(); ++u)
      for (int v = 0; v < alg.vertex_count(); ++v) {
        const long expected = paths.counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        CHECK(c[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == expected);
        CHECK(static_cast<long>(basis.between(u, v).size()) == expected);
        total += expected;
      }
    CHECK(basis.size() == total);
  }
}

TEST_CASE("composition in the path basis") {
  const GentleAlgebra alg =
      parse(R"({"vertices":["1","2","3"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"2","to":"3"}],)"
            R"("relations":[["a","b"]]})");
  const PathBasis basis(alg);
  CHECK(basis.size() == 5);
  const int a = basis.of_arrow(0), b = basis.of_arrow(1);
  CHECK(basis.compose(a, b) == -1);
  CHECK(basis.compose(basis.identity(0), a) == a);
  CHECK(basis.compose(a, basis.identity(1)) == a);
  CHECK(basis.compose(b, a) == -1);
}

TEST_CASE("graded Cartan refines the Cartan matrix by degree") {
  const GentleAlgebra alg = load_presentation(oracle::corpus("graded_kronecker"));
  const PathBasis basis(alg);
  const auto graded = graded_cartan(basis, alg.vertex_count());
  const IntMatrix plain = cartan_matrix(basis, alg.vertex_count());
  IntMatrix sum(2, std::vector<Integer>(2, 0));
  for (const auto& [d, m] : graded)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  CHECK(sum == plain);
  CHECK(graded.size() >= 2);
}

TEST_CASE("thread decomposition of small algebras") {
  const ThreadDecomposition a2 = threads(parse(kA2));
  auto nontrivial = [](const std::vector<Thread>& ts) {
    int n = 0;
    for (const auto& t : ts) n += !t.trivial();
    return n;
  };
  CHECK(nontrivial(a2.permitted) == 1);
  CHECK(nontrivial(a2.forbidden) == 1);
  CHECK(a2.forbidden.size() == 3);

  const ThreadDecomposition rel = threads(
      parse(R"({"vertices":["1","2","3"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"2","to":"3"}],)"
            R"("relations":[["a","b"]]})"));
  int long_forbidden = 0;
  for (const auto& t : rel.forbidden) long_forbidden += t.arrows.size() == 2;
  CHECK(long_forbidden == 1);
  int single_permitted = 0;
  for (const auto& t : rel.permitted) single_permitted += t.arrows.size() == 1;
  CHECK(single_permitted == 2);
}

TEST_CASE("Cartan and Coxeter of hand-sized examples") {
  const CoxeterData a2 = coxeter(parse(kA2));
  CHECK(a2.cartan == IntMatrix{{1, 1}, {0, 1}});
  CHECK(a2.coxeter == IntMatrix{{-1, -1}, {1, 0}});
  CHECK(a2.char_poly.to_string() == "t^2 + t + 1");
  CHECK(static_cast<double>(a2.spectral_radius) == doctest::Approx(1.0));

  const CoxeterData k = coxeter(parse(kKronecker));
  CHECK(k.cartan == IntMatrix{{1, 2}, {0, 1}});
  CHECK(k.char_poly == IntegerPolynomial({1, -2, 1}));
  CHECK(std::fabs(static_cast<double>(log_spectral_radius(k))) < 1e-9);

  const CoxeterData a1 = coxeter(parse(R"({"vertices":["1"],"arrows":[],"relations":[]})"));
  CHECK(a1.coxeter == IntMatrix{{-1}});
  CHECK(a1.char_poly.to_string() == "t + 1");
}

TEST_CASE("Coxeter matrix and polynomial agree with a rational-arithmetic oracle") {
  for (const auto& file : oracle::corpus_files()) {
    CAPTURE(file);
    const GentleAlgebra alg = load_presentation(file);
    const auto paths = oracle::enumerate_paths(oracle::from_algebra(alg));
    if (!paths.finite) continue;
    CoxeterData cd;
    try {
      cd = coxeter(alg);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CartanNotUnimodular);
      CHECK_FALSE(has_finite_global_dimension(alg));
      continue;
    }
    const auto phi = oracle::coxeter_matrix(paths.counts);
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = 0; j < phi.size(); ++j) CHECK(mpq_class(cd.coxeter[i][j]) == phi[i][j]);
    const auto poly = oracle::char_poly(phi);
    REQUIRE(static_cast<int>(poly.size()) == cd.char_poly.degree() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) CHECK(mpq_class(cd.char_poly.coeff(static_cast<int>(i))) == poly[i]);
  }
}

TEST_CASE("global dimension detects oriented cycles of relations") {
  CHECK_FALSE(has_finite_global_dimension(load_presentation(oracle::corpus("loop_square_zero"))));
  CHECK_FALSE(has_finite_global_dimension(load_presentation(oracle::corpus("cycle3_relations"))));
  CHECK(has_finite_global_dimension(load_presentation(oracle::corpus("triangle_relation"))));
  CHECK(has_finite_global_dimension(load_presentation(oracle::corpus("two_cycle_relation"))));
}

TEST_CASE("polynomial utilities") {
  const IntegerPolynomial p({1, 1, 1});
  CHECK(p == cyclotomic(3));
  CHECK(cyclotomic(1) == IntegerPolynomial({-1, 1}));
  CHECK(is_cyclotomic_product(p * cyclotomic(1).pow(2)));
  CHECK_FALSE(is_cyclotomic_product(IntegerPolynomial({1, -3, 1})));
  IntegerPolynomial q;
  CHECK((p * IntegerPolynomial::binomial(2, 1)).divide_exact(p, q));
  CHECK(q == IntegerPolynomial::binomial(2, 1));
  CHECK(squarefree_part(cyclotomic(1).pow(3)) == cyclotomic(1));
  const auto roots = distinct_roots(IntegerPolynomial({1, 1, 1}));
  CHECK(roots.size() == 2);
  for (const auto& r : roots) CHECK(static_cast<double>(std::abs(r)) == doctest::Approx(1.0));
}
