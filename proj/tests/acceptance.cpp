// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <gentle/algebra.hpp>
#include <gentle/dynamics.hpp>
#include <gentle/error.hpp>
#include <gentle/invariants.hpp>
#include <gentle/serre.hpp>
#include <gentle/surface.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gentle;

namespace {

struct Entry {
  std::string name;
  GentleAlgebra alg;
};

std::vector<Entry> load_corpus() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(GENTLE_CORPUS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Entry> out;
  for (const auto& f : files) out.push_back({std::filesystem::path(f).stem().string(), load_presentation(f)});
  return out;
}

const Entry& find(const std::vector<Entry>& corpus, const std::string& name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  throw std::runtime_error("corpus entry '" + name + "' missing");
}

// Inputs on which the Serre functor is computed.
bool dynamical(const GentleAlgebra& alg) {
  return alg.trivially_graded() && alg.is_finite_dimensional() && has_finite_global_dimension(alg);
}

HomProfile negate(const HomProfile& p) {
  HomProfile out;
  for (const auto& [n, d] : p) out[-n] = d;
  return out;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds));
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s): " << out.detail.str() << std::endl;
}

std::string str(const Rational& r) { return to_string(r); }

}  // namespace

int main() {
  const std::vector<Entry> corpus = load_corpus();

  criterion(1, "disc calibration for A_1..A_4", 1.0, [&](Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
      const auto inv = surface_invariants(find(corpus, "a" + std::to_string(n)).alg);
      const bool ok = inv.genus == 0 && inv.components.size() == 1 && inv.components[0].stops == n + 1 &&
                      inv.components[0].winding == 2;
      if (!ok) o.fail("A_" + std::to_string(n) + " invariants differ");
    }
    if (o.pass) o.detail << "g=0, one boundary, m=n+1, winding 2 for n=1..4";
  });

  criterion(2, "affine calibration for Kronecker", 1.0, [&](Outcome& o) {
    const auto inv = surface_invariants(find(corpus, "kronecker").alg);
    bool ok = inv.genus == 0 && inv.components.size() == 2;
    for (const auto& c : inv.components) ok = ok && c.stops == 1 && c.winding == 0;
    if (!ok) o.fail("annulus invariants differ");
    if (!classify(inv).affine_A_trivial) o.fail("not classified affine A");
    const auto h = serre_entropy(inv);
    if (h.slope_pos != 1 || h.slope_neg != 1) o.fail("h_t(S) is not t");
    if (o.pass) o.detail << "m=(1,1), winding (0,0), affine A, h_t(S)=t";
  });

  criterion(3, "Poincare-Hopf over the corpus", 5.0, [&](Outcome& o) {
    int trivial = 0, graded = 0;
    for (const auto& e : corpus) {
      if (e.alg.vertex_count() > 6) continue;
      const auto inv = surface_invariants(e.alg);
      int sum = 0;
      for (const auto& c : inv.components) sum += *c.winding + 2;
      if (sum != 4 - 4 * inv.genus) o.fail(e.name + ": sum " + std::to_string(sum));
      (e.alg.trivially_graded() ? trivial : graded) += 1;
    }
    if (trivial < 10 || graded < 10) o.fail("corpus too small");
    if (o.pass) o.detail << trivial << " trivially graded and " << graded << " graded algebras";
  });

  criterion(4, "Coxeter polynomial equals the surface formula", 5.0, [&](Outcome& o) {
    int checked = 0;
    for (const auto& e : corpus) {
      if (!e.alg.trivially_graded() || !has_finite_global_dimension(e.alg)) continue;
      const auto cd = coxeter(e.alg);
      const auto surface =
          coxeter_polynomial_surface(surface_invariants(e.alg), e.alg.arrow_count() - e.alg.vertex_count());
      if (!(cd.char_poly == surface))
        o.fail(e.name + ": " + cd.char_poly.to_string() + " vs " + surface.to_string());
      ++checked;
    }
    const std::pair<const char*, const char*> spots[] = {
        {"a1", "t + 1"}, {"a2", "t^2 + t + 1"}, {"kronecker", "t^2 - 2t + 1"}};
    for (const auto& [name, poly] : spots)
      if (coxeter(find(corpus, name).alg).char_poly.to_string() != poly) o.fail(std::string(name) + " spot value");
    if (o.pass) o.detail << checked << " algebras agree; spot values A_1, A_2, Kronecker";
  });

  criterion(5, "spectral radius of the Coxeter transformation is 1", 10.0, [&](Outcome& o) {
    int checked = 0, skipped = 0;
    long double worst = 0, worst_root = 0;
    for (const auto& e : corpus) {
      if (!e.alg.is_finite_dimensional()) continue;
      CoxeterData cd;
      try {
        cd = coxeter(e.alg);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::CartanNotUnimodular) throw;
        ++skipped;
        continue;
      }
      const long double lr = std::fabs(log_spectral_radius(cd));
      worst = std::max(worst, lr);
      if (lr > 1e-9L) o.fail(e.name + ": |log rho| = " + std::to_string(static_cast<double>(lr)));
      for (long double m : cd.root_moduli) {
        worst_root = std::max(worst_root, std::fabs(m - 1));
        if (std::fabs(m - 1) > 1e-6L) o.fail(e.name + ": root modulus " + std::to_string(static_cast<double>(m)));
      }
      ++checked;
    }
    if (o.pass)
      o.detail << checked << " algebras, max |log rho| " << static_cast<double>(worst) << ", max root deviation "
               << static_cast<double>(worst_root) << ", " << skipped << " non-unimodular skipped";
  });

  criterion(6, "Serre duality on random pairs", 60.0, [&](Outcome& o) {
    std::mt19937_64 rng(seed_from_env(2024));
    int algebras = 0;
    long pairs = 0;
    for (const auto& e : corpus) {
      if (!dynamical(e.alg)) continue;
      const auto ctx = make_context(e.alg);
      int bad = 0;
      for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_complex(ctx, rng, 4);
        const auto y = random_complex(ctx, rng, 4);
        if (hom_profile(x, y) != negate(hom_profile(y, serre(x)))) ++bad;
        ++pairs;
      }
      if (bad) o.fail(e.name + ": " + std::to_string(bad) + " mismatches");
      ++algebras;
    }
    if (o.pass) o.detail << pairs << " pairs over " << algebras << " algebras";
  });

  criterion(7, "A_2 is fractionally Calabi-Yau", 10.0, [&](Outcome& o) {
    const auto ctx = make_context(find(corpus, "a2").alg);
    std::mt19937_64 rng(seed_from_env(7));
    std::vector<TwistedComplex> objects;
    for (int v = 0; v < 2; ++v) objects.push_back(projective(ctx, v));
    objects.push_back(generator(ctx));
    for (int i = 0; i < 40; ++i) {
      auto x = minimize(random_complex(ctx, rng));
      if (!x.empty()) objects.push_back(std::move(x));
    }
    int n = 0;
    for (const auto& x : objects) {
      // S^3 X = X[1]; positions move down by one.
      if (!isomorphic(serre(serre(serre(x))), shift(x, -1), rng)) o.fail("S^3 fails on object " + std::to_string(n));
      if (!isomorphic(tau(tau(tau(x))), shift(x, 2), rng)) o.fail("tau^3 fails on object " + std::to_string(n));
      ++n;
    }
    if (o.pass) o.detail << n << " objects satisfy S^3 = [1] and tau^3 = [-2]";
  });

  // Shared dynamics runs for criteria 8-12.
  struct Run {
    const Entry* entry;
    SurfaceInvariants inv;
    DynamicsRun run;
    std::vector<EntropyEstimate> est;
    SlopeReport rep;
  };
  std::vector<Run> runs;
  const auto dyn_start = std::chrono::steady_clock::now();
  for (const auto& e : corpus) {
    if (!dynamical(e.alg)) continue;
    Run r{&e, surface_invariants(e.alg), run_dynamics(make_context(e.alg), 40), {}, {}};
    r.est = entropy_estimate(r.run, {-1.0, 0.0, 1.0});
    r.rep = slope_report(r.run, r.est, r.inv);
    runs.push_back(std::move(r));
  }
  const double dyn_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - dyn_start).count();
  std::cout << "dynamics for " << runs.size() << " algebras to N=40 took " << dyn_secs << " s" << std::endl;

  criterion(8, "extremal degree slopes equal min and max Omega", 300.0 - dyn_secs, [&](Outcome& o) {
    int checked = 0;
    for (const auto& r : runs) {
      if (r.rep.disc) continue;
      const auto& lo = r.run.min_degree;
      const auto& hi = r.run.max_degree;
      if (!lo.found || !hi.found) {
        o.fail(r.entry->name + ": not eventually linear");
        continue;
      }
      if (lo.slope != r.rep.omega_min || hi.slope != r.rep.omega_max)
        o.fail(r.entry->name + ": slopes (" + str(lo.slope) + ", " + str(hi.slope) + ") vs Omega (" +
               str(r.rep.omega_min) + ", " + str(r.rep.omega_max) + ")");
      ++checked;
      if (o.pass)
        o.detail << r.entry->name << " (" << str(lo.slope) << "," << str(hi.slope) << " from N=" << std::max(lo.threshold, hi.threshold) << ") ";
    }
    if (checked == 0) o.fail("no non-disc algebras");
  });

  criterion(9, "entropy estimates converge to the closed forms", 600.0 - dyn_secs, [&](Outcome& o) {
    auto check_rows = [&](const Run& r, const std::vector<double>& expected) {
      for (std::size_t i = 0; i < r.rep.rows.size(); ++i) {
        const double fit = r.rep.rows[i].serre_fit;
        if (std::fabs(fit - expected[i]) > 0.1)
          o.fail(r.entry->name + " at t=" + std::to_string(r.rep.rows[i].t) + ": " + std::to_string(fit));
      }
    };
    int others = 0;
    for (const auto& r : runs) {
      if (r.entry->name == "kronecker") check_rows(r, {-1, 0, 1});
      if (r.entry->name == "a2") check_rows(r, {-1.0 / 3, 0, 1.0 / 3});
      bool nonzero = false;
      for (const auto& c : r.inv.components) nonzero = nonzero || *c.winding != 0;
      if (!r.rep.disc && nonzero) {
        std::vector<double> expected;
        for (const auto& row : r.rep.rows) expected.push_back(row.serre_closed);
        check_rows(r, expected);
        for (const auto& row : r.rep.rows)
          if (!row.tau_pass) o.fail(r.entry->name + ": tau estimate off");
        ++others;
      }
    }
    if (others == 0) o.fail("no non-disc algebra with nonzero winding");
    if (o.pass) o.detail << "Kronecker, A_2 and " << others << " non-disc algebras with nonzero windings within 0.1";
  });

  criterion(10, "estimator calculus: S - tau = t and S^2 = 2 S", 300.0 - dyn_secs, [&](Outcome& o) {
    double worst_shift = 0, worst_square = 0;
    for (const auto& r : runs)
      for (const auto& row : r.rep.rows) {
        worst_shift = std::max(worst_shift, std::fabs(row.serre_fit - row.tau_fit - row.t));
        worst_square = std::max(worst_square, std::fabs(row.square_fit - 2 * row.serre_fit));
        if (!row.shift_pass) o.fail(r.entry->name + ": shift at t=" + std::to_string(row.t));
        if (!row.square_pass) o.fail(r.entry->name + ": square at t=" + std::to_string(row.t));
      }
    if (o.pass) o.detail << runs.size() << " algebras, max deviations " << worst_shift << " and " << worst_square;
  });

  criterion(11, "periodic projectives are exactly the boundary-parallel ones", 120.0, [&](Outcome& o) {
    std::mt19937_64 rng(seed_from_env(11));
    int vertices = 0, periodic = 0;
    for (const auto& e : corpus) {
      if (!dynamical(e.alg)) continue;
      const auto ctx = make_context(e.alg);
      const auto bp = boundary_parallel(e.alg);
      for (int v = 0; v < e.alg.vertex_count(); ++v) {
        const auto p = projective(ctx, v);
        const bool found = detect_periodicity(orbit(p, Functor::Tau, 24, p), 24, rng).has_value();
        if (found != bp[static_cast<std::size_t>(v)])
          o.fail(e.name + " vertex " + e.alg.vertex_names()[static_cast<std::size_t>(v)]);
        ++vertices;
        periodic += found;
      }
    }
    if (o.pass) o.detail << vertices << " projectives, " << periodic << " periodic";
  });

  criterion(12, "linear growth bounds for the AR orbit of the generator", 300.0 - dyn_secs, [&](Outcome& o) {
    // Constants measured up to N=40, including the exact asymptotic slopes,
    // must bound a fresh orbit on (40, 80].
    auto mass_of = [](const HomProfile& p) {
      long m = 0;
      for (const auto& [deg, dim] : p) m += dim;
      return m;
    };
    auto reach_of = [](const HomProfile& p) {
      return p.empty() ? 0.0 : static_cast<double>(std::max(std::abs(p.begin()->first), std::abs(p.rbegin()->first)));
    };
    for (const auto& r : runs) {
      const auto& g = r.run.growth;
      if (!g.linear || !r.run.min_degree.found || !r.run.max_degree.found) {
        o.fail(r.entry->name + ": not eventually linear");
        continue;
      }
      const double c = std::max(g.mass_constant, g.mass_slope.slope.get_d());
      const double spread = std::max({g.support_constant, std::fabs(r.run.min_degree.slope.get_d()),
                                      std::fabs(r.run.max_degree.slope.get_d())});
      const auto ctx = r.run.tau_orbit.steps[0].complex.context();
      const auto gen = generator(ctx);
      const auto longer = orbit(gen, Functor::Tau, 80, gen);
      for (int n = 41; n <= 80; ++n) {
        const auto& p = longer.steps[static_cast<std::size_t>(n)].profile;
        if (mass_of(p) > c * n + 1e-9 || reach_of(p) > spread * n + 1e-9) {
          o.fail(r.entry->name + " exceeds its bounds at N=" + std::to_string(n));
          break;
        }
      }
      if (o.pass) o.detail << r.entry->name << " c=" << c << " n'=" << spread << " ";
    }
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
