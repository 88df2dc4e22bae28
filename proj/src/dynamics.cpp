#include <gentle/dynamics.hpp>
#include <gentle/error.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace gentle {

const char* to_string(Functor f) { return f == Functor::Serre ? "S" : "tau"; }

OrbitRecord orbit(const TwistedComplex& start, Functor f, int count, const TwistedComplex& probe, const Budget& budget) {
  OrbitRecord rec;
  rec.functor = f;
  TwistedComplex cur = minimize(start);
  for (int n = 0; n <= count; ++n) {
    if (n > 0) cur = f == Functor::Serre ? serre(cur, budget.cutoff) : tau(cur, budget.cutoff);
    if (cur.size() > budget.max_terms)
      throw Error(ErrorKind::BudgetExceeded, "orbit step " + std::to_string(n) + " has " +
                                                 std::to_string(cur.size()) + " terms");
    auto [lo, hi] = lengths(cur);
    rec.steps.push_back(OrbitStep{n, cur, lo, hi, hom_profile(probe, cur)});
  }
  return rec;
}

std::optional<std::pair<int, int>> detect_periodicity(const OrbitRecord& orbit, int max_steps, std::mt19937_64& rng) {
  const OrbitStep& first = orbit.steps.front();
  for (int m = 1; m <= max_steps && m < static_cast<int>(orbit.steps.size()); ++m) {
    const OrbitStep& s = orbit.steps[static_cast<std::size_t>(m)];
    const int d = s.left - first.left;
    if (s.right - first.right != d || s.complex.size() != first.complex.size()) continue;
    if (isomorphic(s.complex, shift(first.complex, d), rng)) return std::make_pair(m, -d);
  }
  return std::nullopt;
}

double estimator(const HomProfile& profile, double t, int n) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& [deg, dim] : profile) top = std::max(top, std::log(static_cast<double>(dim)) - deg * t);
  if (!std::isfinite(top)) return -std::numeric_limits<double>::infinity();
  double sum = 0;
  for (const auto& [deg, dim] : profile) sum += std::exp(std::log(static_cast<double>(dim)) - deg * t - top);
  return (top + std::log(sum)) / n;
}

LimitFit fit_limit(const std::vector<std::pair<int, double>>& points, int period) {
  const int m = static_cast<int>(points.size());
  period = std::max(1, period);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, 2 + period);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    const int n = points[static_cast<std::size_t>(i)].first;
    a(i, 0) = 1.0;
    a(i, 1) = std::log(static_cast<double>(n)) / n;
    a(i, 2 + n % period) = 1.0 / n;
    b(i) = points[static_cast<std::size_t>(i)].second;
  }
  Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  return {x(0), x(1), x(2)};
}

SlopeFit exact_slope(const std::vector<long>& values) {
  // values[0] corresponds to N = 1.
  const int n_max = static_cast<int>(values.size());
  SlopeFit fit;
  const int quarter = std::max(1, n_max / 4);
  const int window_start = n_max - quarter;
  auto at = [&](int n) { return values[static_cast<std::size_t>(n - 1)]; };
  for (int lag = 1; lag <= quarter; ++lag) {
    if (window_start - lag < 1) break;
    const long d = at(n_max) - at(n_max - lag);
    bool constant = true;
    for (int n = window_start; n <= n_max && constant; ++n) constant = at(n) - at(n - lag) == d;
    if (!constant) continue;
    fit.found = true;
    fit.lag = lag;
    fit.slope = make_rational(d, lag);
    int first = n_max;
    while (first - 1 - lag >= 1 && at(first - 1) - at(first - 1 - lag) == d) --first;
    fit.threshold = first - lag;
    return fit;
  }
  return fit;
}

DynamicsRun run_dynamics(const ContextPtr& ctx, int n_max, const Budget& budget) {
  DynamicsRun run;
  run.n_max = n_max;
  const TwistedComplex g = generator(ctx);
  run.serre_orbit = orbit(g, Functor::Serre, n_max, g, budget);
  run.tau_orbit = orbit(g, Functor::Tau, n_max, g, budget);

  for (const auto& step : run.tau_orbit.steps) {
    HomProfile sum;
    for (int v = 0; v < ctx->alg.vertex_count(); ++v)
      for (const auto& [n, d] : hom_profile(projective(ctx, v), step.complex)) sum[n] += d;
    if (sum != step.profile) run.additive = false;
  }

  std::vector<long> lo, hi, mass;
  double c = 0, support = 0;
  for (int n = 1; n <= n_max; ++n) {
    const HomProfile& p = run.tau_orbit.steps[static_cast<std::size_t>(n)].profile;
    long total = 0;
    for (const auto& [deg, dim] : p) total += dim;
    lo.push_back(p.empty() ? 0 : p.begin()->first);
    hi.push_back(p.empty() ? 0 : p.rbegin()->first);
    mass.push_back(total);
    c = std::max(c, static_cast<double>(total) / n);
    support = std::max(support, static_cast<double>(std::max(std::abs(lo.back()), std::abs(hi.back()))) / n);
  }
  run.min_degree = exact_slope(lo);
  run.max_degree = exact_slope(hi);
  run.growth.mass_constant = c;
  run.growth.support_constant = support;
  run.growth.mass_slope = exact_slope(mass);
  run.growth.linear = run.growth.mass_slope.found && run.min_degree.found && run.max_degree.found;
  return run;
}

namespace {

EntropyEstimate estimate_from(const std::string& name, double t, const std::vector<std::pair<int, double>>& seq,
                              int period) {
  EntropyEstimate e;
  e.functor = name;
  e.t = t;
  e.sequence = seq;
  const int n_max = seq.empty() ? 0 : seq.back().first;
  std::vector<std::pair<int, double>> tail;
  for (const auto& pt : seq)
    if (pt.first >= std::max(2, n_max / 2)) tail.push_back(pt);
  e.period = period;
  e.fitted_limit = static_cast<int>(tail.size()) >= 2 + period + 1 ? fit_limit(tail, period).limit
                                                                   : (seq.empty() ? 0 : seq.back().second);
  return e;
}

}  // namespace

int orbit_period(const OrbitRecord& rec, int fallback) {
  const int n_max = static_cast<int>(rec.steps.size()) - 1;
  const int start = n_max / 2;
  // Offset d with b(n + d) = a(n), if any.
  auto translate = [](const HomProfile& a, const HomProfile& b) -> std::optional<int> {
    if (a.size() != b.size()) return std::nullopt;
    if (a.empty()) return 0;
    const int delta = b.begin()->first - a.begin()->first;
    for (auto i = a.begin(), j = b.begin(); i != a.end(); ++i, ++j)
      if (j->first - i->first != delta || j->second != i->second) return std::nullopt;
    return delta;
  };
  for (int lag = 1; start + 2 * lag <= n_max; ++lag) {
    std::optional<int> common;
    bool ok = true;
    for (int n = start; n + lag <= n_max && ok; ++n) {
      const auto d = translate(rec.steps[static_cast<std::size_t>(n)].profile,
                               rec.steps[static_cast<std::size_t>(n + lag)].profile);
      ok = d && (!common || *common == *d);
      if (ok) common = d;
    }
    if (ok) return lag;
  }
  return std::max(1, fallback);
}

std::vector<EntropyEstimate> entropy_estimate(const DynamicsRun& run, const std::vector<double>& t_grid) {
  std::vector<EntropyEstimate> out;
  // Without an exact repetition the residues of the linear pieces govern the
  // oscillation; S^N G is tau^N G shifted, so the tau lags apply to both.
  int fallback = 1;
  for (const SlopeFit* f : {&run.growth.mass_slope, &run.min_degree, &run.max_degree})
    if (f->found) fallback = std::lcm(fallback, f->lag);
  const int period = orbit_period(run.serre_orbit, fallback);
  const int tau_period = orbit_period(run.tau_orbit, fallback);
  const int square_period = period % 2 == 0 ? period / 2 : period;
  for (double t : t_grid) {
    std::vector<std::pair<int, double>> s, ta, sq;
    for (int n = 1; n <= run.n_max; ++n) {
      s.emplace_back(n, estimator(run.serre_orbit.steps[static_cast<std::size_t>(n)].profile, t, n));
      ta.emplace_back(n, estimator(run.tau_orbit.steps[static_cast<std::size_t>(n)].profile, t, n));
    }
    for (int n = 1; 2 * n <= run.n_max; ++n)
      sq.emplace_back(n, 2 * estimator(run.serre_orbit.steps[static_cast<std::size_t>(2 * n)].profile, t, 2 * n));
    out.push_back(estimate_from("S", t, s, period));
    out.push_back(estimate_from("tau", t, ta, tau_period));
    out.push_back(estimate_from("S^2", t, sq, square_period));
  }
  return out;
}

SlopeReport slope_report(const DynamicsRun& run, const std::vector<EntropyEstimate>& estimates,
                         const SurfaceInvariants& inv, const Tolerances& tol) {
  SlopeReport rep;
  rep.disc = inv.is_disc();
  const auto omega = omega_set(inv);
  rep.omega_min = *omega.begin();
  rep.omega_max = *omega.rbegin();
  rep.min_degree = run.min_degree;
  rep.max_degree = run.max_degree;
  rep.slopes_match = run.min_degree.found && run.max_degree.found && run.min_degree.slope == rep.omega_min &&
                     run.max_degree.slope == rep.omega_max;
  const EntropyFunction hs = serre_entropy(inv);
  const EntropyFunction ht = tau_entropy(inv);
  bool all = true;
  for (std::size_t i = 0; i + 2 < estimates.size(); i += 3) {
    SlopeReport::Row r{};
    r.t = estimates[i].t;
    r.serre_fit = estimates[i].fitted_limit;
    r.tau_fit = estimates[i + 1].fitted_limit;
    r.square_fit = estimates[i + 2].fitted_limit;
    const Rational tq(r.t);
    r.serre_closed = hs(tq).get_d();
    r.tau_closed = ht(tq).get_d();
    r.serre_pass = std::abs(r.serre_fit - r.serre_closed) <= tol.slope_tol;
    r.tau_pass = std::abs(r.tau_fit - r.tau_closed) <= tol.slope_tol;
    r.shift_pass = std::abs(r.serre_fit - r.tau_fit - r.t) <= tol.shift_tol;
    r.square_pass = std::abs(r.square_fit - 2 * r.serre_fit) <= tol.square_tol;
    all = all && r.serre_pass && r.tau_pass && r.shift_pass && r.square_pass;
    rep.rows.push_back(r);
  }
  rep.pass = all && (rep.disc || rep.slopes_match);
  return rep;
}

}  // namespace gentle
