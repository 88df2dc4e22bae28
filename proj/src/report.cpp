#include <gentle/report.hpp>
#include <gentle/surface.hpp>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gentle {

using ojson = nlohmann::ordered_json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::NotGentle:
      return 2;
    case ErrorKind::InfiniteDimensional:
    case ErrorKind::CartanNotUnimodular:
    case ErrorKind::InfiniteGlobalDimension:
    case ErrorKind::GradedSerreUnsupported:
    case ErrorKind::UnstoppedComponent:
    case ErrorKind::DiscNotCovered:
    case ErrorKind::MissingWinding:
    case ErrorKind::FullyStoppedUnsupported:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::MissingArtifact:
    case ErrorKind::EmptyComplex:
      return 3;
    case ErrorKind::NotPolynomial:
    case ErrorKind::GenusNotIntegral:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::InconsistentInvariants:
    case ErrorKind::InvalidComplex:
      return 4;
  }
  return 4;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

namespace {

ojson entropy_json(const EntropyFunction& f) {
  ojson j = ojson::parse(entropy_to_json(f));
  j["route"] = "closed-form";
  return j;
}

ojson error_json(const Error& e) {
  ojson j;
  j["unavailable"] = to_string(e.kind());
  j["detail"] = e.what();
  return j;
}

ojson slope_json(const SlopeFit& s) {
  ojson j;
  j["found"] = s.found;
  if (s.found) {
    j["slope"] = to_string(s.slope);
    j["lag"] = s.lag;
    j["threshold"] = s.threshold;
  }
  j["route"] = "exact-dynamics";
  return j;
}

ojson coxeter_block(const GentleAlgebra& alg, const Tolerances& tol) {
  ojson j;
  const CoxeterData cd = coxeter(alg);
  const SurfaceInvariants inv = surface_invariants(alg);
  const int excess = alg.arrow_count() - alg.vertex_count();
  const IntegerPolynomial surface = coxeter_polynomial_surface(inv, excess);
  auto matrix = [](const IntMatrix& m) {
    ojson rows = ojson::array();
    for (const auto& r : m) {
      ojson row = ojson::array();
      for (const auto& x : r) row.push_back(x.get_si());
      rows.push_back(row);
    }
    return rows;
  };
  j["cartan"] = matrix(cd.cartan);
  j["coxeter_matrix"] = matrix(cd.coxeter);
  j["char_poly"] = {{"value", cd.char_poly.to_string()}, {"route", "exact-matrix"}};
  j["surface_poly"] = {{"value", surface.to_string()}, {"route", "closed-form"}};
  j["exponent_quiver"] = excess;
  j["exponent_printed"] = 2 - 2 * inv.genus - inv.mixed_count();
  j["routes_agree"] = cd.char_poly == surface;
  long double max_dev = 0;
  for (long double r : cd.root_moduli) max_dev = std::max(max_dev, std::fabs(r - 1.0L));
  const double log_rho = static_cast<double>(log_spectral_radius(cd));
  j["spectral_radius"] = {{"value", format_double(static_cast<double>(cd.spectral_radius))}, {"route", "float-roots"}};
  j["log_spectral_radius"] = format_double(log_rho);
  j["max_root_modulus_deviation"] = format_double(static_cast<double>(max_dev));
  j["cyclotomic_certificate"] = cd.cyclotomic_certificate;
  j["spectral_verdict"] = std::fabs(log_rho) <= tol.rho_tol && max_dev <= 1e-6 ? "pass" : "fail";
  return j;
}

std::string csv_orbit(const OrbitRecord& rec) {
  std::ostringstream out;
  out << "N,left_length,right_length,n,dim\n";
  for (const auto& s : rec.steps)
    for (const auto& [n, d] : s.profile) out << s.n << "," << s.left << "," << s.right << "," << n << "," << d << "\n";
  return out.str();
}

std::string csv_estimates(const std::vector<EntropyEstimate>& est, const std::string& functor) {
  std::ostringstream out;
  out << "t,N,estimate\n";
  for (const auto& e : est)
    if (e.functor == functor)
      for (const auto& [n, v] : e.sequence) out << format_double(e.t) << "," << n << "," << format_double(v) << "\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string analyze_json(const GentleAlgebra& alg, const std::string& input) {
  ojson doc;
  doc["input"] = input;
  doc["algebra"] = ojson::parse(presentation_to_json(alg));
  doc["finite_dimensional"] = alg.is_finite_dimensional();
  doc["trivially_graded"] = alg.trivially_graded();

  const SurfaceInvariants inv = surface_invariants(alg);
  ojson surface = ojson::parse(surface_report_json(alg));
  surface["route"] = "closed-form";
  doc["surface"] = surface;

  ojson omega = ojson::array();
  for (const auto& w : omega_set(inv)) omega.push_back(to_string(w));
  doc["omega"] = omega;
  doc["serre_entropy"] = entropy_json(serre_entropy(inv));
  doc["tau_entropy"] = entropy_json(tau_entropy(inv));
  try {
    const SerreDimensions d = serre_dimensions(inv);
    doc["serre_dimensions"] = {{"upper", to_string(d.upper)}, {"lower", to_string(d.lower)}, {"equal", d.equal},
                               {"route", "closed-form"}};
  } catch (const Error& e) {
    doc["serre_dimensions"] = error_json(e);
  }
  const Classification c = classify(inv);
  doc["classification"] = {{"is_disc", c.is_disc},
                           {"all_windings_zero", c.all_windings_zero},
                           {"entropy_is_t", c.entropy_is_t},
                           {"affine_A_trivial", c.affine_A_trivial}};
  ojson ag = ojson::array();
  for (const auto& [m, n] : ag_pairs(alg)) ag.push_back({m, n});
  doc["ag_pairs"] = ag;
  doc["poincare_hopf"] = to_string(check_poincare_hopf(inv));
  ojson parallel = ojson::array();
  const auto bp = boundary_parallel(alg);
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (bp[static_cast<std::size_t>(v)]) parallel.push_back(alg.vertex_names()[static_cast<std::size_t>(v)]);
  doc["boundary_parallel"] = parallel;
  if (alg.trivially_graded()) {
    try {
      doc["coxeter"] = coxeter_block(alg, {});
    } catch (const Error& e) {
      doc["coxeter"] = error_json(e);
    }
  } else {
    doc["coxeter"] = {{"unavailable", "GradedInput"},
                      {"detail", "the Coxeter comparison uses the trivially graded presentation"}};
  }
  return doc.dump(2) + "\n";
}

std::string coxeter_json(const GentleAlgebra& alg, const std::string& input, const Tolerances& tol) {
  if (!alg.trivially_graded())
    throw Error(ErrorKind::GradedSerreUnsupported, "the Coxeter pipeline requires a trivially graded algebra");
  ojson doc;
  doc["input"] = input;
  doc["coxeter"] = coxeter_block(alg, tol);
  return doc.dump(2) + "\n";
}

SimulationArtifacts simulate(const GentleAlgebra& alg, const std::string& input, int n_max,
                             const std::vector<double>& t_grid, const Budget& budget, const Tolerances& tol) {
  const ContextPtr ctx = make_context(alg);
  const DynamicsRun run = run_dynamics(ctx, n_max, budget);
  const std::vector<EntropyEstimate> est = entropy_estimate(run, t_grid);
  const SurfaceInvariants inv = surface_invariants(alg);
  const SlopeReport rep = slope_report(run, est, inv, tol);

  ojson doc;
  doc["input"] = input;
  doc["n_max"] = n_max;
  doc["cutoff"] = budget.cutoff;
  doc["tolerances"] = {{"slope_tol", tol.slope_tol}, {"shift_tol", tol.shift_tol}, {"square_tol", tol.square_tol}};
  doc["disc"] = rep.disc;
  doc["omega_min"] = to_string(rep.omega_min);
  doc["omega_max"] = to_string(rep.omega_max);
  doc["min_degree_slope"] = slope_json(rep.min_degree);
  doc["max_degree_slope"] = slope_json(rep.max_degree);
  doc["slopes_match"] = rep.disc ? ojson("not scored on the disc") : ojson(rep.slopes_match);
  doc["additivity"] = run.additive;
  doc["growth"] = {{"mass_constant", format_double(run.growth.mass_constant)},
                   {"support_constant", format_double(run.growth.support_constant)},
                   {"mass_slope", slope_json(run.growth.mass_slope)},
                   {"linear", run.growth.linear}};
  ojson rows = ojson::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"t", format_double(r.t)},
                    {"serre_fit", format_double(r.serre_fit)},
                    {"serre_closed_form", format_double(r.serre_closed)},
                    {"tau_fit", format_double(r.tau_fit)},
                    {"tau_closed_form", format_double(r.tau_closed)},
                    {"serre_squared_fit", format_double(r.square_fit)},
                    {"serre_pass", r.serre_pass},
                    {"tau_pass", r.tau_pass},
                    {"shift_pass", r.shift_pass},
                    {"square_pass", r.square_pass},
                    {"route", "float-fit"}});
  }
  doc["estimates"] = rows;
  doc["verdict"] = rep.pass && run.additive ? "pass" : "fail";

  SimulationArtifacts out;
  out.pass = rep.pass && run.additive;
  out.summary_json = doc.dump(2) + "\n";
  out.orbit_tau_csv = csv_orbit(run.tau_orbit);
  out.orbit_serre_csv = csv_orbit(run.serre_orbit);
  out.estimates_serre_csv = csv_estimates(est, "S");
  out.estimates_tau_csv = csv_estimates(est, "tau");
  out.estimates_square_csv = csv_estimates(est, "S^2");
  return out;
}

MergedReport merge_reports(const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  const fs::path analyze = dir / "analyze.json";
  if (!fs::exists(analyze)) throw Error(ErrorKind::MissingArtifact, "no analyze.json in '" + directory + "'");
  ojson merged;
  const ojson a = ojson::parse(read_file(analyze));
  merged["analyze"] = a;
  for (const char* name : {"coxeter", "simulate"}) {
    const fs::path p = dir / (std::string(name) + ".json");
    if (fs::exists(p)) merged[name] = ojson::parse(read_file(p));
  }

  std::ostringstream csv;
  csv << "function,t,h\n";
  for (const char* fn : {"serre_entropy", "tau_entropy"}) {
    EntropyFunction f;
    f.slope_pos = parse_rational(a.at(fn).at("slope_pos").get<std::string>());
    f.slope_neg = parse_rational(a.at(fn).at("slope_neg").get<std::string>());
    ojson samples = ojson::array();
    for (int k = -4; k <= 4; ++k) {
      const Rational t = make_rational(k, 2);
      const Rational h = f(t);
      csv << fn << "," << to_string(t) << "," << to_string(h) << "\n";
      samples.push_back({{"t", to_string(t)}, {"h", to_string(h)}});
    }
    merged["plot"][fn] = samples;
  }
  return {merged.dump(2) + "\n", csv.str()};
}

}  // namespace gentle
