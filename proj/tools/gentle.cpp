#include <gentle/algebra.hpp>
#include <gentle/error.hpp>
#include <gentle/report.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << contents;
}

fs::path prepare(const std::string& dir) {
  fs::create_directories(dir);
  return fs::path(dir);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double value = std::stod(item, &used);
    if (used != item.size()) throw gentle::Error(gentle::ErrorKind::SyntaxError, "bad t value '" + item + "'");
    grid.push_back(value);
  }
  if (grid.empty()) throw gentle::Error(gentle::ErrorKind::SyntaxError, "empty t grid");
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy of Serre and Auslander-Reiten functors on graded gentle algebras"};
  app.require_subcommand(1);

  std::string file, out_dir, t_text = "-1,0,1";
  int n_max = 40, cutoff = gentle::kDefaultCutoff;

  auto* analyze = app.add_subcommand("analyze", "closed-form surface invariants and entropy");
  analyze->add_option("file", file, "presentation JSON")->required();
  analyze->add_option("--out", out_dir, "directory for analyze.json");

  auto* simulate = app.add_subcommand("simulate", "iterate the functors and fit entropy estimates");
  simulate->add_option("file", file, "presentation JSON")->required();
  simulate->add_option("--nmax", n_max, "number of iterations")->check(CLI::Range(4, 100000));
  simulate->add_option("--t", t_text, "comma separated t values");
  simulate->add_option("--cutoff", cutoff, "cohomological degree cutoff")->check(CLI::PositiveNumber);
  simulate->add_option("--out", out_dir, "directory for CSV and summary artifacts");

  auto* cox = app.add_subcommand("coxeter", "Coxeter polynomial by two routes");
  cox->add_option("file", file, "presentation JSON")->required();
  cox->add_option("--out", out_dir, "directory for coxeter.json");

  auto* report = app.add_subcommand("report", "merge artifacts in a directory");
  report->add_option("dir", out_dir, "artifact directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      const auto alg = gentle::load_presentation(file);
      const std::string json = gentle::analyze_json(alg, file);
      if (!out_dir.empty()) write_file(prepare(out_dir) / "analyze.json", json);
      std::cout << json;
      return 0;
    }
    if (cox->parsed()) {
      const auto alg = gentle::load_presentation(file);
      const std::string json = gentle::coxeter_json(alg, file);
      if (!out_dir.empty()) write_file(prepare(out_dir) / "coxeter.json", json);
      std::cout << json;
      return 0;
    }
    if (simulate->parsed()) {
      const auto alg = gentle::load_presentation(file);
      gentle::Budget budget;
      budget.cutoff = cutoff;
      const auto art = gentle::simulate(alg, file, n_max, parse_grid(t_text), budget);
      if (!out_dir.empty()) {
        const fs::path dir = prepare(out_dir);
        write_file(dir / "simulate.json", art.summary_json);
        write_file(dir / "orbit_tau.csv", art.orbit_tau_csv);
        write_file(dir / "orbit_serre.csv", art.orbit_serre_csv);
        write_file(dir / "estimates_serre.csv", art.estimates_serre_csv);
        write_file(dir / "estimates_tau.csv", art.estimates_tau_csv);
        write_file(dir / "estimates_serre_squared.csv", art.estimates_square_csv);
      }
      std::cout << art.summary_json;
      return art.pass ? 0 : 4;
    }
    if (report->parsed()) {
      const auto merged = gentle::merge_reports(out_dir);
      write_file(fs::path(out_dir) / "report.json", merged.json);
      write_file(fs::path(out_dir) / "plot.csv", merged.plot_csv);
      std::cout << merged.json;
      return 0;
    }
  } catch (const gentle::Error& e) {
    std::cerr << e.what() << "\n";
    return gentle::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 4;
  }
  return 4;
}
