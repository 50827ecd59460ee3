// tropfit: fit max-plus polynomials and rational functions to sampled data.
//
//   tropfit gen-fixture fixture.csv
//   tropfit fit poly fixture.csv --n 2
//   tropfit fit rational fixture.csv --n 4 --l 4 > fit.json
//   tropfit eval fit.json 0 0.5 1
//   tropfit sample fit.json --from 0 --to 2 --steps 201

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfit/fitting.hpp"
#include "tropfit/report.hpp"

namespace {

using namespace tropfit;

constexpr int kInputErrorExit = 2;

SampleSet load_samples(const std::string& path, Mode mode) {
  const std::vector<Sample> raw = read_samples_csv_file(path);
  return mode == Mode::maxtimes ? log_transform(raw) : SampleSet(raw);
}

FitReport load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return report_from_json(j);
}

void print_report(const FitReport& r, const std::string& format) {
  if (format == "csv") {
    std::cout << to_csv(r);
  } else {
    std::cout << to_json(r).dump(2) << '\n';
  }
}

void print_curve(const std::vector<Sample>& pts) {
  std::cout << "x,value\n";
  for (const auto& p : pts) std::printf("%.12g,%.12g\n", p.x, p.y);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical (max-plus) polynomial and rational function fitting"};
  app.require_subcommand(1);

  std::string fixture_out;
  auto* gen = app.add_subcommand("gen-fixture", "Write the 21-sample reference dataset as CSV");
  gen->add_option("out", fixture_out, "Output CSV path")->required();

  auto* fit = app.add_subcommand("fit", "Fit a polynomial or rational function to CSV samples");
  fit->require_subcommand(1);

  std::string csv_path;
  std::size_t n = 0;
  std::size_t l = 0;
  double epsilon = 1e-4;
  std::size_t max_iter = 200;
  std::size_t patience = 10;
  std::string stop_rule = "best";
  std::string mode_name = "maxplus";
  std::string output = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("csv", csv_path, "Input CSV with x,y columns")->required();
    sub->add_option("--n", n, "Numerator monomials")->required()->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode_name, "Semifield of the data")
        ->check(CLI::IsMember({"maxplus", "maxtimes"}))
        ->capture_default_str();
    sub->add_option("--output", output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* poly = fit->add_subcommand("poly", "Fit an N-monomial polynomial");
  add_common(poly);

  auto* rational = fit->add_subcommand("rational", "Fit a ratio of N- and L-monomial polynomials");
  add_common(rational);
  rational->add_option("--l", l, "Denominator monomials")->required()->check(CLI::PositiveNumber);
  rational->add_option("--epsilon", epsilon, "Squared-error tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rational->add_option("--max-iter", max_iter, "Maximum number of half steps")->capture_default_str();
  rational->add_option("--stop-rule", stop_rule, "best: keep the best iterate; successive: compare successive errors")
      ->check(CLI::IsMember({"best", "successive"}))
      ->capture_default_str();
  rational->add_option("--patience", patience, "Half steps without progress before stopping (best rule)")
      ->capture_default_str();

  std::string report_path;
  std::vector<double> eval_points;
  auto* eval = app.add_subcommand("eval", "Evaluate a fitted function from a JSON report");
  eval->add_option("report", report_path, "JSON report from 'fit'")->required();
  eval->add_option("x", eval_points, "Points to evaluate")->required();

  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 101;
  auto* sample = app.add_subcommand("sample", "Sample a fitted function on a uniform grid as CSV");
  sample->add_option("report", report_path, "JSON report from 'fit'")->required();
  sample->add_option("--from", from, "Left end")->required();
  sample->add_option("--to", to, "Right end")->required();
  sample->add_option("--steps", steps, "Number of points (>= 2)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::ofstream out(fixture_out);
      if (!out) throw InputError("cannot write '" + fixture_out + "'");
      write_samples_csv(out, fixture_samples());
      if (!out.flush()) throw InputError("write to '" + fixture_out + "' failed");
    } else if (poly->parsed()) {
      const Mode mode = parse_mode(mode_name);
      print_report(make_report(fit_polynomial(load_samples(csv_path, mode), n), mode), output);
    } else if (rational->parsed()) {
      const Mode mode = parse_mode(mode_name);
      FitConfig config;
      config.n = n;
      config.l = l;
      config.epsilon = epsilon;
      config.iteration_cap = max_iter;
      config.patience = patience;
      config.stop_rule = stop_rule == "successive" ? StopRule::successive : StopRule::best_iterate;
      print_report(make_report(fit_rational(load_samples(csv_path, mode), config), mode), output);
    } else if (eval->parsed()) {
      const FitReport r = load_report(report_path);
      std::vector<Sample> pts;
      for (double x : eval_points) pts.push_back({x, evaluate(r, x)});
      print_curve(pts);
    } else if (sample->parsed()) {
      print_curve(sample_curve(load_report(report_path), from, to, steps));
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
