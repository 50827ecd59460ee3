// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tropfit/fitting.hpp"
#include "tropfit/linalg.hpp"
#include "tropfit/puiseux.hpp"
#include "tropfit/report.hpp"

using namespace tropfit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("[%s] %d. %s%s%s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Reference dataset coordinates, 4 decimals.
constexpr std::array<std::array<double, 2>, 21> kReference = {{
    {0.0000, 0.2500}, {0.1000, 0.4926}, {0.2000, 0.6314}, {0.3000, 0.6844}, {0.4000, 0.6706},
    {0.5000, 0.6096}, {0.6000, 0.5210}, {0.7000, 0.4239}, {0.8000, 0.3361}, {0.9000, 0.2735},
    {1.0000, 0.2500}, {1.1000, 0.2767}, {1.2000, 0.3618}, {1.3000, 0.5102}, {1.4000, 0.7230},
    {1.5000, 0.9981}, {1.6000, 1.3295}, {1.7000, 1.7077}, {1.8000, 2.1198}, {1.9000, 2.5495},
    {2.0000, 2.9779},
}};

Outcome fixture_reproduction() {
  Outcome o;
  const fs::path path = fs::temp_directory_path() / "tropfit_acceptance_fixture.csv";
  const std::string cmd = std::string(TROPFIT_CLI) + " gen-fixture " + path.string();
  const auto t0 = Clock::now();
  const int status = std::system(cmd.c_str());
  const double elapsed = seconds_since(t0);
  o.require(status == 0, "gen-fixture exited nonzero");
  if (!o.pass) return o;
  const auto rows = read_samples_csv_file(path.string());
  o.require(rows.size() == kReference.size(), "expected 21 rows");
  for (std::size_t i = 0; i < std::min(rows.size(), kReference.size()); ++i) {
    char x[16], y[16], fx[16], fy[16];
    std::snprintf(x, sizeof x, "%.4f", rows[i].x);
    std::snprintf(y, sizeof y, "%.4f", rows[i].y);
    std::snprintf(fx, sizeof fx, "%.4f", kReference[i][0]);
    std::snprintf(fy, sizeof fy, "%.4f", kReference[i][1]);
    o.require(std::string(x) == fx && std::string(y) == fy,
              "row " + std::to_string(i + 1) + " is (" + x + "," + y + "), expected (" + fx + "," + fy + ")");
  }
  o.require(elapsed < 0.1, fmt("took %.3f s", elapsed));
  if (o.pass) o.detail = fmt("21 rows, %.3f s", elapsed);
  return o;
}

Outcome error_table() {
  Outcome o;
  const SampleSet s(fixture_samples());
  struct Row {
    std::size_t n, l;
    double expected;
  };
  const Row rows[] = {{2, 2, 0.3099}, {3, 3, 0.1158}, {4, 4, 0.0590}, {5, 3, 0.0370}, {6, 5, 0.0113}};
  std::string summary;
  for (const auto& r : rows) {
    FitConfig c;
    c.n = r.n;
    c.l = r.l;
    const auto t0 = Clock::now();
    const RationalFit f = fit_rational(s, c);
    const double elapsed = seconds_since(t0);
    const double d = f.delta_star.value();
    o.require(std::abs(d - r.expected) <= 1e-3,
              fmt("(%g,", double(r.n)) + fmt("%g): ", double(r.l)) + fmt("delta* %.6f vs %.4f", d, r.expected));
    o.require(elapsed < 5.0, fmt("(%g,%g) took %.2f s", double(r.n), double(r.l), elapsed));
    summary += fmt("(%g,%g)=%.4f ", double(r.n), double(r.l), d);
  }
  FitConfig c;
  c.n = 7;
  c.l = 5;
  const auto t0 = Clock::now();
  const RationalFit f = fit_rational(s, c);
  const double elapsed = seconds_since(t0);
  o.require(f.delta_star.value() < 1e-4, fmt("(7,5): delta* %.6g is not below 1e-4", f.delta_star.value()));
  o.require(elapsed < 5.0, fmt("(7,5) took %.2f s", elapsed));
  summary += fmt("(7,5)=%.2g", f.delta_star.value());
  if (o.pass) o.detail = summary;
  return o;
}

Outcome first_iteration_anchor() {
  Outcome o;
  const double d = fit_polynomial(SampleSet(fixture_samples()), 2).delta_star.value();
  o.require(std::abs(d - 0.4344) <= 1e-3, fmt("delta %.6f vs 0.4344", d));
  if (o.pass) o.detail = fmt("delta %.6f", d);
  return o;
}

TropMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_real_distribution<double> u(-10, 10);
  TropMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = MaxPlus{u(rng)};
  return a;
}

TropVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10, 10);
  TropVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(MaxPlus{u(rng)});
  return v;
}

double dist(const TropVector& x, const TropVector& y) { return distance(x, y).value().value(); }

Outcome solver_optimality() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_real_distribution<double> wide(-30, 30);
  for (int t = 0; t < 100 && o.pass; ++t) {
    const std::size_t m = dim(rng), n = dim(rng);
    const TropMatrix a = random_matrix(rng, m, n);
    const TropVector b = random_vector(rng, m);
    const ApproxSolution s = best_approx_solve(a, b);
    const double best = dist(matvec(a, s.solution), b);
    o.require(std::abs(best - 0.5 * s.delta.value()) <= 1e-9, fmt("distance %.12g vs sqrt(delta) %.12g", best,
                                                                  0.5 * s.delta.value()));
    for (int k = 0; k < 1000; ++k) {
      TropVector x;
      for (std::size_t j = 0; j < n; ++j) x.push_back(MaxPlus{wide(rng)});
      const double other = dist(matvec(a, x), b);
      o.require(best <= other + 1e-9, fmt("random x beats solution: %.12g < %.12g", other, best));
    }
  }
  if (o.pass) o.detail = "100 systems x 1000 probes";
  return o;
}

Outcome exactness() {
  Outcome o;
  std::mt19937_64 rng(2025);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = dim(rng), n = dim(rng);
    const TropMatrix a = random_matrix(rng, m, n);
    const TropVector x_true = random_vector(rng, n);
    const ApproxSolution s = best_approx_solve(a, matvec(a, x_true));
    o.require(std::abs(s.delta.value()) <= 1e-9, fmt("delta %.3g on a consistent system", s.delta.value()));
    for (std::size_t j = 0; j < n; ++j)
      o.require(s.solution[j].value() >= x_true[j].value() - 1e-9, "solution does not dominate x_true");
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
    const std::size_t m = n + 2 + static_cast<std::size_t>(t % 7);
    const auto d = oracle::convex_dataset(rng, m, n);
    const double delta = fit_polynomial(SampleSet(d.xs, d.ys), n).delta_star.value();
    o.require(delta <= 1e-9, fmt("polynomial data (M=%g, N=%g) fit with delta %.3g", double(m), double(n), delta));
  }
  if (o.pass) o.detail = "100 consistent systems, 100 polynomial datasets";
  return o;
}

// Mixed-sign polynomial whose minimizers lie inside the searched window.
PuiseuxPoly windowed_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 7);
  std::uniform_real_distribution<double> mag(0.1, 4.0);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<Monomial> ms = {{-mag(rng), coef(rng)}, {mag(rng), coef(rng)}};
    const int n = count(rng);
    for (int j = 2; j < n; ++j) ms.push_back({coin(rng) ? mag(rng) : -mag(rng), coef(rng)});
    PuiseuxPoly p(std::move(ms));
    std::vector<std::pair<double, double>> lines;
    for (const auto& m : p.monomials()) lines.emplace_back(m.exponent, m.coeff);
    // Window test on plain lines: the function must rise at both ends.
    const double left = oracle::lines_max(lines, -19.5), right = oracle::lines_max(lines, 19.5);
    double low = oracle::kInf;
    for (int k = -195; k <= 195; ++k) low = std::min(low, oracle::lines_max(lines, k / 10.0));
    if (low < left && low < right) return p;
  }
}

Outcome minimum_oracle() {
  Outcome o;
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 500; ++t) {
    const PuiseuxPoly p = windowed_poly(rng);
    std::vector<std::pair<double, double>> lines;
    for (const auto& m : p.monomials()) lines.emplace_back(m.exponent, m.coeff);
    const auto m = min_poly(p);
    o.require(m.has_value() && m->lo && m->hi, "no bounded minimizer interval for a mixed-sign polynomial");
    if (!o.pass) break;
    const double mu = m->mu.value();
    const auto [_, grid] =
        oracle::grid_min([&](double x) { return oracle::lines_max(lines, x); }, -20.0, 20.0, 1e-3);
    o.require(std::abs(grid - mu) <= 2e-3, fmt("grid %.6f vs mu %.6f", grid, mu));
    o.require(std::abs(oracle::lines_max(lines, *m->lo) - mu) <= 1e-9, "left endpoint misses mu");
    o.require(std::abs(oracle::lines_max(lines, *m->hi) - mu) <= 1e-9, "right endpoint misses mu");
  }
  if (o.pass) o.detail = "500 polynomials";
  return o;
}

Outcome greedy_vs_exhaustive() {
  Outcome o;
  std::mt19937_64 rng(2027);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::uniform_int_distribution<std::size_t> parts(1, 3);
  std::uniform_real_distribution<double> u(-3, 3);
  int strict = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = size(rng);
    const std::size_t n = std::min(parts(rng), m);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < m; ++i) {
      xs.push_back(u(rng));
      ys.push_back(u(rng));
    }
    const SampleSet s(xs, ys);
    const double greedy = fit_polynomial(s, n).delta_star.value();
    const double best = brute_force_poly_fit(s, n).exponent_result.delta_star.value();
    o.require(greedy >= best - 1e-9, fmt("greedy %.9f below exhaustive %.9f", greedy, best));
    if (greedy > best + 1e-9) ++strict;
  }
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const std::size_t m = std::max<std::size_t>(n + 1, 3 + static_cast<std::size_t>(t % 6));
    const auto d = oracle::convex_dataset(rng, m, n);
    const SampleSet s(d.xs, d.ys);
    const double greedy = fit_polynomial(s, n).delta_star.value();
    const double best = brute_force_poly_fit(s, n).exponent_result.delta_star.value();
    o.require(std::abs(greedy - best) <= 1e-9 && best <= 1e-9,
              fmt("convex data: greedy %.9f, exhaustive %.9f", greedy, best));
  }
  if (o.pass) o.detail = "200 random + 200 convex datasets; greedy strictly worse on " + std::to_string(strict);
  return o;
}

Outcome distributivity() {
  Outcome o;
  std::mt19937_64 rng(2028);
  std::uniform_int_distribution<int> u(-1000, 1000);
  long cases = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<MaxPlus>> x(m, std::vector<MaxPlus>(n));
        for (auto& row : x)
          for (auto& e : row) e = MaxPlus{u(rng) / 100.0};
        // max_i min_j x_ij
        MaxPlus lhs = MaxPlus::zero();
        for (const auto& row : x) {
          MaxPlus r = row[0];
          for (const auto& e : row) r = tmin(r, e);
          lhs = oplus(lhs, r);
        }
        // min over assignments of rows to columns of max_i x_{i, label(i)}
        std::optional<MaxPlus> rhs;
        std::vector<std::size_t> label(m, 0);
        for (;;) {
          MaxPlus v = MaxPlus::zero();
          for (std::size_t i = 0; i < m; ++i) v = oplus(v, x[i][label[i]]);
          if (!rhs || v < *rhs) rhs = v;
          std::size_t i = 0;
          while (i < m && ++label[i] == n) label[i++] = 0;
          if (i == m) break;
        }
        o.require(lhs == *rhs, "max-min identity fails");
        ++cases;
      }
    }
  }
  // min over (t_1..t_N) of max_j f_j(t_j) equals max_j min_t f_j(t).
  const std::vector<double> grid = {-2, -1, -0.5, 0, 0.5, 1, 2};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::vector<MaxPlus>> f(n);
      for (auto& fj : f) {
        const double a = u(rng) / 200.0, b = u(rng) / 200.0, c = u(rng) / 200.0, d = u(rng) / 200.0;
        for (double t : grid) fj.push_back(oplus(MaxPlus{a * t + b}, MaxPlus{c * t + d}));
      }
      std::optional<MaxPlus> joint;
      std::vector<std::size_t> idx(n, 0);
      for (;;) {
        MaxPlus v = MaxPlus::zero();
        for (std::size_t j = 0; j < n; ++j) v = oplus(v, f[j][idx[j]]);
        if (!joint || v < *joint) joint = v;
        std::size_t j = 0;
        while (j < n && ++idx[j] == grid.size()) idx[j++] = 0;
        if (j == n) break;
      }
      MaxPlus sep = MaxPlus::zero();
      for (const auto& fj : f) sep = oplus(sep, *std::min_element(fj.begin(), fj.end()));
      o.require(*joint == sep, "max-separable minimum identity fails");
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " exhaustive instances";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"fixture reproduction", fixture_reproduction},
      {"rational error table", error_table},
      {"first-iteration anchor", first_iteration_anchor},
      {"best approximation optimality", solver_optimality},
      {"exactness", exactness},
      {"polynomial minimum oracle", minimum_oracle},
      {"greedy vs exhaustive", greedy_vs_exhaustive},
      {"distributivity identities", distributivity},
  };
  int id = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    report(id++, name, o);
  }
  std::printf("%d of %d criteria passed\n", 8 - failures, 8);
  return failures == 0 ? 0 : 1;
}
