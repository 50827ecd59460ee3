#include "tropfit/fitting.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "tropfit/linalg.hpp"

namespace tropfit {

namespace {

// Errors closer than this are the same error; keeps float drift on a plateau
// from moving the best iterate.
constexpr double kNoiseTol = 1e-12;

void require_count(std::size_t n, std::size_t m, const char* what) {
  if (n < 1 || n > m) {
    throw std::invalid_argument(std::string(what) + " must be in [1, M] (got " + std::to_string(n) +
                                ", M = " + std::to_string(m) + ")");
  }
}

// Calls f(labels, blocks) for every assignment of m items to exactly n blocks
// in restricted-growth form (item 0 in block 0, each new block opened in order).
template <class F>
void for_each_partition(std::size_t m, std::size_t n, F&& f) {
  std::vector<std::size_t> labels(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (m - i < n - used) return;
    if (i == m) {
      if (used == n) f(labels);
      return;
    }
    for (std::size_t b = 0; b < used; ++b) {
      labels[i] = b;
      self(self, i + 1, used);
    }
    if (used < n) {
      labels[i] = used;
      self(self, i + 1, used + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<double> real_values(std::span<const MaxPlus> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

// The most recent numerator and denominator, and the squared distance
// between X(p) theta and Y Z(q) sigma.
struct RationalState {
  std::vector<double> p, theta, q, sigma;
  double delta = 0.0;
};

RationalFit make_rational_fit(const RationalState& s, std::vector<TraceEntry> trace, StopReason why) {
  RationalFit out{s.p,
                  s.theta,
                  s.q,
                  s.sigma,
                  PuiseuxRational{PuiseuxPoly(s.p, s.theta), PuiseuxPoly(s.q, s.sigma)},
                  MaxPlus{s.delta},
                  std::move(trace),
                  why};
  return out;
}

}  // namespace

PolyFit fit_coefficients(std::span<const double> xs, std::span<const double> target,
                         std::span<const double> exponents) {
  if (xs.size() != target.size()) throw std::invalid_argument("fit_coefficients: length mismatch");
  if (exponents.empty()) throw std::invalid_argument("fit_coefficients: no exponents");
  const TropMatrix x = vandermonde(xs, exponents);
  const ApproxSolution sol = best_approx_solve(x, make_vector(target));
  std::vector<double> coeffs = real_values(sol.solution);
  PuiseuxPoly poly(exponents, std::span<const double>(coeffs));
  return PolyFit{std::vector<double>(exponents.begin(), exponents.end()), std::move(coeffs), std::move(poly),
                 sol.delta, ExponentResult{}};
}

PolyFit fit_to_target(std::span<const double> xs, std::span<const double> target, std::size_t n) {
  require_count(n, xs.size(), "number of monomials");
  ExponentResult er = agglomerate(build_phi(xs, target), n);
  PolyFit fit = fit_coefficients(xs, target, er.exponents);
  fit.exponent_result = std::move(er);
  return fit;
}

PolyFit fit_polynomial(const SampleSet& samples, std::size_t n) {
  return fit_to_target(samples.xs(), samples.ys(), n);
}

PolyFit brute_force_poly_fit(const SampleSet& samples, std::size_t n) {
  const std::size_t m = samples.size();
  require_count(n, m, "number of monomials");
  if (m > 8 || n > 3) {
    throw std::invalid_argument("brute_force_poly_fit: limited to M <= 8 and N <= 3");
  }
  const PhiFamily phi = build_phi(samples);

  std::optional<ExponentResult> best;
  for_each_partition(m, n, [&](const std::vector<std::size_t>& labels) {
    Partition part;
    part.subsets.resize(n);
    for (std::size_t i = 0; i < m; ++i) part.subsets[labels[i]].push_back(i);
    ExponentResult r = score_partition(phi, std::move(part));
    if (!best || r.delta_star < best->delta_star) best = std::move(r);
  });

  PolyFit fit = fit_coefficients(samples.xs(), samples.ys(), best->exponents);
  fit.exponent_result = std::move(*best);
  return fit;
}

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::error_increased: return "error-increased";
    case StopReason::converged: return "converged-within-epsilon";
    case StopReason::stalled: return "stalled";
    case StopReason::iteration_cap: return "iteration-cap";
  }
  return "unknown";
}

RationalFit fit_rational(const SampleSet& samples, const FitConfig& config) {
  const std::size_t m = samples.size();
  require_count(config.n, m, "N");
  require_count(config.l, m, "L");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (config.iteration_cap < 2) throw std::invalid_argument("iteration cap must be at least 2");
  if (config.patience < 1) throw std::invalid_argument("patience must be at least 1");

  const auto xs = samples.xs();
  const auto ys = samples.ys();

  // q_0 = sigma_0 = all-one, so Y Z(q_0) sigma_0 = y.
  RationalState cur;
  cur.q.assign(config.l, 0.0);
  cur.sigma.assign(config.l, 0.0);
  RationalState prev;
  std::vector<TraceEntry> trace;
  std::vector<double> rhs(m);
  double progress_mark = 0.0;
  std::size_t progress_step = 0;

  for (std::size_t k = 1; k <= config.iteration_cap; ++k) {
    if (k % 2 == 1) {
      // b_k = Y Z(q_{k-1}) sigma_{k-1}
      const PuiseuxPoly den(cur.q, cur.sigma);
      for (std::size_t i = 0; i < m; ++i) rhs[i] = ys[i] + den.evaluate(xs[i]);
      PolyFit f = fit_to_target(xs, rhs, config.n);
      cur.p = std::move(f.exponents);
      cur.theta = std::move(f.coefficients);
      cur.delta = f.delta_star.value();
    } else {
      // a_k = Y^{-1} X(p_{k-1}) theta_{k-1}
      const PuiseuxPoly num(cur.p, cur.theta);
      for (std::size_t i = 0; i < m; ++i) rhs[i] = num.evaluate(xs[i]) - ys[i];
      PolyFit f = fit_to_target(xs, rhs, config.l);
      cur.q = std::move(f.exponents);
      cur.sigma = std::move(f.coefficients);
      cur.delta = f.delta_star.value();
    }
    trace.push_back({k, cur.delta});

    if (config.stop_rule == StopRule::successive) {
      if (k >= 2) {
        if (cur.delta > prev.delta) {
          return make_rational_fit(prev, std::move(trace), StopReason::error_increased);
        }
        // epsilon^{-1} Delta_{k-1} in max-plus is Delta_{k-1} - epsilon.
        if (cur.delta > prev.delta - config.epsilon) {
          return make_rational_fit(cur, std::move(trace), StopReason::converged);
        }
      }
      prev = cur;
      continue;
    }

    // best_iterate: prev holds the best state so far.
    if (k == 1 || cur.delta < prev.delta - kNoiseTol) prev = cur;
    if (k == 1 || cur.delta < progress_mark - config.epsilon) {
      progress_mark = cur.delta;
      progress_step = k;
    }
    if (prev.delta < config.epsilon) {
      return make_rational_fit(prev, std::move(trace), StopReason::converged);
    }
    if (k - progress_step >= config.patience) {
      return make_rational_fit(prev, std::move(trace), StopReason::stalled);
    }
  }
  if (config.stop_rule == StopRule::best_iterate) {
    return make_rational_fit(prev, std::move(trace), StopReason::iteration_cap);
  }
  return make_rational_fit(cur, std::move(trace), StopReason::iteration_cap);
}

}  // namespace tropfit
