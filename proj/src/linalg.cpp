#include "tropfit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tropfit {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kCycleQuantum = 1e-12;

struct QuantizedHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : v) {
      h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using SeenSet = std::unordered_set<std::vector<std::int64_t>, QuantizedHash>;

// Both sides of A x = B y shift together under x -> c x, y -> c y, so the
// iterates can repeat up to a constant factor while drifting without bound.
// Vectors are compared after dividing out their largest entry.
std::vector<std::int64_t> quantize(std::span<const MaxPlus> x) {
  MaxPlus top = MaxPlus::zero();
  for (const auto& e : x) top = oplus(top, e);
  const double shift = top.is_zero() ? 0.0 : top.value();
  std::vector<std::int64_t> q;
  q.reserve(x.size());
  for (const auto& e : x) {
    q.push_back(e.is_zero() ? std::numeric_limits<std::int64_t>::min()
                            : std::llround((e.value() - shift) / kCycleQuantum));
  }
  return q;
}

void require_regular_matrix(const TropMatrix& a, const char* what) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw std::invalid_argument(std::string(what) + ": empty matrix");
  }
  if (!a.regular()) throw std::invalid_argument(std::string(what) + ": matrix is not regular");
}

}  // namespace

std::vector<std::size_t> support(std::span<const MaxPlus> x) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_finite()) idx.push_back(i);
  }
  return idx;
}

bool is_regular(std::span<const MaxPlus> x) {
  return std::all_of(x.begin(), x.end(), [](const MaxPlus& e) { return e.is_finite(); });
}

TropVector make_vector(std::initializer_list<double> values) {
  return make_vector(std::span<const double>(values.begin(), values.size()));
}

TropVector make_vector(std::span<const double> values) {
  TropVector v;
  v.reserve(values.size());
  for (double e : values) v.push_back(MaxPlus::from_ieee(e));
  return v;
}

TropVector unit_vector(std::size_t n) { return TropVector(n, MaxPlus::one()); }

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, MaxPlus fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

TropMatrix TropMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  TropMatrix a(m, n);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("TropMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (double e : r) a(i, j++) = MaxPlus::from_ieee(e);
    ++i;
  }
  return a;
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = MaxPlus::one();
  return a;
}

TropMatrix TropMatrix::diagonal(std::span<const MaxPlus> d) {
  TropMatrix a(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a(i, i) = d[i];
  return a;
}

bool TropMatrix::row_regular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!std::any_of(row(i).begin(), row(i).end(), [](const MaxPlus& e) { return e.is_finite(); })) {
      return false;
    }
  }
  return true;
}

bool TropMatrix::column_regular() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < rows_ && !any; ++i) any = (*this)(i, j).is_finite();
    if (!any) return false;
  }
  return true;
}

TropVector matvec(const TropMatrix& a, std::span<const MaxPlus> x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matvec: shape mismatch (" + std::to_string(a.cols()) + " columns, " +
                                std::to_string(x.size()) + " entries)");
  }
  TropVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) r[i] = dot(a.row(i), x);
  return r;
}

TropVector conjugate(std::span<const MaxPlus> x) {
  TropVector r;
  r.reserve(x.size());
  for (const auto& e : x) r.push_back(e.is_zero() ? e : inv(e));
  return r;
}

MaxPlus dot(std::span<const MaxPlus> x, std::span<const MaxPlus> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  MaxPlus acc = MaxPlus::zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = oplus(acc, otimes(x[i], y[i]));
  return acc;
}

TropVector vecmat(std::span<const MaxPlus> x, const TropMatrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("vecmat: shape mismatch");
  TropVector r(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = oplus(r[j], otimes(x[i], a(i, j)));
  }
  return r;
}

MaxPlus Distance::value() const {
  if (infinite_) throw std::domain_error("Distance: value() of infinite distance");
  return value_;
}

Distance distance(std::span<const MaxPlus> x, std::span<const MaxPlus> y) {
  if (x.size() != y.size()) throw std::invalid_argument("distance: length mismatch");
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() != y[i].is_zero()) return Distance::infinite();
    any = any || x[i].is_finite();
  }
  if (!any) return Distance{MaxPlus::one()};
  return Distance{oplus(dot(conjugate(y), x), dot(conjugate(x), y))};
}

TropVector residual_solution(const TropMatrix& a, std::span<const MaxPlus> b) {
  return conjugate(vecmat(conjugate(b), a));
}

ApproxSolution best_approx_solve(const TropMatrix& a, std::span<const MaxPlus> b) {
  require_regular_matrix(a, "best_approx_solve");
  if (b.size() != a.rows()) throw std::invalid_argument("best_approx_solve: shape mismatch");
  if (!is_regular(b)) throw std::invalid_argument("best_approx_solve: right-hand side is not regular");

  TropVector x = residual_solution(a, b);
  MaxPlus delta = dot(conjugate(matvec(a, x)), b);
  const MaxPlus half = tsqrt(delta);
  for (auto& e : x) e = otimes(half, e);
  const bool exact = approx_equal(delta, MaxPlus::one(), kExactTol);
  return {delta, std::move(x), exact};
}

AlternatingSolution alternating_solve(const TropMatrix& a, const TropMatrix& b,
                                      std::span<const MaxPlus> x0, std::size_t iteration_cap) {
  require_regular_matrix(a, "alternating_solve");
  require_regular_matrix(b, "alternating_solve");
  if (a.rows() != b.rows()) throw std::invalid_argument("alternating_solve: row counts differ");
  if (x0.size() != a.cols() || !is_regular(x0)) {
    throw std::invalid_argument("alternating_solve: initial vector must be regular of matching size");
  }

  AlternatingSolution out;
  TropVector x(x0.begin(), x0.end());
  TropVector y;
  SeenSet seen_x{quantize(x)};
  SeenSet seen_y;

  for (std::size_t step = 0; step < iteration_cap; ++step) {
    if (step % 2 == 0) {
      auto fit = best_approx_solve(b, matvec(a, x));
      out.trace.push_back(fit.delta);
      y = std::move(fit.solution);
      if (fit.exact || !seen_y.insert(quantize(y)).second) {
        out.outcome = fit.exact ? AlternatingOutcome::exact : AlternatingOutcome::cycle;
        out.delta = fit.delta;
        out.x = std::move(x);
        out.y = std::move(y);
        return out;
      }
    } else {
      auto fit = best_approx_solve(a, matvec(b, y));
      out.trace.push_back(fit.delta);
      x = std::move(fit.solution);
      if (fit.exact || !seen_x.insert(quantize(x)).second) {
        out.outcome = fit.exact ? AlternatingOutcome::exact : AlternatingOutcome::cycle;
        out.delta = fit.delta;
        out.x = std::move(x);
        out.y = std::move(y);
        return out;
      }
    }
  }

  out.outcome = AlternatingOutcome::iteration_cap;
  out.delta = out.trace.empty() ? MaxPlus::zero() : out.trace.back();
  out.x = std::move(x);
  out.y = std::move(y);
  return out;
}

AlternatingSolution alternating_solve(const TropMatrix& a, const TropMatrix& b,
                                      std::size_t iteration_cap) {
  const TropVector x0 = unit_vector(a.cols());
  return alternating_solve(a, b, x0, iteration_cap);
}

}  // namespace tropfit
