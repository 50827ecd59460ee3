#pragma once

/**
 * @file linalg.hpp
 * @brief Dense max-plus vectors and matrices, the tropical distance, and
 *        best approximate solvers for A x = b and A x = B y.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropfit/scalar.hpp"

namespace tropfit {

using TropVector = std::vector<MaxPlus>;

/// Indices of nonzero entries.
std::vector<std::size_t> support(std::span<const MaxPlus> x);
/// True when every entry is nonzero.
bool is_regular(std::span<const MaxPlus> x);

/// Column vector from IEEE doubles, -inf standing for the tropical zero.
TropVector make_vector(std::initializer_list<double> values);
TropVector make_vector(std::span<const double> values);
/// All entries equal to one (numeric 0).
TropVector unit_vector(std::size_t n);

class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, MaxPlus fill = MaxPlus::zero());

  /// Row-major construction from IEEE doubles, -inf standing for zero.
  static TropMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  /// Diagonal one, off-diagonal zero.
  static TropMatrix identity(std::size_t n);
  /// diag(d).
  static TropMatrix diagonal(std::span<const MaxPlus> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  MaxPlus& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MaxPlus& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const MaxPlus> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool row_regular() const;
  bool column_regular() const;
  bool regular() const { return row_regular() && column_regular(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MaxPlus> data_;
};

/// (A x)_i = max_j (A_ij + x_j).
TropVector matvec(const TropMatrix& a, std::span<const MaxPlus> x);

/// Multiplicative conjugate transpose: nonzero entries negated, zeros kept.
TropVector conjugate(std::span<const MaxPlus> x);

/// Row vector times column vector, x^T y = max_i (x_i + y_i).
MaxPlus dot(std::span<const MaxPlus> x, std::span<const MaxPlus> y);

/// Row vector times matrix, (x^T A)_j = max_i (x_i + A_ij).
TropVector vecmat(std::span<const MaxPlus> x, const TropMatrix& a);

/// Value of the tropical distance: a scalar or the infinite element that
/// exceeds every scalar (vectors with different supports).
class Distance {
 public:
  explicit Distance(MaxPlus value) : value_(value) {}
  static Distance infinite() {
    Distance d{MaxPlus::zero()};
    d.infinite_ = true;
    return d;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws std::domain_error when infinite.
  MaxPlus value() const;

  friend bool operator==(const Distance& a, const Distance& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::weak_ordering operator<=>(const Distance& a, const Distance& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  MaxPlus value_;
  bool infinite_ = false;
};

/// d(x, y) = y^- x (+) x^- y on equal supports; one when both are all-zero;
/// infinite when supports differ. Throws std::invalid_argument on length mismatch.
Distance distance(std::span<const MaxPlus> x, std::span<const MaxPlus> y);

struct ApproxSolution {
  MaxPlus delta;        ///< squared approximation error, >= one
  TropVector solution;  ///< sqrt(delta) (b^- A)^-
  bool exact = false;   ///< delta equals one within 1e-12
};

/// (b^- A)^-: the maximal x with A x <= b.
TropVector residual_solution(const TropMatrix& a, std::span<const MaxPlus> b);

/// Best approximate solution of A x = b in the tropical distance.
/// Requires regular A and b; throws std::invalid_argument otherwise. O(MN).
ApproxSolution best_approx_solve(const TropMatrix& a, std::span<const MaxPlus> b);

enum class AlternatingOutcome { exact, cycle, iteration_cap };

struct AlternatingSolution {
  MaxPlus delta;
  TropVector x;
  TropVector y;
  std::vector<MaxPlus> trace;  ///< Delta_k for every half step
  AlternatingOutcome outcome = AlternatingOutcome::exact;
};

/// Alternating best approximation of A x = B y starting from x0.
/// Stops when Delta_k reaches one or the newly computed vector repeats an
/// earlier vector of the same side up to a constant factor (compared after
/// normalizing the largest entry to one and quantizing to 1e-12).
AlternatingSolution alternating_solve(const TropMatrix& a, const TropMatrix& b,
                                      std::span<const MaxPlus> x0,
                                      std::size_t iteration_cap = 10'000);

/// Same, starting from the all-one vector.
AlternatingSolution alternating_solve(const TropMatrix& a, const TropMatrix& b,
                                      std::size_t iteration_cap = 10'000);

}  // namespace tropfit
