#pragma once

/**
 * @file puiseux.hpp
 * @brief Max-plus Puiseux polynomials P(x) = max_j (p_j x + theta_j) with real
 *        exponents, their ratios, and closed-form polynomial minimization.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropfit/linalg.hpp"
#include "tropfit/scalar.hpp"

namespace tropfit {

/// Exponents closer than this are treated as equal; exponents this close to
/// zero count as zero when classifying signs.
inline constexpr double kExponentTol = 1e-12;

/// theta x^p. The coefficient is a finite (nonzero) max-plus scalar stored as
/// its real value.
struct Monomial {
  double exponent = 0.0;
  double coeff = 0.0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class PuiseuxPoly {
 public:
  /// Canonicalizes: sorts by exponent and merges equal exponents by max of
  /// coefficients. Throws std::invalid_argument when empty or non-finite.
  explicit PuiseuxPoly(std::vector<Monomial> monomials);
  PuiseuxPoly(std::span<const double> exponents, std::span<const MaxPlus> coeffs);
  PuiseuxPoly(std::span<const double> exponents, std::span<const double> coeffs);

  /// Tropical sum of two polynomials (coefficient-wise max per exponent).
  static PuiseuxPoly merge(const PuiseuxPoly& a, const PuiseuxPoly& b);

  const std::vector<Monomial>& monomials() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// max_j (p_j x + theta_j).
  double evaluate(double x) const noexcept;

 private:
  struct Canonical {};
  PuiseuxPoly(Canonical, std::vector<Monomial> sorted) : terms_(std::move(sorted)) {}

  std::vector<Monomial> terms_;
};

/// P(x) for x > zero. Throws std::domain_error when x is the tropical zero.
MaxPlus eval_poly(const PuiseuxPoly& p, MaxPlus x);

struct PuiseuxRational {
  PuiseuxPoly numerator;
  PuiseuxPoly denominator;

  double evaluate(double x) const noexcept {
    return numerator.evaluate(x) - denominator.evaluate(x);
  }
};

/// P(x) (x) Q(x)^{-1}. Throws std::domain_error when x is the tropical zero.
MaxPlus eval_rational(const PuiseuxRational& r, MaxPlus x);

/// Max-plus form of a max-times polynomial max_j theta_j v^{p_j}: coefficients
/// are logged. Throws std::domain_error on a non-positive coefficient.
PuiseuxPoly from_maxtimes(std::span<const double> exponents, std::span<const double> coeffs);
/// Value of the max-times polynomial whose max-plus form is p, at v > 0.
double eval_maxtimes(const PuiseuxPoly& p, double v);

/// X(p)_ij = x_i^{p_j} = p_j x_i. Throws std::domain_error on a zero sample point.
TropMatrix vandermonde(std::span<const MaxPlus> xs, std::span<const double> exponents);
TropMatrix vandermonde(std::span<const double> xs, std::span<const double> exponents);

/// Minimum value mu of a polynomial and the closed interval of minimizers.
/// An absent bound is unbounded on that side.
struct PolyMinimum {
  MaxPlus mu;
  std::optional<double> lo;
  std::optional<double> hi;

  /// A single minimizer: midpoint of a bounded interval, the finite end of a
  /// half-line, 0 for the whole line.
  double representative() const noexcept;
};

/// Minimizes P over x > zero. Returns nullopt when the minimum is not attained
/// (all exponents strictly of one sign). O(N^2) in the number of monomials.
std::optional<PolyMinimum> min_poly(const PuiseuxPoly& p);

}  // namespace tropfit
