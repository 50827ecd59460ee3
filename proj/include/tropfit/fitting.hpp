#pragma once

/**
 * @file fitting.hpp
 * @brief Max-plus polynomial and rational-function fitting in the tropical
 *        (Chebyshev) distance.
 *
 * Polynomial fit: choose exponents by agglomerative clustering, then the
 * coefficients are theta = sqrt(Delta) (b^- X(p))^-, where b is the target.
 *
 * Rational fit P/Q: alternate between fitting P to b_k = Y Z(q) sigma and Q to
 * a_k = Y^{-1} X(p) theta, starting from the constant denominator. Each half
 * step k yields the squared error Delta_k of the latest numerator against the
 * latest denominator.
 */

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tropfit/exponent_search.hpp"
#include "tropfit/puiseux.hpp"
#include "tropfit/scalar.hpp"

namespace tropfit {

struct PolyFit {
  std::vector<double> exponents;     ///< p*, one per fitted monomial (may repeat)
  std::vector<double> coefficients;  ///< theta*, matching exponents
  PuiseuxPoly poly;                  ///< canonical form of (p*, theta*)
  MaxPlus delta_star;                ///< squared error of the returned fit
  ExponentResult exponent_result;
};

/// Fits an n-monomial polynomial to `target` sampled at `xs`.
/// Throws std::invalid_argument unless 1 <= n <= M.
PolyFit fit_to_target(std::span<const double> xs, std::span<const double> target, std::size_t n);

/// Fits an n-monomial polynomial to the samples.
PolyFit fit_polynomial(const SampleSet& samples, std::size_t n);

/// Exhaustive search over all n-part partitions of the samples (test oracle).
/// Throws std::invalid_argument when M > 8, n > 3, or n is out of range.
PolyFit brute_force_poly_fit(const SampleSet& samples, std::size_t n);

/// Coefficients and squared error for fixed exponents (residuation solve).
PolyFit fit_coefficients(std::span<const double> xs, std::span<const double> target,
                         std::span<const double> exponents);

/// When the alternation ends and which iterate it returns.
enum class StopRule {
  /// Keep alternating through plateaus and increases; return the earliest
  /// iterate with the smallest Delta_k. Stops once Delta_k < epsilon or when
  /// the best error has not dropped by more than epsilon for `patience` half
  /// steps.
  best_iterate,
  /// Compare successive errors: stop on Delta_k > Delta_{k-1} (return the
  /// previous iterate) or on Delta_k > Delta_{k-1} - epsilon (return the
  /// current one).
  successive,
};

struct FitConfig {
  std::size_t n = 1;                  ///< numerator monomials
  std::size_t l = 1;                  ///< denominator monomials
  double epsilon = 1e-4;              ///< squared-error tolerance
  std::size_t iteration_cap = 200;    ///< maximum number of half steps
  StopRule stop_rule = StopRule::best_iterate;
  std::size_t patience = 10;          ///< half steps without progress (best_iterate)
};

enum class StopReason { error_increased, converged, stalled, iteration_cap };

std::string_view to_string(StopReason r) noexcept;

struct TraceEntry {
  std::size_t k = 0;
  double delta = 0.0;
};

struct RationalFit {
  std::vector<double> num_exponents;
  std::vector<double> num_coefficients;
  std::vector<double> den_exponents;
  std::vector<double> den_coefficients;
  PuiseuxRational rational;
  MaxPlus delta_star;
  std::vector<TraceEntry> trace;  ///< Delta_k for k = 1, 2, ...
  StopReason stop_reason = StopReason::converged;
};

/// Alternating rational fit. Throws std::invalid_argument unless
/// 1 <= n, l <= M, epsilon > 0, iteration_cap >= 2 and patience >= 1.
RationalFit fit_rational(const SampleSet& samples, const FitConfig& config);

}  // namespace tropfit
