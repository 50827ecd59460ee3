#pragma once

/**
 * @file exponent_search.hpp
 * @brief Exponent selection for max-plus polynomial fitting.
 *
 * For samples (x_i, y_i) the squared error of the best N-monomial fit with
 * exponents p_1..p_N decomposes as
 *
 *     delta(p) = max_i min_j phi_i(p_j),
 *     phi_i(p) = max_k ((x_k - x_i) p + y_i - y_k),
 *
 * so choosing exponents amounts to partitioning the sample indices into N
 * groups, each served by the minimizer of the max of its phi's. The groups are
 * found greedily by agglomerative clustering: start from singletons and merge
 * the pair whose merged polynomial has the smallest minimum.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "tropfit/puiseux.hpp"
#include "tropfit/scalar.hpp"

namespace tropfit {

struct Sample {
  double x = 0.0;
  double y = 0.0;
};

/// Finite max-plus samples, M >= 1.
class SampleSet {
 public:
  /// Throws std::invalid_argument when empty or when a coordinate is not finite.
  explicit SampleSet(std::vector<Sample> points);
  SampleSet(std::span<const double> xs, std::span<const double> ys);

  std::size_t size() const noexcept { return xs_.size(); }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  std::vector<Sample> points() const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Samples of a max-times relation, mapped through log on both axes.
/// Throws std::domain_error on non-positive coordinates.
SampleSet log_transform(std::span<const Sample> maxtimes_points);

/// phi_i for every sample, canonicalized.
struct PhiFamily {
  std::vector<PuiseuxPoly> polys;

  std::size_t size() const noexcept { return polys.size(); }
};

PhiFamily build_phi(const SampleSet& samples);
/// phi family for fitting `target` (in place of y) at abscissae xs.
PhiFamily build_phi(std::span<const double> xs, std::span<const double> target);

/// Minimum of the max of phi_i over a nonempty index subset (0-based).
/// Throws std::invalid_argument on an empty subset or bad index.
PolyMinimum merged_min(std::span<const std::size_t> subset, const PhiFamily& phi);

/// Disjoint nonempty 0-based index sets covering 0..M-1.
struct Partition {
  std::vector<std::vector<std::size_t>> subsets;

  std::size_t size() const noexcept { return subsets.size(); }
  /// True if the subsets are nonempty, disjoint, and cover 0..m-1.
  bool covers(std::size_t m) const;
};

/// One agglomeration step: two subsets (identified by their smallest member)
/// merged with the minimum of the merged polynomial.
struct MergeStep {
  std::size_t first = 0;
  std::size_t second = 0;
  double score = 0.0;
};

struct ExponentResult {
  std::vector<double> exponents;       ///< one representative minimizer per subset
  std::vector<MaxPlus> subset_minima;  ///< per-subset minima
  MaxPlus delta_star;                  ///< max of subset_minima
  Partition partition;                 ///< subsets ordered by smallest member
  std::vector<MergeStep> merges;
};

/// Greedy agglomerative minimization of delta(p) down to n subsets.
/// Ties (within 1e-12) go to the pair with the lexicographically smallest
/// (smaller key, larger key), where a subset's key is its smallest member.
/// Throws std::invalid_argument unless 1 <= n <= M.
ExponentResult agglomerate(const PhiFamily& phi, std::size_t n);

/// Exponents, minima and delta_star for a given partition.
ExponentResult score_partition(const PhiFamily& phi, Partition partition);

/// delta(p) = max_i min_j phi_i(p_j), evaluated through the phi family.
double phi_error(const PhiFamily& phi, std::span<const double> exponents);

}  // namespace tropfit
