#pragma once

/**
 * @file scalar.hpp
 * @brief Max-plus scalars: the idempotent semifield (R u {-inf}, max, +).
 *
 * The tropical zero is a tagged state of MaxPlus, not an IEEE -inf stored in
 * a double, so that zero (x) zero and the inverse of zero are decided exactly.
 * Conversion to and from -inf happens only in from_ieee()/to_ieee().
 */

#include <compare>
#include <iosfwd>

namespace tropfit {

class MaxPlus {
 public:
  /// Tropical zero.
  constexpr MaxPlus() noexcept = default;

  /// Finite scalar. Throws std::invalid_argument for NaN or +-inf.
  explicit MaxPlus(double value);

  static constexpr MaxPlus zero() noexcept { return MaxPlus{}; }
  static MaxPlus one() noexcept { return MaxPlus{0.0}; }

  /// -inf maps to zero; NaN and +inf are rejected.
  static MaxPlus from_ieee(double value);

  constexpr bool is_zero() const noexcept { return zero_; }
  constexpr bool is_finite() const noexcept { return !zero_; }

  /// Real value of a finite scalar. Throws std::domain_error on zero.
  double value() const;

  /// -inf for zero, the real value otherwise.
  double to_ieee() const noexcept;

  friend bool operator==(const MaxPlus& a, const MaxPlus& b) noexcept {
    return a.zero_ == b.zero_ && (a.zero_ || a.value_ == b.value_);
  }
  friend std::weak_ordering operator<=>(const MaxPlus& a, const MaxPlus& b) noexcept {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (a.value_ > b.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  bool zero_ = true;
  double value_ = 0.0;
};

/// a (+) b = max(a, b).
MaxPlus oplus(MaxPlus a, MaxPlus b) noexcept;
/// a (x) b = a + b, with zero absorbing.
MaxPlus otimes(MaxPlus a, MaxPlus b) noexcept;
/// Multiplicative inverse (negation). Throws std::domain_error on zero.
MaxPlus inv(MaxPlus a);
/// Real power a^r = r * a. Throws std::domain_error for zero with r <= 0.
MaxPlus tpow(MaxPlus a, double r);
/// Tropical square root, tpow(a, 1/2).
MaxPlus tsqrt(MaxPlus a);
/// Dual minimum: numeric min when both are finite, zero otherwise.
MaxPlus tmin(MaxPlus a, MaxPlus b) noexcept;

inline MaxPlus operator+(MaxPlus a, MaxPlus b) noexcept { return oplus(a, b); }
inline MaxPlus operator*(MaxPlus a, MaxPlus b) noexcept { return otimes(a, b); }

/// log: [0, inf) -> max-plus, 0 maps to zero. Throws std::domain_error on negative input.
MaxPlus maxtimes_to_maxplus(double v);
/// exp: max-plus -> [0, inf), zero maps to 0.
double maxplus_to_maxtimes(MaxPlus a) noexcept;

/// Both zero, or both finite with |a - b| <= tol.
bool approx_equal(MaxPlus a, MaxPlus b, double tol = 1e-9) noexcept;

std::ostream& operator<<(std::ostream& os, const MaxPlus& a);

}  // namespace tropfit
