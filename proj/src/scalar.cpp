#include "tropfit/scalar.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tropfit {

MaxPlus::MaxPlus(double value) : zero_(false), value_(value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("MaxPlus: finite value required, got " + std::to_string(value));
  }
}

MaxPlus MaxPlus::from_ieee(double value) {
  if (value == -std::numeric_limits<double>::infinity()) return zero();
  return MaxPlus{value};
}

double MaxPlus::value() const {
  if (zero_) throw std::domain_error("MaxPlus: value() of tropical zero");
  return value_;
}

double MaxPlus::to_ieee() const noexcept {
  return zero_ ? -std::numeric_limits<double>::infinity() : value_;
}

MaxPlus oplus(MaxPlus a, MaxPlus b) noexcept { return a < b ? b : a; }

MaxPlus otimes(MaxPlus a, MaxPlus b) noexcept {
  if (a.is_zero() || b.is_zero()) return MaxPlus::zero();
  return MaxPlus{a.value() + b.value()};
}

MaxPlus inv(MaxPlus a) {
  if (a.is_zero()) throw std::domain_error("inv: tropical zero has no inverse");
  return MaxPlus{-a.value()};
}

MaxPlus tpow(MaxPlus a, double r) {
  if (!std::isfinite(r)) throw std::invalid_argument("tpow: exponent must be finite");
  if (a.is_zero()) {
    if (r <= 0.0) throw std::domain_error("tpow: non-positive power of tropical zero");
    return MaxPlus::zero();
  }
  if (r == 0.0) return MaxPlus::one();
  return MaxPlus{r * a.value()};
}

MaxPlus tsqrt(MaxPlus a) { return a.is_zero() ? a : MaxPlus{0.5 * a.value()}; }

MaxPlus tmin(MaxPlus a, MaxPlus b) noexcept {
  if (a.is_zero() || b.is_zero()) return MaxPlus::zero();
  return a < b ? a : b;
}

MaxPlus maxtimes_to_maxplus(double v) {
  if (std::isnan(v) || v < 0.0) throw std::domain_error("maxtimes_to_maxplus: negative input");
  if (v == 0.0) return MaxPlus::zero();
  return MaxPlus{std::log(v)};
}

double maxplus_to_maxtimes(MaxPlus a) noexcept { return a.is_zero() ? 0.0 : std::exp(a.value()); }

bool approx_equal(MaxPlus a, MaxPlus b, double tol) noexcept {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return std::abs(a.value() - b.value()) <= tol;
}

std::ostream& operator<<(std::ostream& os, const MaxPlus& a) {
  if (a.is_zero()) return os << "zero";
  return os << a.value();
}

}  // namespace tropfit
