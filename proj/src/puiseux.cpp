#include "tropfit/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tropfit {

namespace {

// Merges runs of (nearly) equal exponents in a sorted list. Each run keeps its
// first exponent and the largest coefficient.
void merge_sorted_runs(std::vector<Monomial>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (out > 0 && terms[i].exponent - terms[out - 1].exponent <= kExponentTol) {
      terms[out - 1].coeff = std::max(terms[out - 1].coeff, terms[i].coeff);
    } else {
      terms[out++] = terms[i];
    }
  }
  terms.resize(out);
}

int sign_of(double exponent) {
  if (std::abs(exponent) <= kExponentTol) return 0;
  return exponent < 0.0 ? -1 : 1;
}

}  // namespace

PuiseuxPoly::PuiseuxPoly(std::vector<Monomial> monomials) : terms_(std::move(monomials)) {
  if (terms_.empty()) throw std::invalid_argument("PuiseuxPoly: at least one monomial required");
  for (const auto& t : terms_) {
    if (!std::isfinite(t.exponent) || !std::isfinite(t.coeff)) {
      throw std::invalid_argument("PuiseuxPoly: exponents and coefficients must be finite");
    }
  }
  std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
    return a.exponent < b.exponent || (a.exponent == b.exponent && a.coeff > b.coeff);
  });
  merge_sorted_runs(terms_);
}

PuiseuxPoly::PuiseuxPoly(std::span<const double> exponents, std::span<const MaxPlus> coeffs)
    : PuiseuxPoly([&] {
        if (exponents.size() != coeffs.size()) {
          throw std::invalid_argument("PuiseuxPoly: exponent/coefficient count mismatch");
        }
        std::vector<Monomial> terms;
        for (std::size_t j = 0; j < exponents.size(); ++j) {
          if (coeffs[j].is_zero()) throw std::invalid_argument("PuiseuxPoly: zero coefficient");
          terms.push_back({exponents[j], coeffs[j].value()});
        }
        return terms;
      }()) {}

PuiseuxPoly::PuiseuxPoly(std::span<const double> exponents, std::span<const double> coeffs)
    : PuiseuxPoly([&] {
        if (exponents.size() != coeffs.size()) {
          throw std::invalid_argument("PuiseuxPoly: exponent/coefficient count mismatch");
        }
        std::vector<Monomial> terms;
        for (std::size_t j = 0; j < exponents.size(); ++j) terms.push_back({exponents[j], coeffs[j]});
        return terms;
      }()) {}

PuiseuxPoly PuiseuxPoly::merge(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  std::vector<Monomial> terms;
  terms.reserve(a.size() + b.size());
  std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
             std::back_inserter(terms),
             [](const Monomial& x, const Monomial& y) { return x.exponent < y.exponent; });
  merge_sorted_runs(terms);
  return PuiseuxPoly(Canonical{}, std::move(terms));
}

double PuiseuxPoly::evaluate(double x) const noexcept {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) best = std::max(best, t.exponent * x + t.coeff);
  return best;
}

MaxPlus eval_poly(const PuiseuxPoly& p, MaxPlus x) {
  if (x.is_zero()) throw std::domain_error("eval_poly: argument must be nonzero");
  return MaxPlus{p.evaluate(x.value())};
}

MaxPlus eval_rational(const PuiseuxRational& r, MaxPlus x) {
  if (x.is_zero()) throw std::domain_error("eval_rational: argument must be nonzero");
  return MaxPlus{r.evaluate(x.value())};
}

PuiseuxPoly from_maxtimes(std::span<const double> exponents, std::span<const double> coeffs) {
  if (exponents.size() != coeffs.size()) {
    throw std::invalid_argument("from_maxtimes: exponent/coefficient count mismatch");
  }
  std::vector<Monomial> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!(coeffs[j] > 0.0)) throw std::domain_error("from_maxtimes: coefficients must be positive");
    terms.push_back({exponents[j], std::log(coeffs[j])});
  }
  return PuiseuxPoly(std::move(terms));
}

double eval_maxtimes(const PuiseuxPoly& p, double v) {
  if (!(v > 0.0)) throw std::domain_error("eval_maxtimes: argument must be positive");
  return std::exp(p.evaluate(std::log(v)));
}

TropMatrix vandermonde(std::span<const MaxPlus> xs, std::span<const double> exponents) {
  TropMatrix x(xs.size(), exponents.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw std::domain_error("vandermonde: sample point is the tropical zero");
    for (std::size_t j = 0; j < exponents.size(); ++j) x(i, j) = tpow(xs[i], exponents[j]);
  }
  return x;
}

TropMatrix vandermonde(std::span<const double> xs, std::span<const double> exponents) {
  TropVector points;
  points.reserve(xs.size());
  for (double v : xs) points.push_back(MaxPlus::from_ieee(v));
  return vandermonde(points, exponents);
}

double PolyMinimum::representative() const noexcept {
  if (lo && hi) return 0.5 * (*lo + *hi);
  if (lo) return *lo;
  if (hi) return *hi;
  return 0.0;
}

std::optional<PolyMinimum> min_poly(const PuiseuxPoly& p) {
  const auto& terms = p.monomials();
  std::vector<const Monomial*> neg, pos;
  double mu = -std::numeric_limits<double>::infinity();
  bool has_zero = false;
  for (const auto& t : terms) {
    switch (sign_of(t.exponent)) {
      case -1: neg.push_back(&t); break;
      case 1: pos.push_back(&t); break;
      default:
        has_zero = true;
        mu = std::max(mu, t.coeff);
    }
  }
  if (!has_zero && (neg.empty() || pos.empty())) return std::nullopt;

  // Value at the crossing of a falling and a rising line.
  for (const Monomial* j : neg) {
    for (const Monomial* k : pos) {
      const double d = j->exponent - k->exponent;
      mu = std::max(mu, j->coeff * (-k->exponent / d) + k->coeff * (j->exponent / d));
    }
  }

  PolyMinimum out{MaxPlus{mu}, std::nullopt, std::nullopt};
  for (const Monomial* j : neg) {
    const double bound = (mu - j->coeff) / j->exponent;
    out.lo = out.lo ? std::max(*out.lo, bound) : bound;
  }
  for (const Monomial* k : pos) {
    const double bound = (mu - k->coeff) / k->exponent;
    out.hi = out.hi ? std::min(*out.hi, bound) : bound;
  }
  return out;
}

}  // namespace tropfit
