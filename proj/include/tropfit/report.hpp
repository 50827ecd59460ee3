#pragma once

/**
 * @file report.hpp
 * @brief Sample ingestion, the reference fixture, and machine-readable fit
 *        reports for the command-line tool.
 *
 * Reports carry every scalar in the semifield of their mode: max-plus values
 * as is, max-times values exp-mapped (coefficients, delta_star, trace). Numbers
 * are rounded to 12 significant digits on the way out.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tropfit/exponent_search.hpp"
#include "tropfit/fitting.hpp"

namespace tropfit {

/// Malformed input file or value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { maxplus, maxtimes };

std::string_view to_string(Mode m) noexcept;
/// Throws InputError on anything other than "maxplus" or "maxtimes".
Mode parse_mode(std::string_view s);

/// Two numeric columns, comma separated, optional single header line
/// (recognized by a non-numeric first row). Blank lines are skipped.
/// Throws InputError on a non-numeric cell, wrong arity, or no data rows.
std::vector<Sample> read_samples_csv(std::istream& in);
std::vector<Sample> read_samples_csv_file(const std::string& path);
void write_samples_csv(std::ostream& out, const std::vector<Sample>& samples);

/// f(x) = 3 (x - 1)^2 sin(x) + 1/4 at x_i = (i - 1) / 10, i = 1..21.
std::vector<Sample> fixture_samples();

/// Rounds to 12 significant digits.
double round12(double v);

struct PolyTerms {
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

struct FitReport {
  Mode mode = Mode::maxplus;
  std::size_t n = 0;
  std::optional<std::size_t> l;  ///< absent for polynomial fits
  PolyTerms numerator;
  std::optional<PolyTerms> denominator;
  double delta_star = 0.0;
  double chebyshev_error = 0.0;
  std::vector<TraceEntry> trace;
  std::string stop_reason;
};

/// Reports for fits computed in max-plus coordinates (log coordinates for
/// max-times data).
FitReport make_report(const PolyFit& fit, Mode mode);
FitReport make_report(const RationalFit& fit, Mode mode);

nlohmann::json to_json(const FitReport& r);
/// Throws InputError on a missing or mistyped field.
FitReport report_from_json(const nlohmann::json& j);

/// CSV form: `# key=value` summary lines, then term,index,exponent,coefficient rows.
std::string to_csv(const FitReport& r);

/// Value of the fitted function at x in the report's mode. Max-times requires x > 0.
double evaluate(const FitReport& r, double x);

/// steps >= 2 equally spaced points from `from` to `to`, with from < to.
/// Throws InputError on an invalid range.
std::vector<Sample> sample_curve(const FitReport& r, double from, double to, std::size_t steps);

}  // namespace tropfit
