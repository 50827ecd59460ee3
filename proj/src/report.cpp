#include "tropfit/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tropfit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    cells.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double map_scalar(double maxplus_value, Mode mode) {
  return mode == Mode::maxtimes ? std::exp(maxplus_value) : maxplus_value;
}

PolyTerms make_terms(const std::vector<double>& exponents, const std::vector<double>& coeffs, Mode mode) {
  PolyTerms t;
  for (double e : exponents) t.exponents.push_back(round12(e));
  for (double c : coeffs) t.coefficients.push_back(round12(map_scalar(c, mode)));
  return t;
}

PuiseuxPoly terms_to_poly(const PolyTerms& t, Mode mode) {
  if (t.exponents.empty() || t.exponents.size() != t.coefficients.size()) {
    throw InputError("report: exponent and coefficient lists must be nonempty and of equal length");
  }
  if (mode == Mode::maxtimes) return from_maxtimes(t.exponents, t.coefficients);
  return PuiseuxPoly(t.exponents, std::span<const double>(t.coefficients));
}

nlohmann::json terms_json(const PolyTerms& t) {
  return {{"exponents", t.exponents}, {"coefficients", t.coefficients}};
}

PolyTerms terms_from_json(const nlohmann::json& j) {
  PolyTerms t;
  t.exponents = j.at("exponents").get<std::vector<double>>();
  t.coefficients = j.at("coefficients").get<std::vector<double>>();
  return t;
}

}  // namespace

std::string_view to_string(Mode m) noexcept { return m == Mode::maxtimes ? "maxtimes" : "maxplus"; }

Mode parse_mode(std::string_view s) {
  if (s == "maxplus") return Mode::maxplus;
  if (s == "maxtimes") return Mode::maxtimes;
  throw InputError("unknown mode '" + std::string(s) + "' (expected maxplus or maxtimes)");
}

std::vector<Sample> read_samples_csv(std::istream& in) {
  std::vector<Sample> out;
  std::string line;
  std::size_t lineno = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto cells = split_commas(body);
    if (cells.size() != 2) {
      throw InputError("line " + std::to_string(lineno) + ": expected 2 columns, found " +
                       std::to_string(cells.size()));
    }
    const auto x = parse_number(cells[0]);
    const auto y = parse_number(cells[1]);
    if (!x || !y) {
      if (first_row) {
        first_row = false;
        continue;  // header
      }
      throw InputError("line " + std::to_string(lineno) + ": non-numeric cell");
    }
    first_row = false;
    out.push_back({*x, *y});
  }
  if (out.empty()) throw InputError("no data rows");
  return out;
}

std::vector<Sample> read_samples_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_samples_csv(in);
}

void write_samples_csv(std::ostream& out, const std::vector<Sample>& samples) {
  out << "x,y\n";
  for (const auto& s : samples) out << shortest(s.x) << ',' << shortest(s.y) << '\n';
}

std::vector<Sample> fixture_samples() {
  std::vector<Sample> pts;
  for (int i = 1; i <= 21; ++i) {
    const double x = (i - 1) / 10.0;
    pts.push_back({x, 3.0 * (x - 1.0) * (x - 1.0) * std::sin(x) + 0.25});
  }
  return pts;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

FitReport make_report(const PolyFit& fit, Mode mode) {
  FitReport r;
  r.mode = mode;
  r.n = fit.exponents.size();
  r.numerator = make_terms(fit.exponents, fit.coefficients, mode);
  const double delta = fit.delta_star.value();
  r.delta_star = round12(map_scalar(delta, mode));
  r.chebyshev_error = round12(map_scalar(0.5 * delta, mode));
  r.trace.push_back({1, r.delta_star});
  r.stop_reason = "none";
  return r;
}

FitReport make_report(const RationalFit& fit, Mode mode) {
  FitReport r;
  r.mode = mode;
  r.n = fit.num_exponents.size();
  r.l = fit.den_exponents.size();
  r.numerator = make_terms(fit.num_exponents, fit.num_coefficients, mode);
  r.denominator = make_terms(fit.den_exponents, fit.den_coefficients, mode);
  const double delta = fit.delta_star.value();
  r.delta_star = round12(map_scalar(delta, mode));
  r.chebyshev_error = round12(map_scalar(0.5 * delta, mode));
  for (const auto& t : fit.trace) r.trace.push_back({t.k, round12(map_scalar(t.delta, mode))});
  r.stop_reason = std::string(to_string(fit.stop_reason));
  return r;
}

nlohmann::json to_json(const FitReport& r) {
  nlohmann::json j;
  j["mode"] = std::string(to_string(r.mode));
  j["n"] = r.n;
  if (r.l) j["l"] = *r.l;
  j["numerator"] = terms_json(r.numerator);
  if (r.denominator) j["denominator"] = terms_json(*r.denominator);
  j["delta_star"] = r.delta_star;
  j["chebyshev_error"] = r.chebyshev_error;
  auto trace = nlohmann::json::array();
  for (const auto& t : r.trace) trace.push_back({{"k", t.k}, {"delta", t.delta}});
  j["trace"] = std::move(trace);
  j["stop_reason"] = r.stop_reason;
  return j;
}

FitReport report_from_json(const nlohmann::json& j) {
  try {
    FitReport r;
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.n = j.at("n").get<std::size_t>();
    if (j.contains("l")) r.l = j.at("l").get<std::size_t>();
    r.numerator = terms_from_json(j.at("numerator"));
    if (j.contains("denominator")) r.denominator = terms_from_json(j.at("denominator"));
    r.delta_star = j.at("delta_star").get<double>();
    r.chebyshev_error = j.at("chebyshev_error").get<double>();
    for (const auto& t : j.at("trace")) r.trace.push_back({t.at("k").get<std::size_t>(), t.at("delta").get<double>()});
    r.stop_reason = j.at("stop_reason").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const FitReport& r) {
  std::ostringstream os;
  os << "# mode=" << to_string(r.mode) << '\n';
  os << "# n=" << r.n << '\n';
  if (r.l) os << "# l=" << *r.l << '\n';
  os << "# delta_star=" << shortest(r.delta_star) << '\n';
  os << "# chebyshev_error=" << shortest(r.chebyshev_error) << '\n';
  os << "# stop_reason=" << r.stop_reason << '\n';
  os << "term,index,exponent,coefficient\n";
  auto rows = [&os](const char* name, const PolyTerms& t) {
    for (std::size_t j = 0; j < t.exponents.size(); ++j) {
      os << name << ',' << j + 1 << ',' << shortest(t.exponents[j]) << ',' << shortest(t.coefficients[j]) << '\n';
    }
  };
  rows("numerator", r.numerator);
  if (r.denominator) rows("denominator", *r.denominator);
  return os.str();
}

double evaluate(const FitReport& r, double x) {
  const PuiseuxPoly num = terms_to_poly(r.numerator, r.mode);
  if (r.mode == Mode::maxtimes) {
    if (!(x > 0.0)) throw InputError("max-times curves are defined for x > 0 only");
    double v = eval_maxtimes(num, x);
    if (r.denominator) v /= eval_maxtimes(terms_to_poly(*r.denominator, r.mode), x);
    return v;
  }
  double v = num.evaluate(x);
  if (r.denominator) v -= terms_to_poly(*r.denominator, r.mode).evaluate(x);
  return v;
}

std::vector<Sample> sample_curve(const FitReport& r, double from, double to, std::size_t steps) {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
    throw InputError("sample: require finite from < to");
  }
  if (steps < 2) throw InputError("sample: require steps >= 2");
  std::vector<Sample> out;
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double x = k + 1 == steps ? to : from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1);
    out.push_back({x, evaluate(r, x)});
  }
  return out;
}

}  // namespace tropfit
