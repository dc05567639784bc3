#include "fracdim/series.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fracdim/errors.hpp"
#include "fracdim/format.hpp"

namespace fracdim {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("a time series needs at least two samples");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("sample " + std::to_string(i + 1) + " is not finite");
    }
  }
}

double TimeSeries::at(std::size_t j) const {
  if (j < 1 || j > values_.size()) {
    throw IndexError("index " + std::to_string(j) + " outside 1.." +
                     std::to_string(values_.size()));
  }
  return values_[j - 1];
}

double TimeSeries::grid(std::size_t j) const {
  if (j < 1 || j > values_.size()) {
    throw IndexError("index " + std::to_string(j) + " outside 1.." +
                     std::to_string(values_.size()));
  }
  return grid_point(j, values_.size());
}

TimeSeries sample(const SignalSpec& spec, std::size_t n) {
  if (n < 2) throw AdmissibilityError("sampling needs N >= 2");
  validate(spec);
  if (const auto* p = std::get_if<PeriodicInterp>(&spec); p && (p->knots == 0 || p->knots == n)) {
    return make_periodic_series(n, p->values);
  }
  if (const auto* a = std::get_if<Alternating>(&spec); a && (a->knots == 0 || a->knots == n)) {
    return make_alternating_series(n, a->c1, a->c2);
  }
  const SignalFunction f = make_function(spec);
  std::vector<double> out(n);
  for (std::size_t j = 1; j <= n; ++j) out[j - 1] = f(grid_point(j, n));
  return TimeSeries(std::move(out));
}

TimeSeries perturb(const TimeSeries& ts, std::size_t j, double eps) {
  if (j < 1 || j > ts.size()) {
    throw IndexError("perturbation index " + std::to_string(j) + " outside 1.." +
                     std::to_string(ts.size()));
  }
  std::vector<double> values(ts.values().begin(), ts.values().end());
  values[j - 1] += eps;
  return TimeSeries(std::move(values));
}

void write_csv(std::ostream& out, const TimeSeries& ts) {
  out << "j,t,x\n";
  for (std::size_t j = 1; j <= ts.size(); ++j) {
    out << j << ',' << format_number(ts.grid(j)) << ',' << format_number(ts.at(j)) << '\n';
  }
}

TimeSeries read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty series CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "j,t,x") throw DomainError("series CSV must start with header j,t,x");

  std::vector<double> values;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    std::istringstream fields(line);
    std::string j_text, t_text, x_text;
    if (!std::getline(fields, j_text, ',') || !std::getline(fields, t_text, ',') ||
        !std::getline(fields, x_text)) {
      throw DomainError("malformed series CSV row " + std::to_string(row));
    }
    std::size_t j = 0;
    auto [j_end, j_err] = std::from_chars(j_text.data(), j_text.data() + j_text.size(), j);
    if (j_err != std::errc() || j_end != j_text.data() + j_text.size() || j != row) {
      throw DomainError("series CSV rows must have j = 1..N in order (row " +
                        std::to_string(row) + ")");
    }
    double x = 0.0;
    auto [x_end, x_err] = std::from_chars(x_text.data(), x_text.data() + x_text.size(), x);
    if (x_err != std::errc() || x_end != x_text.data() + x_text.size()) {
      throw DomainError("unparsable value in series CSV row " + std::to_string(row));
    }
    values.push_back(x);
  }
  return TimeSeries(std::move(values));
}

}  // namespace fracdim
