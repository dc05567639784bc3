#include "fracdim/cli/serialize.hpp"

#include <fstream>
#include <ostream>

#include "fracdim/errors.hpp"
#include "fracdim/format.hpp"

namespace fracdim::cli {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double field(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw_domain(std::string("signal field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::size_t count_field(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  if (!j.at(key).is_number_unsigned()) {
    throw_domain(std::string("signal field '") + key + "' must be a non-negative integer");
  }
  return j.at(key).get<std::size_t>();
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw_domain("unknown signal field '" + key + "'");
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const SignalSpec& spec) {
  Json j;
  j["kind"] = std::string(kind_name(spec));
  std::visit(Overloaded{
                 [&](const Weierstrass& w) {
                   j["lambda"] = w.lambda;
                   j["s"] = w.s;
                   j["tail_tol"] = w.tail_tol;
                 },
                 [&](const Oscillation& o) { j["c"] = o.c; },
                 [&](const Affine& a) {
                   j["a"] = a.a;
                   j["b"] = a.b;
                 },
                 [&](const Constant& c) { j["c"] = c.c; },
                 [&](const PeriodicInterp& p) {
                   j["values"] = p.values;
                   j["knots"] = p.knots;
                 },
                 [&](const Alternating& a) {
                   j["c1"] = a.c1;
                   j["c2"] = a.c2;
                   j["knots"] = a.knots;
                 },
             },
             spec);
  return j;
}

SignalSpec signal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw_domain("signal JSON needs a string field 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  SignalSpec spec;
  if (kind == "weierstrass") {
    reject_unknown(j, {"lambda", "s", "tail_tol"});
    const Weierstrass d;
    spec = Weierstrass{field(j, "lambda", d.lambda), field(j, "s", d.s), field(j, "tail_tol", d.tail_tol)};
  } else if (kind == "oscillation") {
    reject_unknown(j, {"c"});
    spec = Oscillation{field(j, "c", Oscillation{}.c)};
  } else if (kind == "affine") {
    reject_unknown(j, {"a", "b"});
    spec = Affine{field(j, "a", Affine{}.a), field(j, "b", Affine{}.b)};
  } else if (kind == "constant") {
    reject_unknown(j, {"c"});
    spec = Constant{field(j, "c", Constant{}.c)};
  } else if (kind == "periodic") {
    reject_unknown(j, {"values", "knots"});
    PeriodicInterp p;
    if (j.contains("values")) {
      const Json& v = j.at("values");
      if (!v.is_array()) throw_domain("periodic 'values' must be an array");
      for (const auto& x : v) {
        if (!x.is_number()) throw_domain("periodic 'values' must hold numbers");
        p.values.push_back(x.get<double>());
      }
    } else {
      const auto ex = periodic_example_values();
      p.values.assign(ex.begin(), ex.end());
    }
    p.knots = count_field(j, "knots");
    spec = std::move(p);
  } else if (kind == "alternating") {
    reject_unknown(j, {"c1", "c2", "knots"});
    const Alternating d;
    spec = Alternating{field(j, "c1", d.c1), field(j, "c2", d.c2), count_field(j, "knots")};
  } else {
    throw_domain("unknown signal kind '" + kind + "'");
  }
  validate(spec);
  return spec;
}

std::vector<std::string> signal_names() {
  return {"weierstrass", "oscillation", "periodic", "alternating", "affine", "constant"};
}

SignalSpec named_signal(std::string_view name) {
  if (name == "weierstrass") return Weierstrass{};
  if (name == "oscillation") return Oscillation{};
  if (name == "affine") return Affine{};
  if (name == "constant") return Constant{};
  if (name == "alternating") return Alternating{};
  if (name == "periodic") {
    const auto ex = periodic_example_values();
    return PeriodicInterp{{ex.begin(), ex.end()}, 0};
  }
  throw_domain("unknown signal name '" + std::string(name) + "'");
}

SignalSpec parse_signal(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_domain("malformed signal JSON");
    return signal_from_json(j);
  }
  for (const auto& n : signal_names()) {
    if (text == n) return named_signal(text);
  }
  std::ifstream in{std::string(text)};
  if (!in) throw_domain("'" + std::string(text) + "' is neither a signal name nor a readable file");
  const Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw_domain("malformed signal JSON in " + std::string(text));
  return signal_from_json(j);
}

Json to_json(const HfdResult& r) {
  Json j;
  j["N"] = r.n;
  j["k_max"] = r.k_max;
  j["D"] = r.dimension;
  j["intercept"] = optional_number(r.intercept);
  j["I"] = r.index_set;
  Json z = Json::array();
  for (const auto& p : r.points) z.push_back({p.x, p.y});
  j["Z"] = std::move(z);
  j["L"] = r.lengths;
  return j;
}

Json to_json(const BoxCountResult& r) {
  Json j;
  j["delta"] = r.deltas;
  j["M"] = r.counts;
  j["A"] = r.areas;
  j["dim_estimate"] = r.dimension;
  j["intercept"] = r.intercept;
  j["in_range"] = r.in_range;
  return j;
}

Json to_json(const StabilityReport& r) {
  Json j;
  j["eps"] = r.eps;
  j["index"] = r.index;
  j["applied_eps"] = r.applied_eps;
  j["delta_D"] = r.delta_dimension;
  j["base"] = to_json(r.base);
  j["perturbed"] = to_json(r.perturbed);
  Json pts = Json::array();
  for (const auto& p : r.new_points) {
    pts.push_back({{"k", p.k}, {"log_inv_k", p.point.x}, {"log_L", p.point.y}, {"L", p.length}});
  }
  j["new_points"] = std::move(pts);
  j["lost_indices"] = r.lost_indices;
  return j;
}

void write_points_csv(std::ostream& out, const HfdResult& r) {
  out << "k,log_inv_k,log_L\n";
  for (std::size_t i = 0; i < r.index_set.size(); ++i) {
    out << r.index_set[i] << ',' << format_number(r.points[i].x) << ','
        << format_number(r.points[i].y) << '\n';
  }
}

void write_box_csv(std::ostream& out, const BoxCountResult& r) {
  out << "delta,M,A\n";
  for (std::size_t i = 0; i < r.deltas.size(); ++i) {
    out << format_number(r.deltas[i]) << ',' << r.counts[i] << ',' << format_number(r.areas[i])
        << '\n';
  }
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "N,V_nkm,V_PN,e_N\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_number(r.subseries_variation) << ','
        << format_number(r.partition_variation) << ',' << format_number(r.endpoint_correction)
        << '\n';
  }
}

void write_trace_csv(std::ostream& out, std::span<const DivergenceRow> rows) {
  out << "eps,D_eps,min_log_L\n";
  for (const auto& r : rows) {
    out << format_number(r.eps) << ',' << format_number(r.dimension) << ','
        << (r.min_log_length ? format_number(*r.min_log_length) : std::string()) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "N,D\n";
  for (const auto& r : rows) out << r.n << ',' << format_number(r.dimension) << '\n';
}

}  // namespace fracdim::cli
