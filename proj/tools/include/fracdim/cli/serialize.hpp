#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fracdim/geometry.hpp"
#include "fracdim/higuchi.hpp"
#include "fracdim/signals.hpp"
#include "fracdim/stability.hpp"
#include "fracdim/variation.hpp"

namespace fracdim::cli {

using Json = nlohmann::ordered_json;

Json to_json(const SignalSpec& spec);
SignalSpec signal_from_json(const Json& j);

// Accepts inline JSON, a named signal, or a path to a JSON file.
SignalSpec parse_signal(std::string_view text);
std::vector<std::string> signal_names();
SignalSpec named_signal(std::string_view name);

Json to_json(const HfdResult& r);
Json to_json(const BoxCountResult& r);
Json to_json(const StabilityReport& r);

void write_points_csv(std::ostream& out, const HfdResult& r);
void write_box_csv(std::ostream& out, const BoxCountResult& r);
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
void write_trace_csv(std::ostream& out, std::span<const DivergenceRow> rows);

struct SweepRow {
  std::size_t n;
  std::size_t k_max;
  double dimension;
};
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace fracdim::cli
