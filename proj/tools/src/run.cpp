#include "fracdim/cli/run.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "fracdim/cli/serialize.hpp"
#include "fracdim/cli/verify.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/geometry.hpp"
#include "fracdim/higuchi.hpp"
#include "fracdim/series.hpp"
#include "fracdim/stability.hpp"
#include "fracdim/variation.hpp"

namespace fracdim::cli {
namespace {

struct Options {
  std::string signal;
  std::string input;
  std::size_t n = 0;
  std::size_t k_max = 0;
  std::string kmax_rule = "fixed";
  double eps = kDefaultPerturbation;
  std::vector<double> eps_grid = {1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12};
  std::size_t index = kDefaultPerturbationIndex;
  double delta_min = kDefaultDeltaMin;
  double delta_max = kDefaultDeltaMax;
  std::size_t levels = kDefaultDeltaLevels;
  std::size_t samples = kDefaultSamplesPerColumn;
  std::size_t k = 2;
  std::size_t m = 1;
  std::vector<std::size_t> n_grid = {100, 1000, 10000};
  std::size_t tv_levels = 10;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t n_step = 1;
  unsigned threads = 0;
  std::string format;
  std::string out;
  std::vector<int> claims;
  std::string golden_dir;
  bool write_goldens = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t resolve_k_max(const Options& o, std::size_t n) {
  if (o.kmax_rule == "half") return max_admissible_k(n);
  if (o.k_max == 0) throw UsageError("--kmax is required unless --kmax-rule half");
  return o.k_max;
}

TimeSeries load_series(const Options& o, std::istream& in) {
  if (o.signal.empty() == o.input.empty()) {
    throw UsageError("give exactly one of --signal or --input");
  }
  if (!o.input.empty()) {
    if (o.input == "-") return read_csv(in);
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot read " + o.input);
    return read_csv(file);
  }
  if (o.n == 0) throw UsageError("--n is required with --signal");
  return sample(parse_signal(o.signal), o.n);
}

SignalSpec require_signal(const Options& o) {
  if (o.signal.empty()) throw UsageError("--signal is required");
  return parse_signal(o.signal);
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  throw UsageError("unsupported --format '" + o.format + "' for this command");
}

bool wants(const Options& o, const char* format, const char* fallback) {
  return (o.format.empty() ? std::string(fallback) : o.format) == format;
}

void cmd_gen(const Options& o, std::ostream& out) {
  check_format(o, {"csv"});
  if (o.n == 0) throw UsageError("--n is required");
  write_csv(out, sample(require_signal(o), o.n));
}

void cmd_hfd(const Options& o, std::istream& in, std::ostream& out) {
  check_format(o, {"json", "csv"});
  const TimeSeries ts = load_series(o, in);
  const auto pair = AdmissiblePair::check(ts.size(), resolve_k_max(o, ts.size()));
  const HfdResult r = hfd(ts, pair.k_max);
  if (wants(o, "csv", "json")) {
    write_points_csv(out, r);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
}

void cmd_boxdim(const Options& o, std::ostream& out) {
  check_format(o, {"json", "csv"});
  const BoxCountResult r =
      box_dim_estimate(require_signal(o), o.delta_min, o.delta_max, o.levels, o.samples);
  if (wants(o, "json", "csv")) {
    out << to_json(r).dump(2) << '\n';
  } else {
    write_box_csv(out, r);
  }
}

void cmd_tv(const Options& o, std::ostream& out) {
  check_format(o, {"json", "csv"});
  const SignalFunction f = make_function(require_signal(o));
  const auto rows = variation_convergence_check(f, o.k, o.m, o.n_grid);
  if (!wants(o, "json", "csv")) {
    write_convergence_csv(out, rows);
    return;
  }
  const VariationTrace tv = total_variation_estimate(f, o.tv_levels);
  Json j;
  j["k"] = o.k;
  j["m"] = o.m;
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"N", r.n},
                     {"V_nkm", r.subseries_variation},
                     {"V_PN", r.partition_variation},
                     {"e_N", r.endpoint_correction}});
  }
  j["rows"] = std::move(table);
  j["total_variation"] = {{"intervals", tv.intervals}, {"V", tv.trace}, {"estimate", tv.estimate}};
  out << j.dump(2) << '\n';
}

void cmd_stability(const Options& o, std::istream& in, std::ostream& out) {
  check_format(o, {"json", "csv"});
  const TimeSeries ts = load_series(o, in);
  const auto pair = AdmissiblePair::check(ts.size(), resolve_k_max(o, ts.size()));
  if (wants(o, "csv", "json")) {
    write_trace_csv(out, divergence_trace(ts, pair.k_max, o.index, o.eps_grid));
  } else {
    out << to_json(stability_report(ts, pair.k_max, o.index, o.eps)).dump(2) << '\n';
  }
}

void cmd_sweep(const Options& o, std::ostream& out) {
  check_format(o, {"csv"});
  const SignalSpec spec = require_signal(o);
  if (o.n_min < 2 || o.n_max < o.n_min || o.n_step == 0) {
    throw UsageError("sweep needs 2 <= --n-min <= --n-max and --n-step >= 1");
  }
  std::vector<SweepRow> rows;
  for (std::size_t n = o.n_min; n <= o.n_max; n += o.n_step) {
    rows.push_back({n, AdmissiblePair::check(n, resolve_k_max(o, n)).k_max, 0.0});
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(rows.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].dimension = hfd(sample(spec, rows[i].n), rows[i].k_max).dimension;
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned count =
      static_cast<unsigned>(std::min<std::size_t>(o.threads == 0 ? hw : o.threads, rows.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  write_sweep_csv(out, rows);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::filesystem::path dir =
      o.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(o.golden_dir);
  if (o.write_goldens) {
    write_goldens(dir);
    out << "wrote " << (dir / "verify.json").string() << '\n';
    return 0;
  }
  const auto results = run_claims({o.claims, dir});
  out << format_report(results);
  return all_pass(results) ? 0 : 1;
}

void add_signal(CLI::App* app, Options& o) {
  app->add_option("--signal", o.signal, "signal as inline JSON, a name, or a JSON file");
}

void add_series_source(CLI::App* app, Options& o) {
  add_signal(app, o);
  app->add_option("--input", o.input, "series CSV (j,t,x); '-' reads stdin");
  app->add_option("--n", o.n, "number of samples N");
}

void add_kmax(CLI::App* app, Options& o) {
  app->add_option("--kmax", o.k_max, "largest k");
  app->add_option("--kmax-rule", o.kmax_rule, "fixed uses --kmax; half uses ceil(N/2)")
      ->check(CLI::IsMember({"fixed", "half"}));
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "csv or json");
  app->add_option("--out", o.out, "output file; stdout when omitted or '-'");
}

}  // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app("Higuchi fractal dimension, box counting and total variation", "fracdim");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "sample a signal to CSV");
  add_signal(gen, o);
  gen->add_option("--n", o.n, "number of samples N");
  add_output(gen, o);

  auto* hfd_cmd = app.add_subcommand("hfd", "Higuchi fractal dimension of a series");
  add_series_source(hfd_cmd, o);
  add_kmax(hfd_cmd, o);
  add_output(hfd_cmd, o);

  auto* box = app.add_subcommand("boxdim", "box-counting dimension of a signal graph");
  add_signal(box, o);
  box->add_option("--delta-min", o.delta_min, "smallest mesh size");
  box->add_option("--delta-max", o.delta_max, "largest mesh size");
  box->add_option("--levels", o.levels, "number of mesh sizes");
  box->add_option("--samples", o.samples, "samples per mesh column");
  add_output(box, o);

  auto* tv = app.add_subcommand("tv", "subseries variation against partition variation");
  add_signal(tv, o);
  tv->add_option("--k", o.k, "subseries step k");
  tv->add_option("--m", o.m, "subseries offset m");
  tv->add_option("--n-grid", o.n_grid, "sample counts N")->delimiter(',');
  tv->add_option("--levels", o.tv_levels, "uniform refinement levels for the json trace");
  add_output(tv, o);

  auto* stab = app.add_subcommand("stability", "effect of perturbing one sample");
  add_series_source(stab, o);
  add_kmax(stab, o);
  stab->add_option("--eps", o.eps, "perturbation size");
  stab->add_option("--eps-grid", o.eps_grid, "decreasing eps values for the csv trace")
      ->delimiter(',');
  stab->add_option("--index", o.index, "perturbed sample j (1-based)");
  add_output(stab, o);

  auto* sweep = app.add_subcommand("sweep", "HFD over a range of N");
  add_signal(sweep, o);
  sweep->add_option("--n-min", o.n_min, "first N")->required();
  sweep->add_option("--n-max", o.n_max, "last N")->required();
  sweep->add_option("--n-step", o.n_step, "N increment");
  sweep->add_option("--threads", o.threads, "worker threads; 0 uses all cores");
  add_kmax(sweep, o);
  add_output(sweep, o);

  auto* verify = app.add_subcommand("verify", "run the acceptance claims");
  verify->add_option("--claim", o.claims, "claim ids to run")->delimiter(',');
  verify->add_option("--golden-dir", o.golden_dir, "directory holding verify.json");
  verify->add_flag("--write-goldens", o.write_goldens, "regenerate verify.json and exit");
  add_output(verify, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream buffer;
    int code = 0;
    if (gen->parsed()) cmd_gen(o, buffer);
    if (hfd_cmd->parsed()) cmd_hfd(o, in, buffer);
    if (box->parsed()) cmd_boxdim(o, buffer);
    if (tv->parsed()) cmd_tv(o, buffer);
    if (stab->parsed()) cmd_stability(o, in, buffer);
    if (sweep->parsed()) cmd_sweep(o, buffer);
    if (verify->parsed()) code = cmd_verify(o, buffer);
    if (o.out.empty() || o.out == "-") {
      out << buffer.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file || !(file << buffer.str())) throw UsageError("cannot write " + o.out);
    }
    return code;
  } catch (const std::exception& e) {
    err << "fracdim: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cin, out, err);
}

}  // namespace fracdim::cli
