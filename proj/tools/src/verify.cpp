#include "fracdim/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "fracdim/cli/serialize.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/format.hpp"
#include "fracdim/geometry.hpp"
#include "fracdim/higuchi.hpp"
#include "fracdim/series.hpp"
#include "fracdim/signals.hpp"
#include "fracdim/stability.hpp"
#include "fracdim/variation.hpp"

#ifndef FRACDIM_GOLDEN_DIR
#define FRACDIM_GOLDEN_DIR "goldens"
#endif

namespace fracdim::cli {
namespace {

constexpr std::uint64_t kSeed = 0x5eed'f00d'2024ULL;
constexpr double kGoldenTolerance = 1e-9;
constexpr const char* kGoldenFile = "verify.json";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Rng {
 public:
  explicit Rng(std::uint64_t salt) : engine_(kSeed ^ salt) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t integer(std::size_t lo, std::size_t hi) { return lo + engine_() % (hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Goldens {
  std::optional<Json> data;
  std::string error;

  std::optional<double> get(const std::string& a, const std::string& b = {}) const {
    if (!data) return std::nullopt;
    const Json* node = &*data;
    for (const auto& key : {a, b}) {
      if (key.empty()) continue;
      if (!node->is_object() || !node->contains(key)) return std::nullopt;
      node = &node->at(key);
    }
    if (!node->is_number()) return std::nullopt;
    return node->get<double>();
  }
};

Goldens load_goldens(const std::filesystem::path& dir) {
  Goldens g;
  const auto path = dir / kGoldenFile;
  std::ifstream in(path);
  if (!in) {
    g.error = "missing " + path.string();
    return g;
  }
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    g.error = "malformed " + path.string();
    return g;
  }
  g.data = std::move(j);
  return g;
}

// Compares against a frozen value; appends the outcome to the result.
bool golden_match(ClaimResult& r, const Goldens& g, double value, const std::string& a,
                  const std::string& b = {}) {
  const auto expected = g.get(a, b);
  const std::string label = b.empty() ? a : a + "." + b;
  if (!expected) {
    r.got += "; golden " + label + " unavailable" + (g.error.empty() ? "" : " (" + g.error + ")");
    return false;
  }
  const bool ok = std::abs(value - *expected) <= kGoldenTolerance;
  if (!ok) r.got += "; golden " + label + " = " + format_number(*expected);
  return ok;
}

TimeSeries periodic_example() {
  const auto ex = periodic_example_values();
  return sample(PeriodicInterp{{ex.begin(), ex.end()}, 0}, 150);
}

TimeSeries alternating_example() { return sample(Alternating{0.4, 0.6, 0}, 100); }

const std::size_t kOscillationGrid[] = {100, 300, 700};

ClaimResult claim_affine() {
  ClaimResult r{1, "affine exactness", "L(k) = |a|/k, D = 1", "", "1e-12 rel, 1e-9 abs", false};
  Rng rng(1);
  double worst_rel = 0.0;
  double worst_d = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.integer(2, 2000);
    const std::size_t k_max = rng.integer(1, max_admissible_k(n));
    double a = 0.0;
    while (a == 0.0) a = rng.uniform(-10.0, 10.0);
    const double b = rng.uniform(-10.0, 10.0);
    const HfdResult h = hfd(sample(Affine{a, b}, n), k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
      const double exact = std::abs(a) / static_cast<double>(k);
      worst_rel = std::max(worst_rel, std::abs(h.lengths[k - 1] - exact) / exact);
    }
    worst_d = std::max(worst_d, std::abs(h.dimension - 1.0));
  }
  r.got = "max rel err " + num(worst_rel) + ", max |D-1| " + num(worst_d);
  r.pass = worst_rel <= 1e-12 && worst_d <= 1e-9;
  return r;
}

ClaimResult claim_constant() {
  ClaimResult r{2, "constant fallback", "D = 1, I empty", "", "exact", false};
  Rng rng(2);
  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (std::size_t n = 2; n <= 64; ++n) {
    const double c = rng.uniform(-5.0, 5.0);
    const TimeSeries ts = sample(Constant{c}, n);
    for (std::size_t k_max = 1; k_max <= max_admissible_k(n); ++k_max) {
      const HfdResult h = hfd(ts, k_max);
      ++pairs;
      if (!(h.dimension == 1.0 && h.index_set.empty() && !h.intercept)) ++bad;
    }
  }
  r.got = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs";
  r.pass = bad == 0;
  return r;
}

ClaimResult claim_proportional() {
  ClaimResult r{3, "proportionality oracle", "D = D0 for L(k) = c k^-D0", "", "1e-10 abs", false};
  Rng rng(3);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k_max = rng.integer(2, 200);
    const double c = std::exp(rng.uniform(-5.0, 5.0));
    const double d0 = rng.uniform(1.0, 2.0);
    std::vector<double> lengths(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
      lengths[k - 1] = c * std::pow(static_cast<double>(k), -d0);
    }
    const HfdResult h = fit_lengths(2 * k_max, std::move(lengths));
    worst = std::max(worst, std::abs(h.dimension - d0));
  }
  r.got = "max |D-D0| " + num(worst);
  r.pass = worst <= 1e-10;
  return r;
}

ClaimResult claim_alternating() {
  ClaimResult r{4, "alternating closed form", "L(1) = 19.8, L(odd k) = 19.8/k^2, L(even k) = 0, D = 2",
                "", "1e-12 rel, 1e-9 abs", false};
  const HfdResult h = hfd(alternating_example(), 50);
  const double scale = 99.0 * std::abs(0.4 - 0.6);
  double worst_rel = 0.0;
  bool even_zero = true;
  for (std::size_t k = 1; k <= 50; ++k) {
    const double l = h.lengths[k - 1];
    if (k % 2 == 0) {
      even_zero = even_zero && l == 0.0;
    } else {
      const double exact = scale / static_cast<double>(k * k);
      worst_rel = std::max(worst_rel, std::abs(l - exact) / exact);
    }
  }
  r.got = "L(1) = " + num(h.lengths[0]) + ", max rel err " + num(worst_rel) +
          (even_zero ? ", even k zero" : ", even k nonzero") + ", D = " + format_number(h.dimension);
  r.pass = worst_rel <= 1e-12 && even_zero && std::abs(h.dimension - 2.0) <= 1e-9;
  return r;
}

ClaimResult claim_mismatch() {
  ClaimResult r{5, "box dimension 1 vs HFD 2", "dim_B = 1, HFD = 2", "", "0.05 abs, 1e-9 abs", false};
  const double h = 1.0 / 99.0;
  const BoxCountResult box =
      box_dim_estimate(Alternating{0.4, 0.6, 100}, 1e-3 * h, 1e-1 * h, kDefaultDeltaLevels,
                       kDefaultSamplesPerColumn);
  const double d = hfd(alternating_example(), 50).dimension;
  r.got = "dim_B = " + num(box.dimension) + ", HFD = " + format_number(d);
  r.tolerance += " (delta in [1e-3, 1e-1]/(N-1))";
  r.pass = std::abs(box.dimension - 1.0) <= 0.05 && std::abs(d - 2.0) <= 1e-9;
  return r;
}

ClaimResult claim_geometric() {
  ClaimResult r{6, "2 - L equals HFD", "|2 - L - D| = 0", "", "1e-10 abs", false};
  Rng rng(6);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.integer(10, 400);
    const std::size_t k_max = rng.integer(2, max_admissible_k(n));
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    const TimeSeries ts(std::move(x));
    worst = std::max(worst, std::abs(geometric_hfd(ts, k_max) - hfd(ts, k_max).dimension));
  }
  r.got = "max gap " + num(worst) + " over 200 series";
  r.pass = worst < 1e-10;
  return r;
}

ClaimResult claim_periodic_instability(const Goldens& g) {
  ClaimResult r{7, "periodic example instability", "D = 1.9, D^eps = 3.5, D^eps > 2", "",
                "0.15 abs", false};
  const StabilityReport s = stability_report(periodic_example(), 30, 1, 1e-10);
  const double d = s.base.dimension;
  const double de = s.perturbed.dimension;
  r.got = "D = " + num(d) + ", D^eps = " + num(de);
  const bool g1 = golden_match(r, g, d, "periodic_perturbed", "base");
  const bool g2 = golden_match(r, g, de, "periodic_perturbed", "perturbed");
  r.pass = std::abs(d - 1.9) <= 0.15 && std::abs(de - 3.5) <= 0.15 && de > 2.0 && g1 && g2;
  return r;
}

ClaimResult claim_alternating_instability(const Goldens& g) {
  ClaimResult r{8, "alternating instability", "D^eps = 2.7, D^eps > 2", "", "0.15 abs", false};
  const StabilityReport s = stability_report(alternating_example(), 50, 1, 1e-10);
  const double de = s.perturbed.dimension;
  r.got = "D^eps = " + num(de);
  const bool g1 = golden_match(r, g, s.base.dimension, "alternating_perturbed", "base");
  const bool g2 = golden_match(r, g, de, "alternating_perturbed", "perturbed");
  r.pass = std::abs(de - 2.7) <= 0.15 && de > 2.0 && g1 && g2;
  return r;
}

ClaimResult claim_length_law() {
  ClaimResult r{9, "perturbed length law", "L^eps(k) = C_{N,k,1} eps / k^2 at resurrected k", "",
                "1e-15 rel", false};
  double worst = 0.0;
  std::size_t count = 0;
  const std::pair<TimeSeries, std::size_t> inputs[] = {{periodic_example(), 30}, {alternating_example(), 50}};
  for (const auto& [ts, k_max] : inputs) {
    const StabilityReport s = stability_report(ts, k_max, 1, 1e-10);
    for (const auto& p : s.new_points) {
      const double predicted = perturbed_length_closed_form(ts.size(), p.k, s.applied_eps);
      worst = std::max(worst, std::abs(p.length - predicted) / predicted);
      ++count;
    }
  }
  r.got = "max rel err " + num(worst) + " over " + std::to_string(count) + " indices";
  r.pass = count > 0 && worst <= 1e-15;
  return r;
}

ClaimResult claim_oscillation(const Goldens& g) {
  ClaimResult r{10, "oscillation convergence", "|D-1| decreasing, < 0.1 at N = 700", "",
                "strict order, 0.1 abs", false};
  std::vector<double> dims;
  for (std::size_t n : kOscillationGrid) dims.push_back(hfd(sample(Oscillation{20.0}, n), 2).dimension);
  std::vector<double> dev;
  for (double d : dims) {
    dev.push_back(std::abs(d - 1.0));
    r.got += (r.got.empty() ? "|D-1| = " : ", ") + num(dev.back());
  }
  bool goldens = true;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    goldens = golden_match(r, g, dims[i], "oscillation_k2", std::to_string(kOscillationGrid[i])) && goldens;
  }
  r.pass = dev[0] > dev[1] && dev[1] > dev[2] && dev[2] < 0.1 && goldens;
  return r;
}

ClaimResult claim_weierstrass(const Goldens& g) {
  ClaimResult r{11, "Weierstrass dimension", "D = 1.7 at N = 1000, k_max = 500", "",
                "0.2 abs, 5 s", false};
  const auto start = std::chrono::steady_clock::now();
  const double d = hfd(sample(Weierstrass{5.0, 1.7}, 1000), 500).dimension;
  const double elapsed = seconds_since(start);
  r.got = "D = " + num(d);
  if (elapsed > 5.0) r.got += "; over time budget";
  const bool gm = golden_match(r, g, d, "weierstrass_half");
  r.pass = std::abs(d - 1.7) <= 0.2 && elapsed <= 5.0 && gm;
  return r;
}

ClaimResult claim_decomposition() {
  ClaimResult r{12, "partition decomposition and convergence",
                "V_P = V_{N,k,m} + e_N; V_{N,2,1} differences shrinking, last < 1e-3", "",
                "1e-12 abs, 1e-3 at N = 1e5, 10 s", false};
  const auto start = std::chrono::steady_clock::now();
  const Oscillation f{20.0};
  const std::size_t grid[] = {100, 1000, 10000};
  double worst = 0.0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= k; ++m) {
      for (const auto& row : variation_convergence_check(f, k, m, grid)) {
        worst = std::max(worst, std::abs(row.residual));
      }
    }
  }
  const std::size_t tv_grid[] = {100, 1000, 10000, 100000};
  const auto rows = variation_convergence_check(f, 2, 1, tv_grid);
  std::vector<double> diffs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    diffs.push_back(std::abs(rows[i].subseries_variation - rows[i - 1].subseries_variation));
  }
  bool shrinking = true;
  for (std::size_t i = 1; i < diffs.size(); ++i) shrinking = shrinking && diffs[i] < diffs[i - 1];
  const double elapsed = seconds_since(start);
  r.got = "max residual " + num(worst) + "; differences";
  for (double d : diffs) r.got += " " + num(d);
  if (elapsed > 10.0) r.got += "; over time budget";
  r.pass = worst <= 1e-12 && shrinking && diffs.back() < 1e-3 && elapsed <= 10.0;
  return r;
}

ClaimResult claim_refinement() {
  ClaimResult r{13, "refinement monotonicity", "V_P never decreases on insertion", "", "exact",
                false};
  Rng rng(13);
  const std::vector<SignalFunction> functions = {
      make_function(Oscillation{20.0}),
      make_function(Weierstrass{5.0, 1.7}),
      make_function(Alternating{0.4, 0.6, 20}),
      make_function(Affine{-3.0, 1.0}),
  };
  std::size_t decreases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto& f = functions[static_cast<std::size_t>(trial) % functions.size()];
    std::set<double> pts = {0.0, 1.0};
    const std::size_t inner = rng.integer(0, 60);
    while (pts.size() < inner + 2) pts.insert(rng.unit());
    const Partition p(std::vector<double>(pts.begin(), pts.end()));
    double t = rng.unit();
    while (pts.count(t) != 0) t = rng.unit();
    if (variation_over_partition(f, p.with_point(t)) < variation_over_partition(f, p)) ++decreases;
  }
  r.got = std::to_string(decreases) + " decreases in 500 trials";
  r.pass = decreases == 0;
  return r;
}

ClaimResult run_one(int id, const Goldens& g) {
  try {
    switch (id) {
      case 1: return claim_affine();
      case 2: return claim_constant();
      case 3: return claim_proportional();
      case 4: return claim_alternating();
      case 5: return claim_mismatch();
      case 6: return claim_geometric();
      case 7: return claim_periodic_instability(g);
      case 8: return claim_alternating_instability(g);
      case 9: return claim_length_law();
      case 10: return claim_oscillation(g);
      case 11: return claim_weierstrass(g);
      case 12: return claim_decomposition();
      case 13: return claim_refinement();
      default: break;
    }
  } catch (const std::exception& e) {
    return {id, "claim " + std::to_string(id), "-", std::string("error: ") + e.what(), "-", false};
  }
  throw_domain("no claim with id " + std::to_string(id));
}

std::vector<ClaimResult> run_base(const Goldens& g) {
  std::vector<ClaimResult> out;
  for (int id = 1; id < kClaimCount; ++id) out.push_back(run_one(id, g));
  return out;
}

}  // namespace

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("FRACDIM_GOLDEN_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return FRACDIM_GOLDEN_DIR;
}

std::vector<ClaimResult> run_claims(const VerifyOptions& options) {
  std::vector<int> ids = options.claims;
  if (ids.empty()) {
    for (int id = 1; id <= kClaimCount; ++id) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id < 1 || id > kClaimCount) throw_domain("no claim with id " + std::to_string(id));
  }

  const Goldens g = load_goldens(options.golden_dir);
  std::map<int, ClaimResult> done;
  for (int id : ids) {
    if (id != kClaimCount) done.emplace(id, run_one(id, g));
  }
  if (ids.back() == kClaimCount) {
    std::vector<ClaimResult> first;
    if (done.size() == static_cast<std::size_t>(kClaimCount - 1)) {
      for (const auto& [id, r] : done) first.push_back(r);
    } else {
      first = run_base(g);
    }
    const std::vector<ClaimResult> second = run_base(g);
    const bool same = format_report(first) == format_report(second);
    done.emplace(kClaimCount,
                 ClaimResult{kClaimCount, "determinism", "identical reports",
                             same ? "identical" : "reports differ", "byte equality", same});
  }
  std::vector<ClaimResult> out;
  for (auto& [id, r] : done) out.push_back(std::move(r));
  return out;
}

std::string format_report(std::span<const ClaimResult> results) {
  std::ostringstream out;
  out << "id | claim | expected | got | tolerance | verdict\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << r.id << " | " << r.claim << " | " << r.expected << " | " << r.got << " | "
        << r.tolerance << " | " << (r.pass ? "PASS" : "FAIL") << '\n';
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " claims passed\n";
  return out.str();
}

bool all_pass(std::span<const ClaimResult> results) {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
}

void write_goldens(const std::filesystem::path& dir) {
  Json j;
  for (std::size_t n : kOscillationGrid) {
    j["oscillation_k2"][std::to_string(n)] = hfd(sample(Oscillation{20.0}, n), 2).dimension;
  }
  j["weierstrass_half"] = hfd(sample(Weierstrass{5.0, 1.7}, 1000), 500).dimension;
  const StabilityReport periodic = stability_report(periodic_example(), 30, 1, 1e-10);
  j["periodic_perturbed"]["base"] = periodic.base.dimension;
  j["periodic_perturbed"]["perturbed"] = periodic.perturbed.dimension;
  const StabilityReport alternating = stability_report(alternating_example(), 50, 1, 1e-10);
  j["alternating_perturbed"]["base"] = alternating.base.dimension;
  j["alternating_perturbed"]["perturbed"] = alternating.perturbed.dimension;

  std::filesystem::create_directories(dir);
  std::ofstream out(dir / kGoldenFile);
  if (!out) throw_domain("cannot write " + (dir / kGoldenFile).string());
  out << j.dump(2) << '\n';
}

}  // namespace fracdim::cli
