#include "lfbounds/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "lfbounds/constants.hpp"
#include "lfbounds/errors.hpp"
#include "lfbounds/mertens.hpp"
#include "lfbounds/numeric.hpp"
#include "lfbounds/optimizer.hpp"
#include "lfbounds/profiles.hpp"
#include "lfbounds/quadrature.hpp"
#include "lfbounds/verifier.hpp"

namespace lfb::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Range {
  double lo = -kInf;
  double hi = kInf;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double x) const {
    return std::isfinite(x) && (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
  std::string text() const {
    std::ostringstream o;
    o << std::setprecision(10) << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
    return o.str();
  }
};

constexpr Range kPositive{0.0, kInf, true, true};
constexpr Range kUnitInterval{0.0, 1.0, true, false};

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  double real(const std::string& key, double fallback, Range range) {
    double v = fallback;
    if (auto it = raw_.find(key); it != raw_.end()) {
      v = parse(key, it->second);
      if (!range.contains(v)) throw UsageError("--" + key + " = " + it->second + " outside valid range " + range.text());
      used_.push_back(key);
    }
    resolved[key] = v;
    return v;
  }

  std::optional<double> optional_real(const std::string& key, Range range) {
    if (!raw_.count(key)) return std::nullopt;
    return real(key, 0.0, range);
  }

  long long integer(const std::string& key, long long fallback, long long lo, long long hi) {
    long long v = fallback;
    if (auto it = raw_.find(key); it != raw_.end()) {
      const double d = parse(key, it->second);
      if (d != std::floor(d) || d < static_cast<double>(lo) || d > static_cast<double>(hi))
        throw UsageError("--" + key + " = " + it->second + " must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
      v = static_cast<long long>(d);
      used_.push_back(key);
    }
    resolved[key] = v;
    return v;
  }

  std::string choice(const std::string& key, const std::string& fallback, const std::vector<std::string>& allowed) {
    std::string v = fallback;
    if (auto it = raw_.find(key); it != raw_.end()) {
      v = it->second;
      if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : "|") + a;
        throw UsageError("--" + key + " = " + v + " must be one of " + list);
      }
      used_.push_back(key);
    }
    resolved[key] = v;
    return v;
  }

  /// Rejects keys the action did not read.
  void finish() const {
    for (const auto& [k, v] : raw_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw UsageError("--" + k + " is not accepted here");
  }

  Json resolved = Json::object();

 private:
  static double parse(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) throw UsageError("--" + key + " = '" + text + "' is not a number");
    return v;
  }

  const std::map<std::string, std::string>& raw_;
  std::vector<std::string> used_;
};

Json to_json(const LFunctionProfile& p) {
  return {{"family", p.family}, {"degree", p.degree}, {"euler_order", p.euler_order}, {"ell", p.ell},
          {"C", p.C},           {"c", p.c},           {"T", p.T}};
}

Json to_json(const std::vector<HypothesisCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"id", c.id}, {"statement", c.statement}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"passed", c.passed}});
  return out;
}

Json to_json(const BoundParams& p) {
  Json j{{"C1", p.C1}, {"C2", p.C2}, {"C3", p.C3}};
  if (p.C4) j["C4"] = *p.C4;
  j["T1"] = p.T1;
  j["T2"] = p.T2;
  j["t0"] = p.t0;
  return j;
}

Json to_json(const BoundConstants& c) {
  return {{"K", c.K}, {"b", c.b}, {"R", c.R}, {"a", c.a}, {"region", {{"A", c.sigma_region.A}, {"B", c.sigma_region.B}}}};
}

Json to_json(const QuadratureResult& q) {
  return {{"value", q.value},
          {"error_estimate", q.error_estimate},
          {"value_plus_error", q.value + q.error_estimate},
          {"panels", q.panels},
          {"evaluations", q.evaluations}};
}

LFunctionProfile read_profile(Params& p) {
  const auto family = p.choice("family", "zeta", {"zeta", "dirichlet", "dedekind"});
  if (family == "zeta") return profile_zeta();
  const double alpha = p.real("alpha", kRademacherAlpha, {1.0, kInf});
  const double t0 = p.real("t0-rademacher", kRademacherT0, kPositive);
  if (!(t0 >= std::exp(2.0 * alpha))) throw UsageError("--t0-rademacher must be >= exp(2 alpha)");
  if (family == "dirichlet") return profile_dirichlet(p.integer("q", 3, 2, 1'000'000'000'000LL), alpha, t0);
  const auto n = static_cast<int>(p.integer("degree", 2, 2, 1000));
  return profile_dedekind(n, p.real("disc", 5.0, {1.0, kInf}), alpha, t0);
}

BoundKind kind_of(const std::string& action) { return action == "a1" ? BoundKind::kLog : BoundKind::kLogDerivative; }

Json display_a(const LFunctionProfile& profile, BoundKind kind, const BoundConstants& c) {
  const int decimals = published_decimals(kind);
  Json j{{"decimals", decimals}, {"a", ceil_decimals(c.a, decimals)}};
  if (profile.family == "dedekind") {
    j["a_per_degree"] = ceil_decimals(c.a / profile.degree, decimals);
  }
  return j;
}

struct Outcome {
  Json result = Json::object();
  std::optional<std::vector<std::vector<std::string>>> table;
};

std::string fmt(double v, int digits = 17) {
  std::ostringstream o;
  o << std::setprecision(digits) << v;
  return o.str();
}

Outcome run_profiles(Params& p) {
  const auto profile = read_profile(p);
  p.finish();
  Outcome o;
  o.result["profile"] = to_json(profile);
  if (profile.family == "dirichlet") {
    o.result["rademacher_prefactor"] = rademacher_prefactor_dirichlet(p.resolved["alpha"], p.resolved["t0-rademacher"]);
    o.result["prefactor_ceiling"] = 1.0;
  } else if (profile.family == "dedekind") {
    o.result["rademacher_prefactor"] = rademacher_prefactor_dedekind(p.resolved["alpha"], p.resolved["t0-rademacher"],
                                                                     static_cast<int>(profile.degree));
    o.result["prefactor_ceiling"] = kDedekindC;
  }
  return o;
}

BoundParams read_bound_params(Params& p, const LFunctionProfile& profile, BoundKind kind) {
  BoundParams q = published_params(profile, kind);
  q.C1 = p.real("C1", q.C1, kUnitInterval);
  q.C2 = p.real("C2", q.C2, {0.0, 2.0, true, false});
  q.C3 = p.real("C3", q.C3, {1.0, kInf});
  if (kind == BoundKind::kLogDerivative) q.C4 = p.real("C4", q.C4.value_or(q.C2 / kC4Divisor), kUnitInterval);
  q.T1 = p.real("T1", q.T1, kPositive);
  q.T2 = p.real("T2", q.T2, kPositive);
  q.t0 = p.real("t0", q.t0, kPositive);
  return q;
}

Outcome run_constants(Params& p, const std::string& action) {
  Outcome o;
  if (action == "split") {
    const double C1 = p.real("C1", 0.25, kUnitInterval);
    const double C3 = p.real("C3", 1000.0, {1.0, kInf});
    const double T1 = p.real("T1", 10188.0, kPositive);
    const double T2 = p.real("T2", 7794.0, kPositive);
    const auto n = p.integer("degree", 2, 2, 1000);
    p.finish();
    const auto s = dedekind_split(C1, T1, T2, C3);
    o.result = {{"K1", s.K1}, {"K2", s.K2}, {"b", s.K1 + s.K2 / static_cast<double>(n)}};
    return o;
  }
  if (action == "elementary") {
    const auto m = static_cast<int>(p.integer("m", 1, 1, 1000));
    const double B = p.real("B", 0.5, kPositive);
    const double c = p.real("c", 1.0, {1.0, kInf});
    const double t = p.real("t", 1e4, kPositive);
    const double t0 = p.real("t0", 1e4, {kE, kInf, true, false});
    if (!(c * t > kE)) throw UsageError("--t: c t must exceed e");
    const double sigma = p.real("sigma", 1.0 + B / loglog(c * t), kPositive);
    p.finish();
    const auto e = elementary_bounds(m, B, c, t, t0, sigma);
    o.result = {{"log_bound", e.log_bound}, {"logder_bound", e.logder_bound}};
    return o;
  }
  const auto kind = kind_of(action);
  const auto profile = read_profile(p);
  const auto params = read_bound_params(p, profile, kind);
  p.finish();
  const auto ev = evaluate_bound(profile, params, kind);
  o.result["profile"] = to_json(profile);
  o.result["checks"] = to_json(ev.checks);
  if (!ev.admissible()) {
    std::string ids;
    for (const auto& id : ev.failed_conditions()) ids += (ids.empty() ? "" : ", ") + id;
    throw HypothesisError(ev.failed_conditions(), "hypotheses violated: " + ids);
  }
  o.result["constants"] = to_json(*ev.constants);
  o.result["display"] = display_a(profile, kind, *ev.constants);
  return o;
}

Outcome run_optimize(Params& p, const std::string& action, const RunConfig& cfg) {
  const auto kind = kind_of(action);
  SearchSpec spec;
  spec.profile = read_profile(p);
  const auto pub = published_params(spec.profile, kind);
  spec.target = kind;
  spec.C3 = p.real("C3", pub.C3, {1.0, kInf});
  spec.T1 = p.real("T1", pub.T1, kPositive);
  spec.T2 = p.real("T2", pub.T2, kPositive);
  spec.t0 = p.real("t0", pub.t0, kPositive);
  spec.grid_step = p.real("grid-step", 0.01, {0.0, 0.5, true, false});
  spec.refine_rounds = static_cast<int>(p.integer("refine-rounds", 0, 0, 20));
  spec.threads = cfg.threads;
  p.finish();

  Outcome o;
  std::function<void(const GridPoint&)> trace;
  if (cfg.output_format == OutputFormat::kCsv) {
    o.table.emplace();
    o.table->push_back({"C1", "C2", "C4", "a", "feasible"});
    trace = [&](const GridPoint& g) {
      o.table->push_back({fmt(g.C1), fmt(g.C2), g.C4 ? fmt(*g.C4) : "", fmt(g.a), g.feasible ? "1" : "0"});
    };
  }
  const auto start = std::chrono::steady_clock::now();
  const auto r = minimize(spec, trace);
  o.result["profile"] = to_json(spec.profile);
  o.result["best_params"] = to_json(r.best_params);
  o.result["constants"] = to_json(r.best_constants);
  o.result["display"] = display_a(spec.profile, kind, r.best_constants);
  o.result["candidates_evaluated"] = r.candidates_evaluated;
  o.result["rounds_completed"] = r.rounds_completed;
  o.result["runtime_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

Outcome run_integrate(Params& p, const std::string& action, const RunConfig& cfg) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  if (action == "inv-zeta") {
    const double sigma0 = p.real("sigma0", 0.98, {0.9, 1.0, false, true});
    const double lo = p.real("from", 0.0, {0.0, 3e4});
    const double hi = p.real("to", 11520.0, {0.0, 3e4});
    if (hi < lo) throw UsageError("--to must be >= --from");
    InvZetaIntegralOptions opts;
    opts.panel_width = p.real("panel", 10.0, kPositive);
    opts.rel_tol = p.real("rel-tol", 1e-10, {0.0, 1.0, true, true});
    opts.max_levels = static_cast<int>(p.integer("max-levels", 16, 3, 24));
    opts.threads = cfg.threads;
    p.finish();
    if (cfg.output_format == OutputFormat::kCsv) {
      o.table.emplace();
      o.table->push_back({"lo", "hi", "value", "error_estimate", "evaluations"});
      opts.panel_trace = [&](const PanelRecord& r) {
        o.table->push_back({fmt(r.lo), fmt(r.hi), fmt(r.result.value), fmt(r.result.error_estimate),
                            std::to_string(r.result.evaluations)});
      };
    }
    o.result = to_json(integrate_inv_abs_zeta(sigma0, lo, hi, opts));
  } else {
    const double sigma0 = p.real("sigma0", 0.98, {0.5, 1.0, true, true});
    const double a1 = p.real("a1", 5.44, {0.0, kInf});
    const double lo = p.real("from", 11520.0, {kE * kE, kInf});
    const double hi = p.real("to", 2.6e7, kPositive);
    if (!(hi > lo)) throw UsageError("--to must exceed --from");
    const double rel_tol = p.real("rel-tol", 1e-12, {0.0, 1.0, true, true});
    p.finish();
    o.result = to_json(integrate_envelope(sigma0, a1, lo, hi, rel_tol));
  }
  o.result["runtime_seconds"] = elapsed();
  return o;
}

PowerBound read_power_bound(Params& p) {
  PowerBound b;
  b.A = p.real("A", b.A, kPositive);
  b.a = p.real("a", b.a, {0.0, 1.0, true, true});
  b.B = p.real("B", b.B, {0.0, kInf});
  b.b = p.real("b", b.b, {0.0, 1.0, true, true});
  return b;
}

Json published_comparison(const char* name, double display, double published) {
  return {{"quantity", name}, {"display", display}, {"published", published}, {"matches", display == published}};
}

Outcome run_mertens(Params& p, const std::string& action, const RunConfig& cfg) {
  Outcome o;
  if (action == "epsilon" || action == "bound") {
    MertensInputs in;
    in.sigma0 = p.real("sigma0", in.sigma0, {0.5, 1.0, true, true});
    in.C1 = p.real("C1", in.C1, kUnitInterval);
    in.C2 = p.real("C2", in.C2, {0.0, 2.0, true, false});
    in.C3 = p.real("C3", in.C3, {1.0, kInf});
    in.T1 = p.real("T1", in.T1, {kExpESquared, kInf});
    in.T2 = p.real("T2", in.resolved_T2(), kPositive);
    if (action == "bound") {
      in.lambda = p.real("lambda", in.lambda, kPositive);
      in.integral_bound = p.real("integral", in.integral_bound, kPositive);
    }
    p.finish();
    const auto checks = check_mertens_hypotheses(in.sigma0, in.C1, in.C2, in.C3, in.T1, *in.T2);
    o.result["checks"] = to_json(checks);
    const double eps = compute_epsilon0(in.sigma0, in.C1, in.C2, in.C3, in.T1, *in.T2);
    o.result["b_zeta"] = compute_b1(profile_zeta(), in.C1, in.C3, in.T1, *in.T2);
    o.result["epsilon0"] = eps;
    o.result["kappa"] = (in.sigma0 + eps) / (1.0 + eps);
    if (action == "epsilon") return o;
    const auto b = mertens_bound(in.sigma0, in.lambda, in.T1, eps, in.integral_bound);
    o.result["coef_sigma0"] = b.coef_sigma0;
    o.result["coef_kappa"] = b.coef_kappa;
    o.result["additive_one"] = b.additive_one;
    o.result["log10_x_min"] = b.log10_x_min;
    const double ck = ceil_decimals(b.coef_kappa, 2), cs = ceil_significant(b.coef_sigma0, 3);
    o.result["display"] = {{"coef_kappa", ck}, {"coef_sigma0", cs}, {"kappa", ceil_decimals(b.kappa, 2)},
                           {"log10_x_min", ceil_decimals(b.log10_x_min, 0)}};
    o.result["published_comparison"] = Json::array({published_comparison("coef_kappa", ck, 555.71),
                                                     published_comparison("coef_sigma0", cs, 1.94e14),
                                                     published_comparison("kappa", ceil_decimals(b.kappa, 2), 0.99),
                                                     published_comparison("log10_x_min", ceil_decimals(b.log10_x_min, 0), 711.0)});
    return o;
  }
  const auto bound = read_power_bound(p);
  if (action == "m-bound") {
    p.finish();
    const auto m = derive_m_bound(bound);
    o.result = {{"A_m", m.A_m}, {"B_m", m.B_m}, {"exponent_A", bound.a - 1.0}, {"exponent_B", bound.b - 1.0},
                {"display", {{"A_m", ceil_decimals(m.A_m, 2)}, {"B_m", ceil_significant(m.B_m, 4)}}}};
    return o;
  }
  if (action == "crossover") {
    p.finish();
    const double l = crossover_trivial_log10(bound);
    o.result = {{"log10_x_star", l}, {"display", {{"log10_x_star", std::round(l * 10.0) / 10.0}}}};
    return o;
  }
  const auto N = p.integer("N", 1'000'000, 1, 4 * kMobiusTableLimit);
  p.finish();
  const bool streaming = N > 10'000'000;
  const auto r = streaming ? verify_bound_streaming(N, bound, cfg.threads)
                           : verify_bound_on_range(sieve_mobius(N, cfg.threads), bound);
  o.result = {{"mode", streaming ? "streaming" : "table"},
              {"N", r.N},
              {"violations_M", r.violations_M},
              {"violations_m", r.violations_m},
              {"violations_trivial", r.violations_trivial},
              {"first_violation", r.first_violation ? Json(*r.first_violation) : Json(nullptr)},
              {"first_violation_kind", r.first_violation_kind},
              {"max_ratio_M", r.max_ratio_M},
              {"argmax_ratio_M", r.argmax_ratio_M},
              {"max_ratio_m", r.max_ratio_m},
              {"argmax_ratio_m", r.argmax_ratio_m},
              {"runtime_seconds", r.runtime_seconds},
              {"ok", r.ok()}};
  return o;
}

Json to_json(const BoundCheckReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j{{"sigma", s.sigma}, {"t", s.t}, {"observed", s.observed}, {"bound", s.bound}, {"ratio", s.ratio}};
    if (s.elementary_bound) j["elementary_bound"] = *s.elementary_bound;
    j["violated"] = s.violated;
    samples.push_back(std::move(j));
  }
  return {{"kind", to_string(r.kind)},
          {"a", r.a},
          {"b", r.b},
          {"region", {{"A", r.region.A}, {"B", r.region.B}}},
          {"sample_count", r.samples.size()},
          {"violations", r.violations},
          {"elementary_violations", r.elementary_violations},
          {"elementary_not_dominated", r.elementary_not_dominated},
          {"min_ratio", r.min_ratio},
          {"median_ratio", r.median_ratio},
          {"runtime_seconds", r.runtime_seconds},
          {"samples", samples}};
}

Outcome run_verify(Params& p, const std::string& action, const RunConfig& cfg) {
  const auto samples = static_cast<std::size_t>(p.integer("samples", 200, 2, 100000));
  const auto seed = static_cast<std::uint64_t>(p.integer("seed", static_cast<long long>(kDefaultSampleSeed), 0,
                                                          std::numeric_limits<long long>::max()));
  const auto mode = p.choice("mode", "both", {"edges", "interior", "both"});
  const double t_lo = p.real("t-lo", 1e4, {1e4, kZetaTMax});
  const double t_hi = p.real("t-hi", 3e4, {1e4, kZetaTMax});
  if (t_hi < t_lo) throw UsageError("--t-hi must be >= --t-lo");
  p.finish();

  const auto z = profile_zeta();
  std::vector<BoundCheckReport> reports;
  auto run_kind = [&](BoundKind kind) {
    const auto c = kind == BoundKind::kLog ? compute_a1(z, published_params(z, kind)) : compute_a2(z, published_params(z, kind));
    const std::uint64_t s = seed + (kind == BoundKind::kLog ? 0 : 1);
    std::vector<std::pair<SigmaMode, std::size_t>> parts;
    if (mode == "edges") parts = {{SigmaMode::kRegionEdges, samples}};
    if (mode == "interior") parts = {{SigmaMode::kInteriorGrid, samples}};
    if (mode == "both") parts = {{SigmaMode::kRegionEdges, samples / 2}, {SigmaMode::kInteriorGrid, samples - samples / 2}};
    for (const auto& [m, count] : parts) {
      const auto grid = make_sample_grid(count, c.sigma_region, m, t_lo, t_hi, s);
      reports.push_back(kind == BoundKind::kLog ? check_log_bound(grid, c.a, c.b, cfg.threads)
                                                : check_logder_bound(grid, c.a, c.b, cfg.threads));
    }
  };
  if (action != "logder") run_kind(BoundKind::kLog);
  if (action != "log") run_kind(BoundKind::kLogDerivative);

  Outcome o;
  std::size_t total = 0, violations = 0;
  Json arr = Json::array();
  for (const auto& r : reports) {
    total += r.samples.size();
    violations += r.violations + r.elementary_violations;
    arr.push_back(to_json(r));
  }
  o.result["total_samples"] = total;
  o.result["total_violations"] = violations;
  o.result["reports"] = arr;
  if (cfg.output_format == OutputFormat::kCsv) {
    std::ostringstream csv;
    bool header = true;
    for (const auto& r : reports) {
      std::ostringstream one;
      write_samples_csv(r, one);
      std::string text = one.str();
      if (!header) text = text.substr(text.find('\n') + 1);
      header = false;
      csv << text;
    }
    o.table.emplace();
    std::istringstream lines(csv.str());
    for (std::string line; std::getline(lines, line);) {
      std::vector<std::string> row;
      std::istringstream cells(line);
      for (std::string cell; std::getline(cells, cell, ',');) row.push_back(cell);
      if (!line.empty() && line.back() == ',') row.emplace_back();
      o.table->push_back(std::move(row));
    }
  }
  return o;
}

const std::map<std::string, std::vector<std::string>>& actions() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"profiles", {""}},
      {"constants", {"a1", "a2", "split", "elementary"}},
      {"optimize", {"a1", "a2"}},
      {"integrate", {"inv-zeta", "envelope"}},
      {"mertens", {"epsilon", "bound", "m-bound", "crossover", "sieve-verify"}},
      {"verify", {"log", "logder", "all"}}};
  return table;
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kHuman: return "human";
  }
  return "json";
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out,
             int digits) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out, digits);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out, digits);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, fmt(j.get<double>(), digits));
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("LFB_THREADS")) {
    const std::string v(env);
    if (v == "auto" || v.empty()) return 0;
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec == std::errc() && ptr == v.data() + v.size() && n > 0) return n;
    throw UsageError("LFB_THREADS = '" + v + "' must be a positive integer or 'auto'");
  }
  return 0;
}

DispatchResult dispatch(const RunConfig& cfg) {
  const auto& table = actions();
  const auto it = table.find(cfg.subcommand);
  if (it == table.end()) throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  if (std::find(it->second.begin(), it->second.end(), cfg.action) == it->second.end())
    throw UsageError("unknown action '" + cfg.action + "' for " + cfg.subcommand);

  Params p(cfg.parameters);
  DispatchResult out;
  out.report["command"] = cfg.action.empty() ? cfg.subcommand : cfg.subcommand + " " + cfg.action;
  Outcome o;
  std::string status = "ok";
  try {
    if (cfg.subcommand == "profiles") o = run_profiles(p);
    if (cfg.subcommand == "constants") o = run_constants(p, cfg.action);
    if (cfg.subcommand == "optimize") o = run_optimize(p, cfg.action, cfg);
    if (cfg.subcommand == "integrate") o = run_integrate(p, cfg.action, cfg);
    if (cfg.subcommand == "mertens") o = run_mertens(p, cfg.action, cfg);
    if (cfg.subcommand == "verify") o = run_verify(p, cfg.action, cfg);
  } catch (const UsageError&) {
    throw;
  } catch (const HypothesisError& e) {
    out.exit_code = kExitHypothesis;
    status = "hypothesis-failure";
    out.report["failed_conditions"] = e.conditions();
    out.report["error"] = e.what();
  } catch (const ConvergenceError& e) {
    out.exit_code = kExitNonConvergence;
    status = "non-convergence";
    out.report["error"] = e.what();
  } catch (const ResourceError& e) {
    out.exit_code = kExitHypothesis;
    status = "resource-limit";
    out.report["error"] = e.what();
  } catch (const DomainError& e) {
    out.exit_code = kExitHypothesis;
    status = "domain-error";
    out.report["error"] = e.what();
  } catch (const std::logic_error& e) {
    // Profile constructors reject parameter sets whose prefactor exceeds its ceiling.
    out.exit_code = kExitHypothesis;
    status = "hypothesis-failure";
    out.report["failed_conditions"] = std::vector<std::string>{"prefactor-ceiling"};
    out.report["error"] = e.what();
  }
  out.report["status"] = status;
  out.report["parameters"] = p.resolved;
  out.report["threads"] = cfg.threads;
  out.report["output_format"] = format_name(cfg.output_format);
  if (out.exit_code == kExitOk || !o.result.empty()) out.report["result"] = o.result;
  if (out.exit_code == kExitOk) out.table = std::move(o.table);
  return out;
}

std::string render(const DispatchResult& result, OutputFormat format) {
  if (format == OutputFormat::kJson) return result.report.dump(2) + "\n";
  std::ostringstream o;
  if (format == OutputFormat::kCsv) {
    if (result.table) {
      for (const auto& row : *result.table) {
        for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << csv_cell(row[i]);
        o << '\n';
      }
      return o.str();
    }
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(result.report, "", flat, 17);
    o << "key,value\n";
    for (const auto& [k, v] : flat) o << csv_cell(k) << ',' << csv_cell(v) << '\n';
    return o.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(result.report, "", flat, 15);
  std::size_t width = 0;
  for (const auto& kv : flat) width = std::max(width, kv.first.size());
  for (const auto& [k, v] : flat) o << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  return o.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Explicit bounds for L-functions near the 1-line, and Mertens-function bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json", threads;
  std::string output;
  app.add_option("--format", format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_option("--threads", threads, "Worker count or 'auto' (default: $LFB_THREADS, else auto)");

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::string> keys;
  };
  const std::vector<Sub> subs{
      {"profiles", "Convexity data of an L-function family", {"family", "q", "degree", "disc", "alpha", "t0-rademacher"}},
      {"constants", "a1 | a2 | split | elementary",
       {"family", "q", "degree", "disc", "alpha", "t0-rademacher", "C1", "C2", "C3", "C4", "T1", "T2", "t0", "m", "B", "c",
        "t", "sigma"}},
      {"optimize", "a1 | a2",
       {"family", "q", "degree", "disc", "alpha", "t0-rademacher", "C3", "T1", "T2", "t0", "grid-step", "refine-rounds"}},
      {"integrate", "inv-zeta | envelope", {"sigma0", "from", "to", "panel", "rel-tol", "max-levels", "a1"}},
      {"mertens", "epsilon | bound | m-bound | crossover | sieve-verify",
       {"sigma0", "C1", "C2", "C3", "T1", "T2", "lambda", "integral", "A", "a", "B", "b", "N"}},
      {"verify", "log | logder | all", {"samples", "seed", "mode", "t-lo", "t-hi"}}};

  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (std::string(s.name) != "profiles") {
      std::vector<std::string> allowed = actions().at(s.name);
      sub->add_option_function<std::string>(
             "action", [&cfg](const std::string& v) { cfg.action = v; }, "Action")
          ->required()
          ->check(CLI::IsMember(allowed));
    }
    for (const auto& key : s.keys)
      sub->add_option_function<std::string>("--" + key, [&cfg, key](const std::string& v) { cfg.parameters[key] = v; });
    sub->callback([&cfg, name = std::string(s.name)] { cfg.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.output_format = format == "csv" ? OutputFormat::kCsv : format == "human" ? OutputFormat::kHuman : OutputFormat::kJson;
    if (!output.empty()) cfg.output_path = output;
    if (threads.empty()) {
      cfg.threads = default_threads();
    } else if (threads == "auto") {
      cfg.threads = 0;
    } else {
      unsigned n = 0;
      auto [ptr, ec] = std::from_chars(threads.data(), threads.data() + threads.size(), n);
      if (ec != std::errc() || ptr != threads.data() + threads.size() || n == 0)
        throw UsageError("--threads = '" + threads + "' must be a positive integer or 'auto'");
      cfg.threads = n;
    }
    const auto result = dispatch(cfg);
    const auto text = render(result, cfg.output_format);
    if (cfg.output_path) {
      std::ofstream f(*cfg.output_path);
      if (!f) throw UsageError("--output: cannot open '" + *cfg.output_path + "'");
      f << text;
    } else {
      std::cout << text;
    }
    if (result.exit_code != kExitOk) {
      std::cerr << "lfb: " << result.report.value("status", std::string{}) << ": "
                << result.report.value("error", std::string{}) << '\n';
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "lfb: usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lfb::cli
