#include "lfbounds/optimizer.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "lfbounds/errors.hpp"
#include "lfbounds/parallel.hpp"

namespace lfb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  double C1, C2, rho;  // rho unused for the a1 search
};

GridPoint evaluate(const SearchSpec& spec, const Candidate& c) {
  const bool derivative = spec.target == BoundKind::kLogDerivative;
  BoundParams q{c.C1, c.C2, spec.C3, std::nullopt, spec.T1, spec.T2, spec.t0};
  if (derivative) q.C4 = c.rho * c.C2 / kC4Divisor;
  GridPoint g{c.C1, c.C2, q.C4, kInf, false};
  if (!(c.C1 > 0.0 && c.C1 <= 1.0 && c.C2 > 0.0 && c.C2 <= 2.0 * c.C1)) return g;
  if (derivative && !(c.rho > 0.0 && c.rho <= 1.0)) return g;
  const auto ev = evaluate_bound(spec.profile, q, spec.target);
  if (ev.admissible() && std::isfinite(ev.constants->a)) {
    g.a = ev.constants->a;
    g.feasible = true;
  }
  return g;
}

bool better(const GridPoint& x, const GridPoint& y) {
  if (x.feasible != y.feasible) return x.feasible;
  if (x.a != y.a) return x.a < y.a;
  return std::make_tuple(x.C1, x.C2, x.C4.value_or(0.0)) < std::make_tuple(y.C1, y.C2, y.C4.value_or(0.0));
}

// k / scale with k integer keeps grid values such as 0.25 exact.
std::vector<double> axis(int count, double scale) {
  std::vector<double> v;
  v.reserve(count);
  for (int k = 1; k <= count; ++k) v.push_back(k / scale);
  return v;
}

std::vector<double> local_axis(double centre, double step, double lo, double hi) {
  std::vector<double> v;
  for (int k = -2; k <= 2; ++k) {
    const double x = centre + k * step;
    if (x > lo && x <= hi) v.push_back(x);
  }
  return v;
}

GridPoint scan(const SearchSpec& spec, const std::vector<Candidate>& cands, std::size_t& counter,
               const std::function<void(const GridPoint&)>& trace) {
  std::vector<GridPoint> results(cands.size());
  parallel_for(cands.size(), spec.threads, [&](std::size_t i) { results[i] = evaluate(spec, cands[i]); });
  counter += cands.size();
  GridPoint best{0, 0, std::nullopt, kInf, false};
  for (const auto& r : results) {
    if (trace) trace(r);
    if (better(r, best)) best = r;
  }
  return best;
}

}  // namespace

SearchResult minimize(const SearchSpec& spec, const std::function<void(const GridPoint&)>& trace) {
  if (!(spec.grid_step > 0.0 && spec.grid_step <= 0.5)) throw DomainError("minimize: grid_step must lie in (0, 0.5]");
  if (spec.refine_rounds < 0) throw DomainError("minimize: refine_rounds must be non-negative");
  const bool derivative = spec.target == BoundKind::kLogDerivative;

  const double scale = 1.0 / spec.grid_step;
  const int n1 = static_cast<int>(std::floor(1.0 * scale + 1e-9));
  const int n2 = static_cast<int>(std::floor(2.0 * scale + 1e-9));
  const auto c1_axis = axis(n1, scale);
  const auto c2_axis = axis(n2, scale);
  const auto rho_axis = derivative ? axis(n1, scale) : std::vector<double>{1.0};

  std::vector<Candidate> cands;
  for (double c1 : c1_axis)
    for (double c2 : c2_axis) {
      if (c2 > 2.0 * c1) break;
      for (double rho : rho_axis) cands.push_back({c1, c2, rho});
    }

  SearchResult out;
  GridPoint best = scan(spec, cands, out.candidates_evaluated, trace);
  if (!best.feasible) throw HypothesisError({"no-admissible-candidate"}, "minimize: no admissible candidate in the search box");
  double best_rho = derivative ? *best.C4 * kC4Divisor / best.C2 : 1.0;

  double step = spec.grid_step;
  for (int round = 0; round < spec.refine_rounds; ++round) {
    step /= 2.0;
    cands.clear();
    for (double c1 : local_axis(best.C1, step, 0.0, 1.0))
      for (double c2 : local_axis(best.C2, step, 0.0, 2.0 * c1))
        for (double rho : derivative ? local_axis(best_rho, step, 0.0, 1.0) : std::vector<double>{1.0})
          cands.push_back({c1, c2, rho});
    GridPoint cand = scan(spec, cands, out.candidates_evaluated, trace);
    if (better(cand, best)) {
      best = cand;
      best_rho = derivative ? *best.C4 * kC4Divisor / best.C2 : 1.0;
    }
    out.rounds_completed = round + 1;
  }

  out.best_params = {best.C1, best.C2, spec.C3, best.C4, spec.T1, spec.T2, spec.t0};
  out.best_constants = *evaluate_bound(spec.profile, out.best_params, spec.target).constants;
  return out;
}

}  // namespace lfb
