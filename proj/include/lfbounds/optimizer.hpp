#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lfbounds/constants.hpp"

namespace lfb {

/// Grid search over (C1, C2) for a1, or (C1, C2, rho) with C4 = rho C2 / 2.0001 for a2.
/// C1 ranges over (0, 1], C2 over (0, 2 C1], rho over (0, 1].
struct SearchSpec {
  LFunctionProfile profile;
  double C3 = 1000.0;
  double T1 = 1e4;
  double T2 = 7778.0;
  double t0 = 1e4;
  double grid_step = 0.01;
  int refine_rounds = 0;
  BoundKind target = BoundKind::kLog;
  unsigned threads = 1;
};

/// One evaluated candidate. C4 is absent for the a1 search; `a` is +inf when infeasible.
struct GridPoint {
  double C1 = 0.0;
  double C2 = 0.0;
  std::optional<double> C4;
  double a = 0.0;
  bool feasible = false;
};

struct SearchResult {
  BoundParams best_params;
  BoundConstants best_constants;
  std::size_t candidates_evaluated = 0;
  int rounds_completed = 0;
};

/// Deterministic minimization: exhaustive coarse grid, then `refine_rounds` local
/// refinements halving the step around the incumbent. Ties go to the
/// lexicographically smallest (C1, C2, C4). Throws HypothesisError("no-admissible-candidate")
/// if no candidate satisfies the hypotheses. `trace`, if set, receives every
/// evaluated candidate in evaluation order.
SearchResult minimize(const SearchSpec& spec, const std::function<void(const GridPoint&)>& trace = {});

}  // namespace lfb
