#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sphdesign/design.hpp"
#include "sphdesign/groups.hpp"
#include "sphdesign/moments.hpp"

namespace sphdesign {

struct SearchSpec {
  int n_target = 0;
  int t = 0;
  std::string group_label = "[1]+";
  int restarts = 20;
  std::uint64_t seed = 0;
  double step_init = 0.3;       // radians, per angle coordinate
  double step_min = 1e-13;      // stop once the probe step shrinks past this
  double criterion_stop = 1e-28;
  long max_iters = 100000;      // per restart
  Real verify_tol = 1e-24;      // tolerance used for the result report
  std::function<void(long, double)> progress;  // (iteration, current criterion)
};

// One way of reaching n_target points: a subset of the group's axis orbits
// (each usable once) plus some number of full free orbits.
struct OrbitPlan {
  std::vector<int> special_indices;  // into specialOrbits(group)
  int generic_orbits = 0;
};

std::vector<OrbitPlan> orbitPlans(const PointGroup& g, int n_target);

struct SearchResult {
  Design design;
  MomentReport report;
  long iterations = 0;
  int restarts_used = 0;
  bool converged = false;
};

// Derivative-free pattern search over the free orbit angles: greedy coordinate
// probes, extrapolating pattern moves, step halving on failure. Orbit plans
// are cycled across restarts; a fresh seeded random configuration starts each
// restart unless `start` covers the first. Deterministic for a fixed seed.
// The best configuration found is always returned; `converged` tells whether
// the criterion target was reached.
SearchResult patternSearch(const SearchSpec& spec, const OrbitConfig* start = nullptr);

struct LadderResult {
  int t = 0;  // highest strength reached; 0 when nothing converged
  std::optional<SearchResult> result;
};

// Climbs t upward from t_start, trying every group at each rung; at the
// highest reachable strength the largest-order group wins. base carries the
// per-attempt budget (restarts, iterations, seed).
LadderResult strengthLadder(int n, const std::vector<std::string>& group_labels, int t_start,
                            const SearchSpec& base);

}  // namespace sphdesign
