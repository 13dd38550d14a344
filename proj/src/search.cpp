#include "sphdesign/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sphdesign {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::Vector3d anglesToPoint(double theta, double phi) {
  // Reflect theta back into [0, pi]; phi picks up the half turn.
  theta = std::fmod(theta, 2 * std::numbers::pi);
  if (theta < 0) theta += 2 * std::numbers::pi;
  if (theta > std::numbers::pi) {
    theta = 2 * std::numbers::pi - theta;
    phi += std::numbers::pi;
  }
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

struct PlanContext {
  const PointGroup* group = nullptr;
  int n_target = 0;
  int t = 0;
  Eigen::Matrix3Xd fixed;    // axis-orbit representatives, zero freedom
  int generic_orbits = 0;
};

Eigen::Matrix3Xd assembleReps(const PlanContext& ctx, const Eigen::VectorXd& angles) {
  Eigen::Matrix3Xd reps(3, ctx.fixed.cols() + ctx.generic_orbits);
  reps.leftCols(ctx.fixed.cols()) = ctx.fixed;
  for (int i = 0; i < ctx.generic_orbits; ++i)
    reps.col(ctx.fixed.cols() + i) = anglesToPoint(angles[2 * i], angles[2 * i + 1]);
  return reps;
}

// Criterion of the configuration, or +inf when orbits collide or degenerate
// away from the target point count.
double objective(const PlanContext& ctx, const Eigen::VectorXd& angles) {
  const Eigen::Matrix3Xd reps = assembleReps(ctx, angles);
  Eigen::Matrix3Xd pts(3, ctx.n_target);
  Eigen::Index at = 0;
  for (Eigen::Index r = 0; r < reps.cols(); ++r) {
    const Eigen::Matrix3Xd orb = orbit(*ctx.group, reps.col(r));
    if (at + orb.cols() > ctx.n_target) return kInf;
    pts.middleCols(at, orb.cols()) = orb;
    at += orb.cols();
  }
  if (at != ctx.n_target) return kInf;
  for (Eigen::Index i = 0; i < pts.cols(); ++i)
    for (Eigen::Index j = i + 1; j < pts.cols(); ++j)
      if ((pts.col(i) - pts.col(j)).squaredNorm() < kPointTol * kPointTol) return kInf;
  return criterion(pts, ctx.t);
}

struct RestartOutcome {
  Eigen::VectorXd angles;
  double value = kInf;
  long iterations = 0;
};

// Classic pattern search: per-coordinate greedy probes around the base point,
// an extrapolation move when the sweep improved, step halving when it did
// not. Azimuth coordinates probe with twice the step of polar ones. A
// parabolic endgame finishes off what the collapsed step cannot resolve.
RestartOutcome hookeJeeves(const PlanContext& ctx, Eigen::VectorXd x, const SearchSpec& spec,
                           long iteration_offset) {
  RestartOutcome out;
  double f = objective(ctx, x);
  if (x.size() == 0 || f <= spec.criterion_stop) {
    out.angles = x;
    out.value = f;
    return out;
  }

  const auto explore = [&](Eigen::VectorXd base, double fbase,
                           double h) -> std::pair<Eigen::VectorXd, double> {
    for (Eigen::Index i = 0; i < base.size(); ++i) {
      const double step = (i % 2 == 1 ? 2.0 : 1.0) * h;
      const double keep = base[i];
      base[i] = keep + step;
      double trial = objective(ctx, base);
      if (trial < fbase) {
        fbase = trial;
        continue;
      }
      base[i] = keep - step;
      trial = objective(ctx, base);
      if (trial < fbase) {
        fbase = trial;
        continue;
      }
      base[i] = keep;
    }
    return {std::move(base), fbase};
  };

  double h = spec.step_init;
  Eigen::VectorXd prev = x;
  while (h >= spec.step_min && f > spec.criterion_stop && out.iterations < spec.max_iters) {
    ++out.iterations;
    auto [x1, f1] = explore(x, f, h);
    if (f1 < f) {
      // Extrapolate along the accepted direction, keeping the move only if a
      // fresh sweep around the extrapolated point still beats the sweep base.
      Eigen::VectorXd xp = x1 + (x1 - x);
      const double fp = objective(ctx, xp);
      auto [x2, f2] = explore(std::move(xp), fp, h);
      if (f2 < f1) {
        x = std::move(x2);
        f = f2;
      } else {
        x = std::move(x1);
        f = f1;
      }
    } else {
      h *= 0.5;
    }
    if (spec.progress) spec.progress(iteration_offset + out.iterations, f);
  }

  // Endgame: the probe step cannot resolve parameters below step_min, which
  // strands the objective a couple of orders above its floor. Coordinate-wise
  // three-point parabola fits recover those digits; moves are kept only on
  // strict improvement, so the descent stays monotone and deterministic.
  const double hp = 1e-8;
  while (f > spec.criterion_stop && out.iterations < spec.max_iters) {
    ++out.iterations;
    bool improved = false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double keep = x[i];
      x[i] = keep + hp;
      const double fp = objective(ctx, x);
      x[i] = keep - hp;
      const double fm = objective(ctx, x);
      x[i] = keep;
      const double denom = fp + fm - 2 * f;
      double cand = keep;
      if (denom > 0)
        cand = keep + 0.5 * hp * (fm - fp) / denom;
      else if (fp < f)
        cand = keep + hp;
      else if (fm < f)
        cand = keep - hp;
      else
        continue;
      if (std::abs(cand - keep) > 1e6 * hp) continue;
      x[i] = cand;
      const double fc = objective(ctx, x);
      if (fc < f) {
        f = fc;
        improved = true;
      } else {
        x[i] = keep;
      }
    }
    if (spec.progress) spec.progress(iteration_offset + out.iterations, f);
    if (!improved) break;
  }

  out.angles = std::move(x);
  out.value = f;
  return out;
}

}  // namespace

std::vector<OrbitPlan> orbitPlans(const PointGroup& g, int n_target) {
  const std::vector<SpecialOrbit> special = specialOrbits(g);
  const int k = static_cast<int>(special.size());
  std::vector<OrbitPlan> plans;
  for (int mask = 0; mask < (1 << k); ++mask) {
    int covered = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) covered += special[i].size;
    const int rest = n_target - covered;
    if (rest < 0 || rest % g.order() != 0) continue;
    OrbitPlan plan;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) plan.special_indices.push_back(i);
    plan.generic_orbits = rest / g.order();
    plans.push_back(std::move(plan));
  }
  // Fewer frozen orbits first: plans with more freedom explore better.
  std::stable_sort(plans.begin(), plans.end(), [](const OrbitPlan& a, const OrbitPlan& b) {
    return a.special_indices.size() < b.special_indices.size();
  });
  return plans;
}

SearchResult patternSearch(const SearchSpec& spec, const OrbitConfig* start) {
  if (spec.n_target < 1) throw std::invalid_argument("search: n_target must be positive");
  if (spec.t < 1) throw std::invalid_argument("search: t must be >= 1");
  const PointGroup group = groupFromLabel(spec.group_label);
  const std::vector<SpecialOrbit> special = specialOrbits(group);
  const std::vector<OrbitPlan> plans = orbitPlans(group, spec.n_target);
  if (plans.empty() && start == nullptr)
    throw std::invalid_argument("search: " + std::to_string(spec.n_target) +
                                " points cannot be assembled from " + spec.group_label +
                                " orbits");

  std::optional<RestartOutcome> best;
  PlanContext best_ctx;
  long total_iters = 0;
  int restarts_used = 0;
  const int restarts = std::max(spec.restarts, 1);

  for (int r = 0; r < restarts; ++r) {
    PlanContext ctx;
    ctx.group = &group;
    ctx.n_target = spec.n_target;
    ctx.t = spec.t;
    Eigen::VectorXd x;

    if (r == 0 && start != nullptr) {
      // Split the caller's representatives into frozen axis orbits and free
      // ones so the polish moves exactly the published degrees of freedom.
      std::vector<Eigen::Vector3d> fixed, generic;
      for (Eigen::Index c = 0; c < start->representatives.cols(); ++c) {
        const Eigen::Vector3d rep = start->representatives.col(c).normalized();
        if (orbit(group, rep).cols() < group.order())
          fixed.push_back(rep);
        else
          generic.push_back(rep);
      }
      ctx.fixed.resize(3, static_cast<Eigen::Index>(fixed.size()));
      for (std::size_t i = 0; i < fixed.size(); ++i) ctx.fixed.col(i) = fixed[i];
      ctx.generic_orbits = static_cast<int>(generic.size());
      x.resize(2 * generic.size());
      for (std::size_t i = 0; i < generic.size(); ++i) {
        const Eigen::Vector3d& p = generic[i];
        x[2 * i] = std::acos(std::clamp(p.z(), -1.0, 1.0));
        x[2 * i + 1] = std::atan2(p.y(), p.x());
      }
    } else {
      if (plans.empty()) break;
      const OrbitPlan& plan = plans[r % plans.size()];
      ctx.fixed.resize(3, static_cast<Eigen::Index>(plan.special_indices.size()));
      for (std::size_t i = 0; i < plan.special_indices.size(); ++i)
        ctx.fixed.col(i) = special[plan.special_indices[i]].representative;
      ctx.generic_orbits = plan.generic_orbits;
      std::mt19937_64 rng(spec.seed + 0x9E3779B97F4A7C15ull * (r + 1));
      std::normal_distribution<double> gauss(0.0, 1.0);
      x.resize(2 * plan.generic_orbits);
      for (int i = 0; i < plan.generic_orbits; ++i) {
        Eigen::Vector3d p(gauss(rng), gauss(rng), gauss(rng));
        while (p.norm() < 1e-6) p = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
        p.normalize();
        x[2 * i] = std::acos(std::clamp(p.z(), -1.0, 1.0));
        x[2 * i + 1] = std::atan2(p.y(), p.x());
      }
    }

    RestartOutcome outcome = hookeJeeves(ctx, std::move(x), spec, total_iters);
    total_iters += outcome.iterations;
    restarts_used = r + 1;
    if (!best || outcome.value < best->value) {
      best = std::move(outcome);
      best_ctx = ctx;
    }
    if (best->value <= spec.criterion_stop) break;
  }

  if (!best || !std::isfinite(best->value))
    throw std::runtime_error("search: every restart produced a degenerate configuration");

  Eigen::Matrix3Xd reps = assembleReps(best_ctx, best->angles);
  DesignMeta meta;
  meta.target_t = spec.t;
  meta.group = spec.group_label;
  meta.source = "pattern search";
  Design design = configToDesign({group, reps});
  design.meta() = std::move(meta);

  MomentReport report = verifiedStrength(design.points(), std::max(spec.t, 1), spec.verify_tol);
  return SearchResult{std::move(design), std::move(report), total_iters, restarts_used,
                      best->value <= spec.criterion_stop};
}

LadderResult strengthLadder(int n, const std::vector<std::string>& group_labels, int t_start,
                            const SearchSpec& base) {
  LadderResult ladder;
  for (int t = std::max(t_start, 1);; ++t) {
    bool any = false;
    int best_order = -1;
    for (const std::string& label : group_labels) {
      const PointGroup group = groupFromLabel(label);
      if (orbitPlans(group, n).empty()) continue;
      SearchSpec spec = base;
      spec.n_target = n;
      spec.t = t;
      spec.group_label = label;
      SearchResult res = patternSearch(spec);
      if (!res.converged) continue;
      if (group.order() > best_order) {
        best_order = group.order();
        ladder.t = t;
        ladder.result = std::move(res);
      }
      any = true;
    }
    if (!any) break;
  }
  return ladder;
}

}  // namespace sphdesign
