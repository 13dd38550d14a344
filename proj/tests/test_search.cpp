#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sphdesign/constructions.hpp"
#include "sphdesign/groups.hpp"
#include "sphdesign/moments.hpp"
#include "sphdesign/polynomial.hpp"
#include "sphdesign/search.hpp"

using namespace sphdesign;

namespace {

// Sorted list of pairwise inner products; a rigid-motion invariant fingerprint.
std::vector<double> dotSpectrum(const Design& d) {
  std::vector<double> dots;
  const auto& p = d.points();
  for (Eigen::Index i = 0; i < p.cols(); ++i)
    for (Eigen::Index j = i + 1; j < p.cols(); ++j) dots.push_back(p.col(i).dot(p.col(j)));
  std::sort(dots.begin(), dots.end());
  return dots;
}

Eigen::Matrix3Xd orbitRepresentatives(const Design& d, int orbit_size, int count) {
  Eigen::Matrix3Xd reps(3, count);
  for (int k = 0; k < count; ++k) reps.col(k) = d.points().col(k * orbit_size);
  return reps;
}

}  // namespace

TEST_CASE("zero-freedom plans land on the icosahedron immediately") {
  SearchSpec spec;
  spec.n_target = 12;
  spec.t = 5;
  spec.group_label = "[3,5]";
  spec.restarts = 1;
  const SearchResult r = patternSearch(spec);
  CHECK(r.converged);
  CHECK(r.design.n() == 12);
  CHECK(r.report.criterion < 1e-28);

  const std::vector<double> got = dotSpectrum(r.design);
  const std::vector<double> want = dotSpectrum(referenceSolid("icosahedron"));
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
}

TEST_CASE("polishing the published 36 point fixture reaches full precision") {
  const Design start = fixture("table3-36-8");
  const PointGroup g = groupFromLabel("[3,3]+");
  const OrbitConfig cfg{g, orbitRepresentatives(start, 12, 3)};

  SearchSpec spec;
  spec.n_target = 36;
  spec.t = 8;
  spec.group_label = g.label();
  spec.restarts = 1;
  spec.step_init = 1e-4;
  spec.step_min = 1e-15;
  spec.max_iters = 20000;
  const SearchResult r = patternSearch(spec, &cfg);
  CHECK(r.design.n() == 36);
  CHECK(r.report.criterion <= 1e-24);
  CHECK(discrepancy(r.design, 8) <= 1e-24);
  CHECK(verifiedStrength(r.design, 8, 1e-24).verified_t == 8);
  // The polish must stay in the same basin.
  const std::vector<double> got = dotSpectrum(r.design);
  const std::vector<double> want = dotSpectrum(start);
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-3);
}

TEST_CASE("polishing the 48 point estimate certifies its magnitudes") {
  const Design seed = design48_9Seed();
  const PointGroup g = groupFromLabel("[3,4]+");
  const OrbitConfig cfg{g, orbitRepresentatives(seed, 24, 2)};

  SearchSpec spec;
  spec.n_target = 48;
  spec.t = 9;
  spec.group_label = g.label();
  spec.restarts = 1;
  spec.step_init = 1e-3;
  spec.step_min = 1e-15;
  spec.max_iters = 20000;
  const SearchResult r = patternSearch(spec, &cfg);
  CHECK(r.report.criterion <= 1e-24);
  CHECK(verifiedStrength(r.design, 9, 1e-24).verified_t == 9);

  // All six coordinate magnitudes of the polished representatives satisfy the
  // degree-36 certificate polynomial.
  const EvenPolynomial cert = design48Polynomial();
  for (int k : {0, 24}) {
    const Eigen::Vector3d rep = r.design.points().col(k);
    for (int c = 0; c < 3; ++c) {
      CHECK(relativeResidual(cert, std::abs(rep[c])) < 1e-8);
    }
  }
}

TEST_CASE("polishing the 23 point estimate yields a strength five design") {
  const Design seed = design23_5Seed();
  const PointGroup g = groupFromLabel("[2]+");

  // Fixed pole plus eleven free orbits: the pole, the two on-axis singletons
  // promoted by the half-turn, and nine generic pairs.
  Eigen::Matrix3Xd reps(3, 12);
  reps.col(0) = seed.points().col(4);
  reps.col(1) = seed.points().col(0);
  reps.col(2) = seed.points().col(2);
  for (int k = 0; k < 9; ++k) reps.col(3 + k) = seed.points().col(5 + 2 * k);
  const OrbitConfig cfg{g, reps};

  SearchSpec spec;
  spec.n_target = 23;
  spec.t = 5;
  spec.group_label = g.label();
  spec.restarts = 1;
  spec.step_init = 5e-4;
  spec.step_min = 1e-14;
  spec.max_iters = 60000;
  const SearchResult r = patternSearch(spec, &cfg);
  CHECK(r.design.n() == 23);
  CHECK(r.report.criterion <= 1e-24);
  CHECK(verifiedStrength(r.design, 5, 1e-24).verified_t == 5);
}

TEST_CASE("a fresh search rediscovers the improved snub cube") {
  SearchSpec spec;
  spec.n_target = 24;
  spec.t = 7;
  spec.group_label = "[3,4]+";
  spec.restarts = 20;
  spec.seed = 2026;
  spec.step_min = 1e-15;
  const SearchResult r = patternSearch(spec);
  CHECK(r.converged);
  CHECK(r.report.criterion <= 1e-24);
  CHECK(r.restarts_used <= 20);

  const std::vector<double> got = dotSpectrum(r.design);
  const std::vector<double> want = dotSpectrum(improvedSnubCube());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-6);
}

TEST_CASE("searches are deterministic for a fixed seed") {
  SearchSpec spec;
  spec.n_target = 8;
  spec.t = 3;
  spec.group_label = "[2,4]+";
  spec.restarts = 3;
  spec.seed = 99;
  spec.max_iters = 4000;
  const SearchResult a = patternSearch(spec);
  const SearchResult b = patternSearch(spec);
  REQUIRE(a.design.n() == b.design.n());
  CHECK(a.iterations == b.iterations);
  CHECK(a.report.criterion == b.report.criterion);
  CHECK((a.design.points().array() == b.design.points().array()).all());
}

TEST_CASE("objective values fall monotonically within a restart") {
  SearchSpec spec;
  spec.n_target = 6;
  spec.t = 2;
  spec.group_label = "[1]+";
  spec.restarts = 1;
  spec.seed = 5;
  spec.max_iters = 800;
  std::vector<double> trace;
  spec.progress = [&trace](long, double f) { trace.push_back(f); };
  patternSearch(spec);
  REQUIRE(trace.size() > 1);
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1] + 1e-30);
}

TEST_CASE("impossible targets report failure honestly") {
  SearchSpec spec;
  spec.n_target = 14;
  spec.t = 5;
  spec.group_label = "[2,3]+";
  spec.restarts = 6;
  spec.seed = 1;
  spec.max_iters = 2500;
  const SearchResult r = patternSearch(spec);
  CHECK_FALSE(r.converged);
  CHECK(r.report.criterion > 1e-20);
}

TEST_CASE("searches without any feasible orbit plan are rejected") {
  SearchSpec spec;
  spec.n_target = 13;
  spec.t = 3;
  spec.group_label = "[3,4]+";
  CHECK_THROWS_AS(patternSearch(spec), std::invalid_argument);
}

TEST_CASE("plan enumeration respects special orbits and group order") {
  const PointGroup g = groupFromLabel("[3,4]+");
  const std::vector<OrbitPlan> p24 = orbitPlans(g, 24);
  REQUIRE_FALSE(p24.empty());
  CHECK(p24.front().special_indices.empty());
  CHECK(p24.front().generic_orbits == 1);

  const std::vector<OrbitPlan> p30 = orbitPlans(g, 30);
  REQUIRE_FALSE(p30.empty());
  bool has_axis_plan = false;
  for (const OrbitPlan& plan : p30)
    if (plan.special_indices.size() == 1 && plan.generic_orbits == 1) has_axis_plan = true;
  CHECK(has_axis_plan);

  CHECK(orbitPlans(g, 13).empty());
}

TEST_CASE("the strength ladder climbs to the known maxima") {
  SearchSpec base;
  base.restarts = 2;
  base.max_iters = 2500;
  base.seed = 7;

  const LadderResult r12 = strengthLadder(12, {"[3,5]", "[3,4]", "[2+,10]"}, 1, base);
  CHECK(r12.t == 5);
  REQUIRE(r12.result.has_value());
  CHECK(r12.result->design.meta().group == "[3,5]");

  const LadderResult r4 = strengthLadder(4, {"[3,3]", "[3,3]+"}, 1, base);
  CHECK(r4.t == 2);

  const LadderResult r2 = strengthLadder(2, {"[2,3]+"}, 1, base);
  CHECK(r2.t == 1);
}
