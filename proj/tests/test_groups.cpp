#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sphdesign/constructions.hpp"
#include "sphdesign/groups.hpp"

using namespace sphdesign;

namespace {

const std::vector<std::pair<std::string, int>>& labelOrders() {
  static const std::vector<std::pair<std::string, int>> table = {
      {"[1]+", 1},    {"[1]", 2},     {"[2]+", 2},    {"[3]+", 3},    {"[4]+", 4},
      {"[5]+", 5},    {"[3]", 6},     {"[4]", 8},     {"[2,2]+", 4},  {"[2,3]+", 6},
      {"[2,4]+", 8},  {"[2,5]+", 10}, {"[2,3]", 12},  {"[2,4]", 16},  {"[2,5]", 20},
      {"[2,3+]", 6},  {"[2,5+]", 10}, {"[2+,4]", 8},  {"[2+,6]", 12}, {"[2+,10]", 20},
      {"[2+,2+]", 2}, {"[2+,4+]", 4}, {"[2+,10+]", 10}, {"[3,3]+", 12}, {"[3,3]", 24},
      {"[3+,4]", 24}, {"[3,4]+", 24}, {"[3,4]", 48},  {"[3,5]+", 60}, {"[3,5]", 120}};
  return table;
}

}  // namespace

TEST_CASE("group orders across the label catalog") {
  for (const auto& [label, order] : labelOrders()) {
    const PointGroup g = groupFromLabel(label);
    CHECK(g.order() == order);
    CHECK(g.label() == label);
    CHECK(static_cast<int>(g.elements().size()) == order);
  }
}

TEST_CASE("group elements are orthogonal with determinant +-1") {
  for (const auto& [label, order] : labelOrders()) {
    const PointGroup g = groupFromLabel(label);
    bool identity_first = g.elements().front().isApprox(Eigen::Matrix3d::Identity(), 1e-14);
    CHECK(identity_first);
    bool any_improper = false;
    for (const Eigen::Matrix3d& m : g.elements()) {
      CHECK((m.transpose() * m - Eigen::Matrix3d::Identity()).norm() < 1e-12);
      const double det = m.determinant();
      CHECK(std::abs(std::abs(det) - 1.0) < 1e-12);
      if (det < 0) any_improper = true;
    }
    CHECK(g.hasImproper() == any_improper);
  }
}

TEST_CASE("chiral labels produce rotation-only groups") {
  for (const auto& [label, order] : labelOrders()) {
    if (label.size() < 2 || label.substr(label.size() - 2) != "]+") continue;
    CHECK_FALSE(groupFromLabel(label).hasImproper());
  }
}

TEST_CASE("group elements are closed under multiplication") {
  for (const std::string label : {"[2,5]", "[3,3]+", "[2+,10]", "[3,4]+"}) {
    const PointGroup g = groupFromLabel(label);
    for (const Eigen::Matrix3d& a : g.elements()) {
      for (const Eigen::Matrix3d& b : g.elements()) {
        const Eigen::Matrix3d p = a * b;
        bool found = false;
        for (const Eigen::Matrix3d& c : g.elements())
          if ((p - c).norm() < 1e-9) {
            found = true;
            break;
          }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("unknown labels are rejected") {
  CHECK_THROWS_AS(groupFromLabel("[6,7]"), std::invalid_argument);
  CHECK_THROWS_AS(groupFromLabel("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(groupFromLabel(""), std::invalid_argument);
}

TEST_CASE("orbit sizes for generic and special representatives") {
  const PointGroup octa = groupFromLabel("[3,4]+");
  Eigen::Vector3d generic(0.3, 0.5, 0.81);
  generic.normalize();
  CHECK(orbit(octa, generic).cols() == 24);
  CHECK(orbit(octa, Eigen::Vector3d(1, 0, 0)).cols() == 6);
  CHECK(orbit(octa, Eigen::Vector3d(1, 1, 1).normalized()).cols() == 8);

  const PointGroup ico = groupFromLabel("[3,5]");
  CHECK(orbit(ico, referenceSolid("icosahedron").points().col(0)).cols() == 12);
}

TEST_CASE("orbit of the dozen-element rotation group keeps cyclic structure") {
  const PointGroup g = groupFromLabel("[3,3]+");
  Eigen::Vector3d rep(0.74, 0.24, 0.62);
  rep.normalize();
  const Eigen::Matrix3Xd orb = orbit(g, rep);
  REQUIRE(orb.cols() == 12);
  const double a = rep.x(), b = rep.y(), c = rep.z();
  for (Eigen::Index i = 0; i < orb.cols(); ++i) {
    const Eigen::Vector3d p = orb.col(i);
    // Every image is a cyclic shift of (|a|,|b|,|c|) with an even number of
    // sign flips, so the product of the coordinates keeps its sign.
    const Eigen::Vector3d mags = p.cwiseAbs();
    const bool cyclic =
        (std::abs(mags.x() - a) < 1e-12 && std::abs(mags.y() - b) < 1e-12 &&
         std::abs(mags.z() - c) < 1e-12) ||
        (std::abs(mags.x() - b) < 1e-12 && std::abs(mags.y() - c) < 1e-12 &&
         std::abs(mags.z() - a) < 1e-12) ||
        (std::abs(mags.x() - c) < 1e-12 && std::abs(mags.y() - a) < 1e-12 &&
         std::abs(mags.z() - b) < 1e-12);
    CHECK(cyclic);
    CHECK(p.x() * p.y() * p.z() > 0);
  }
}

TEST_CASE("orbit sizes divide the group order") {
  std::mt19937_64 rng(31);
  for (const auto& [label, order] : labelOrders()) {
    const PointGroup g = groupFromLabel(label);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Matrix3Xd pts = oracle::randomUnitPoints(1, rng);
      const auto size = orbit(g, pts.col(0)).cols();
      CHECK(size >= 1);
      CHECK(order % size == 0);
    }
  }
}

TEST_CASE("special orbits are zero-dimensional strata") {
  const PointGroup g = groupFromLabel("[3,4]+");
  const std::vector<SpecialOrbit> specials = specialOrbits(g);
  std::multiset<int> sizes;
  for (const SpecialOrbit& s : specials) {
    CHECK(orbit(g, s.representative).cols() == s.size);
    CHECK(s.size < g.order());
    sizes.insert(s.size);
  }
  CHECK(sizes == std::multiset<int>({6, 8, 12}));

  std::multiset<int> d3;
  for (const SpecialOrbit& s : specialOrbits(groupFromLabel("[2,3]+"))) d3.insert(s.size);
  CHECK(d3 == std::multiset<int>({2, 3, 3}));
}

TEST_CASE("orbit configurations assemble into designs") {
  const PointGroup g = groupFromLabel("[3,3]+");
  std::mt19937_64 rng(43);
  OrbitConfig cfg{g, oracle::randomUnitPoints(3, rng)};
  const Design d = configToDesign(cfg);
  CHECK(d.n() == 36);
  CHECK(d.meta().group == g.label());

  OrbitConfig single{groupFromLabel("[1]+"), oracle::randomUnitPoints(5, rng)};
  CHECK(configToDesign(single).n() == 5);
}

TEST_CASE("colliding orbits are rejected") {
  const PointGroup g = groupFromLabel("[3,4]+");
  Eigen::Matrix3Xd reps(3, 2);
  reps.col(0) = Eigen::Vector3d(1, 0, 0);
  reps.col(1) = Eigen::Vector3d(0, 1, 0);
  CHECK_THROWS_AS(configToDesign({g, reps}), std::runtime_error);
}

TEST_CASE("angle parametrization round-trips representatives") {
  const PointGroup g = groupFromLabel("[3,3]+");
  std::mt19937_64 rng(57);
  Eigen::Matrix3Xd reps = oracle::randomUnitPoints(4, rng);
  reps.col(3) = Eigen::Vector3d(0, 0, 1);
  const OrbitConfig cfg{g, reps};
  const Eigen::VectorXd angles = parametrize(cfg);
  CHECK(angles.size() == 8);
  const OrbitConfig back = unparametrize(g, angles);
  REQUIRE(back.representatives.cols() == reps.cols());
  for (Eigen::Index i = 0; i < reps.cols(); ++i)
    CHECK((back.representatives.col(i) - reps.col(i)).norm() < 1e-12);

  const Design fixture36 = fixture("table3-36-8");
  Eigen::Matrix3Xd triple(3, 3);
  for (int k = 0; k < 3; ++k) triple.col(k) = fixture36.points().col(12 * k);
  const Eigen::VectorXd a2 = parametrize({g, triple});
  const OrbitConfig b2 = unparametrize(g, a2);
  for (int k = 0; k < 3; ++k)
    CHECK((b2.representatives.col(k) - triple.col(k)).norm() < 1e-12);
}

TEST_CASE("symmetry detection recovers full and chiral groups") {
  const SymmetryMatch ico = detectSymmetry(referenceSolid("icosahedron"), 1e-9);
  CHECK(ico.label == "[3,5]");
  CHECK(ico.order == 120);

  const SymmetryMatch snub = detectSymmetry(improvedSnubCube(), 1e-9);
  CHECK(snub.label == "[3,4]+");
  CHECK(snub.order == 24);

  const SymmetryMatch cube = detectSymmetry(referenceSolid("cube"), 1e-9);
  CHECK(cube.label == "[3,4]");
  CHECK(cube.order == 48);
}

TEST_CASE("symmetry detection labels collinear sets as axial") {
  Eigen::Matrix3Xd pair(3, 2);
  pair.col(0) = Eigen::Vector3d(0, 0, 1);
  pair.col(1) = Eigen::Vector3d(0, 0, -1);
  const SymmetryMatch m = detectSymmetry(Design(pair), 1e-9);
  CHECK(m.label == "inf");
  CHECK(m.order == 0);
}

TEST_CASE("generic clouds detect as trivial") {
  std::mt19937_64 rng(71);
  const Design d(oracle::randomUnitPoints(3, rng));
  const SymmetryMatch m = detectSymmetry(d, 1e-9);
  CHECK(m.label == "[1]+");
  CHECK(m.order == 1);
}

TEST_CASE("detected symmetry contains the generating group") {
  std::mt19937_64 rng(83);
  for (const std::string label : {"[2,3]+", "[3,3]+", "[2+,6]", "[4]", "[2,5]"}) {
    const PointGroup g = groupFromLabel(label);
    Eigen::Matrix3Xd reps = oracle::randomUnitPoints(2, rng);
    const Design d = configToDesign({g, reps});
    const SymmetryMatch m = detectSymmetry(d, 1e-8);
    CHECK(m.order >= g.order());
    CHECK(m.order % g.order() == 0);
  }
}
