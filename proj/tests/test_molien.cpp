#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sphdesign/molien.hpp"

using namespace sphdesign;

TEST_CASE("series expansion of the invariant counting function") {
  const std::vector<long>& d = invariantDims(16);
  REQUIRE(d.size() >= 13);
  CHECK(d[0] == 1);
  CHECK(d[1] == 0);
  CHECK(d[2] == 0);
  CHECK(d[3] == 1);
  CHECK(d[4] == 1);
  CHECK(d[5] == 0);
  CHECK(d[6] == 2);
  CHECK(d[7] == 1);
  CHECK(d[8] == 1);
  CHECK(d[12] == 3);
}

TEST_CASE("series coefficients match direct lattice counting") {
  const std::vector<long>& d = invariantDims(600);
  for (int j = 0; j <= 600; ++j) CHECK(d[j] == oracle::invariantCount(j));
}

TEST_CASE("cumulative condition counts") {
  CHECK(conditionCount(6) == 4);
  CHECK(conditionCount(7) == 5);
  CHECK(conditionCount(10) == 10);
  CHECK(conditionCount(13) == 16);
}

TEST_CASE("closed form equals the series for all supported strengths") {
  for (int t = 6; t <= 500; ++t) CHECK(conditionCountClosed(t) == conditionCount(t));
}

TEST_CASE("predicted point counts across the published range") {
  const std::vector<int> expected = {12, 12, 12, 24, 36, 36, 48, 60, 72, 84, 96,
                                     108, 132, 144, 156, 180, 204, 216, 240, 264,
                                     288, 312};
  for (int t = 3; t <= 24; ++t) CHECK(predictedPoints(t) == expected[t - 3]);
  CHECK_THROWS_AS(predictedPoints(2), std::invalid_argument);
}

TEST_CASE("only one strength is flagged conservative") {
  for (int t = 3; t <= 24; ++t) CHECK(predictionConservative(t) == (t == 7));
}

TEST_CASE("predictions grow like half the squared strength") {
  for (int t = 200; t <= 500; t += 25) {
    const double ratio = predictedPoints(t) / (t * t / 2.0);
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
  }
}

TEST_CASE("rational series division is exact") {
  // 1/(1-x) expands to all ones.
  RationalSeries geo{{1}, {1, -1}};
  const std::vector<long> ones = geo.expand(10);
  for (long v : ones) CHECK(v == 1);
}
