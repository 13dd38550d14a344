#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphdesign {

// Rational generating function num/den with integer coefficients, ascending.
// Expansion is exact integer long division (den must have constant term 1).
struct RationalSeries {
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;

  std::vector<std::int64_t> expand(int limit) const {
    if (den.empty() || den[0] != 1)
      throw std::invalid_argument("series expansion needs constant denominator term 1");
    std::vector<std::int64_t> d(static_cast<std::size_t>(limit) + 1, 0);
    for (int j = 0; j <= limit; ++j) {
      std::int64_t v = j < static_cast<int>(num.size()) ? num[j] : 0;
      for (int k = 1; k <= j && k < static_cast<int>(den.size()); ++k) v -= den[k] * d[j - k];
      d[j] = v;
    }
    return d;
  }
};

// Invariant-dimension series for the chiral tetrahedral group acting on
// degree-j harmonic polynomials: (1 + x^6) / ((1 - x^3)(1 - x^4)).
inline RationalSeries snubInvariantSeries() {
  RationalSeries s;
  s.num = {1, 0, 0, 0, 0, 0, 1};
  s.den = {1, 0, 0, -1, -1, 0, 0, 1};  // (1 - x^3)(1 - x^4)
  return s;
}

// d_j: number of independent invariants in degree j, j = 0..limit.
inline std::vector<std::int64_t> invariantDims(int limit) {
  if (limit < 0) throw std::invalid_argument("invariantDims: negative limit");
  return snubInvariantSeries().expand(limit);
}

// e_t = sum of d_j for 1 <= j <= t: number of side conditions a symmetric
// orbit family must satisfy to average all degrees through t.
inline std::int64_t conditionCount(int t) {
  if (t < 0) throw std::invalid_argument("conditionCount: negative t");
  const std::vector<std::int64_t> d = invariantDims(t);
  std::int64_t e = 0;
  for (int j = 1; j <= t; ++j) e += d[j];
  return e;
}

// Closed form of conditionCount for t >= 6.
inline std::int64_t conditionCountClosed(int t) {
  if (t < 6) throw std::invalid_argument("conditionCountClosed: needs t >= 6");
  static constexpr std::int64_t A[12] = {0, 0, 0, 1, 2, 2, 3, 4, 5, 6, 7, 8};
  const std::int64_t q1 = t / 12, q2 = (t - 6) / 12;
  return q1 * (t - 6 * q1 - 5) + q2 * (t - 6 - 6 * q2 - 5) + 9 * q1 + 9 * q2 + A[t % 12] +
         A[(t - 6) % 12] + 1;
}

// Predicted point count 12 * ceil(e_t / 2) for the tetrahedral orbit family.
// For t <= 5 a single orbit (12 points) already suffices.
inline int predictedPoints(int t) {
  if (t < 3) throw std::invalid_argument("predictedPoints: needs t >= 3");
  if (t <= 5) return 12;
  const std::int64_t e = conditionCount(t);
  return static_cast<int>(12 * ((e + 1) / 2));
}

// The count is conservative where smaller designs are known to exist; the
// single documented case in range is t = 7 (24 points beat the predicted 36).
inline bool predictionConservative(int t) { return t == 7; }

}  // namespace sphdesign
