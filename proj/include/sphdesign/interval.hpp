#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "sphdesign/design.hpp"

namespace sphdesign {

// Equal-weight quadrature on [-1, 1]: (1/n) sum p_i^k = 1/(k+1) for even
// k <= t, zero for odd k by point symmetry.
struct IntervalDesign {
  std::vector<double> points;  // ascending, symmetric about 0
  int t = 0;
};

// Smallest n for which an equal-weight symmetric design of strength t exists,
// t = 1..11. Larger t is out of range.
int minIntervalPoints(int t);

// Symmetric-ansatz solver: pairs +-a_j plus 0 when n is odd. Rejects t > 11
// and n below the minimum; solver failure after deterministic restarts throws.
IntervalDesign intervalDesign(int n, int t);

// Regular m-gons of m >= t+1 vertices placed at the latitudes of an interval
// design lift its strength to the sphere. phases rotates individual rings.
Design latitudeProduct(const IntervalDesign& iv, int m, std::span<const double> phases = {});

// Concatenation of two designs; the common strength is preserved. When point
// sets collide, b is retried under a deterministic sequence of random
// rotations until the union is collision-free.
Design designUnion(const Design& a, const Design& b);

// Smallest conceivable number of points for a spherical design of strength t.
int lowerBound(int t);

}  // namespace sphdesign
