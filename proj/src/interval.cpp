#include "sphdesign/interval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sphdesign {

namespace {

// Power-sum residuals for pair values q_j in (0, 1): for each even k <= t,
// (2/n) sum q_j^(k/2 doubled) must equal 1/(k+1). The optional midpoint 0
// contributes nothing to even powers.
Eigen::VectorXd residuals(const Eigen::VectorXd& q, int n, int t) {
  const int m = t / 2;
  Eigen::VectorXd r(m);
  for (int k = 1; k <= m; ++k) {
    double s = 0;
    for (Eigen::Index j = 0; j < q.size(); ++j) s += std::pow(q[j], 2 * k);
    r[k - 1] = 2.0 * s / n - 1.0 / (2 * k + 1);
  }
  return r;
}

Eigen::MatrixXd jacobian(const Eigen::VectorXd& q, int n, int t) {
  const int m = t / 2;
  Eigen::MatrixXd jac(m, q.size());
  for (int k = 1; k <= m; ++k)
    for (Eigen::Index j = 0; j < q.size(); ++j)
      jac(k - 1, j) = 2.0 * 2 * k * std::pow(q[j], 2 * k - 1) / n;
  return jac;
}

bool solvePairs(Eigen::VectorXd& q, int n, int t) {
  for (int iter = 0; iter < 400; ++iter) {
    const Eigen::VectorXd r = residuals(q, n, t);
    if (r.lpNorm<Eigen::Infinity>() < 1e-15) return true;
    const Eigen::MatrixXd jac = jacobian(q, n, t);
    // Minimum-norm Gauss-Newton step; handles the underdetermined case.
    Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-r);
    double lambda = 1.0;
    const double base = r.squaredNorm();
    bool moved = false;
    for (int half = 0; half < 30; ++half) {
      Eigen::VectorXd trial = q + lambda * step;
      for (Eigen::Index j = 0; j < trial.size(); ++j)
        trial[j] = std::clamp(trial[j], 1e-8, 1.0 - 1e-12);
      if (residuals(trial, n, t).squaredNorm() < base) {
        q = trial;
        moved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!moved) return residuals(q, n, t).lpNorm<Eigen::Infinity>() < 1e-15;
  }
  return residuals(q, n, t).lpNorm<Eigen::Infinity>() < 1e-15;
}

bool distinctPairs(const Eigen::VectorXd& q) {
  for (Eigen::Index i = 0; i < q.size(); ++i)
    for (Eigen::Index j = i + 1; j < q.size(); ++j)
      if (std::abs(q[i] - q[j]) < 1e-7) return false;
  return true;
}

}  // namespace

int minIntervalPoints(int t) {
  static constexpr int table[] = {0, 1, 2, 2, 4, 4, 6, 6, 9, 9, 13, 13};
  if (t < 1 || t > 11) throw std::invalid_argument("minIntervalPoints: t must be in 1..11");
  return table[t];
}

IntervalDesign intervalDesign(int n, int t) {
  const int n_min = minIntervalPoints(t);  // also validates t
  if (n < n_min)
    throw std::invalid_argument("intervalDesign: " + std::to_string(n) +
                                " points cannot reach strength " + std::to_string(t));

  const int pairs = n / 2;
  const int m = t / 2;
  IntervalDesign out;
  out.t = t;

  Eigen::VectorXd q(pairs);
  if (m == 0 || pairs == 0) {
    // No even-power conditions to meet (or only the midpoint); spread pairs
    // evenly for a canonical result.
    for (int j = 0; j < pairs; ++j) q[j] = (j + 1.0) / (pairs + 1.0);
  } else {
    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ull);
    bool solved = false;
    for (int attempt = 0; attempt < 64 && !solved; ++attempt) {
      if (attempt == 0) {
        for (int j = 0; j < pairs; ++j) q[j] = (j + 0.75) / (pairs + 0.5);
      } else {
        std::uniform_real_distribution<double> u(0.05, 0.98);
        for (int j = 0; j < pairs; ++j) q[j] = u(rng);
        std::sort(q.data(), q.data() + pairs);
      }
      solved = solvePairs(q, n, t) && distinctPairs(q);
    }
    if (!solved)
      throw std::runtime_error("intervalDesign: solver failed for n=" + std::to_string(n) +
                               " t=" + std::to_string(t));
  }

  std::sort(q.data(), q.data() + pairs);
  for (int j = pairs - 1; j >= 0; --j) out.points.push_back(-q[j]);
  if (n % 2 != 0) out.points.push_back(0.0);
  for (int j = 0; j < pairs; ++j) out.points.push_back(q[j]);
  return out;
}

Design latitudeProduct(const IntervalDesign& iv, int m, std::span<const double> phases) {
  if (m < iv.t + 1)
    throw std::invalid_argument("latitudeProduct: need at least t+1 vertices per ring");
  if (!phases.empty() && phases.size() != iv.points.size())
    throw std::invalid_argument("latitudeProduct: one phase per latitude required");
  const std::size_t rings = iv.points.size();
  Eigen::Matrix3Xd pts(3, static_cast<Eigen::Index>(rings * m));
  Eigen::Index at = 0;
  for (std::size_t r = 0; r < rings; ++r) {
    const double z = iv.points[r];
    const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phase = phases.empty() ? 0.0 : phases[r];
    for (int k = 0; k < m; ++k) {
      const double ang = phase + 2 * std::numbers::pi * k / m;
      pts.col(at++) = Eigen::Vector3d(rad * std::cos(ang), rad * std::sin(ang), z);
    }
  }
  DesignMeta meta;
  meta.target_t = iv.t;
  meta.source = "latitude product";
  return Design(std::move(pts), std::move(meta));
}

Design designUnion(const Design& a, const Design& b) {
  std::mt19937_64 rng(0x7c0ffee5eedull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::Matrix3Xd pts(3, a.n() + b.n());
    pts.leftCols(a.n()) = a.points();
    pts.rightCols(b.n()) = rot * b.points();
    bool clear = true;
    for (int i = 0; i < a.n() && clear; ++i)
      for (int j = 0; j < b.n() && clear; ++j)
        if ((pts.col(i) - pts.col(a.n() + j)).norm() < kPointTol) clear = false;
    if (clear) {
      DesignMeta meta;
      if (a.meta().target_t && b.meta().target_t)
        meta.target_t = std::min(*a.meta().target_t, *b.meta().target_t);
      meta.source = "union";
      return Design(std::move(pts), std::move(meta));
    }
    // Uniform random rotation from a normalized quaternion.
    Eigen::Quaterniond quat(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    quat.normalize();
    rot = quat.toRotationMatrix();
  }
  throw std::runtime_error("designUnion: could not avoid collisions");
}

int lowerBound(int t) {
  if (t < 0) throw std::invalid_argument("lowerBound: negative t");
  if (t == 0) return 1;
  int base;
  if (t % 2 == 0)
    base = (t + 2) * (t + 2) / 4;
  else
    base = (t + 1) * (t + 3) / 4;
  // The bound tightens by one except in the handful of small cases where
  // tight configurations (antipodal pair, tetrahedron, octahedron,
  // icosahedron) actually exist.
  if (t >= 4 && t != 5) base += 1;
  return base;
}

}  // namespace sphdesign
