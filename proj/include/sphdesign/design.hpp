#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sphdesign {

using Real = double;

template <typename Scalar>
using Matrix3X = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

// Two points closer than this are treated as the same point.
inline constexpr Real kPointTol = 1e-9;

struct DesignMeta {
  std::optional<int> target_t;
  std::optional<std::string> group;
  std::optional<std::string> source;
  bool requires_polish = false;
};

// An ordered set of n >= 1 distinct unit vectors plus provenance metadata.
// Columns are normalized on construction; near-duplicate columns are rejected.
class Design {
public:
  explicit Design(Eigen::Matrix3Xd points, DesignMeta meta = {})
      : points_(std::move(points)), meta_(std::move(meta)) {
    if (points_.cols() < 1) throw std::invalid_argument("design: needs at least one point");
    for (Eigen::Index i = 0; i < points_.cols(); ++i) {
      const double norm = points_.col(i).norm();
      if (!(norm > 1e-12)) throw std::invalid_argument("design: zero-length point");
      if (std::abs(norm - 1.0) > 4e-16) points_.col(i) /= norm;
    }
    for (Eigen::Index i = 0; i < points_.cols(); ++i)
      for (Eigen::Index j = i + 1; j < points_.cols(); ++j)
        if ((points_.col(i) - points_.col(j)).norm() < kPointTol)
          throw std::invalid_argument("design: duplicate points at columns " + std::to_string(i) +
                                      " and " + std::to_string(j));
  }

  int n() const { return static_cast<int>(points_.cols()); }
  const Eigen::Matrix3Xd& points() const { return points_; }
  const DesignMeta& meta() const { return meta_; }
  DesignMeta& meta() { return meta_; }

private:
  Eigen::Matrix3Xd points_;
  DesignMeta meta_;
};

}  // namespace sphdesign
