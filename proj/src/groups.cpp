#include "sphdesign/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphdesign {
namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;

constexpr double kMatchTol = 1e-9;  // element and orbit-point identity

Matrix3d rotZ(double angle) {
  Matrix3d m;
  const double c = std::cos(angle), s = std::sin(angle);
  m << c, -s, 0, s, c, 0, 0, 0, 1;
  return m;
}

Matrix3d diag(double a, double b, double c) {
  return Eigen::Vector3d(a, b, c).asDiagonal().toDenseMatrix();
}

// x -> y -> z -> x
Matrix3d cyclic() {
  Matrix3d m;
  m << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  return m;
}

Matrix3d swapXY() {
  Matrix3d m;
  m << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  return m;
}

bool sameMatrix(const Matrix3d& a, const Matrix3d& b) {
  return (a - b).norm() < kMatchTol;
}

std::vector<Matrix3d> closure(const std::vector<Matrix3d>& generators, int expected_order,
                              const std::string& label) {
  std::vector<Matrix3d> els;
  els.push_back(Matrix3d::Identity());
  for (std::size_t head = 0; head < els.size(); ++head) {
    for (const Matrix3d& g : generators) {
      const Matrix3d p = els[head] * g;
      if ((p.transpose() * p - Matrix3d::Identity()).norm() > 1e-12)
        throw std::logic_error("group " + label + ": generator product not orthogonal");
      const bool known = std::any_of(els.begin(), els.end(),
                                     [&](const Matrix3d& e) { return sameMatrix(e, p); });
      if (!known) {
        els.push_back(p);
        if (static_cast<int>(els.size()) > expected_order)
          throw std::logic_error("group " + label + ": closure exceeds expected order");
      }
    }
  }
  if (static_cast<int>(els.size()) != expected_order)
    throw std::logic_error("group " + label + ": closure order mismatch");
  return els;
}

struct LabelParts {
  std::vector<std::pair<int, bool>> entries;  // value, trailing '+'
  bool outer_plus = false;
};

LabelParts parseLabel(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  LabelParts parts;
  std::size_t i = 0;
  auto fail = [&]() -> void { throw std::invalid_argument("bad group label: " + raw); };
  if (i >= s.size() || s[i] != '[') fail();
  ++i;
  while (true) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail();
    int value = std::stoi(s.substr(start, i - start));
    bool plus = false;
    if (i < s.size() && s[i] == '+') {
      plus = true;
      ++i;
    }
    parts.entries.emplace_back(value, plus);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= s.size() || s[i] != ']') fail();
  ++i;
  if (i < s.size() && s[i] == '+') {
    parts.outer_plus = true;
    ++i;
  }
  if (i != s.size()) fail();
  if (parts.entries.empty() || parts.entries.size() > 2) fail();
  return parts;
}

// Five-fold rotation about an icosahedron vertex compatible with the
// tetrahedral generators above (vertices (0, +-1, +-phi) and cyclic shifts).
Matrix3d icosahedralFive() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const Vector3d axis = Vector3d(0, 1, phi).normalized();
  return Eigen::AngleAxisd(2.0 * std::numbers::pi / 5.0, axis).toRotationMatrix();
}

}  // namespace

PointGroup::PointGroup(std::string label, std::vector<Eigen::Matrix3d> elements)
    : label_(std::move(label)), elements_(std::move(elements)) {
  for (const Matrix3d& e : elements_)
    if (e.determinant() < 0) {
      has_improper_ = true;
      break;
    }
}

PointGroup groupFromLabel(const std::string& label) {
  const LabelParts parts = parseLabel(label);
  const double pi = std::numbers::pi;
  const Matrix3d sigma_h = diag(1, 1, -1);   // mirror normal to z
  const Matrix3d sigma_v = diag(1, -1, 1);   // mirror containing z
  const Matrix3d c2x = diag(1, -1, -1);
  std::vector<Matrix3d> gens;
  int order = 0;

  if (parts.entries.size() == 1) {
    const auto [n, nplus] = parts.entries[0];
    if (n < 1 || nplus) throw std::invalid_argument("bad group label: " + label);
    gens.push_back(rotZ(2 * pi / n));
    if (parts.outer_plus) {
      order = n;  // [n]+ pure rotation
    } else {
      gens.push_back(sigma_v);  // [n] adds vertical mirrors
      order = 2 * n;
    }
    return PointGroup(label, closure(gens, order, label));
  }

  const auto [a, aplus] = parts.entries[0];
  const auto [b, bplus] = parts.entries[1];

  if (a == 2 && aplus && !parts.outer_plus) {
    if (b < 2 || b % 2 != 0) throw std::invalid_argument("bad group label: " + label);
    const Matrix3d s = rotZ(2 * pi / b) * sigma_h;  // rotoreflection of order b
    if (bplus) {
      gens = {s};  // [2+,2n+]
      order = b;
    } else {
      gens = {s, c2x};  // [2+,2n] antiprismatic
      order = 2 * b;
    }
    return PointGroup(label, closure(gens, order, label));
  }

  if (a == 2 && !aplus) {
    if (b < 1) throw std::invalid_argument("bad group label: " + label);
    if (parts.outer_plus) {
      if (bplus) throw std::invalid_argument("bad group label: " + label);
      gens = {rotZ(2 * pi / b), c2x};  // [2,n]+ dihedral
      order = 2 * b;
    } else if (bplus) {
      gens = {rotZ(2 * pi / b), sigma_h};  // [2,n+]
      order = 2 * b;
    } else {
      gens = {rotZ(2 * pi / b), c2x, sigma_h};  // [2,n]
      order = 4 * b;
    }
    return PointGroup(label, closure(gens, order, label));
  }

  if (a == 3) {
    const Matrix3d cyc = cyclic();
    const Matrix3d d2 = diag(1, -1, -1);
    if (!aplus && b == 3 && !bplus) {
      if (parts.outer_plus) {
        gens = {cyc, d2};  // [3,3]+ rotation tetrahedral
        order = 12;
      } else {
        gens = {cyc, d2, swapXY()};  // [3,3]
        order = 24;
      }
      return PointGroup(label, closure(gens, order, label));
    }
    if (aplus && b == 4 && !bplus && !parts.outer_plus) {
      gens = {cyc, d2, -Matrix3d::Identity()};  // [3+,4]
      order = 24;
      return PointGroup(label, closure(gens, order, label));
    }
    if (!aplus && b == 4 && !bplus) {
      gens = {cyc, rotZ(pi / 2)};  // four-fold plus three-fold
      order = 24;
      if (!parts.outer_plus) {
        gens.push_back(-Matrix3d::Identity());  // [3,4]
        order = 48;
      }
      return PointGroup(label, closure(gens, order, label));
    }
    if (!aplus && b == 5 && !bplus) {
      gens = {cyc, d2, icosahedralFive()};
      order = 60;
      if (!parts.outer_plus) {
        gens.push_back(-Matrix3d::Identity());  // [3,5]
        order = 120;
      }
      return PointGroup(label, closure(gens, order, label));
    }
  }

  throw std::invalid_argument("bad group label: " + label);
}

Eigen::Matrix3Xd orbit(const PointGroup& g, const Eigen::Vector3d& rep) {
  std::vector<Vector3d> pts;
  pts.reserve(g.order());
  for (const Matrix3d& e : g.elements()) {
    const Vector3d q = e * rep;
    const bool known = std::any_of(pts.begin(), pts.end(),
                                   [&](const Vector3d& p) { return (p - q).norm() < kPointTol; });
    if (!known) pts.push_back(q);
  }
  Eigen::Matrix3Xd out(3, pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out.col(i) = pts[i];
  return out;
}

Design configToDesign(const OrbitConfig& config) {
  std::vector<Eigen::Matrix3Xd> orbits;
  Eigen::Index total = 0;
  for (Eigen::Index r = 0; r < config.representatives.cols(); ++r) {
    orbits.push_back(orbit(config.group, config.representatives.col(r)));
    total += orbits.back().cols();
  }
  Eigen::Matrix3Xd points(3, total);
  Eigen::Index at = 0;
  for (const auto& o : orbits) {
    points.middleCols(at, o.cols()) = o;
    at += o.cols();
  }
  // Distinct orbits sharing a point would collapse under deduplication; that
  // is a degenerate configuration, not a design.
  Eigen::Index lo = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const Eigen::Index mid = lo + orbits[i].cols();
    for (Eigen::Index p = lo; p < mid; ++p)
      for (Eigen::Index q = mid; q < total; ++q)
        if ((points.col(p) - points.col(q)).norm() < kPointTol)
          throw std::runtime_error("configToDesign: orbits collide");
    lo = mid;
  }
  DesignMeta meta;
  meta.group = config.group.label();
  return Design(std::move(points), std::move(meta));
}

Eigen::VectorXd parametrize(const OrbitConfig& config) {
  const auto& reps = config.representatives;
  Eigen::VectorXd angles(2 * reps.cols());
  for (Eigen::Index r = 0; r < reps.cols(); ++r) {
    const Vector3d p = reps.col(r).normalized();
    const double rxy = std::hypot(p.x(), p.y());
    const double theta = std::atan2(rxy, p.z());
    double phi = rxy < 1e-14 ? 0.0 : std::atan2(p.y(), p.x());
    if (phi < 0) phi += 2 * std::numbers::pi;
    angles[2 * r] = theta;
    angles[2 * r + 1] = phi;
  }
  return angles;
}

OrbitConfig unparametrize(const PointGroup& g, const Eigen::VectorXd& angles) {
  if (angles.size() % 2 != 0)
    throw std::invalid_argument("unparametrize: angle vector must have even length");
  const double two_pi = 2 * std::numbers::pi;
  Eigen::Matrix3Xd reps(3, angles.size() / 2);
  for (Eigen::Index r = 0; r < reps.cols(); ++r) {
    double theta = std::fmod(angles[2 * r], two_pi);
    double phi = angles[2 * r + 1];
    if (theta < 0) theta += two_pi;
    if (theta > std::numbers::pi) {  // reflect back into [0, pi], phi shifts by pi
      theta = two_pi - theta;
      phi += std::numbers::pi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0) phi += two_pi;
    const double s = std::sin(theta);
    reps.col(r) = Vector3d(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
  }
  return OrbitConfig{g, std::move(reps)};
}

namespace {

Vector3d rotationAxis(const Matrix3d& m) {
  // Antisymmetric part gives the axis unless the angle is near pi.
  Vector3d v(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
  if (v.norm() > 1e-6) return v.normalized();
  const Matrix3d k = m + Matrix3d::Identity();  // rank one at angle pi
  Eigen::Index best = 0;
  k.colwise().norm().maxCoeff(&best);
  return k.col(best).normalized();
}

}  // namespace

std::vector<SpecialOrbit> specialOrbits(const PointGroup& g) {
  std::vector<SpecialOrbit> out;
  std::vector<Vector3d> seen;
  auto covered = [&](const Vector3d& p) {
    return std::any_of(seen.begin(), seen.end(),
                       [&](const Vector3d& q) { return (p - q).norm() < kPointTol; });
  };
  for (const Matrix3d& e : g.elements()) {
    if (e.determinant() < 0 || sameMatrix(e, Matrix3d::Identity())) continue;
    const Vector3d axis = rotationAxis(e);
    for (const Vector3d& cand : {axis, Vector3d(-axis)}) {
      if (covered(cand)) continue;
      const Eigen::Matrix3Xd orb = orbit(g, cand);
      for (Eigen::Index i = 0; i < orb.cols(); ++i) seen.push_back(orb.col(i));
      out.push_back({cand, static_cast<int>(orb.cols())});
    }
  }
  return out;
}

namespace {

// Sorted-by-z candidate index for matching transformed points.
class PointIndex {
public:
  PointIndex(const Eigen::Matrix3Xd& pts, double tol) : pts_(pts), tol_(tol) {
    order_.resize(pts.cols());
    for (Eigen::Index i = 0; i < pts.cols(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(),
              [&](Eigen::Index a, Eigen::Index b) { return pts(2, a) < pts(2, b); });
  }

  // Index of the unique point within tol of q, or -1.
  Eigen::Index find(const Vector3d& q) const {
    const double z = q.z();
    auto lo = std::lower_bound(order_.begin(), order_.end(), z - tol_,
                               [&](Eigen::Index i, double v) { return pts_(2, i) < v; });
    for (; lo != order_.end() && pts_(2, *lo) <= z + tol_; ++lo)
      if ((pts_.col(*lo) - q).norm() < tol_) return *lo;
    return -1;
  }

private:
  const Eigen::Matrix3Xd& pts_;
  double tol_;
  std::vector<Eigen::Index> order_;
};

bool mapsSetToItself(const Matrix3d& q, const Eigen::Matrix3Xd& pts, const PointIndex& index) {
  std::vector<char> hit(pts.cols(), 0);
  for (Eigen::Index i = 0; i < pts.cols(); ++i) {
    const Eigen::Index j = index.find(q * pts.col(i));
    if (j < 0 || hit[j]) return false;
    hit[j] = 1;
  }
  return true;
}

struct AxisInfo {
  Vector3d axis;
  int rotations = 0;  // non-identity rotations about this axis
};

std::string axialLabel(int n, const std::vector<Matrix3d>& impropers, const Vector3d& principal,
                       int proper_count) {
  const bool dihedral = proper_count > n;  // extra C2 axes beyond the principal cycle
  bool has_sigma_h = false, has_sigma_v = false;
  for (const Matrix3d& s : impropers) {
    if ((s + Matrix3d::Identity()).norm() < 1e-6) continue;  // inversion
    if (std::abs(s.trace() - 1.0) < 1e-6) {                  // reflection
      const Vector3d normal = rotationAxis(-s);              // -s is a C2 about the normal
      if (std::abs(normal.dot(principal)) > 0.999)
        has_sigma_h = true;
      else if (std::abs(normal.dot(principal)) < 1e-3)
        has_sigma_v = true;
    }
  }
  const std::string ns = std::to_string(n);
  if (dihedral) {
    if (impropers.empty()) return "[2," + ns + "]+";
    if (has_sigma_h) return "[2," + ns + "]";
    return "[2+," + std::to_string(2 * n) + "]";
  }
  if (impropers.empty()) return n == 1 ? "[1]+" : "[" + ns + "]+";
  if (has_sigma_h) return "[2," + ns + "+]";
  if (has_sigma_v) return "[" + ns + "]";
  return "[2+," + std::to_string(2 * n) + "+]";
}

}  // namespace

SymmetryMatch detectSymmetry(const Design& design, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("detectSymmetry: tol must be positive");
  const Eigen::Matrix3Xd& pts = design.points();
  const Eigen::Index n = pts.cols();

  bool collinear = true;
  for (Eigen::Index i = 1; i < n && collinear; ++i)
    if (std::abs(std::abs(pts.col(i).dot(pts.col(0))) - 1.0) > tol) collinear = false;
  if (collinear) return {"inf", 0};  // a point or an antipodal pair

  // Reference frame from the first point and its best-conditioned partner.
  const Vector3d a = pts.col(0);
  Eigen::Index bi = 1;
  double best = -1;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double c = a.cross(pts.col(i)).norm();
    if (c > best) {
      best = c;
      bi = i;
    }
  }
  const Vector3d b = pts.col(bi);
  const double d0 = a.dot(b);
  const Vector3d n0 = a.cross(b).normalized();
  const Vector3d u0 = (b - d0 * a).normalized();
  Matrix3d frame;
  frame.col(0) = a;
  frame.col(1) = u0;
  frame.col(2) = n0;

  const double pair_tol = 10 * tol;
  const PointIndex index(pts, tol);
  std::vector<Matrix3d> found;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vector3d ai = pts.col(i), bj = pts.col(j);
      if (std::abs(ai.dot(bj) - d0) > pair_tol) continue;
      const Vector3d ni = ai.cross(bj);
      if (ni.norm() < 1e-9) continue;
      Matrix3d image;
      image.col(0) = ai;
      image.col(1) = (bj - ai.dot(bj) * ai).normalized();
      for (int sign : {1, -1}) {
        image.col(2) = sign * ni.normalized();
        const Matrix3d q = image * frame.transpose();
        const bool known = std::any_of(found.begin(), found.end(),
                                       [&](const Matrix3d& f) { return (f - q).norm() < 1e-6; });
        if (!known && mapsSetToItself(q, pts, index)) found.push_back(q);
      }
    }

  const int g = static_cast<int>(found.size());
  if (g <= 1) return {"[1]+", 1};

  std::vector<Matrix3d> propers, impropers;
  bool has_inversion = false;
  for (const Matrix3d& q : found) {
    if (q.determinant() > 0) {
      propers.push_back(q);
    } else {
      impropers.push_back(q);
      if ((q + Matrix3d::Identity()).norm() < 1e-6) has_inversion = true;
    }
  }

  std::vector<AxisInfo> axes;
  for (const Matrix3d& q : propers) {
    if (sameMatrix(q, Matrix3d::Identity())) continue;
    const Vector3d axis = rotationAxis(q);
    bool merged = false;
    for (AxisInfo& info : axes)
      if (std::abs(info.axis.dot(axis)) > 0.9999) {
        ++info.rotations;
        merged = true;
        break;
      }
    if (!merged) axes.push_back({axis, 1});
  }

  if (axes.empty())  // improper-only group
    return has_inversion ? SymmetryMatch{"[2+,2+]", g} : SymmetryMatch{"[1]", g};

  int max_order = 0;
  Vector3d principal = axes[0].axis;
  int threefold_axes = 0;
  for (const AxisInfo& info : axes) {
    const int ord = info.rotations + 1;
    if (ord == 3) ++threefold_axes;
    if (ord > max_order) {
      max_order = ord;
      principal = info.axis;
    }
  }

  if (threefold_axes >= 4) {  // polyhedral
    if (max_order == 5) return {impropers.empty() ? "[3,5]+" : "[3,5]", g};
    if (max_order == 4) return {impropers.empty() ? "[3,4]+" : "[3,4]", g};
    if (impropers.empty()) return {"[3,3]+", g};
    return has_inversion ? SymmetryMatch{"[3+,4]", g} : SymmetryMatch{"[3,3]", g};
  }

  const std::string label =
      axialLabel(max_order, impropers, principal, static_cast<int>(propers.size()));
  return {label, g};
}

}  // namespace sphdesign
