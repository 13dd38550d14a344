#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "sphdesign/design.hpp"

namespace sphdesign {

// A finite point group given by explicit orthogonal matrices, identity first.
// Built from a Coxeter-style label; see groupFromLabel for the grammar.
class PointGroup {
public:
  const std::string& label() const { return label_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Eigen::Matrix3d>& elements() const { return elements_; }
  bool hasImproper() const { return has_improper_; }

private:
  friend PointGroup groupFromLabel(const std::string&);
  PointGroup(std::string label, std::vector<Eigen::Matrix3d> elements);

  std::string label_;
  std::vector<Eigen::Matrix3d> elements_;
  bool has_improper_ = false;
};

// Label grammar: [n]+ cyclic, [n] with vertical mirrors, [2,n]+ dihedral,
// [2,n] with horizontal mirror, [2,n+] rotation plus horizontal mirror,
// [2+,2n] antiprismatic, [2+,2n+] rotoreflection, [2+,2+] inversion pair,
// [3,3]+ / [3,3] / [3+,4] tetrahedral, [3,4]+ / [3,4] octahedral,
// [3,5]+ / [3,5] icosahedral, [1]+ trivial, [1] single mirror.
PointGroup groupFromLabel(const std::string& label);

// Images of rep under the group, deduplicated, rep itself first.
Eigen::Matrix3Xd orbit(const PointGroup& g, const Eigen::Vector3d& rep);

struct OrbitConfig {
  PointGroup group;
  Eigen::Matrix3Xd representatives;  // one column per orbit
};

// Concatenated orbits of all representatives. Distinct orbits that share a
// point make the configuration degenerate and are rejected.
Design configToDesign(const OrbitConfig& config);

// Spherical angles (theta, phi) per representative, theta in [0, pi],
// phi in [0, 2*pi). parametrize(unparametrize(g, v)) == v up to wrapping.
Eigen::VectorXd parametrize(const OrbitConfig& config);
OrbitConfig unparametrize(const PointGroup& g, const Eigen::VectorXd& angles);

// Zero-freedom orbits: orbits of points lying on rotation axes. Each may be
// used at most once in an orbit plan; all other orbits have full group size.
struct SpecialOrbit {
  Eigen::Vector3d representative;
  int size = 0;
};
std::vector<SpecialOrbit> specialOrbits(const PointGroup& g);

struct SymmetryMatch {
  std::string label;  // catalog label, "[1]+" if trivial, "inf" if continuous
  int order = 0;      // 0 for "inf"
};

// Finds every orthogonal map (proper and improper) sending the point set to
// itself within tol, then names the resulting group. Works in the design's
// own frame; no pre-alignment is required.
SymmetryMatch detectSymmetry(const Design& design, double tol);

}  // namespace sphdesign
