#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sphdesign/design.hpp"

namespace sphdesign {

struct Monomial {
  int e1 = 0, e2 = 0, e3 = 0;
  int degree() const { return e1 + e2 + e3; }
};

// All monomials of total degree d, (d+1)(d+2)/2 of them, in a fixed order.
inline std::vector<Monomial> monomialsOfDegree(int d) {
  if (d < 0) throw std::invalid_argument("monomialsOfDegree: negative degree");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  for (int e1 = d; e1 >= 0; --e1)
    for (int e2 = d - e1; e2 >= 0; --e2) out.push_back({e1, e2, d - e1 - e2});
  return out;
}

// Uniform surface-measure average of x^e1 y^e2 z^e3 over the unit sphere:
// zero if any exponent is odd, else prod_i (e_i - 1)!! / (d + 1)!!.
template <typename Scalar = Real>
Scalar sphereMoment(const Monomial& m) {
  if ((m.e1 | m.e2 | m.e3) & 1) return Scalar(0);
  long double num = 1;
  for (int e : {m.e1, m.e2, m.e3})
    for (int j = 3; j < e; j += 2) num *= j;
  long double den = 1;
  for (int j = 3; j <= m.degree() + 1; j += 2) den *= j;
  return static_cast<Scalar>(num / den);
}

// t! / (e1! e2! e3!), exact while it fits the accumulation type.
inline long double multinomialWeight(const Monomial& m) {
  // Pascal-style product of two binomials keeps intermediates integral.
  const auto binom = [](int n, int k) {
    long double r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
  };
  const int t = m.degree();
  return binom(t, m.e1) * binom(t - m.e1, m.e2);
}

namespace detail {

template <typename T>
struct Promote {
  using type = T;
};
template <>
struct Promote<float> {
  using type = double;
};
template <>
struct Promote<double> {
  using type = long double;
};

// Deterministic pairwise reduction of f(lo..hi-1) in promoted precision.
template <typename Acc, typename F>
Acc pairwiseSum(Eigen::Index lo, Eigen::Index hi, const F& f) {
  if (hi - lo <= 8) {
    Acc s = 0;
    for (Eigen::Index i = lo; i < hi; ++i) s += static_cast<Acc>(f(i));
    return s;
  }
  const Eigen::Index mid = lo + (hi - lo) / 2;
  return pairwiseSum<Acc>(lo, mid, f) + pairwiseSum<Acc>(mid, hi, f);
}

}  // namespace detail

// Per-design evaluator: power tables keep a degree sweep at O(n) per monomial.
template <typename Scalar = Real>
class MomentEvaluator {
  using Acc = typename detail::Promote<Scalar>::type;

public:
  template <typename Derived>
  MomentEvaluator(const Eigen::MatrixBase<Derived>& points, int max_degree)
      : n_(points.cols()), max_degree_(max_degree) {
    if (n_ < 1) throw std::invalid_argument("moments: empty point set");
    if (max_degree_ < 0) throw std::invalid_argument("moments: negative degree");
    for (int a = 0; a < 3; ++a) {
      pow_[a].resize(max_degree_ + 1, n_);
      pow_[a].row(0).setOnes();
      for (int e = 1; e <= max_degree_; ++e)
        pow_[a].row(e) = pow_[a].row(e - 1) * points.row(a).array().template cast<Scalar>();
    }
  }

  Eigen::Index n() const { return n_; }
  int maxDegree() const { return max_degree_; }

  Scalar monomialMean(const Monomial& m) const {
    return static_cast<Scalar>(meanAcc(m));
  }

  // Deviation of the design average of the monomial from its sphere moment.
  Scalar residual(const Monomial& m) const {
    return static_cast<Scalar>(meanAcc(m) - static_cast<Acc>(sphereMoment<Acc>(m)));
  }

  // Sum of squared residuals over all monomials of exact degree d.
  Scalar degreeResidualSumSquares(int d) const {
    checkDegree(d);
    Acc s = 0;
    for (const Monomial& m : monomialsOfDegree(d)) {
      const Acc r = meanAcc(m) - static_cast<Acc>(sphereMoment<Acc>(m));
      s += r * r;
    }
    return static_cast<Scalar>(s);
  }

  // Rotation-invariant objective: multinomially weighted residuals of the two
  // top degrees t-1 and t. Vanishes exactly on t-designs.
  Scalar criterion(int t) const {
    if (t < 1) throw std::invalid_argument("criterion: t must be >= 1");
    checkDegree(t);
    Acc s = 0;
    for (int d : {t - 1, t})
      for (const Monomial& m : monomialsOfDegree(d)) {
        const Acc r = meanAcc(m) - static_cast<Acc>(sphereMoment<Acc>(m));
        s += static_cast<Acc>(multinomialWeight(m)) * r * r;
      }
    return static_cast<Scalar>(s);
  }

  // Unweighted squared-residual total over all degrees 1..t.
  Scalar discrepancy(int t) const {
    if (t < 1) throw std::invalid_argument("discrepancy: t must be >= 1");
    checkDegree(t);
    Acc s = 0;
    for (int d = 1; d <= t; ++d) s += static_cast<Acc>(degreeResidualSumSquares(d));
    return static_cast<Scalar>(s);
  }

private:
  void checkDegree(int d) const {
    if (d > max_degree_) throw std::invalid_argument("moments: degree exceeds table size");
  }

  Acc meanAcc(const Monomial& m) const {
    checkDegree(m.degree());
    const auto* px = &pow_[0](m.e1, 0);
    const auto* py = &pow_[1](m.e2, 0);
    const auto* pz = &pow_[2](m.e3, 0);
    const Eigen::Index stride = max_degree_ + 1;
    const Acc total = detail::pairwiseSum<Acc>(0, n_, [&](Eigen::Index i) {
      return px[i * stride] * py[i * stride] * pz[i * stride];
    });
    return total / static_cast<Acc>(n_);
  }

  Eigen::Index n_;
  int max_degree_;
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> pow_[3];
};

template <typename Derived>
typename Derived::Scalar monomialResidual(const Eigen::MatrixBase<Derived>& points,
                                          const Monomial& m) {
  return MomentEvaluator<typename Derived::Scalar>(points, m.degree()).residual(m);
}

template <typename Derived>
typename Derived::Scalar criterion(const Eigen::MatrixBase<Derived>& points, int t) {
  return MomentEvaluator<typename Derived::Scalar>(points, t).criterion(t);
}

template <typename Derived>
typename Derived::Scalar discrepancy(const Eigen::MatrixBase<Derived>& points, int t) {
  return MomentEvaluator<typename Derived::Scalar>(points, t).discrepancy(t);
}

inline Real monomialResidual(const Design& d, const Monomial& m) {
  return monomialResidual(d.points(), m);
}
inline Real criterion(const Design& d, int t) { return criterion(d.points(), t); }
inline Real discrepancy(const Design& d, int t) { return discrepancy(d.points(), t); }

struct MomentReport {
  std::vector<Real> degree_residual_sumsq;  // index d-1 holds degree d, d = 1..max_t
  Real criterion = 0;                       // weighted objective at max_t
  Real discrepancy = 0;                     // residual total over degrees 1..max_t
  int verified_t = 0;                       // largest prefix of degrees within tolerance
  int max_t = 0;
  Real tolerance = 0;
};

// Sweeps degrees 1..max_t and reports the largest t whose residual sums all
// stay within tol. verified_t is monotone in tol by construction.
template <typename Derived>
MomentReport verifiedStrength(const Eigen::MatrixBase<Derived>& points, int max_t, Real tol) {
  if (max_t < 1) throw std::invalid_argument("verifiedStrength: max_t must be >= 1");
  if (!(tol >= 0)) throw std::invalid_argument("verifiedStrength: tolerance must be >= 0");
  MomentEvaluator<Real> eval(points, max_t);
  MomentReport report;
  report.max_t = max_t;
  report.tolerance = tol;
  report.degree_residual_sumsq.resize(max_t);
  bool prefix = true;
  for (int d = 1; d <= max_t; ++d) {
    const Real r = eval.degreeResidualSumSquares(d);
    report.degree_residual_sumsq[d - 1] = r;
    report.discrepancy += r;
    if (prefix && r <= tol)
      report.verified_t = d;
    else
      prefix = false;
  }
  report.criterion = eval.criterion(max_t);
  return report;
}

inline MomentReport verifiedStrength(const Design& d, int max_t, Real tol) {
  return verifiedStrength(d.points(), max_t, tol);
}

}  // namespace sphdesign
