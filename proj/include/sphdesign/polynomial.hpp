#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sphdesign {

// Polynomial with exact integer coefficients in w = z^2, ascending powers.
// {c0, c1, c2} stands for c0 + c1 z^2 + c2 z^4.
struct EvenPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[d] == 0) --d;
    return d;
  }
};

namespace detail {

inline double horner(const std::vector<std::int64_t>& c, double w) {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * w + static_cast<double>(*it);
  return r;
}

// Compensated Horner: tracks the rounding of every product and sum with
// error-free transforms, recovering ~double-double accuracy.
inline double hornerCompensated(const std::vector<std::int64_t>& c, double w) {
  double r = 0, err = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const double p = r * w;
    const double pe = std::fma(r, w, -p);
    const double s = p + static_cast<double>(*it);
    const double z = s - p;
    const double se = (p - (s - z)) + (static_cast<double>(*it) - z);
    r = s;
    err = err * w + (pe + se);
  }
  return r + err;
}

}  // namespace detail

// p(z) evaluated at z (coefficients are in z^2).
inline double evalEven(const EvenPolynomial& p, double z) {
  return detail::hornerCompensated(p.coeffs, z * z);
}

// |p(z)| relative to the magnitude sum of its terms; ~1e-16 at a true root.
inline double relativeResidual(const EvenPolynomial& p, double z) {
  const double w = z * z;
  double scale = 0, wp = 1;
  for (std::int64_t c : p.coeffs) {
    scale += std::abs(static_cast<double>(c)) * wp;
    wp *= w;
  }
  if (scale == 0) return 0;
  return std::abs(detail::hornerCompensated(p.coeffs, w)) / scale;
}

namespace detail {

inline std::vector<double> toDouble(const std::vector<std::int64_t>& c) {
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = static_cast<double>(c[i]);
  return out;
}

inline double hornerD(const std::vector<double>& c, double x) {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

inline std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * static_cast<double>(i));
  if (out.empty()) out.push_back(0);
  return out;
}

inline double bisectRoot(const std::vector<double>& c, double lo, double hi) {
  double flo = hornerD(c, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = hornerD(c, mid);
    if (fm == 0) return mid;
    if ((flo < 0) != (fm < 0))
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  const std::vector<double> d = derivative(c);
  for (int it = 0; it < 4; ++it) {  // Newton polish inside the bracket
    const double dfx = hornerD(d, x);
    if (dfx == 0) break;
    const double step = hornerD(c, x) / dfx;
    const double nx = x - step;
    if (nx < lo || nx > hi) break;
    x = nx;
  }
  return x;
}

// All real roots via recursive critical-point bracketing. Throws if a
// bracketing endpoint sits on the curve without a sign change nearby
// (a repeated real root).
inline std::vector<double> realRoots(const std::vector<double>& c_in) {
  std::vector<double> c = c_in;
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.size() <= 1) return {};
  if (c.size() == 2) return {-c[0] / c[1]};

  double maxratio = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    maxratio = std::max(maxratio, std::abs(c[i] / c.back()));
  const double bound = 1 + maxratio;

  std::vector<double> crit = realRoots(derivative(c));
  std::vector<double> grid;
  grid.push_back(-bound);
  for (double x : crit)
    if (x > -bound && x < bound) grid.push_back(x);
  grid.push_back(bound);

  double scale = 0;
  for (double v : c) scale = std::max(scale, std::abs(v));

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double lo = grid[i], hi = grid[i + 1];
    const double flo = hornerD(c, lo), fhi = hornerD(c, hi);
    if ((flo < 0) != (fhi < 0)) {
      roots.push_back(bisectRoot(c, lo, hi));
    } else if (i + 1 < grid.size() - 1 && std::abs(fhi) < 1e-9 * scale) {
      // Critical value on the axis: tangent contact, i.e. a multiple root.
      throw std::domain_error("polynomial has a repeated real root");
    }
  }
  return roots;
}

}  // namespace detail

// Positive real z with p(z) = 0, ascending. Conjugate complex pairs are
// ignored; repeated real roots and root-free polynomials are errors.
inline std::vector<double> positiveRoots(const EvenPolynomial& p) {
  if (p.coeffs.empty()) throw std::invalid_argument("positiveRoots: empty polynomial");
  const std::vector<double> wroots = detail::realRoots(detail::toDouble(p.coeffs));
  std::vector<double> out;
  for (double w : wroots)
    if (w > 0) out.push_back(std::sqrt(w));
  if (out.empty()) throw std::domain_error("positiveRoots: no positive real root");
  return out;
}

}  // namespace sphdesign
