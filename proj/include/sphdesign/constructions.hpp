#pragma once

#include <string>
#include <vector>

#include "sphdesign/design.hpp"
#include "sphdesign/polynomial.hpp"

namespace sphdesign {

// 24-vertex chiral solid whose vertex set averages all polynomials through
// degree 7: the orbit of (A, B, C) under the rotation octahedral group with
// A > B > C > 0 the positive roots of 105 z^6 - 105 z^4 + 21 z^2 - 1.
Design improvedSnubCube();

// The equal-edge Archimedean snub cube. A 3-design only.
Design regularSnubCube();

// 24 + 6 and 24 + 8 point 7-designs: a snub-cube-like orbit joined with the
// octahedron (resp. cube) vertices.
Design design30_7();
Design design32_7();

// 25-point 5-design: five pentagonal rings about the x axis. Any value of
// phase1 works; the matching second phase is solved internally.
Design design25_5(double phase1 = 0.0);

// Published 4-digit starting coordinates; requires_polish is set. The 23-point
// set has a twofold axis, the 48-point set full rotation-octahedral symmetry.
Design design23_5Seed();
Design design48_9Seed();

// Degree-36 even polynomial (integer coefficients) satisfied by every
// coordinate of the exact 48-point 9-design.
const EvenPolynomial& design48Polynomial();

// Sextics behind the snub-family constructors, coefficients in w = z^2.
const EvenPolynomial& improvedSnubPolynomial();
const EvenPolynomial& design30Polynomial();
const EvenPolynomial& design32Polynomial();

// Embedded published orbit representatives expanded through tetrahedral
// orbits: names table3-36-8, table3-60-10, table3-72-11, table3-96-13,
// table3-108-14, table3-144-16, table3-240-21, plus design-23-5-seed and
// design-48-9-seed.
Design fixture(const std::string& name);
std::vector<std::string> fixtureCatalog();

// Reference solids: triangle, tetrahedron, triangular-bipyramid, octahedron,
// cube, pentagonal-prism, icosahedron, dodecahedron.
Design referenceSolid(const std::string& name);

// Full constructor vocabulary: reference solids, the named designs above and
// every fixture. Unknown names throw std::invalid_argument.
Design namedDesign(const std::string& name);
std::vector<std::string> designCatalog();

}  // namespace sphdesign
