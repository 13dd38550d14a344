#include "sphdesign/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "sphdesign/groups.hpp"

namespace sphdesign {

namespace {

using std::numbers::pi;

Design orbitDesign(const std::string& group_label, const Eigen::Matrix3Xd& reps,
                   DesignMeta meta) {
  meta.group = group_label;
  Design d = configToDesign({groupFromLabel(group_label), reps});
  d.meta() = std::move(meta);
  return d;
}

// Roots of a snub-family sextic, largest first. Their squares always sum to 1
// (the w^2 and w^3 coefficients agree up to sign), checked here as a guard.
Eigen::Vector3d snubTriple(const EvenPolynomial& p) {
  const std::vector<double> r = positiveRoots(p);
  if (r.size() != 3) throw std::logic_error("snub sextic must have three positive roots");
  const Eigen::Vector3d abc(r[2], r[1], r[0]);
  if (std::abs(abc.squaredNorm() - 1.0) > 1e-12)
    throw std::logic_error("snub sextic roots do not form a unit vector");
  return abc;
}

DesignMeta catalogMeta(int t) {
  DesignMeta m;
  m.target_t = t;
  m.source = "analytic catalog";
  return m;
}

}  // namespace

const EvenPolynomial& improvedSnubPolynomial() {
  static const EvenPolynomial p{{-1, 21, -105, 105}};
  return p;
}

const EvenPolynomial& design30Polynomial() {
  static const EvenPolynomial p{{-1, 21, -84, 84}};
  return p;
}

const EvenPolynomial& design32Polynomial() {
  static const EvenPolynomial p{{-1, 441, -2835, 2835}};
  return p;
}

const EvenPolynomial& design48Polynomial() {
  static const EvenPolynomial p{{-8269,
                                 2733318,
                                 -168429429,
                                 4880358000,
                                 -80424958320,
                                 770657554800,
                                 -3473862884100,
                                 -9766335726000,
                                 270106833039750,
                                 -2145915231232500,
                                 10602550092251250,
                                 -36735117403950000,
                                 92508869648475000,
                                 -170368273215000000,
                                 226833777359437500,
                                 -212133311066250000,
                                 131885512472109375,
                                 -48846486100781250,
                                 8141081016796875}};
  return p;
}

Design improvedSnubCube() {
  return orbitDesign("[3,4]+", snubTriple(improvedSnubPolynomial()), catalogMeta(7));
}

Design regularSnubCube() {
  // One sextic per coordinate; each has a single positive root.
  static const EvenPolynomial pa{{-1, -3, 1, 7}};
  static const EvenPolynomial pb{{-1, 5, -3, 7}};
  static const EvenPolynomial pc{{-1, 17, -19, 7}};
  const Eigen::Vector3d abc(positiveRoots(pa)[0], positiveRoots(pb)[0], positiveRoots(pc)[0]);
  if (std::abs(abc.squaredNorm() - 1.0) > 1e-12)
    throw std::logic_error("snub cube roots do not form a unit vector");
  return orbitDesign("[3,4]+", abc, catalogMeta(3));
}

Design design30_7() {
  Eigen::Matrix3Xd reps(3, 2);
  reps.col(0) = snubTriple(design30Polynomial());
  reps.col(1) = Eigen::Vector3d(1, 0, 0);
  return orbitDesign("[3,4]+", reps, catalogMeta(7));
}

Design design32_7() {
  Eigen::Matrix3Xd reps(3, 2);
  reps.col(0) = snubTriple(design32Polynomial());
  reps.col(1) = Eigen::Vector3d(1, 1, 1).normalized();
  return orbitDesign("[3,4]+", reps, catalogMeta(7));
}

Design design25_5(double phase1) {
  const double g1 = std::sqrt(7.0 - std::sqrt(11.0)) / (2.0 * std::sqrt(3.0));
  const double g2 = std::sqrt(7.0 + std::sqrt(11.0)) / (2.0 * std::sqrt(3.0));
  const double h1 = std::sqrt(1.0 - g1 * g1);
  const double h2 = std::sqrt(1.0 - g2 * g2);
  // The fifth cosine harmonic is the one condition the ring phases must meet;
  // everything else is fixed by the latitudes. |K| < 1 for every phase1.
  const double K = (2.0 * std::pow(g1, 5) * std::cos(5.0 * phase1) - 1.0) / (2.0 * std::pow(g2, 5));
  const double phase2 = (4.0 * pi - std::acos(K)) / 5.0;

  const double theta = 2.0 * pi / 5.0;
  Eigen::Matrix3Xd pts(3, 25);
  for (int k = 0; k < 5; ++k) {
    const double base = k * theta;
    const double a = base + phase1;
    const double b = base + phase2;
    pts.col(5 * k + 0) = Eigen::Vector3d(0, std::cos(base), std::sin(base));
    pts.col(5 * k + 1) = Eigen::Vector3d(h1, -g1 * std::cos(a), -g1 * std::sin(a));
    pts.col(5 * k + 2) = Eigen::Vector3d(-h1, -g1 * std::cos(a), g1 * std::sin(a));
    pts.col(5 * k + 3) = Eigen::Vector3d(h2, g2 * std::cos(b), g2 * std::sin(b));
    pts.col(5 * k + 4) = Eigen::Vector3d(-h2, g2 * std::cos(b), -g2 * std::sin(b));
  }
  DesignMeta meta = catalogMeta(5);
  meta.group = "[2,5]+";
  return Design(std::move(pts), std::move(meta));
}

Design design23_5Seed() {
  // Published to four digits; the fifth fixed point is taken on the +z side,
  // where the first moments of the printed columns actually cancel.
  static constexpr double a[9] = {1.0 / 3.0, .5654, .1949, .8338, .6521,
                                  .5610,     .7414, .1927, .5854};
  static constexpr double b[9] = {-.2194, .3485, -.7812, -.4754, .7082,
                                  -.7301, .4805, .7199,  -.2092};
  static constexpr double c[9] = {-.9169, -.7476, -.5931, -.2807, -.2705,
                                  .3903,  .4685,  .6668,  .7833};
  Eigen::Matrix3Xd pts(3, 23);
  pts.col(0) = Eigen::Vector3d(1, 0, 0);
  pts.col(1) = Eigen::Vector3d(-1, 0, 0);
  pts.col(2) = Eigen::Vector3d(0, 1, 0);
  pts.col(3) = Eigen::Vector3d(0, -1, 0);
  pts.col(4) = Eigen::Vector3d(0, 0, 1);
  for (int i = 0; i < 9; ++i) {
    pts.col(5 + 2 * i) = Eigen::Vector3d(a[i], b[i], c[i]);
    pts.col(6 + 2 * i) = Eigen::Vector3d(-a[i], -b[i], c[i]);
  }
  DesignMeta meta;
  meta.target_t = 5;
  meta.group = "[2]+";
  meta.source = "published starting estimate (4 digits)";
  meta.requires_polish = true;
  return Design(std::move(pts), std::move(meta));
}

Design design48_9Seed() {
  Eigen::Matrix3Xd reps(3, 2);
  reps.col(0) = Eigen::Vector3d(.9334, .3535, -.0620).normalized();
  reps.col(1) = Eigen::Vector3d(.7068, .6397, .3018).normalized();
  DesignMeta meta;
  meta.target_t = 9;
  meta.source = "published starting estimate (4 digits)";
  meta.requires_polish = true;
  return orbitDesign("[3,4]+", reps, std::move(meta));
}

namespace {

struct OrbitFixture {
  const char* name;
  int t;
  int reps;
  const double (*data)[3];
};

constexpr double kReps36_8[][3] = {
    {0.74051521, 0.24352778, 0.62636367},
    {0.80542549, 0.30620001, -0.50747545},
    {0.95712033, 0.28624872, 0.04452356},
};

constexpr double kReps60_10[][3] = {
    {0.71315107, 0.03408955, 0.70018102},  {0.75382867, 0.54595191, -0.36562119},
    {0.78335594, -0.42686412, -0.45181910}, {0.93321004, 0.12033145, -0.33858436},
    {0.95799794, 0.27623022, 0.07705072},
};

constexpr double kReps72_11[][3] = {
    {0.66932119, -0.65648669, -0.34789994}, {0.75683290, 0.38164750, -0.53061205},
    {0.82190371, 0.54929373, -0.15083333},  {0.85544705, 0.04115447, 0.51625251},
    {0.90728126, 0.36233033, 0.21344190},   {0.97885492, 0.12557302, -0.16147588},
};

constexpr double kReps96_13[][3] = {
    {0.69989534, 0.59974524, -0.38788163},  {0.73338128, -0.54971991, -0.39994990},
    {0.78556905, 0.09585688, -0.61130412},  {0.82321276, 0.56450535, 0.06045217},
    {0.83255539, -0.25643858, -0.49100996}, {0.88122889, 0.33818291, -0.33025441},
    {0.96391874, -0.26382492, -0.03545521}, {0.96783463, -0.01683358, -0.25102343},
};

constexpr double kReps108_14[][3] = {
    {0.69160471, -0.40217576, 0.59994798},  {0.71050575, 0.58202818, 0.39550573},
    {0.75403890, 0.65127837, -0.08521631},  {0.80598041, 0.26283378, 0.53039041},
    {0.86226532, -0.39729017, 0.31410038},  {0.86442500, -0.05628604, 0.49960114},
    {0.87315060, -0.46879380, -0.13356797}, {0.96418944, 0.16093133, 0.21080756},
    {0.97567128, -0.17376307, 0.13368600},
};

constexpr double kReps144_16[][3] = {
    {0.65758346, 0.61920220, 0.42915339},   {0.70203400, -0.68122298, 0.20756570},
    {0.70428352, -0.55221381, 0.44614418},  {0.71018481, -0.16518988, -0.68436090},
    {0.84130836, -0.32306467, 0.43339297},  {0.84532735, -0.30622774, -0.43777418},
    {0.85087242, 0.52354706, -0.04375603},  {0.85473787, -0.02894596, 0.51825216},
    {0.87135881, 0.43350173, 0.22980441},   {0.94028712, -0.28839660, 0.18079695},
    {0.96296114, 0.02735042, 0.26824950},   {0.98473889, 0.16325742, 0.06030199},
};

constexpr double kReps240_21[][3] = {
    {0.66536339, 0.58086027, 0.46892741},   {0.67683321, -0.48257247, 0.55589623},
    {0.71800639, 0.65744688, -0.22853979},  {0.72687147, -0.02748828, -0.68622319},
    {0.73733200, -0.62085150, -0.26624225}, {0.77263286, 0.51705945, -0.36835851},
    {0.77909960, -0.23760971, -0.58012537}, {0.78443181, 0.28431902, -0.55120724},
    {0.78559925, -0.40515695, -0.46763412}, {0.81763902, -0.57522572, 0.02412057},
    {0.84781923, 0.06632578, -0.52612113},  {0.86317647, -0.46818182, -0.18902953},
    {0.89265354, -0.41253405, 0.18161861},  {0.89457952, -0.27876240, 0.34931219},
    {0.90354264, 0.09900269, 0.41690427},   {0.90950707, 0.29209374, 0.29576703},
    {0.94298382, 0.33269411, 0.00980574},   {0.95866803, -0.10111361, 0.26595424},
    {0.97946878, 0.11341985, 0.16666388},   {0.99028895, 0.12883316, -0.05224764},
};

constexpr OrbitFixture kOrbitFixtures[] = {
    {"table3-36-8", 8, 3, kReps36_8},       {"table3-60-10", 10, 5, kReps60_10},
    {"table3-72-11", 11, 6, kReps72_11},    {"table3-96-13", 13, 8, kReps96_13},
    {"table3-108-14", 14, 9, kReps108_14},  {"table3-144-16", 16, 12, kReps144_16},
    {"table3-240-21", 21, 20, kReps240_21},
};

}  // namespace

Design fixture(const std::string& name) {
  if (name == "design-23-5-seed") return design23_5Seed();
  if (name == "design-48-9-seed") return design48_9Seed();
  for (const OrbitFixture& f : kOrbitFixtures) {
    if (name != f.name) continue;
    Eigen::Matrix3Xd reps(3, f.reps);
    for (int i = 0; i < f.reps; ++i)
      reps.col(i) = Eigen::Vector3d(f.data[i][0], f.data[i][1], f.data[i][2]);
    DesignMeta meta;
    meta.target_t = f.t;
    meta.source = "published orbit representatives (8 digits)";
    return orbitDesign("[3,3]+", reps, std::move(meta));
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixtureCatalog() {
  std::vector<std::string> out;
  for (const OrbitFixture& f : kOrbitFixtures) out.push_back(f.name);
  out.push_back("design-23-5-seed");
  out.push_back("design-48-9-seed");
  return out;
}

namespace {

Design ringDesign(int m, double z, double phase, DesignMeta meta) {
  Eigen::Matrix3Xd pts(3, m);
  const double rad = std::sqrt(1.0 - z * z);
  for (int k = 0; k < m; ++k) {
    const double ang = phase + 2.0 * pi * k / m;
    pts.col(k) = Eigen::Vector3d(rad * std::cos(ang), rad * std::sin(ang), z);
  }
  return Design(std::move(pts), std::move(meta));
}

Design withGroup(Design d, const char* label) {
  d.meta().group = label;
  return d;
}

}  // namespace

Design referenceSolid(const std::string& name) {
  if (name == "triangle") {
    DesignMeta meta = catalogMeta(1);
    meta.group = "[2,3]";
    return ringDesign(3, 0.0, 0.0, std::move(meta));
  }
  if (name == "tetrahedron") {
    Eigen::Matrix3Xd pts(3, 4);
    pts.col(0) = Eigen::Vector3d(1, 1, 1);
    pts.col(1) = Eigen::Vector3d(1, -1, -1);
    pts.col(2) = Eigen::Vector3d(-1, 1, -1);
    pts.col(3) = Eigen::Vector3d(-1, -1, 1);
    return withGroup(Design(pts / std::sqrt(3.0), catalogMeta(2)), "[3,3]");
  }
  if (name == "triangular-bipyramid") {
    Eigen::Matrix3Xd pts(3, 5);
    for (int k = 0; k < 3; ++k)
      pts.col(k) = Eigen::Vector3d(std::cos(2.0 * pi * k / 3), std::sin(2.0 * pi * k / 3), 0);
    pts.col(3) = Eigen::Vector3d(0, 0, 1);
    pts.col(4) = Eigen::Vector3d(0, 0, -1);
    return withGroup(Design(std::move(pts), catalogMeta(1)), "[2,3]");
  }
  if (name == "octahedron") {
    Eigen::Matrix3Xd pts(3, 6);
    pts.setZero();
    for (int a = 0; a < 3; ++a) {
      pts(a, 2 * a) = 1;
      pts(a, 2 * a + 1) = -1;
    }
    return withGroup(Design(std::move(pts), catalogMeta(3)), "[3,4]");
  }
  if (name == "cube") {
    Eigen::Matrix3Xd pts(3, 8);
    for (int s = 0; s < 8; ++s)
      pts.col(s) = Eigen::Vector3d(s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1);
    return withGroup(Design(pts / std::sqrt(3.0), catalogMeta(3)), "[3,4]");
  }
  if (name == "pentagonal-prism") {
    // Rings at +-1/sqrt(3), where the second-degree averages come out right.
    const double h = 1.0 / std::sqrt(3.0);
    Eigen::Matrix3Xd pts(3, 10);
    const double rad = std::sqrt(1.0 - h * h);
    for (int k = 0; k < 5; ++k) {
      const double ang = 2.0 * pi * k / 5;
      pts.col(k) = Eigen::Vector3d(rad * std::cos(ang), rad * std::sin(ang), h);
      pts.col(5 + k) = Eigen::Vector3d(rad * std::cos(ang), rad * std::sin(ang), -h);
    }
    return withGroup(Design(std::move(pts), catalogMeta(3)), "[2,5]");
  }
  if (name == "icosahedron") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    Eigen::Matrix3Xd pts(3, 12);
    int at = 0;
    for (int axis = 0; axis < 3; ++axis)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Eigen::Vector3d v(0, s1 * 1.0, s2 * phi);
          pts.col(at++) = Eigen::Vector3d(v((3 - axis) % 3), v((4 - axis) % 3), v((5 - axis) % 3));
        }
    return withGroup(Design(pts / std::sqrt(1.0 + phi * phi), catalogMeta(5)), "[3,5]");
  }
  if (name == "dodecahedron") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    Eigen::Matrix3Xd pts(3, 20);
    int at = 0;
    for (int s = 0; s < 8; ++s)
      pts.col(at++) = Eigen::Vector3d(s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1);
    for (int axis = 0; axis < 3; ++axis)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Eigen::Vector3d v(0, s1 / phi, s2 * phi);
          pts.col(at++) = Eigen::Vector3d(v((3 - axis) % 3), v((4 - axis) % 3), v((5 - axis) % 3));
        }
    return withGroup(Design(pts / std::sqrt(3.0), catalogMeta(5)), "[3,5]");
  }
  throw std::invalid_argument("unknown reference solid: " + name);
}

Design namedDesign(const std::string& name) {
  if (name == "improved-snub-cube") return improvedSnubCube();
  if (name == "regular-snub-cube") return regularSnubCube();
  if (name == "design-30-7") return design30_7();
  if (name == "design-32-7") return design32_7();
  if (name == "design-25-5") return design25_5();
  for (const std::string& f : fixtureCatalog())
    if (name == f) return fixture(name);
  return referenceSolid(name);
}

std::vector<std::string> designCatalog() {
  std::vector<std::string> out = {"triangle",
                                  "tetrahedron",
                                  "triangular-bipyramid",
                                  "octahedron",
                                  "cube",
                                  "pentagonal-prism",
                                  "icosahedron",
                                  "dodecahedron",
                                  "improved-snub-cube",
                                  "regular-snub-cube",
                                  "design-25-5",
                                  "design-30-7",
                                  "design-32-7"};
  for (const std::string& f : fixtureCatalog()) out.push_back(f);
  return out;
}

}  // namespace sphdesign
