#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sphdesign/constructions.hpp"
#include "sphdesign/interval.hpp"
#include "sphdesign/io.hpp"
#include "sphdesign/molien.hpp"
#include "sphdesign/moments.hpp"
#include "sphdesign/search.hpp"

namespace {

using namespace sphdesign;

// Default verification tolerance; SPHDESIGN_TOL overrides it process-wide.
double defaultTol() {
  if (const char* env = std::getenv("SPHDESIGN_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    std::cerr << "ignoring malformed SPHDESIGN_TOL='" << env << "'\n";
  }
  return 1e-24;
}

void printResidualTable(const MomentReport& report) {
  std::fprintf(stderr, "%8s  %s\n", "degree", "residual_sumsq");
  for (int d = 1; d <= report.max_t; ++d)
    std::fprintf(stderr, "%8d  %.6e\n", d, report.degree_residual_sumsq[d - 1]);
}

void emitDesign(const Design& d, const std::string& out_path) {
  if (out_path.empty()) {
    writeDesign(std::cout, d);
  } else {
    writeDesignFile(out_path, d);
    std::cout << "out: " << out_path << "\n";
  }
}

int runVerify(const std::string& file, int t, double tol, int max_t) {
  const Design d = readDesignFile(file);
  const MomentReport report = verifiedStrength(d, std::max(max_t, t), tol);
  printResidualTable(report);
  const bool pass = report.verified_t >= t;
  std::cout << "n: " << d.n() << "\n"
            << "requested_t: " << t << "\n"
            << "verified_t: " << report.verified_t << "\n"
            << "tolerance: " << tol << "\n"
            << "criterion: " << criterion(d, t) << "\n"
            << "discrepancy: " << discrepancy(d, t) << "\n"
            << "pass: " << (pass ? "true" : "false") << "\n";
  return pass ? 0 : 1;
}

int runStrength(const std::string& file, double tol, int max_t) {
  const Design d = readDesignFile(file);
  const MomentReport report = verifiedStrength(d, max_t, tol);
  printResidualTable(report);
  std::cout << "n: " << d.n() << "\n"
            << "tolerance: " << tol << "\n"
            << "verified_t: " << report.verified_t << "\n"
            << "discrepancy: " << discrepancy(d, std::max(report.verified_t, 1)) << "\n";
  return 0;
}

int runConstruct(const std::string& name, const std::string& out_path) {
  const Design d = namedDesign(name);
  if (!out_path.empty()) {
    std::cout << "name: " << name << "\n"
              << "n: " << d.n() << "\n";
    if (d.meta().target_t) std::cout << "t: " << *d.meta().target_t << "\n";
    if (d.meta().group) std::cout << "group: " << *d.meta().group << "\n";
    if (d.meta().requires_polish) std::cout << "requires_polish: true\n";
  }
  emitDesign(d, out_path);
  return 0;
}

int runSearch(const SearchSpec& spec, const std::string& out_path) {
  const SearchResult res = patternSearch(spec);
  printResidualTable(res.report);
  std::cout << "n: " << res.design.n() << "\n"
            << "t: " << spec.t << "\n"
            << "group: " << spec.group_label << "\n"
            << "converged: " << (res.converged ? "true" : "false") << "\n"
            << "criterion: " << res.report.criterion << "\n"
            << "verified_t: " << res.report.verified_t << "\n"
            << "iterations: " << res.iterations << "\n"
            << "restarts: " << res.restarts_used << "\n";
  if (!res.converged) return 1;
  if (!out_path.empty()) emitDesign(res.design, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical design construction, search and verification"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, name, group = "[1]+";
  int t = 0, max_t = 25, n = 0, m = 0, restarts = 20;
  long max_iters = 100000;
  std::uint64_t seed = 0;
  double tol = defaultTol(), step_init = 0.3;

  CLI::App* verify = app.add_subcommand("verify", "check a design file against a strength");
  verify->add_option("file", file)->required();
  verify->add_option("--t", t, "strength to require")->required();
  verify->add_option("--tol", tol, "per-degree residual tolerance");
  verify->add_option("--max-t", max_t, "highest degree to tabulate");

  CLI::App* strength = app.add_subcommand("strength", "report the verified strength of a file");
  strength->add_option("file", file)->required();
  strength->add_option("--tol", tol);
  strength->add_option("--max-t", max_t);

  CLI::App* construct = app.add_subcommand("construct", "emit a catalog design");
  construct->add_option("name", name)->required();
  construct->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* search = app.add_subcommand("search", "pattern-search for a design");
  search->add_option("--n", n, "point count")->required();
  search->add_option("--t", t, "target strength")->required();
  search->add_option("--group", group, "symmetry group label");
  search->add_option("--restarts", restarts);
  search->add_option("--seed", seed);
  search->add_option("--step-init", step_init);
  search->add_option("--max-iters", max_iters);
  search->add_option("--out", out_path);

  CLI::App* predict = app.add_subcommand("predict", "point count of the symmetric orbit family");
  predict->add_option("--t", t)->required();

  CLI::App* bound = app.add_subcommand("bound", "smallest conceivable point count");
  bound->add_option("--t", t)->required();

  CLI::App* product = app.add_subcommand("product", "ring product over an interval design");
  product->add_option("--n", n, "latitude count")->required();
  product->add_option("--t", t, "strength")->required();
  product->add_option("--m", m, "vertices per ring")->required();
  product->add_option("--out", out_path);

  CLI::App* combine = app.add_subcommand("combine", "concatenate two design files");
  combine->add_option("a", file)->required();
  combine->add_option("b", file_b)->required();
  combine->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return runVerify(file, t, tol, max_t);
    if (strength->parsed()) return runStrength(file, tol, max_t);
    if (construct->parsed()) return runConstruct(name, out_path);
    if (search->parsed()) {
      SearchSpec spec;
      spec.n_target = n;
      spec.t = t;
      spec.group_label = group;
      spec.restarts = restarts;
      spec.seed = seed;
      spec.step_init = step_init;
      spec.max_iters = max_iters;
      return runSearch(spec, out_path);
    }
    if (predict->parsed()) {
      std::cout << "t: " << t << "\n"
                << "predicted_n: " << predictedPoints(t) << "\n"
                << "conservative: " << (predictionConservative(t) ? "true" : "false") << "\n";
      return 0;
    }
    if (bound->parsed()) {
      std::cout << "t: " << t << "\n"
                << "lower_bound: " << lowerBound(t) << "\n";
      return 0;
    }
    if (product->parsed()) {
      const Design d = latitudeProduct(intervalDesign(n, t), m);
      if (!out_path.empty())
        std::cout << "n: " << d.n() << "\n"
                  << "t: " << t << "\n"
                  << "rings: " << n << "\n"
                  << "vertices_per_ring: " << m << "\n";
      emitDesign(d, out_path);
      return 0;
    }
    if (combine->parsed()) {
      const Design a = readDesignFile(file);
      const Design b = readDesignFile(file_b);
      const Design u = designUnion(a, b);
      if (!out_path.empty())
        std::cout << "n_a: " << a.n() << "\n"
                  << "n_b: " << b.n() << "\n"
                  << "n: " << u.n() << "\n";
      emitDesign(u, out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
