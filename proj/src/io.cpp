#include "sphdesign/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sphdesign {

namespace {

void applyHeader(DesignMeta& meta, const std::string& key, const std::string& value) {
  if (key == "t")
    meta.target_t = std::stoi(value);
  else if (key == "group")
    meta.group = value;
  else if (key == "source")
    meta.source = value;
  // "n" is redundant with the row count; unknown keys pass through silently.
}

}  // namespace

Design readDesign(std::istream& in) {
  DesignMeta meta;
  std::vector<Eigen::Vector3d> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto eq = line.find('=', first);
      if (eq != std::string::npos) {
        std::string key = line.substr(first + 1, eq - first - 1);
        std::string value = line.substr(eq + 1);
        const auto trim = [](std::string& s) {
          const auto b = s.find_first_not_of(" \t\r");
          const auto e = s.find_last_not_of(" \t\r");
          s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        applyHeader(meta, key, value);
      }
      continue;
    }
    std::istringstream fields(line);
    double x, y, z;
    if (!(fields >> x >> y >> z))
      throw std::runtime_error("design file line " + std::to_string(lineno) +
                               ": expected three coordinates");
    std::string extra;
    if (fields >> extra)
      throw std::runtime_error("design file line " + std::to_string(lineno) +
                               ": trailing content '" + extra + "'");
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm >= 0.9 && norm <= 1.1))
      throw std::runtime_error("design file line " + std::to_string(lineno) +
                               ": point norm " + std::to_string(norm) +
                               " outside [0.9, 1.1]");
    rows.emplace_back(x, y, z);
  }
  if (rows.empty()) throw std::runtime_error("design file holds no points");
  Eigen::Matrix3Xd pts(3, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) pts.col(i) = rows[i];
  return Design(std::move(pts), std::move(meta));
}

Design readDesignFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return readDesign(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void writeDesign(std::ostream& out, const Design& d) {
  out << "# n=" << d.n() << "\n";
  const DesignMeta& meta = d.meta();
  if (meta.target_t) out << "# t=" << *meta.target_t << "\n";
  if (meta.group) out << "# group=" << *meta.group << "\n";
  if (meta.source) out << "# source=" << *meta.source << "\n";
  char buf[128];
  for (int i = 0; i < d.n(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", d.points()(0, i), d.points()(1, i),
                  d.points()(2, i));
    out << buf;
  }
}

void writeDesignFile(const std::string& path, const Design& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  writeDesign(out, d);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace sphdesign
