#pragma once

#include <iosfwd>
#include <string>

#include "sphdesign/design.hpp"

namespace sphdesign {

// Text format: optional "# key=value" header lines (keys n, t, group, source),
// then one point per line as three whitespace-separated reals. Files written
// here use 17 significant digits, so write-then-read round-trips bit-exactly.
// Reading normalizes rows, rejecting any whose norm is outside [0.9, 1.1].

Design readDesign(std::istream& in);
Design readDesignFile(const std::string& path);

void writeDesign(std::ostream& out, const Design& d);
void writeDesignFile(const std::string& path, const Design& d);

}  // namespace sphdesign
