#pragma once

#include <string>
#include <vector>

#include "planes/congruence.hpp"
#include "planes/surface.hpp"

namespace planes {

struct CaseResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // pointed diff on failure
};

/// Runs every golden verification case whose id contains the filter
/// substring (empty filter = all), ordered by id.
std::vector<CaseResult> run_verify_cases(const std::string& filter = "");

/// The published source planes, by name (used by tests and the CLI).
Plane example_332_plane();   // the explicit determinantal example
Plane example1_plane();      // tritangent specialization z = c = 1
Plane example2_plane();      // tritangent specialization b = y = 1

/// Frozen scale between computed characteristic cubics and the published
/// polynomials, per family.
extern const Rat kCubicScaleTritangent;
extern const Rat kCubicScaleCayley;
extern const Rat kCubicScaleType2;

/// Frozen constant in pf_star(pf(w)) = c Pf(w) w.
extern const Rat kInvolutionConstant;

}  // namespace planes
