#pragma once

#include <json.hpp>

#include "planes/congruence.hpp"
#include "planes/surface.hpp"

namespace planes {

using Json = nlohmann::json;

/// Input problems (bad JSON shape, bad indices, bad rationals) that the CLI
/// reports with exit code 2.
struct InputError : PlanesError {
  using PlanesError::PlanesError;
};

// Forms: {"convention":"zero"|"one", "terms":[[i,j,"p/q"],...]}. Rationals
// are strings "p/q" or "n"; round-trips are bit-exact.
Json form_to_json(const TwoForm& w);
TwoForm form_from_json(const Json& j);

// Planes: {"convention":..., "forms":[[[i,j,"p/q"],...],...]}; an optional
// "comment" field is ignored on input.
Json plane_to_json(const Plane& h);
Plane plane_from_json(const Json& j);

Json membership_to_json(const MembershipReport& rep);
Json point_to_json(const ProjPoint& p);
Json cubic_to_json(const CubicForm& f);  // canonical monomial order
Json singularity_to_json(const SingularityReport& rep);
Json split_to_json(const SplitReport& rep);

/// Parses either a single form or a plane from text (file contents or stdin).
Json parse_text(const std::string& text);

std::string rat_json(const Rat& r);
Rat rat_from_json(const Json& j);

}  // namespace planes
