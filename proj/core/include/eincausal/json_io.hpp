#pragma once

#include <memory>
#include <string>

#include "eincausal/domains.hpp"
#include "eincausal/duality.hpp"
#include "eincausal/enveloping.hpp"

namespace eincausal {

// Serialized formats (stable, 0-based node indexing):
//   grid spec   {"kind":"circle","n":256} | {"kind":"icosphere","subdivisions":3}
//               | {"kind":"custom","nodes":[[..],..],"edges":[[i,j],..]}
//   point       {"x":[..],"t":..}
//   field       {"region":{"interior":[..],"boundary":[..]},
//                "values":[..],"trace":[..]}    ("inf":"+"/"-" replaces
//                values/trace for infinite fields)
//   domain      {"grid":spec,"region":{..},"f_minus":field,"f_plus":field}
//               (fields inside a domain share the top-level region)
//   surface     {"grid":spec,"region":{..},"h":field}
//   achronal    {"grid":spec,"sites":[[node,value],..]}
//   base        {"nodes":[{"image":[..]},..],"edges":[[i,j],..],"r_inj":..,
//                "truncated_ends":false}
//   base domain {"region":{"interior":[..]},"f_minus":field,"f_plus":field}
//   e-point     {"node":i,"t":..}
//
// All readers throw std::invalid_argument on malformed input. Emission is
// deterministic: keys are sorted and doubles round-trip exactly.

std::string to_json(const GridSpec& spec);
GridSpec grid_spec_from_json(const std::string& text);

std::string to_json(const CoverPoint& p);
CoverPoint cover_point_from_json(const std::string& text);

std::string to_json(const ScalarField& field);
ScalarField field_from_json(const std::string& text,
                            std::shared_ptr<const SphereGrid> grid);

std::string to_json(const CausalDomain& dom);
CausalDomain domain_from_json(const std::string& text);

std::string to_json(const SurfaceGraph& s);
SurfaceGraph surface_from_json(const std::string& text);

std::string to_json(const AchronalSet& set);
AchronalSet achronal_set_from_json(const std::string& text);

std::string to_json(const ImmersedBase& base);
std::shared_ptr<const ImmersedBase> base_from_json(const std::string& text);

std::string to_json(const BaseDomain& dom);
BaseDomain base_domain_from_json(const std::string& text,
                                 std::shared_ptr<const ImmersedBase> base);

std::string to_json(const EPoint& p);
EPoint epoint_from_json(const std::string& text);

/// Reads a whole file; throws std::invalid_argument when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace eincausal
