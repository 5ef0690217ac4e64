#pragma once

// JSON formats.
//
//   complex:    {"cells": {"<dim>": ["<id>", ...]}, "faces": {"<id>": {"<i>,<a>": "<id>"}}}
//   morphism:   {"source": <complex or file name>, "target": ..., "map": {"<id>": "<id>"}}
//   path:       {"start": "<id>", "edges": ["<id>", ...]}
//   classes:    {"endpoints": [a, b], "count": n, "classes": [{"canonical": <path>, "size": k}]}
//   verdict:    {"dicovering": bool, "witness": {"kind": "edge"|"cell", ...}}
//   unfolding:  complex fields plus "projection", "states", "complete", "depth"
//
// Cell ids are unique across all dimensions of a complex.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtop/dicovering.hpp"
#include "dtop/dihomotopy.hpp"
#include "dtop/morphism.hpp"
#include "dtop/precubical.hpp"
#include "dtop/unfolding.hpp"

namespace dtop::io {

using Json = nlohmann::json;

Json to_json(const PrecubicalSet& x);
/// Shape errors throw InputError; face-level problems are kept for `validate`.
PrecubicalSet complex_from_json_unchecked(const Json& j);
/// Also throws InputError listing the violations when validation fails.
PrecubicalSet complex_from_json(const Json& j);

Json to_json(const PcMorphism& f);
/// "source"/"target" may be inline objects or file names resolved against `base_dir`.
/// Throws InputError unless the result is a valid morphism.
PcMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir = {});

Json to_json(const PrecubicalSet& x, const EdgePath& p);
EdgePath path_from_json(const PrecubicalSet& x, const Json& j);

Json violations_to_json(const std::vector<Violation>& report);

Json classes_to_json(const PrecubicalSet& x, Cell a, Cell b, const std::vector<DihomotopyClass>& found);

Json to_json(const PcMorphism& p, const DicoveringVerdict& verdict);

Json to_json(const Unfolding& u);

Json to_json(const UniversalityReport& report, std::span<const PcMorphism> catalog);

Json read_json_file(const std::filesystem::path& file);

}  // namespace dtop::io
