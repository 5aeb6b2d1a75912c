#pragma once

#include <filesystem>
#include <string>

#include "casimir/materials.hpp"

namespace casimir {

/// Parses {"eps1": {"constant": 3.0} | {"oscillator": [[C, omega], ...]}, "eps2": ..., "eps3x": ..., "eps3z": ...}.
/// Throws std::invalid_argument on schema violations. Does not validate physical ranges.
MaterialSystem material_from_json(const std::string& text);
MaterialSystem load_material(const std::filesystem::path& path);

std::string material_to_json(const MaterialSystem& system);

}  // namespace casimir
