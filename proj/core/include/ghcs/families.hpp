#pragma once

// The five parameter shapes with closed-form weight functions and photon
// statistics: (0;0), (0;1), (1;1), (1;0) and (2;1), real parameters only.

#include "ghcs/parameters.hpp"

#include <optional>
#include <string>

namespace ghcs {

enum class Family { CS, F01, F11, F10, F21 };

const char* to_string(Family family) noexcept;
std::optional<Family> parse_family(const std::string& name);

// Family of the (p, q) shape of params, without any coalescence reduction.
std::optional<Family> shape_family(const ParameterSet& params);

// Throws ParameterError unless params is real and has the shape of family.
void require_family(Family family, const ParameterSet& params);

}  // namespace ghcs
