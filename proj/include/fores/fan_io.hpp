#pragma once

#include <string>

#include "fores/fan.hpp"

namespace fores {

/// Stable-order JSON:
/// { "group": {"r", "weights"}, "rays": [{"scaled", "exceptional", "age",
///   "discrepancy"}], "max_cones": [{"ray_indices", "word", "multiplicity"}],
///   "euler", "height_total", "size", "crepant" }
std::string fan_to_json(const Fan& f, const RemainderPolynomial& p);

/// Barycentric cross-section of a 3-dimensional fan. Each ray is a
/// <circle class="ray">, each maximal cone a <polygon class="cone">.
/// Throws std::invalid_argument for n != 3.
std::string fan_to_svg(const Fan& f);

/// Subdivision tree in Graphviz DOT; nodes are cones labelled by word and
/// local type.
std::string fan_to_dot(const Fan& f);

}  // namespace fores
