#pragma once

#include <string>

#include "ellspec/ellipse.hpp"

namespace ellspec {

/// Render the ellipse traced by a component as a standalone SVG document.
/// The drawing lives in the component's own plane (major axis horizontal):
/// the traced curve plus labeled arrows for a, b and the equivalent c, s
/// vectors. Output is deterministic for a given input.
std::string ellipse_plot_svg(const EllipseAB& e, const std::string& title);

}  // namespace ellspec
