#pragma once

#include <string>

#include "stoim/matching.hpp"

namespace stoim {

enum class RenderFormat { Ascii, Svg };

/// Fixed-width text diagram: points on a baseline, arcs as rectangular
/// humps above it, openers shown as '*' and closers as '#'.
std::string render_ascii(const Matching& m);

/// Standalone SVG document with stable integer coordinates: point k at
/// x = 40k, each arc a semicircle above the baseline, openers as filled
/// circles and closers as squares.
std::string render_svg(const Matching& m);

std::string render(const Matching& m, RenderFormat format);

}  // namespace stoim
