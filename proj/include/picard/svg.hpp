#pragma once

// Affine cross-section of a rank-3 hyperbolic lattice: the slice through the
// ample class, scaled so that the positive cone becomes the unit disk.

#include "picard/cone.hpp"

#include <string>

namespace picard {

/// One <ellipse class="positive-cone">, one <line class="wall"> per chamber
/// wall and one <circle class="ray"> per extremal ray. Deterministic.
/// Throws PreconditionError unless the lattice has rank 3.
std::string plot_section_svg(const ConeAnalysis& analysis);

}  // namespace picard
