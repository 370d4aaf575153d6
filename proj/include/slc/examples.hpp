#pragma once

#include <string>
#include <vector>

#include "slc/curves.hpp"
#include "slc/document.hpp"

namespace slc::examples {

/// Plane quartic glued to itself by a fixed-point-carrying involution on
/// the projective plane.
document::SurfaceDocument descend();

/// P1 x P1 with 2k + 3 rulings glued into k degenerate cusps. 2 <= k <= 50.
document::SurfaceDocument large_k2(int k);

/// Rational curve with one 3-multi-node, polarised in degree deg.
PolarizedCurve multinode3_curve(long deg);

/// dim R_k for the ring of the descended quartic surface, k = 0..max_k.
/// max_k above 64 is a ValidationError.
std::vector<long> graded_ring_dims(int max_k);

}  // namespace slc::examples
