#pragma once

// Exact shadow diagrams of the varieties
//   V_d  = { z1 z2^{d-1} + z2 z3^{d-1} + z3 z1^{d-1} = 0 }
//   V'_d = { z1^{d-1} z2 + z2^{d-1} z3 + z3^{d-1} z1 = 0 }
// assembled from the closed-form arc endpoints on the central torus.  In turn
// units with D = d^2 - 3d + 3:
//   theta^-_j = (2d/3 + j - 1) / D     theta^+_j = (d/3 + j) / D
//   psi^-_j   = (d/3 + (d-1)j - 1) / D psi^+_j   = (2d/3 + (d-1)j - 1) / D
// The a-arcs are straight segments with lift displacement
// ((1 - d/3)/D, (d/3)/D); the b and c families are the images of a under the
// cyclic coordinate map, and V' is the coordinate mirror of V.

#include "hexlat/diagram.hpp"

namespace hexlat {

enum class VarietyKind { V, Vprime };

// Exact endpoints of the j-th a-arc (1-based j), in turn units, reduced.
std::pair<Vec2, Vec2> variety_arc_endpoints(std::int64_t d, std::int64_t j);

// Exact lift displacement of every a-arc.
Vec2 variety_arc_displacement(std::int64_t d);

// The full hexagonal lattice diagram of the variety; validates and carries
// the classes of (A)_d resp. (E)_d.
LatticeDiagram variety_arcs(VarietyKind kind, std::int64_t d);

// The exact bridge points x^- and x^+ (2(d^2-3d+3) points in total).
std::pair<std::vector<Vec2>, std::vector<Vec2>> variety_bridge_points(std::int64_t d);

} // namespace hexlat
