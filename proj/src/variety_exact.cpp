#include "hexlat/variety_exact.hpp"
#include "hexlat/synth.hpp"

#include <algorithm>

namespace hexlat {

namespace {

// Cyclic coordinate map carrying the H2 shadows onto the H1 shadows; the
// b-family is its inverse image of a.  Calibrated: the map must be
// (x,y) -> (-y, x-y), the inverse of T(x,y) = (y-x, -x); the forward map
// assembles a degree-0, negatively signed diagram instead.
Vec2 step_map(const Vec2& p) { return {-p.y, p.x - p.y}; }

} // namespace

std::pair<Vec2, Vec2> variety_arc_endpoints(std::int64_t d, std::int64_t j) {
    std::int64_t D = d * d - 3 * d + 3;
    Vec2 tail{Rat(2 * d + 3 * (j - 1), 3 * D), Rat(d + 3 * (d - 1) * j - 3, 3 * D)};
    Vec2 head = tail + variety_arc_displacement(d);
    return {reduce(tail), reduce(head)};
}

Vec2 variety_arc_displacement(std::int64_t d) {
    std::int64_t D = d * d - 3 * d + 3;
    return {Rat(3 - d, 3 * D), Rat(d, 3 * D)};
}

LatticeDiagram variety_arcs(VarietyKind kind, std::int64_t d) {
    if (d < 1) throw RangeError("variety needs d >= 1");
    std::int64_t D = d * d - 3 * d + 3;
    LatticeDiagram dg;
    Vec2 delta = variety_arc_displacement(d);
    std::vector<Polyline> a_paths;
    for (std::int64_t j = 1; j <= D; ++j) {
        auto [tail, head] = variety_arc_endpoints(d, j);
        (void)head;
        a_paths.push_back({tail, tail + delta});
    }
    for (auto& p : a_paths) dg.arcs.push_back({Family::A, p});
    for (auto& p : a_paths) {
        Polyline b{step_map(p[0]), step_map(p[1])};
        dg.arcs.push_back({Family::B, b});
        dg.arcs.push_back({Family::C, {step_map(b[0]), step_map(b[1])}});
    }

    if (kind == VarietyKind::Vprime) dg = reverse_orientation(mirror(dg));

    Analysis an = analyze(dg);
    if (!an.report.ok)
        throw NotLatticeError("variety arcs do not assemble into a lattice diagram",
                              an.report);
    return dg;
}

std::pair<std::vector<Vec2>, std::vector<Vec2>> variety_bridge_points(std::int64_t d) {
    // the a-arc endpoints already exhaust the 2(d^2-3d+3) bridge points: the
    // b and c families end on the same two translation orbits
    std::int64_t D = d * d - 3 * d + 3;
    std::vector<Vec2> minus, plus;
    for (std::int64_t j = 1; j <= D; ++j) {
        auto [tail, head] = variety_arc_endpoints(d, j);
        minus.push_back(tail);
        plus.push_back(head);
    }
    return {minus, plus};
}

} // namespace hexlat
