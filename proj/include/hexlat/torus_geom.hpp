#pragma once

// Exact PL geometry on the flat torus (Q/Z)^2, turn units.  Points live in the
// universal cover as pairs of rationals; a torus point is the representative
// reduced mod 1 into [0,1)^2.  Segment intersection on the torus tests lattice
// translates of the second segment inside the Minkowski bounding box, so the
// sweep is finite and complete.  Intersections at segment endpoints are
// classified non-transverse and left to the caller.

#include "hexlat/rational.hpp"
#include "hexlat/homology.hpp"

#include <vector>
#include <optional>
#include <stdexcept>

namespace hexlat {

struct GeomError : std::runtime_error {
    explicit GeomError(const std::string& m) : std::runtime_error(m) {}
};
struct OverlapError : GeomError {
    explicit OverlapError(const std::string& m) : GeomError(m) {}
};
struct NotClosedError : GeomError {
    explicit NotClosedError(const std::string& m) : GeomError(m) {}
};

struct Vec2 {
    Rat x, y;

    Vec2() = default;
    Vec2(Rat px, Rat py) : x(px), y(py) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Vec2 reduce(const Vec2& p) { return {p.x.mod1(), p.y.mod1()}; }

// Lexicographic order on reduced coordinates; used for canonical choices.
bool lex_less(const Vec2& a, const Vec2& b);

// Oriented PL path in the cover; consecutive vertices distinct.
using Polyline = std::vector<Vec2>;

Vec2 displacement(const Polyline& p);

// Winding class of a closed PL loop: the lift displacement must be an integer
// vector and is returned as a*alpha + b*beta.  Throws NotClosedError otherwise.
HomClass cycle_class(const Polyline& loop);

// One transverse or touching intersection between two segments on the torus.
struct SegHit {
    Vec2 point;      // cover coordinates on segment A
    Rat ta, tb;      // parameters along A and the translated B, in [0,1]
    int sign;        // sign of cross(dir A, dir B); 0 only for collinear endpoint touches
    bool interior_a; // strictly inside A
    bool interior_b;
    Vec2 shift;      // integer lattice shift applied to B
};

// All torus intersection points of two non-degenerate segments, endpoint
// touches included.  Throws OverlapError when the segments are parallel and
// share a sub-segment after projection.
std::vector<SegHit> segment_intersections(const Vec2& a0, const Vec2& a1,
                                          const Vec2& b0, const Vec2& b1);

// True iff the two segments share at least one torus point (any kind).
bool segments_touch(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1);

// Angular order of nonzero direction vectors, counterclockwise from +x.
// Returns true when a comes strictly before b.
bool angle_less(const Vec2& a, const Vec2& b);

} // namespace hexlat
