#include "hexlat/torus_geom.hpp"

#include <algorithm>

namespace hexlat {

bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Vec2 displacement(const Polyline& p) {
    if (p.size() < 2) return {Rat(0), Rat(0)};
    return p.back() - p.front();
}

HomClass cycle_class(const Polyline& loop) {
    Vec2 d = displacement(loop);
    if (!d.x.is_integer() || !d.y.is_integer())
        throw NotClosedError("lift displacement (" + d.x.str() + "," + d.y.str() +
                             ") is not integral: loop does not close on the torus");
    return {d.x.num64(), d.y.num64(), BasisTag::AB};
}

namespace {

// Collinear case: report overlap of [a0,a1] with the translate of [b0,b1].
bool collinear_overlap(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    Vec2 d = a1 - a0;
    // project onto the dominant coordinate of d
    auto coord = [&](const Vec2& p) { return d.x.abs() >= d.y.abs() ? p.x : p.y; };
    Rat lo = coord(a0), hi = coord(a1);
    if (hi < lo) std::swap(lo, hi);
    Rat u = coord(b0), v = coord(b1);
    if (v < u) std::swap(u, v);
    return u < hi && lo < v; // positive-length intersection
}

} // namespace

std::vector<SegHit> segment_intersections(const Vec2& a0, const Vec2& a1,
                                          const Vec2& b0, const Vec2& b1) {
    if (a0 == a1 || b0 == b1) throw GeomError("degenerate segment");
    std::vector<SegHit> hits;
    Vec2 da = a1 - a0, db = b1 - b0;
    Rat denom = cross(da, db);

    Rat ax_lo = std::min(a0.x, a1.x), ax_hi = std::max(a0.x, a1.x);
    Rat ay_lo = std::min(a0.y, a1.y), ay_hi = std::max(a0.y, a1.y);
    Rat bx_lo = std::min(b0.x, b1.x), bx_hi = std::max(b0.x, b1.x);
    Rat by_lo = std::min(b0.y, b1.y), by_hi = std::max(b0.y, b1.y);

    std::int64_t kx0 = (ax_lo - bx_hi).floor(), kx1 = (ax_hi - bx_lo).ceil();
    std::int64_t ky0 = (ay_lo - by_hi).floor(), ky1 = (ay_hi - by_lo).ceil();

    for (std::int64_t kx = kx0; kx <= kx1; ++kx) {
        for (std::int64_t ky = ky0; ky <= ky1; ++ky) {
            Vec2 shift{Rat(kx), Rat(ky)};
            Vec2 c0 = b0 + shift;
            Vec2 w = c0 - a0;
            if (denom.is_zero()) {
                if (!cross(w, da).is_zero()) continue; // parallel, distinct lines
                Vec2 c1 = b1 + shift;
                if (collinear_overlap(a0, a1, c0, c1))
                    throw OverlapError("segments share a sub-segment on the torus");
                // collinear, touching at a single point at most
                for (const Vec2& pa : {a0, a1}) {
                    for (const Vec2& pb : {c0, c1}) {
                        if (pa != pb) continue;
                        SegHit h;
                        h.point = pa;
                        h.ta = pa == a0 ? Rat(0) : Rat(1);
                        h.tb = pb == c0 ? Rat(0) : Rat(1);
                        h.sign = 0;
                        h.interior_a = false;
                        h.interior_b = false;
                        h.shift = shift;
                        hits.push_back(h);
                    }
                }
                continue;
            }
            Rat ta = cross(w, db) / denom;
            Rat tb = cross(w, da) / denom;
            if (ta < Rat(0) || ta > Rat(1) || tb < Rat(0) || tb > Rat(1)) continue;
            SegHit h;
            h.point = a0 + da * ta;
            h.ta = ta;
            h.tb = tb;
            h.sign = denom.sign();
            h.interior_a = ta > Rat(0) && ta < Rat(1);
            h.interior_b = tb > Rat(0) && tb < Rat(1);
            h.shift = shift;
            hits.push_back(h);
        }
    }
    return hits;
}

bool segments_touch(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    try {
        return !segment_intersections(a0, a1, b0, b1).empty();
    } catch (const OverlapError&) {
        return true;
    }
}

namespace {

int half_plane(const Vec2& v) {
    // 0 for angles in [0,pi) starting at +x axis, 1 for [pi,2pi)
    if (v.y.sign() > 0) return 0;
    if (v.y.sign() < 0) return 1;
    return v.x.sign() > 0 ? 0 : 1;
}

} // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b).sign() > 0;
}

} // namespace hexlat
