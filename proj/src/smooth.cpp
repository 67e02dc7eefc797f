#include "hexlat/smooth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hexlat {

OverlappingDiagram overlay(const LatticeDiagram& d1, const LatticeDiagram& d2,
                           const Vec2& offset) {
    Analysis a1 = analyze(d1);
    if (!a1.report.ok) throw NotLatticeError("overlay: first diagram invalid", a1.report);
    LatticeDiagram d2t = translate(d2, offset);
    Analysis a2 = analyze(d2t);
    if (!a2.report.ok) throw NotLatticeError("overlay: second diagram invalid", a2.report);
    if (a1.eps != a2.eps) throw OverlapError("overlay: diagrams have different signs");

    {
        std::set<std::pair<std::string, std::string>> pts;
        for (const Vec2& v : a1.vertices) pts.insert({v.x.str(), v.y.str()});
        for (const Vec2& v : a2.vertices)
            if (pts.count({v.x.str(), v.y.str()}))
                throw OverlapError("overlay: shared bridge point at (" + v.x.str() + "," +
                                   v.y.str() + ")");
    }

    OverlappingDiagram o;
    o.first = d1;
    o.second = d2t;
    o.eps = a1.eps;
    for (int i = 0; i < (int)d1.arcs.size(); ++i) {
        for (int j = 0; j < (int)d2t.arcs.size(); ++j) {
            const Arc& A = d1.arcs[i];
            const Arc& B = d2t.arcs[j];
            for (int s = 0; s + 1 < (int)A.path.size(); ++s) {
                for (int t = 0; t + 1 < (int)B.path.size(); ++t) {
                    std::vector<SegHit> hits;
                    try {
                        hits = segment_intersections(A.path[s], A.path[s + 1], B.path[t],
                                                     B.path[t + 1]);
                    } catch (const OverlapError&) {
                        throw OverlapError("overlay: arcs overlap along a sub-segment");
                    }
                    for (const SegHit& h : hits) {
                        if (A.family == B.family)
                            throw OverlapError("overlay: same-family crossing between arcs " +
                                               std::to_string(i) + " and " + std::to_string(j));
                        if (!h.interior_a || !h.interior_b || h.sign == 0)
                            throw OverlapError("overlay: tangency or endpoint contact");
                        o.crossings.push_back(
                            {i, s, h.ta, j, t, h.tb, reduce(h.point), h.sign});
                    }
                }
            }
        }
    }
    return o;
}

namespace {

struct Event {
    int crossing;
    int seg;
    Rat t;
    Vec2 clip_vec; // clip displacement along this strand
    Vec2 z;        // bridge offset at the crossing
};

// Rebuild one arc with sorted events cut out.  The piece entering a crossing
// ends at p+ = x - z; the piece leaving restarts at p- = x + z.
void emit_pieces(const Arc& arc, const std::vector<Event>& evs, LatticeDiagram& out) {
    auto at = [&](const Event& e) {
        Vec2 d = arc.path[e.seg + 1] - arc.path[e.seg];
        return arc.path[e.seg] + d * e.t;
    };
    Polyline cur;
    cur.push_back(arc.path.front());
    size_t next_vertex = 1;
    for (const Event& e : evs) {
        while ((int)next_vertex <= e.seg) cur.push_back(arc.path[next_vertex++]);
        Vec2 x = at(e);
        cur.push_back(x - e.clip_vec);
        cur.push_back(x - e.z);
        out.arcs.push_back({arc.family, cur});
        cur.clear();
        cur.push_back(x + e.z);
        cur.push_back(x + e.clip_vec);
    }
    while (next_vertex < arc.path.size()) cur.push_back(arc.path[next_vertex++]);
    out.arcs.push_back({arc.family, cur});
}

LatticeDiagram smooth_attempt(const OverlappingDiagram& o, const Rat& shrink) {
    std::map<std::pair<int, int>, std::vector<Event>> events; // (diagram, arc) -> events
    std::vector<Vec2> clipv[2];
    clipv[0].resize(o.crossings.size());
    clipv[1].resize(o.crossings.size());

    for (int k = 0; k < (int)o.crossings.size(); ++k) {
        const CrossingRecord& c = o.crossings[k];
        events[{0, c.arc1}].push_back({k, c.seg1, c.t1, {}, {}});
        events[{1, c.arc2}].push_back({k, c.seg2, c.t2, {}, {}});
    }

    // clip: a quarter of the distance to the nearest event or segment end on
    // the same segment, in parameter units
    for (auto& [key, evs] : events) {
        const Arc& arc =
            key.first == 0 ? o.first.arcs[key.second] : o.second.arcs[key.second];
        std::sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) {
            if (a.seg != b.seg) return a.seg < b.seg;
            return a.t < b.t;
        });
        for (size_t i = 0; i < evs.size(); ++i) {
            Rat room = std::min(evs[i].t, Rat(1) - evs[i].t);
            if (i > 0 && evs[i - 1].seg == evs[i].seg)
                room = std::min(room, (evs[i].t - evs[i - 1].t) * Rat(1, 2));
            if (i + 1 < evs.size() && evs[i + 1].seg == evs[i].seg)
                room = std::min(room, (evs[i + 1].t - evs[i].t) * Rat(1, 2));
            Rat clip = room * Rat(1, 4) * shrink;
            Vec2 dir = arc.path[evs[i].seg + 1] - arc.path[evs[i].seg];
            clipv[key.first][evs[i].crossing] = dir * clip;
        }
    }

    std::vector<Vec2> z(o.crossings.size());
    for (size_t k = 0; k < z.size(); ++k) z[k] = (clipv[0][k] + clipv[1][k]) * Rat(1, 4);
    for (auto& [key, evs] : events)
        for (auto& e : evs) {
            e.clip_vec = clipv[key.first][e.crossing];
            e.z = z[e.crossing];
        }

    LatticeDiagram out;
    for (int which = 0; which < 2; ++which) {
        const LatticeDiagram& src = which == 0 ? o.first : o.second;
        for (int i = 0; i < (int)src.arcs.size(); ++i) {
            auto it = events.find({which, i});
            if (it == events.end()) out.arcs.push_back(src.arcs[i]);
            else emit_pieces(src.arcs[i], it->second, out);
        }
    }
    for (int k = 0; k < (int)o.crossings.size(); ++k) {
        const CrossingRecord& c = o.crossings[k];
        Family f = o.first.arcs[c.arc1].family;
        Family g = o.second.arcs[c.arc2].family;
        out.arcs.push_back({third_family(f, g), {c.point + z[k], c.point - z[k]}});
    }
    return out;
}

} // namespace

SmoothResult smooth_all(const OverlappingDiagram& o) {
    Analysis a1 = analyze(o.first), a2 = analyze(o.second);
    SmoothResult res;
    res.crossings = (std::int64_t)o.crossings.size();
    res.ab1 = a1.ab;
    res.bc1 = a1.bc;
    res.ab2 = a2.ab;
    res.bc2 = a2.bc;

    ValidationReport last;
    Rat shrink(1);
    for (int round = 0; round < 3; ++round, shrink = shrink * Rat(1, 4)) {
        LatticeDiagram cand = smooth_attempt(o, shrink);
        Analysis an = analyze(cand);
        if (!an.report.ok) {
            last = an.report;
            continue;
        }
        res.diagram = cand;
        res.ab = an.ab;
        res.bc = an.bc;
        res.additive = an.ab == add(a1.ab, a2.ab) && an.bc == add(a1.bc, a2.bc);
        return res;
    }
    throw NotLatticeError("smoothing is not a hexagonal lattice diagram", last);
}

// ---------------------------------------------------------------------------
// Recursion drivers.
//
// Every overlap below places a seed against a (D)_k line diagram, whose
// bridge zones sit on an exact k x k grid read off from the construction.
// Around each zone the two clipped line strands leave a free window: a
// straight strand passing through it crosses only the short inserted
// c-segment, entering and leaving through the clip gaps of both line
// families.  Arcs that must cross a line family do so midway between zones;
// arcs that must avoid one run parallel to it.  The mirrored families run
// the same placements through the coordinate swap.

namespace {

struct Grid {
    LatticeDiagram diagram; // (D)_k lines
    std::int64_t k = 0;
    std::vector<Rat> cols; // zone x values, sorted, spaced 1/k
    Rat row0;              // zone rows: y = row0 + i/k
    Rat psi0;              // b-lines: x - y = psi0 + j/k
    Rat window;            // free half-width of a thread window
};

// smallest representative r in [0, 1/k) of a residue class sampled by vals
Rat residue_base(const std::vector<Rat>& vals, std::int64_t k) {
    Rat best(1);
    for (const Rat& v : vals) {
        Rat r = v.mod1();
        while (r >= Rat(1, k)) r = r - Rat(1, k);
        if (r < best) best = r;
    }
    return best;
}

Grid make_d_grid(std::int64_t k, const Rat& shrink) {
    Grid g;
    g.k = k;
    g.diagram = family_lines(FamilyId::D, k, shrink);
    std::vector<Rat> xs, ys, psis;
    Vec2 cdisp{Rat(0), Rat(0)};
    for (const Arc& a : g.diagram.arcs) {
        if (a.family != Family::C) continue;
        Vec2 mid = reduce((a.path.front() + a.path.back()) * Rat(1, 2));
        xs.push_back(mid.x);
        ys.push_back(mid.y);
        psis.push_back((mid.x - mid.y).mod1());
        cdisp = a.path.back() - a.path.front();
    }
    std::set<std::string> seen;
    for (const Rat& x : xs)
        if (seen.insert(x.str()).second) g.cols.push_back(x);
    std::sort(g.cols.begin(), g.cols.end());
    if ((std::int64_t)g.cols.size() != k)
        throw GeomError("grid extraction: expected " + std::to_string(k) + " columns");
    g.row0 = residue_base(ys, k);
    g.psi0 = residue_base(psis, k);
    // the c displacement here is ((ga+gb)/2, gb/2); the window is (ga+gb)/4
    g.window = cdisp.x.abs() * Rat(1, 2);
    return g;
}

// y-level halfway between zone rows i and i+1, plus a small tweak
Rat mid_row(const Grid& g, const Rat& tweak) {
    return g.row0 + Rat(1, 2 * g.k) + tweak;
}

SmoothResult verified_smooth(const LatticeDiagram& seed, const LatticeDiagram& grid,
                             std::int64_t expect, bool mirror_world) {
    LatticeDiagram s = seed, gr = grid;
    if (mirror_world) {
        s = reverse_orientation(mirror(s));
        gr = reverse_orientation(mirror(gr));
    }
    OverlappingDiagram o = overlay(s, gr, Vec2{Rat(0), Rat(0)});
    if ((std::int64_t)o.crossings.size() != expect)
        throw GeomError("placement yields " + std::to_string(o.crossings.size()) +
                        " crossings, want " + std::to_string(expect));
    SmoothResult r = smooth_all(o);
    if (!r.additive) throw GeomError("smoothing broke homology additivity");
    return r;
}

// Head lift of a chord from `from` to the torus point `to`, choosing the
// cover representative whose displacement is closest to `approx`.
Vec2 lift_near(const Vec2& from, const Vec2& to, const Vec2& approx) {
    Vec2 d0 = reduce(to) - from;
    Rat ax = d0.x - approx.x, ay = d0.y - approx.y;
    auto round_away = [](const Rat& r) { return (r + Rat(1, 2)).floor(); };
    return from + Vec2{d0.x - Rat(round_away(ax)), d0.y - Rat(round_away(ay))};
}

// (B)_2 seed: one station at a thread column.  The a-arc threads all k zones
// of the column upward, the c-arc runs once around crossing the k b-lines,
// the b-arc is a short chord.
LatticeDiagram b2_seed(const Grid& g, const Rat& tweak) {
    Rat W = g.window;
    Rat xt = (g.cols.front() + W * Rat(1, 2)).mod1();
    Rat y0 = mid_row(g, tweak).mod1();
    Vec2 Pm{xt, y0};
    Vec2 db{-W * Rat(1, 8), -W * Rat(1, 32)};
    Vec2 Pp = Pm + db;
    LatticeDiagram d;
    d.arcs.push_back({Family::A, {Pm, Pp + Vec2{Rat(0), Rat(1)}}});
    d.arcs.push_back({Family::B, {Pm, Pp}});
    d.arcs.push_back({Family::C, {Pm, Pp + Vec2{Rat(1), Rat(0)}}});
    return d;
}

// (C)_2 seed: two stations.  At station s the a-arc threads t_s zones upward
// and the b-arc threads the remaining k - t_s downward through the same
// column; the c-arcs run rightward between the stations crossing b-lines.
LatticeDiagram c2_seed(const Grid& g, std::int64_t t0, std::int64_t v0, const Rat& tweak) {
    std::int64_t k = g.k;
    std::int64_t t1 = k - t0;
    Rat W = g.window;
    Rat sx = W * Rat(1, 16), sy = W * Rat(1, 32);
    // the y-jitter keeps chords strictly shorter than a full wrap
    Rat jy0 = t0 == 0 ? W * Rat(1, 128) : -W * Rat(1, 128);
    Rat jy1 = t1 == 0 ? W * Rat(1, 96) : -W * Rat(1, 96);
    Rat jx0 = W * Rat(1, 64), jx1 = W * Rat(1, 48);

    Vec2 M0{(g.cols.front() + W * Rat(1, 4)).mod1(), mid_row(g, tweak).mod1()};
    Vec2 P0 = M0 + Vec2{jx0, Rat(t0, k) + jy0};
    Vec2 P1 = M0 + Vec2{Rat(v0, k) - sx, sy};
    Vec2 M1 = P1 - Vec2{jx1, Rat(t1, k) + jy1};

    LatticeDiagram d;
    d.arcs.push_back({Family::A, {M0, P0}});
    d.arcs.push_back({Family::A, {M1, P1}});
    d.arcs.push_back({Family::B, {M0, P0 - Vec2{Rat(0), Rat(1)}}});
    d.arcs.push_back({Family::B, {M1, P1 - Vec2{Rat(0), Rat(1)}}});
    d.arcs.push_back({Family::C, {M0, P1}});
    d.arcs.push_back({Family::C, {M1, lift_near(M1, P0, Vec2{Rat(k - v0, k), Rat(0)})}});
    return d;
}

// (A)_3 seed: the three a-arcs run vertically through thread windows and
// their y-ranges partition the circle; the b-arc from station i drops
// diagonally (parallel to the b-lines) to the top of the interval below,
// crossing rows midway between columns; the c-arcs come out horizontal,
// crossing b-lines only.  The drop sizes delta_i are free rationals summing
// to one, so every count is a byproduct of the partition.
LatticeDiagram a3_seed(const Grid& g, const std::array<std::int64_t, 3>& n,
                       const Rat& tweak) {
    std::int64_t k = g.k;
    Rat W = g.window;

    // drops: delta_i ~ n_i/k, jittered away from the level grid but still
    // summing to exactly 1
    Rat e = W * Rat(1, 7);
    std::array<Rat, 3> delta;
    {
        Rat balance(0);
        int big = 0;
        for (int i = 1; i < 3; ++i)
            if (n[i] > n[big]) big = i;
        for (int i = 0; i < 3; ++i) {
            Rat ji = e * Rat(i + 1, 3);
            if (i == big) continue;
            delta[i] = Rat(n[i], k) + ji;
            balance += ji;
        }
        delta[big] = Rat(n[big], k) - balance;
    }

    // intervals stacked in the order 0, 2, 1 going up
    std::array<Rat, 3> len{delta[2], delta[0], delta[1]};
    Rat X = (g.cols.front() + W * Rat(1, 4)).mod1();
    Rat Y = mid_row(g, tweak).mod1();
    std::array<Vec2, 3> M, P;
    M[0] = {X, Y};
    M[2] = {X + delta[1] + delta[2], Y + len[0]};
    M[1] = {X + delta[1], Y + len[0] + len[2]};
    std::array<Rat, 3> jxp{W * Rat(1, 256), W * Rat(1, 512), -W * Rat(1, 384)};
    for (int i = 0; i < 3; ++i) P[i] = M[i] + Vec2{jxp[i], len[i]};

    LatticeDiagram d;
    for (int i = 0; i < 3; ++i) {
        d.arcs.push_back({Family::A, {M[i], P[i]}});
        int prev = (i + 2) % 3;
        d.arcs.push_back(
            {Family::B, {M[i], lift_near(M[i], reduce(P[prev]), Vec2{-delta[i], -delta[i]})}});
        int next = (i + 1) % 3;
        d.arcs.push_back(
            {Family::C, {M[i], lift_near(M[i], reduce(P[next]), Vec2{delta[next], Rat(0)})}});
    }
    return d;
}

LatticeDiagram checked_seed(const LatticeDiagram& seed, FamilyId f, std::int64_t deg) {
    Analysis an = analyze(seed);
    if (!an.report.ok) throw NotLatticeError("recursion seed invalid", an.report);
    auto [ab, bc] = family_classes(f, deg);
    if (!(an.ab == to_ab(ab)) || !(an.bc == to_ab(bc)))
        throw GeomError("recursion seed has wrong classes");
    return seed;
}

const Rat kTweaks[] = {Rat(0),      Rat(1, 8),  Rat(-1, 8),  Rat(1, 16),
                       Rat(-1, 16), Rat(3, 16), Rat(-3, 16), Rat(5, 16)};

// One-step recursions: seed of fixed degree over a (D)_k grid (mirrored for
// the E/F/G families).
SmoothResult seed_over_grid(FamilyId seed_fam, std::int64_t seed_deg, std::int64_t k,
                            std::int64_t expect, bool mirror_world) {
    Rat shrink(1, 16);
    Grid g = make_d_grid(k, shrink);
    std::string why;
    for (const Rat& tw : kTweaks) {
        Rat tweak = tw * Rat(1, g.k);
        try {
            LatticeDiagram seed;
            if (seed_fam == FamilyId::B) {
                seed = b2_seed(g, tweak);
            } else if (seed_fam == FamilyId::C) {
                seed = c2_seed(g, (k + 1) / 2, std::max<std::int64_t>(1, k / 2), tweak);
            } else {
                std::array<std::int64_t, 3> n{(k + 2) / 3, (k + 1) / 3, k / 3};
                seed = a3_seed(g, n, tweak);
            }
            checked_seed(seed, seed_fam, seed_deg);
            return verified_smooth(seed, g.diagram, expect, mirror_world);
        } catch (const std::exception& e) {
            why = e.what();
        }
    }
    throw GeomError("no working placement for the recursion step: " + why);
}

// (D)_1 over a (D)_{k} grid, for the one-degree-at-a-time families.
SmoothResult d1_over_grid(std::int64_t k, bool mirror_world) {
    Rat shrink(1, 16);
    Grid g = make_d_grid(k, shrink);
    LatticeDiagram d1 = family_lines(FamilyId::D, 1, Rat(1, 8 * k));
    // locate the seed's zone to steer its two lines between the grid levels
    Vec2 zone{Rat(0), Rat(0)};
    for (const Arc& a : d1.arcs)
        if (a.family == Family::C)
            zone = reduce((a.path.front() + a.path.back()) * Rat(1, 2));
    std::string why;
    for (const Rat& tw1 : kTweaks) {
        for (const Rat& tw2 : kTweaks) {
            Rat ytarget = mid_row(g, tw1 * Rat(1, g.k)).mod1();
            Rat ptarget = (g.psi0 + Rat(1, 2 * g.k) + tw2 * Rat(1, g.k)).mod1();
            Rat ty = ytarget - zone.y;
            Rat tx = ty + ptarget - (zone.x - zone.y);
            try {
                return verified_smooth(translate(d1, Vec2{tx, ty}), g.diagram, 2 * k,
                                       mirror_world);
            } catch (const std::exception& e) {
                why = e.what();
            }
        }
    }
    throw GeomError("no working (D)_1 placement over the k=" + std::to_string(k) +
                    " grid: " + why);
}

} // namespace

RecursionResult build_by_recursion(FamilyId f, std::int64_t d) {
    if (!family_admits(f, d))
        throw RangeError(std::string("family ") + family_letter(f) +
                         " does not admit degree " + std::to_string(d));
    RecursionResult rr;
    bool mirrored = f == FamilyId::E || f == FamilyId::F || f == FamilyId::G ||
                    f == FamilyId::H;

    switch (f) {
    case FamilyId::D:
    case FamilyId::H: {
        if (d == 1) {
            rr.diagram = family(f, 1);
            return rr;
        }
        SmoothResult last;
        for (std::int64_t m = 2; m <= d; ++m) {
            last = d1_over_grid(m - 1, mirrored);
            rr.steps.push_back({m, last.crossings});
        }
        rr.diagram = last.diagram;
        break;
    }
    case FamilyId::B:
    case FamilyId::F: {
        if (d == 2) {
            rr.diagram = family(f, 2);
            return rr;
        }
        SmoothResult r = seed_over_grid(FamilyId::B, 2, d - 2, 2 * (d - 2), mirrored);
        rr.steps.push_back({d, r.crossings});
        rr.diagram = r.diagram;
        break;
    }
    case FamilyId::C:
    case FamilyId::G: {
        if (d == 2) {
            rr.diagram = family(f, 2);
            return rr;
        }
        SmoothResult r = seed_over_grid(FamilyId::C, 2, d - 2, 3 * (d - 2), mirrored);
        rr.steps.push_back({d, r.crossings});
        rr.diagram = r.diagram;
        break;
    }
    case FamilyId::A:
    case FamilyId::E: {
        if (d <= 3) {
            rr.diagram = family(f, d);
            return rr;
        }
        SmoothResult r = seed_over_grid(FamilyId::A, 3, d - 3, 3 * (d - 3), mirrored);
        rr.steps.push_back({d, r.crossings});
        rr.diagram = r.diagram;
        break;
    }
    }
    if (!equivalent(rr.diagram, family(f, d)))
        throw GeomError("recursion result is not equivalent to the synthesized family");
    return rr;
}

} // namespace hexlat
