#include "hexlat/synth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hexlat {

FamilyId family_from_letter(char c) {
    if (c >= 'a' && c <= 'h') c = char(c - 'a' + 'A');
    if (c < 'A' || c > 'H') throw RangeError(std::string("no family named '") + c + "'");
    return static_cast<FamilyId>(c - 'A');
}

char family_letter(FamilyId f) { return char('A' + static_cast<int>(f)); }

bool family_admits(FamilyId f, std::int64_t d) {
    switch (f) {
    case FamilyId::A:
    case FamilyId::E:
    case FamilyId::D:
    case FamilyId::H: return d >= 1;
    default: return d >= 2;
    }
}

std::pair<HomClass, HomClass> family_classes(FamilyId f, std::int64_t d) {
    auto AB = [](std::int64_t p, std::int64_t q) { return HomClass{p, q, BasisTag::AB}; };
    // Rows of the classification table; bc is converted from (beta,gamma).
    auto bg = [](std::int64_t p, std::int64_t q) {
        return to_ab(HomClass{p, q, BasisTag::BG});
    };
    switch (f) {
    case FamilyId::A: return {AB(1, d - 1), bg(1, d - 1)};
    case FamilyId::B: return {AB(0, d - 1), bg(1, d - 1)};
    case FamilyId::C: return {AB(0, d), bg(0, d - 1)};
    case FamilyId::D: return {AB(0, d), bg(0, d)};
    case FamilyId::E: return {AB(d - 1, 1), bg(d - 1, 1)};
    case FamilyId::F: return {AB(d - 1, 0), bg(d, 1)};
    case FamilyId::G: return {AB(d, 0), bg(d, 1)};
    case FamilyId::H: return {AB(d, 0), bg(d, 0)};
    }
    throw RangeError("bad family id");
}

namespace {

struct Vec2Less {
    bool operator()(const Vec2& a, const Vec2& b) const { return lex_less(a, b); }
};

// Integer vector w with cross(u, w) = 1 for primitive u.
Vec2 transversal(std::int64_t u1, std::int64_t u2) {
    // extended gcd: s*u1 + t*u2 = 1, then w = (-t, s)
    std::int64_t a = u1, b = u2, s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    bool nega = a < 0, negb = b < 0;
    if (nega) a = -a;
    if (negb) b = -b;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t a2 = b, b2 = a - q * b;
        std::int64_t s2 = s0 - q * s1, t2 = t0 - q * t1;
        a = a2; b = b2;
        s0 = s1; t0 = t1;
        s1 = s2; t1 = t2;
    }
    std::int64_t s = nega ? -s0 : s0, t = negb ? -t0 : t0;
    // s*u1 + t*u2 == 1 now
    return {Rat(-t), Rat(s)};
}

struct LoopEvent {
    Rat t;       // cyclic parameter of the crossing on this loop
    int crossing;
};

struct Crossing {
    Vec2 pos;   // reduced position
    Vec2 z;     // bridge offset: p- = pos + z, p+ = pos - z
};

LatticeDiagram from_classes_attempt(const Vec2& shifts, const HomClass& ac_in,
                                    const HomClass& bc_in, const Rat& feature_scale,
                                    bool& param_clash) {
    param_clash = false;
    HomClass A = to_ab(ac_in), B = to_ab(bc_in);
    std::int64_t g1 = component_count(A), g2 = component_count(B);
    Vec2 u{Rat(A.p / g1), Rat(A.q / g1)}, v{Rat(B.p / g2), Rat(B.q / g2)};
    Vec2 wu = transversal(A.p / g1, A.q / g1);
    Vec2 wv = transversal(B.p / g2, B.q / g2);

    std::vector<Vec2> abase(g1), bbase(g2);
    for (std::int64_t i = 0; i < g1; ++i) abase[i] = wu * (Rat(i, g1) + shifts.x);
    for (std::int64_t j = 0; j < g2; ++j) bbase[j] = wv * (Rat(j, g2) + shifts.y);

    std::vector<Crossing> crossings;
    std::vector<std::vector<LoopEvent>> a_events(g1), b_events(g2);
    for (std::int64_t i = 0; i < g1; ++i) {
        for (std::int64_t j = 0; j < g2; ++j) {
            auto hits = segment_intersections(abase[i], abase[i] + u, bbase[j], bbase[j] + v);
            for (const SegHit& h : hits) {
                if (!h.interior_a || !h.interior_b) {
                    // crossing on a loop seam: nudge the base points and retry
                    if (h.ta.is_zero() || h.tb.is_zero()) { param_clash = true; return {}; }
                    continue; // ta==1 or tb==1 duplicates the seam point at 0
                }
                int id = (int)crossings.size();
                crossings.push_back({reduce(h.point), Vec2{}});
                a_events[i].push_back({h.ta, id});
                b_events[j].push_back({h.tb, id});
            }
        }
    }

    // Quarter of the smallest cyclic gap along any loop, scaled.
    auto min_gap = [](std::vector<std::vector<LoopEvent>>& evs) {
        Rat best(1);
        for (auto& e : evs) {
            std::sort(e.begin(), e.end(),
                      [](const LoopEvent& x, const LoopEvent& y) { return x.t < y.t; });
            for (size_t k = 0; k < e.size(); ++k) {
                Rat gap = k + 1 < e.size() ? e[k + 1].t - e[k].t
                                           : e[0].t + Rat(1) - e[k].t;
                if (gap.is_zero()) continue;
                if (gap < best) best = gap;
            }
        }
        return best;
    };
    Rat ga = min_gap(a_events) * feature_scale * Rat(1, 4);
    Rat gb = min_gap(b_events) * feature_scale * Rat(1, 4);

    for (auto& c : crossings) c.z = (u * ga + v * gb) * Rat(1, 4);

    LatticeDiagram d;
    auto emit_pieces = [&](Family fam, const std::vector<Vec2>& bases, const Vec2& dir,
                           const Rat& clip, const std::vector<std::vector<LoopEvent>>& evs) {
        for (size_t i = 0; i < bases.size(); ++i) {
            const auto& e = evs[i];
            for (size_t k = 0; k < e.size(); ++k) {
                size_t k2 = (k + 1) % e.size();
                Rat t0 = e[k].t, t1 = e[k2].t;
                if (k2 == 0) t1 += Rat(1);
                Vec2 x0 = bases[i] + dir * t0;
                Vec2 x1 = bases[i] + dir * t1;
                const Vec2& z0 = crossings[e[k].crossing].z;
                const Vec2& z1 = crossings[e[k2].crossing].z;
                Arc arc;
                arc.family = fam;
                arc.path = {x0 + z0, x0 + dir * clip, x1 - dir * clip, x1 - z1};
                d.arcs.push_back(std::move(arc));
            }
        }
    };
    emit_pieces(Family::A, abase, u, ga, a_events);
    emit_pieces(Family::B, bbase, v, gb, b_events);
    for (const Crossing& c : crossings)
        d.arcs.push_back({Family::C, {c.pos + c.z, c.pos - c.z}});
    return d;
}

} // namespace

LatticeDiagram from_classes(const HomClass& ac, const HomClass& bc, const Rat& feature_scale) {
    std::int64_t x = pair(ac, bc);
    if (x == 0)
        throw DegenerateError("<ac,bc> = 0: the classes must be distinct essential curves");
    HomClass ab = add(ac, neg(bc)); // ab = ac - bc
    if (!is_unlink(to_ab(ab)))
        throw NotUnlinkError("induced ab class " + to_string(to_ab(ab)) +
                             " is not an unlink in (alpha,beta)");
    if (!is_unlink(from_ab(bc, BasisTag::BG)))
        throw NotUnlinkError("bc class is not an unlink in (beta,gamma)");
    if (!is_unlink(from_ab(neg(ac), BasisTag::GA)))
        throw NotUnlinkError("ca class is not an unlink in (gamma,alpha)");

    // Seam shifts move crossings off the loop base points; feature shrink
    // handles any residual interference.
    const Rat seam_shifts[] = {Rat(0), Rat(1, 7), Rat(1, 11), Rat(1, 13), Rat(3, 17)};
    Rat scale = feature_scale;
    for (int round = 0; round < 3; ++round, scale = scale * Rat(1, 4)) {
        for (const Rat& sa : seam_shifts) {
            for (const Rat& sb : seam_shifts) {
                bool clash = false;
                LatticeDiagram d =
                    from_classes_attempt(Vec2{sa, sb}, ac, bc, scale, clash);
                if (clash) continue;
                Analysis an = analyze(d);
                if (!an.report.ok) continue;
                if (!(an.ac() == to_ab(ac)) || !(an.bc == to_ab(bc))) continue;
                return d;
            }
        }
    }
    bool clash = false;
    LatticeDiagram last =
        from_classes_attempt(Vec2{Rat(1, 7), Rat(1, 11)}, ac, bc, feature_scale, clash);
    throw NotLatticeError("from_classes produced no valid diagram", validate(last));
}

LatticeDiagram chord_model(const HomClass& ab, const HomClass& ac, const Vec2& plus_offset) {
    HomClass abv = to_ab(ab), acv = to_ab(ac);
    std::int64_t det = abv.p * acv.q - abv.q * acv.p;
    if (det <= 0) throw DegenerateError("chord model needs det[ab|ac] = b > 0");
    std::int64_t b = det;

    std::set<Vec2, Vec2Less> minus;
    for (std::int64_t m1 = 0; m1 < b && (std::int64_t)minus.size() < b; ++m1)
        for (std::int64_t m2 = 0; m2 < b && (std::int64_t)minus.size() < b; ++m2)
            minus.insert(reduce(Vec2{Rat(abv.p * m1 + acv.p * m2, b),
                                     Rat(abv.q * m1 + acv.q * m2, b)}));
    if ((std::int64_t)minus.size() != b)
        throw DegenerateError("honeycomb lattice has wrong order");

    Vec2 wb = plus_offset - Vec2{Rat(abv.p, b), Rat(abv.q, b)};
    Vec2 wc = plus_offset - Vec2{Rat(acv.p, b), Rat(acv.q, b)};
    LatticeDiagram d;
    for (const Vec2& m : minus) {
        d.arcs.push_back({Family::A, {m, m + plus_offset}});
        d.arcs.push_back({Family::B, {m, m + wb}});
        d.arcs.push_back({Family::C, {m, m + wc}});
    }
    return d;
}

namespace {

// Stored plus-offsets for the straight-chord reference positions: the
// transversely orientable diagrams are built as chords whose three
// displacement directions agree with the configured co-orientations.
std::optional<Vec2> model_offset(const HomClass& ab, const HomClass& bc) {
    HomClass abv = to_ab(ab), bcv = to_ab(bc);
    auto is = [&](std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
        return abv.p == p1 && abv.q == q1 && bcv.p == p2 && bcv.q == q2;
    };
    // (D)_d: ab = d*beta, bc = d*gamma
    if (abv.p == 0 && abv.q > 0 && bcv.p == -abv.q && bcv.q == -abv.q) {
        std::int64_t d = abv.q;
        return Vec2{Rat(1, 8 * d), Rat(1, 16 * d)};
    }
    // (H)_d: ab = d*alpha, bc = d*beta
    if (abv.q == 0 && abv.p > 0 && bcv.p == 0 && bcv.q == abv.p) {
        std::int64_t d = abv.p;
        return Vec2{Rat(9, 8 * d), Rat(1, 64 * d)};
    }
    if (is(1, 1, -1, 0)) return Vec2{Rat(9, 8), Rat(1, 16)};   // (A)_2 = (E)_2
    if (is(1, 2, -2, -1)) return Vec2{Rat(3, 8), Rat(1, 8)};   // (A)_3
    if (is(2, 1, -1, 1)) return Vec2{Rat(3, 4), Rat(1, 8)};    // (E)_3
    if (is(0, 1, -1, 0)) return Vec2{Rat(1, 8), Rat(1, 16)};   // (B)_2
    if (is(0, 2, -1, -1)) return Vec2{Rat(1, 8), Rat(1, 16)};  // (C)_2
    if (is(1, 0, -1, 1)) return Vec2{Rat(9, 8), Rat(1, 16)};   // (F)_2
    if (is(2, 0, -1, 1)) return Vec2{Rat(9, 8), Rat(1, 16)};   // (G)_2
    return std::nullopt;
}

} // namespace

LatticeDiagram family(FamilyId f, std::int64_t d) {
    if (!family_admits(f, d))
        throw RangeError(std::string("family ") + family_letter(f) +
                         " does not admit degree " + std::to_string(d));
    auto [ab, bc] = family_classes(f, d);
    HomClass ac = add(ab, bc);
    if (auto o = model_offset(ab, bc)) {
        // a few fallback offsets in case the stored one degenerates
        const Vec2 candidates[] = {
            *o,
            Vec2{o->x, o->y * Rat(1, 3)},
            Vec2{o->x + Rat(1, 64), o->y * Rat(1, 2)},
            Vec2{o->x - Rat(1, 128), o->y * Rat(2, 5)},
        };
        for (const Vec2& cand : candidates) {
            LatticeDiagram m = chord_model(ab, ac, cand);
            Analysis an = analyze(m);
            if (an.report.ok && an.ab == to_ab(ab) && an.bc == to_ab(bc)) return m;
        }
    }
    return from_classes(ac, bc);
}

LatticeDiagram family_lines(FamilyId f, std::int64_t d, const Rat& feature_scale) {
    if (!family_admits(f, d))
        throw RangeError(std::string("family ") + family_letter(f) +
                         " does not admit degree " + std::to_string(d));
    auto [ab, bc] = family_classes(f, d);
    return from_classes(add(ab, bc), bc, feature_scale);
}

} // namespace hexlat
