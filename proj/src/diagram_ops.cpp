#include "hexlat/diagram.hpp"

#include <algorithm>

namespace hexlat {

namespace {

LatticeDiagram map_coords(const LatticeDiagram& d, const Vec2& col_x, const Vec2& col_y,
                          const Vec2& offset) {
    LatticeDiagram out = d;
    for (auto& arc : out.arcs)
        for (auto& p : arc.path)
            p = Vec2{col_x.x * p.x + col_y.x * p.y, col_x.y * p.x + col_y.y * p.y} + offset;
    return out;
}

} // namespace

LatticeDiagram translate(const LatticeDiagram& d, const Vec2& v) {
    LatticeDiagram out = d;
    for (auto& arc : out.arcs)
        for (auto& p : arc.path) p = p + v;
    return out;
}

LatticeDiagram reverse_orientation(const LatticeDiagram& d) {
    LatticeDiagram out = d;
    for (auto& arc : out.arcs) std::reverse(arc.path.begin(), arc.path.end());
    return out;
}

LatticeDiagram relabel_cyclic(const LatticeDiagram& d) {
    // T(x,y) = (y-x, -x); columns are the images of the basis vectors.
    LatticeDiagram out = map_coords(d, Vec2{Rat(-1), Rat(-1)}, Vec2{Rat(1), Rat(0)},
                                    Vec2{Rat(0), Rat(0)});
    for (auto& arc : out.arcs) {
        switch (arc.family) {
        case Family::B: arc.family = Family::A; break;
        case Family::C: arc.family = Family::B; break;
        case Family::A: arc.family = Family::C; break;
        }
    }
    return out;
}

LatticeDiagram mirror(const LatticeDiagram& d) {
    LatticeDiagram out = map_coords(d, Vec2{Rat(0), Rat(1)}, Vec2{Rat(1), Rat(0)},
                                    Vec2{Rat(0), Rat(0)});
    for (auto& arc : out.arcs) {
        if (arc.family == Family::A) arc.family = Family::B;
        else if (arc.family == Family::B) arc.family = Family::A;
    }
    return out;
}

LatticeDiagram orient(const LatticeDiagram& d) {
    Analysis an = analyze(d);
    if (!an.report.ok)
        throw NotOrientableError("cannot orient invalid diagram: " + an.report.summary());
    int least = 0;
    for (int v = 1; v < (int)an.vertices.size(); ++v)
        if (lex_less(an.vertices[v], an.vertices[least])) least = v;
    if (an.color[least] == -1) return d;
    return reverse_orientation(d);
}

PairedCurve paired_curve(const LatticeDiagram& d, Pairing which) {
    Analysis an = analyze(d);
    if (!an.report.ok)
        throw NotLatticeError("paired_curve needs a valid diagram", an.report);
    Family f = which == Pairing::AB ? Family::A : which == Pairing::BC ? Family::B : Family::C;
    Family g = next_family(f);

    int n = (int)d.arcs.size();
    std::vector<int> g_of_head(an.vertices.size(), -1), f_of_tail(an.vertices.size(), -1);
    std::vector<int> f_arcs;
    for (int i = 0; i < n; ++i) {
        if (d.arcs[i].family == f) {
            f_arcs.push_back(i);
            f_of_tail[an.vertex_of_end[2 * i]] = i;
        } else if (d.arcs[i].family == g) {
            g_of_head[an.vertex_of_end[2 * i + 1]] = i;
        }
    }

    PairedCurve pc;
    Vec2 total{Rat(0), Rat(0)};
    std::vector<int> used(n, 0);
    for (int a0 : f_arcs) {
        if (used[a0]) continue;
        Polyline lift;
        int a = a0;
        do {
            used[a] = 1;
            const Polyline& fp = d.arcs[a].path;
            if (lift.empty()) {
                lift = fp;
            } else {
                Vec2 base = lift.back() - fp.front();
                for (size_t k = 1; k < fp.size(); ++k) lift.push_back(fp[k] + base);
            }
            int gb = g_of_head[an.vertex_of_end[2 * a + 1]];
            const Polyline& gp = d.arcs[gb].path;
            Vec2 gbase = lift.back() - gp.back();
            for (size_t k = gp.size() - 1; k-- > 0;)
                lift.push_back(gp[k] + gbase);
            a = f_of_tail[an.vertex_of_end[2 * gb]];
        } while (a != a0);
        total = total + (lift.back() - lift.front());
        pc.components.push_back(std::move(lift));
    }
    pc.cls = {total.x.num64(), total.y.num64(), BasisTag::AB};
    pc.component_count = (std::int64_t)pc.components.size();
    return pc;
}

InvariantReport invariants(const LatticeDiagram& d) {
    Analysis an = analyze(d);
    if (!an.report.ok)
        throw NotLatticeError("invariants need a valid diagram", an.report);

    InvariantReport r;
    r.b = an.b;
    r.epsilon = an.eps;
    r.c1 = an.comp_ab;
    r.c2 = an.comp_bc;
    r.c3 = an.comp_ca;
    r.ab = an.ab;
    r.bc = from_ab(an.bc, BasisTag::BG);
    r.ca = from_ab(an.ca, BasisTag::GA);

    HomClass acv = an.ac();
    if (pair(acv, an.bc) != r.epsilon * r.b)
        throw InconsistentError("<ac,bc> != eps*b");

    std::int64_t p1 = r.ab.p, q1 = r.ab.q;
    std::int64_t p2 = r.bc.p, q2 = r.bc.q;
    std::int64_t p3 = r.ca.p, q3 = r.ca.q;
    r.degree = p2 + q1;
    if (r.degree != p3 + q2 || r.degree != p1 + q3)
        throw InconsistentError("degree formulas disagree");
    r.self_int = p1 * q1 + p2 * q2 + p3 * q3 + r.epsilon * r.b;
    if (r.self_int != r.degree * r.degree)
        throw InconsistentError("self-intersection != degree^2");
    std::int64_t chi = r.b - r.c1 - r.c2 - r.c3;
    if (chi % 2 != 0) throw InconsistentError("b - c1 - c2 - c3 is odd");
    r.genus = chi / 2 + 1;
    std::int64_t ad = r.degree < 0 ? -r.degree : r.degree;
    r.genus_minimal = 2 * r.genus == (ad - 1) * (ad - 2);
    return r;
}

namespace {

// Canonical representative of {(ac,bc), (-ac,-bc)} for orientation-free
// comparison.
std::array<std::int64_t, 4> class_key(const LatticeDiagram& d) {
    Analysis an = analyze(d);
    if (!an.report.ok)
        throw NotLatticeError("equivalence needs valid diagrams", an.report);
    HomClass ac = an.ac(), bc = an.bc;
    std::array<std::int64_t, 4> k1{ac.p, ac.q, bc.p, bc.q};
    std::array<std::int64_t, 4> k2{-ac.p, -ac.q, -bc.p, -bc.q};
    return std::min(k1, k2);
}

} // namespace

bool equivalent(const LatticeDiagram& d1, const LatticeDiagram& d2) {
    return class_key(d1) == class_key(d2);
}

bool check_transverse(const LatticeDiagram& d, const TransverseConfig& cfg) {
    Analysis an = analyze(d);
    if (!an.report.ok || an.eps != +1) return false;
    // A diagram passes when some global orientation makes every segment of
    // every family agree with its co-orientation vector; reversal negates all
    // values, so the test is sign-uniformity without zeros.
    int overall = 0;
    for (const Arc& arc : d.arcs) {
        Vec2 n = arc.family == Family::A ? cfg.n_a
               : arc.family == Family::B ? cfg.n_b
                                         : cfg.n_c;
        for (size_t k = 0; k + 1 < arc.path.size(); ++k) {
            Vec2 dir = arc.path[k + 1] - arc.path[k];
            int s = (n.x * dir.x + n.y * dir.y).sign();
            if (s == 0) return false; // tangent to the foliation
            if (overall == 0) overall = s;
            else if (overall != s) return false;
        }
    }
    return overall != 0;
}

SlideResult shadow_slide(const LatticeDiagram& d, Family family, int arc_index,
                         const Polyline& replacement) {
    int idx = -1, seen = 0;
    for (int i = 0; i < (int)d.arcs.size(); ++i) {
        if (d.arcs[i].family != family) continue;
        if (seen == arc_index) { idx = i; break; }
        ++seen;
    }
    if (idx < 0) throw SlideConditionError("arc index out of range for family");
    const Arc& old = d.arcs[idx];
    if (replacement.size() < 2) throw SlideConditionError("replacement too short");
    if (reduce(replacement.front()) != reduce(old.path.front()) ||
        reduce(replacement.back()) != reduce(old.path.back()))
        throw SlideConditionError("replacement endpoints differ from the old arc");

    // old followed by reversed replacement must close up to the family core
    // class (alpha, beta or gamma).
    Vec2 loop_disp = displacement(old.path) - displacement(replacement);
    if (!loop_disp.x.is_integer() || !loop_disp.y.is_integer())
        throw SlideConditionError("old and replacement lifts do not close a loop");
    HomClass cls{loop_disp.x.num64(), loop_disp.y.num64(), BasisTag::AB};
    HomClass core = family == Family::A ? HomClass{1, 0, BasisTag::AB}
                  : family == Family::B ? HomClass{0, 1, BasisTag::AB}
                                        : HomClass{-1, -1, BasisTag::AB};
    if (!(cls == core || cls == neg(core)))
        throw SlideConditionError("old+new loop has class " + to_string(cls) +
                                  ", not the family core class");

    // Embeddedness of the union: the replacement may touch the old arc only at
    // the shared endpoints, and must avoid the other arcs of its family.
    auto interiors_touch = [&](const Polyline& P, const Polyline& Q, bool shared_ends) {
        for (size_t i = 0; i + 1 < P.size(); ++i)
            for (size_t j = 0; j + 1 < Q.size(); ++j) {
                std::vector<SegHit> hits;
                try {
                    hits = segment_intersections(P[i], P[i + 1], Q[j], Q[j + 1]);
                } catch (const OverlapError&) { return true; }
                for (const SegHit& h : hits) {
                    bool pa = (i == 0 && h.ta.is_zero()) || (i + 2 == P.size() && h.ta == Rat(1));
                    bool pb = (j == 0 && h.tb.is_zero()) || (j + 2 == Q.size() && h.tb == Rat(1));
                    if (shared_ends && pa && pb) continue;
                    return true;
                }
            }
        return false;
    };
    if (interiors_touch(replacement, old.path, true))
        throw SlideConditionError("old+new loop is not embedded");
    for (int i = 0; i < (int)d.arcs.size(); ++i) {
        if (i == idx || d.arcs[i].family != family) continue;
        if (interiors_touch(replacement, d.arcs[i].path, false))
            throw SlideConditionError("replacement meets another arc of its family");
    }
    // self-embedding of the replacement
    for (size_t i = 0; i + 1 < replacement.size(); ++i)
        for (size_t j = i + 2; j + 1 < replacement.size(); ++j)
            if (interiors_touch(Polyline{replacement[i], replacement[i + 1]},
                                Polyline{replacement[j], replacement[j + 1]}, false))
                throw SlideConditionError("replacement is not embedded");

    SlideResult res;
    res.diagram = d;
    res.diagram.arcs[idx].path = replacement;
    ValidationReport shadow = shadow_validate(res.diagram);
    if (!shadow.ok)
        throw SlideConditionError("slide result is not a shadow diagram: " + shadow.summary());
    res.lattice_report = validate(res.diagram);
    res.is_lattice = res.lattice_report.ok;
    return res;
}

} // namespace hexlat
