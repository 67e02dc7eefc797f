#include "hexlat/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hexlat {

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i];
    }
    return os.str();
}

namespace {

struct Vec2Less {
    bool operator()(const Vec2& a, const Vec2& b) const { return lex_less(a, b); }
};

Vec2 end_point(const Arc& a, int which) {
    return which == 0 ? a.path.front() : a.path.back();
}

// Direction leaving the endpoint into the arc.
Vec2 end_direction(const Arc& a, int which) {
    if (which == 0) return a.path[1] - a.path[0];
    size_t n = a.path.size();
    return a.path[n - 2] - a.path[n - 1];
}

struct SegRef {
    int arc;
    int seg; // path[seg] -> path[seg+1]
};

// Conservative bucket grid over the unit square; a segment is dropped into
// every cell its reduced bounding box can meet.
std::vector<std::pair<SegRef, SegRef>> candidate_pairs(const LatticeDiagram& d) {
    std::vector<SegRef> segs;
    for (int i = 0; i < (int)d.arcs.size(); ++i)
        for (int s = 0; s + 1 < (int)d.arcs[i].path.size(); ++s)
            segs.push_back({i, s});

    int grid = 1;
    while (grid * grid < (int)segs.size()) ++grid;
    if (grid < 2) grid = 2;

    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int k = 0; k < (int)segs.size(); ++k) {
        const Arc& a = d.arcs[segs[k].arc];
        Vec2 p = a.path[segs[k].seg], q = a.path[segs[k].seg + 1];
        Rat xlo = std::min(p.x, q.x), xhi = std::max(p.x, q.x);
        Rat ylo = std::min(p.y, q.y), yhi = std::max(p.y, q.y);
        std::int64_t ix0 = (xlo * Rat(grid)).floor(), ix1 = (xhi * Rat(grid)).floor();
        std::int64_t iy0 = (ylo * Rat(grid)).floor(), iy1 = (yhi * Rat(grid)).floor();
        for (std::int64_t ix = ix0; ix <= ix1; ++ix)
            for (std::int64_t iy = iy0; iy <= iy1; ++iy) {
                int cx = int(((ix % grid) + grid) % grid);
                int cy = int(((iy % grid) + grid) % grid);
                cells[{cx, cy}].push_back(k);
            }
    }

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<SegRef, SegRef>> out;
    for (auto& [cell, list] : cells) {
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                int u = std::min(list[i], list[j]), v = std::max(list[i], list[j]);
                if (seen.insert({u, v}).second) out.push_back({segs[u], segs[v]});
            }
    }
    return out;
}

bool is_arc_endpoint(const Arc& a, int seg, const Rat& t) {
    return (seg == 0 && t.is_zero()) || (seg + 2 == (int)a.path.size() && t == Rat(1));
}

// Shared machinery for the lattice and shadow validators.  When
// allow_interfamily is set, transverse interior crossings between arcs of
// different families are tolerated (overlapping/slid shadow diagrams).
void check_intersections(const LatticeDiagram& d, ValidationReport& rep,
                         bool allow_interfamily) {
    for (auto& [sa, sb] : candidate_pairs(d)) {
        const Arc& A = d.arcs[sa.arc];
        const Arc& B = d.arcs[sb.arc];
        bool same_arc = sa.arc == sb.arc;
        if (same_arc && sa.seg == sb.seg) continue;
        std::vector<SegHit> hits;
        try {
            hits = segment_intersections(A.path[sa.seg], A.path[sa.seg + 1],
                                         B.path[sb.seg], B.path[sb.seg + 1]);
        } catch (const OverlapError&) {
            rep.fail("arcs " + std::to_string(sa.arc) + " and " + std::to_string(sb.arc) +
                     " overlap along a sub-segment");
            continue;
        }
        for (const SegHit& h : hits) {
            if (same_arc) {
                // consecutive segments of one polyline meet at their shared vertex
                bool adjacent =
                    (sb.seg == sa.seg + 1 && h.ta == Rat(1) && h.tb.is_zero()) ||
                    (sa.seg == sb.seg + 1 && h.tb == Rat(1) && h.ta.is_zero());
                if (adjacent) continue;
                rep.fail("arc " + std::to_string(sa.arc) + " intersects itself");
                continue;
            }
            bool end_a = is_arc_endpoint(A, sa.seg, h.ta);
            bool end_b = is_arc_endpoint(B, sb.seg, h.tb);
            if (end_a && end_b) continue; // shared bridge point
            if (allow_interfamily && A.family != B.family && h.interior_a && h.interior_b &&
                h.sign != 0)
                continue;
            rep.fail(std::string("arcs meet off bridge points: arcs ") +
                     std::to_string(sa.arc) + " and " + std::to_string(sb.arc));
        }
    }
}

// Fills the vertex table and the vertex id of every arc end.
void build_vertices(const LatticeDiagram& d, std::vector<Vec2>& vertices,
                    std::vector<int>& vertex_of_end) {
    std::map<Vec2, int, Vec2Less> index;
    vertex_of_end.assign(2 * d.arcs.size(), -1);
    for (int i = 0; i < (int)d.arcs.size(); ++i) {
        for (int w = 0; w < 2; ++w) {
            Vec2 p = reduce(end_point(d.arcs[i], w));
            auto [it, fresh] = index.insert({p, (int)vertices.size()});
            if (fresh) vertices.push_back(p);
            vertex_of_end[2 * i + w] = it->second;
        }
    }
}

bool structural_checks(const LatticeDiagram& d, ValidationReport& rep, std::int64_t& b_out) {
    if (d.arcs.empty()) {
        rep.fail("diagram has no arcs");
        return false;
    }
    std::int64_t count[3] = {0, 0, 0};
    for (int i = 0; i < (int)d.arcs.size(); ++i) {
        const Arc& a = d.arcs[i];
        count[(int)a.family]++;
        if (a.path.size() < 2) {
            rep.fail("arc " + std::to_string(i) + " has fewer than two vertices");
            return false;
        }
        for (size_t k = 0; k + 1 < a.path.size(); ++k)
            if (a.path[k] == a.path[k + 1]) {
                rep.fail("arc " + std::to_string(i) + " has repeated consecutive vertices");
                return false;
            }
    }
    if (!(count[0] == count[1] && count[1] == count[2] && count[0] >= 1)) {
        rep.fail("families have unequal arc counts (" + std::to_string(count[0]) + "," +
                 std::to_string(count[1]) + "," + std::to_string(count[2]) + ")");
        return false;
    }
    b_out = count[0];
    return true;
}

// Sorts the three ends at each vertex counterclockwise and checks one end per
// family with pairwise distinct directions.
bool build_corners(const LatticeDiagram& d, ValidationReport& rep,
                   const std::vector<Vec2>& vertices, const std::vector<int>& vertex_of_end,
                   std::vector<std::array<ArcEnd, 3>>& ends_out) {
    std::vector<std::vector<ArcEnd>> at(vertices.size());
    for (int i = 0; i < (int)d.arcs.size(); ++i)
        for (int w = 0; w < 2; ++w) at[vertex_of_end[2 * i + w]].push_back({i, w});

    bool ok = true;
    ends_out.assign(vertices.size(), {});
    for (size_t v = 0; v < vertices.size(); ++v) {
        auto& list = at[v];
        if (list.size() != 3) {
            rep.fail("bridge point " + std::to_string(v) + " has " +
                     std::to_string(list.size()) + " arc-ends (want 3)");
            ok = false;
            continue;
        }
        bool fam[3] = {false, false, false};
        for (auto e : list) fam[(int)d.arcs[e.arc].family] = true;
        if (!(fam[0] && fam[1] && fam[2])) {
            rep.fail("bridge point " + std::to_string(v) + " misses a family");
            ok = false;
            continue;
        }
        auto dir = [&](const ArcEnd& e) { return end_direction(d.arcs[e.arc], e.which); };
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (cross(dir(list[i]), dir(list[j])).is_zero()) {
                    rep.fail("bridge point " + std::to_string(v) +
                             " has parallel arc-end directions");
                    ok = false;
                }
        if (!ok) continue;
        std::sort(list.begin(), list.end(),
                  [&](const ArcEnd& x, const ArcEnd& y) { return angle_less(dir(x), dir(y)); });
        ends_out[v] = {list[0], list[1], list[2]};
    }
    return ok;
}

} // namespace

Analysis analyze(const LatticeDiagram& d) {
    Analysis an;
    if (!structural_checks(d, an.report, an.b)) return an;
    build_vertices(d, an.vertices, an.vertex_of_end);
    if ((std::int64_t)an.vertices.size() != 2 * an.b)
        an.report.fail("expected " + std::to_string(2 * an.b) + " bridge points, found " +
                       std::to_string(an.vertices.size()));

    check_intersections(d, an.report, /*allow_interfamily=*/false);
    if (!build_corners(d, an.report, an.vertices, an.vertex_of_end, an.ends)) return an;
    if (!an.report.ok) return an;

    // Bridge sign from the counterclockwise family reading at each point.
    for (size_t v = 0; v < an.vertices.size(); ++v) {
        int f0 = (int)d.arcs[an.ends[v][0].arc].family;
        int f1 = (int)d.arcs[an.ends[v][1].arc].family;
        int sign = ((f1 - f0 + 3) % 3 == 1) ? +1 : -1;
        if (an.eps == 0) an.eps = sign;
        else if (an.eps != sign) {
            an.report.fail("sign not uniform across bridge points");
            an.eps = 0;
            return an;
        }
    }

    // Orientation bipartition: every arc runs from a negative point to a
    // positive point.
    an.color.assign(an.vertices.size(), 0);
    for (int i = 0; i < (int)d.arcs.size(); ++i) {
        int vt = an.vertex_of_end[2 * i + 0], vh = an.vertex_of_end[2 * i + 1];
        if (vt == vh) {
            an.report.fail("arc " + std::to_string(i) + " has equal endpoints");
            return an;
        }
        auto put = [&](int v, int c) {
            if (an.color[v] == 0) { an.color[v] = c; return true; }
            return an.color[v] == c;
        };
        if (!put(vt, -1) || !put(vh, +1)) {
            an.report.fail("orientation bipartition fails at arc " + std::to_string(i));
            return an;
        }
    }

    // Faces of the rotation system: phi = (ccw-next at vertex) after reversal.
    int n_arcs = (int)d.arcs.size();
    auto head_vertex = [&](int dart) {
        int arc = dart / 2, dir = dart % 2;
        return an.vertex_of_end[2 * arc + (dir == 0 ? 1 : 0)];
    };
    auto arriving_end = [&](int dart) -> ArcEnd {
        int arc = dart / 2, dir = dart % 2;
        return {arc, dir == 0 ? 1 : 0};
    };
    auto dart_from_end = [&](const ArcEnd& e) {
        return 2 * e.arc + (e.which == 0 ? 0 : 1); // leaving via tail = forward
    };
    auto phi = [&](int dart) {
        int v = head_vertex(dart);
        ArcEnd e = arriving_end(dart);
        int pos = 0;
        while (!(an.ends[v][pos] == e)) ++pos;
        return dart_from_end(an.ends[v][(pos + 1) % 3]);
    };

    std::vector<int> seen(2 * n_arcs, 0);
    for (int start = 0; start < 2 * n_arcs; ++start) {
        if (seen[start]) continue;
        Face f;
        int dart = start;
        do {
            seen[dart] = 1;
            f.arc_seq.push_back(dart / 2);
            dart = phi(dart);
        } while (dart != start && (int)f.arc_seq.size() <= 2 * n_arcs);
        if (f.arc_seq.size() != 6) {
            an.report.fail("face with " + std::to_string(f.arc_seq.size()) +
                           " sides (want hexagons)");
            return an;
        }
        Family fs[6];
        for (int i = 0; i < 6; ++i) fs[i] = d.arcs[f.arc_seq[i]].family;
        bool opposite = fs[0] == fs[3] && fs[1] == fs[4] && fs[2] == fs[5];
        bool all3 = fs[0] != fs[1] && fs[1] != fs[2] && fs[0] != fs[2];
        if (!opposite || !all3) {
            an.report.fail("face families not in cyclic a,b,c pattern");
            return an;
        }
        an.faces.push_back(std::move(f));
    }
    if ((std::int64_t)an.faces.size() != an.b)
        an.report.fail("face count " + std::to_string(an.faces.size()) + " != b (torus Euler count)");

    // Connectivity via arcs.
    {
        std::vector<int> mark(an.vertices.size(), 0);
        std::vector<int> stack{0};
        mark[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto e : an.ends[v]) {
                int other = an.vertex_of_end[2 * e.arc + (1 - e.which)];
                if (!mark[other]) { mark[other] = 1; stack.push_back(other); }
            }
        }
        an.connected = std::all_of(mark.begin(), mark.end(), [](int m) { return m == 1; });
        if (!an.connected) an.report.fail("diagram graph is disconnected");
    }
    if (!an.report.ok) return an;

    // Paired-curve classes and component counts, then the unlink conditions.
    struct Pcd { HomClass cls; std::int64_t comps; };
    auto trace = [&](Family f, Family g, HomClass& cls_out, std::int64_t& comps_out) -> bool {
        // cycles alternate f-arcs forward and g-arcs backward
        std::vector<int> f_arcs, g_of_head(an.vertices.size(), -1), f_of_tail(an.vertices.size(), -1);
        for (int i = 0; i < n_arcs; ++i) {
            if (d.arcs[i].family == f) {
                f_arcs.push_back(i);
                f_of_tail[an.vertex_of_end[2 * i + 0]] = i;
            } else if (d.arcs[i].family == g) {
                g_of_head[an.vertex_of_end[2 * i + 1]] = i;
            }
        }
        std::vector<int> used(n_arcs, 0);
        Vec2 total{Rat(0), Rat(0)};
        comps_out = 0;
        for (int a0 : f_arcs) {
            if (used[a0]) continue;
            ++comps_out;
            int a = a0;
            Vec2 delta{Rat(0), Rat(0)};
            do {
                used[a] = 1;
                delta = delta + displacement(d.arcs[a].path);
                int plus = an.vertex_of_end[2 * a + 1];
                int gb = g_of_head[plus];
                if (gb < 0) return false;
                delta = delta - displacement(d.arcs[gb].path);
                int minus = an.vertex_of_end[2 * gb + 0];
                a = f_of_tail[minus];
                if (a < 0) return false;
            } while (a != a0);
            if (!delta.x.is_integer() || !delta.y.is_integer()) return false;
            total = total + delta;
        }
        cls_out = {total.x.num64(), total.y.num64(), BasisTag::AB};
        return true;
    };
    bool okp = trace(Family::A, Family::B, an.ab, an.comp_ab) &&
               trace(Family::B, Family::C, an.bc, an.comp_bc) &&
               trace(Family::C, Family::A, an.ca, an.comp_ca);
    if (!okp) {
        an.report.fail("paired-curve traversal failed");
        return an;
    }

    if (an.comp_ab != component_count(an.ab) || an.comp_bc != component_count(an.bc) ||
        an.comp_ca != component_count(an.ca))
        an.report.fail("paired-curve component count does not match class gcd");

    if (!is_unlink(an.ab))
        an.report.fail("ab class " + to_string(an.ab) + " is not an unlink in (alpha,beta)");
    if (!is_unlink(from_ab(an.bc, BasisTag::BG)))
        an.report.fail("bc class is not an unlink in (beta,gamma)");
    if (!is_unlink(from_ab(an.ca, BasisTag::GA)))
        an.report.fail("ca class is not an unlink in (gamma,alpha)");

    HomClass acv = an.ac();
    if (pair(acv, an.bc) != an.eps * an.b)
        an.report.fail("<ac,bc> != eps*b");

    return an;
}

ValidationReport shadow_validate(const LatticeDiagram& d) {
    ValidationReport rep;
    std::int64_t b = 0;
    if (!structural_checks(d, rep, b)) return rep;
    std::vector<Vec2> vertices;
    std::vector<int> voe;
    build_vertices(d, vertices, voe);
    if ((std::int64_t)vertices.size() != 2 * b)
        rep.fail("expected " + std::to_string(2 * b) + " bridge points");
    check_intersections(d, rep, /*allow_interfamily=*/true);
    std::vector<std::array<ArcEnd, 3>> ends;
    build_corners(d, rep, vertices, voe, ends);
    return rep;
}

} // namespace hexlat
