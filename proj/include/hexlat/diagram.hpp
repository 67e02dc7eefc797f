#pragma once

// Hexagonal lattice diagrams: three families of oriented PL arcs on the torus
// meeting only at bridge points and tiling the torus by hexagons with two
// opposite edges from each family.  Validation extracts the face structure
// from the rotation system induced by exact arc directions at each bridge
// point, so no floating point enters any combinatorial decision.

#include "hexlat/torus_geom.hpp"
#include "hexlat/homology.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexlat {

enum class Family { A, B, C }; // the arc collections (red, blue, green)

inline Family next_family(Family f) {
    return static_cast<Family>((static_cast<int>(f) + 1) % 3);
}
inline Family third_family(Family f, Family g) {
    return static_cast<Family>(3 - static_cast<int>(f) - static_cast<int>(g));
}
inline char family_letter(Family f) { return "abc"[static_cast<int>(f)]; }

struct Arc {
    Family family;
    Polyline path; // cover lift, oriented tail -> head
};

struct LatticeDiagram {
    std::vector<Arc> arcs;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
    std::string summary() const;
};

// End of an arc: which = 0 for the tail, 1 for the head.
struct ArcEnd {
    int arc;
    int which;
    bool operator==(const ArcEnd&) const = default;
};

struct Face {
    std::vector<int> arc_seq; // six arcs in boundary order
};

// Everything the combinatorial checks learn about a diagram.
struct Analysis {
    ValidationReport report;
    std::int64_t b = 0;                      // arcs per family
    std::vector<Vec2> vertices;              // reduced bridge points
    std::vector<std::array<ArcEnd, 3>> ends; // ends at each vertex, CCW order
    std::vector<int> vertex_of_end;          // index by 2*arc + which
    int eps = 0;                             // common bridge sign, 0 if mixed/unknown
    std::vector<int> color;                  // vertex -> -1 / +1 orientation
    std::vector<Face> faces;
    bool connected = false;

    // Paired-curve data (AB coordinates) and component counts.
    HomClass ab, bc, ca;
    std::int64_t comp_ab = 0, comp_bc = 0, comp_ca = 0;
    HomClass ac() const { return add(ab, bc); }
};

// Full hexagonal-lattice validation.  Never throws; all findings are carried
// in the report.  When structural prerequisites fail, dependent fields are
// left in their default state.
Analysis analyze(const LatticeDiagram& d);

inline ValidationReport validate(const LatticeDiagram& d) { return analyze(d).report; }

// Weaker check for general shadow diagrams: same-family arcs interior
// disjoint, bridge structure intact, inter-family crossings transverse and
// away from bridge points.
ValidationReport shadow_validate(const LatticeDiagram& d);

struct NotOrientableError : GeomError {
    explicit NotOrientableError(const std::string& m) : GeomError(m) {}
};
struct InconsistentError : GeomError {
    explicit InconsistentError(const std::string& m) : GeomError(m) {}
};
struct SlideConditionError : GeomError {
    explicit SlideConditionError(const std::string& m) : GeomError(m) {}
};
struct NotLatticeError : GeomError {
    ValidationReport report;
    NotLatticeError(const std::string& m, ValidationReport r)
        : GeomError(m + ": " + r.summary()), report(std::move(r)) {}
};

// Canonical orientation: the lexicographically least bridge point is negative.
// Flips every arc when needed.  Throws NotOrientableError on corrupted input.
LatticeDiagram orient(const LatticeDiagram& d);

struct PairedCurve {
    std::vector<Polyline> components; // closed lifts, one per component
    HomClass cls;                     // total class, AB coordinates
    std::int64_t component_count = 0;
};

enum class Pairing { AB, BC, CA };

PairedCurve paired_curve(const LatticeDiagram& d, Pairing which);

struct InvariantReport {
    std::int64_t b = 0;
    std::int64_t c1 = 0, c2 = 0, c3 = 0;
    int epsilon = 0;
    HomClass ab, bc, ca; // in bases AB, BG, GA respectively
    std::int64_t degree = 0;
    std::int64_t self_int = 0;
    std::int64_t genus = 0;
    bool genus_minimal = false;
};

InvariantReport invariants(const LatticeDiagram& d);

// Diagrams are equivalent when their (ac, bc) classes agree up to reversing
// the global orientation (Lemma: a hexagonal lattice diagram is determined by
// these classes).
bool equivalent(const LatticeDiagram& d1, const LatticeDiagram& d2);

// Transverse-orientation test.  The three foliations run parallel to alpha,
// beta, gamma; a segment agrees when its signed pairing with the configured
// co-orientation vector is positive.  Both global orientations are tried.
struct TransverseConfig {
    Vec2 n_a{Rat(0), Rat(1)};  // a-arcs cross alpha-leaves upward
    Vec2 n_b{Rat(1), Rat(0)};  // b-arcs cross beta-leaves rightward
    Vec2 n_c{Rat(1), Rat(-1)}; // c-arcs cross gamma-leaves in +(x-y)
};

bool check_transverse(const LatticeDiagram& d, const TransverseConfig& cfg = {});

struct SlideResult {
    LatticeDiagram diagram;
    bool is_lattice = false;
    ValidationReport lattice_report;
};

// Replace one arc by a path with the same endpoints whose union with the old
// arc is an embedded essential loop of the family's core class.
SlideResult shadow_slide(const LatticeDiagram& d, Family family, int arc_index,
                         const Polyline& replacement);

// Rigid transforms used across the tool; all preserve validity.
LatticeDiagram translate(const LatticeDiagram& d, const Vec2& v);
LatticeDiagram reverse_orientation(const LatticeDiagram& d);
// (a,b,c) -> (b,c,a) together with the coordinate map T(x,y) = (y-x, -x).
LatticeDiagram relabel_cyclic(const LatticeDiagram& d);
// Coordinate swap (x,y) -> (y,x) together with the family swap a <-> b.
LatticeDiagram mirror(const LatticeDiagram& d);

} // namespace hexlat
