#pragma once

// Overlapping shadow diagrams and the oriented smoothing of all crossings.
// A crossing of two strands from families f and g is resolved by clipping
// both strands and inserting two bridge points joined by a short arc of the
// third family; the pairing of clipped ends with the new bridge points is
// forced by the orientations.  The drivers at the bottom grow all eight
// families by smoothing: D/H gain one degree per step, B/C (and their
// mirrors F/G) smooth a degree-2 seed over a D/H grid, A/E a degree-3 seed.

#include "hexlat/synth.hpp"

namespace hexlat {

struct CrossingRecord {
    int arc1, seg1;
    Rat t1;
    int arc2, seg2;
    Rat t2;
    Vec2 point; // reduced
    int sign;   // sign of cross(dir1, dir2)
};

struct OverlappingDiagram {
    LatticeDiagram first;
    LatticeDiagram second; // already translated
    std::vector<CrossingRecord> crossings;
    int eps = 0;
};

// Translates d2 by offset, enumerates all crossings, and verifies the
// overlapping-diagram conditions (no same-family crossings, no tangencies,
// disjoint bridge points, equal signs).
OverlappingDiagram overlay(const LatticeDiagram& d1, const LatticeDiagram& d2,
                           const Vec2& offset);

struct SmoothResult {
    LatticeDiagram diagram;
    std::int64_t crossings = 0;
    // classes of the inputs and the output, for the additivity law
    HomClass ab1, bc1, ab2, bc2, ab, bc;
    bool additive = false;
};

// Smooths every crossing.  Throws NotLatticeError (carrying the validation
// report) when the result is not a hexagonal lattice diagram.
SmoothResult smooth_all(const OverlappingDiagram& o);

struct RecursionStep {
    std::int64_t degree;    // degree after this step
    std::int64_t crossings; // crossings smoothed in this step
};

struct RecursionResult {
    LatticeDiagram diagram;
    std::vector<RecursionStep> steps;
};

// Executes the family's smoothing recursion from its seed, verifying class
// additivity at every step.
RecursionResult build_by_recursion(FamilyId f, std::int64_t d);

} // namespace hexlat
