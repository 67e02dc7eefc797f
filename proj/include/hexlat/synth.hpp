#pragma once

// Construction of hexagonal lattice diagrams.  from_classes draws parallel
// geodesic components for the ac and bc classes and resolves every crossing
// into two bridge points joined by a third-family segment.  The eight family
// templates delegate to it, except where a stored straight-chord model
// (notably the transversely oriented positions) replaces the generic
// geometry.

#include "hexlat/diagram.hpp"

namespace hexlat {

struct NotUnlinkError : GeomError {
    explicit NotUnlinkError(const std::string& m) : GeomError(m) {}
};
struct DegenerateError : GeomError {
    explicit DegenerateError(const std::string& m) : GeomError(m) {}
};
struct RangeError : GeomError {
    explicit RangeError(const std::string& m) : GeomError(m) {}
};

enum class FamilyId { A, B, C, D, E, F, G, H };

FamilyId family_from_letter(char c);
char family_letter(FamilyId f);

// Admissible degree range per family: A,E from 1; B,C,F,G from 2; D,H from 1.
bool family_admits(FamilyId f, std::int64_t d);

// Theorem-table classes for a family at degree d, as (ab, bc) in AB coords.
std::pair<HomClass, HomClass> family_classes(FamilyId f, std::int64_t d);

// Generic construction from the two determining homology classes.
// feature_scale (0,1] shrinks every clip and bridge offset; the recursion
// drivers use small values so overlap placements clear the local features.
LatticeDiagram from_classes(const HomClass& ac, const HomClass& bc,
                            const Rat& feature_scale = Rat(1));

// Straight-chord diagram on the honeycomb quotient lattice of [ab | ac] with
// plus-points displaced by `plus_offset` from the minus-points.
LatticeDiagram chord_model(const HomClass& ab, const HomClass& ac, const Vec2& plus_offset);

// Synthesize the family diagram; uses the stored chord-model positions where
// one is registered and the generic line construction otherwise.
LatticeDiagram family(FamilyId f, std::int64_t d);

// Line-geometry variant of family() regardless of stored models; the
// smoothing recursions overlay these.
LatticeDiagram family_lines(FamilyId f, std::int64_t d, const Rat& feature_scale = Rat(1));

} // namespace hexlat
