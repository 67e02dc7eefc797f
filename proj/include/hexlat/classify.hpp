#pragma once

// Family classification and the mechanical replay of the appendix case
// analysis.  A class triple is normalized over the six-element group
// generated by the cyclic relabel (with its basis rotation) and global
// negation, then matched against the eight family templates.  The enumerator
// walks the 6 x 6 x 6 case shapes over a parameter sweep and reproduces the
// table of genus-minimizing cases and its eight equivalence classes.

#include "hexlat/diagram.hpp"
#include "hexlat/synth.hpp"

#include <optional>
#include <variant>

namespace hexlat {

struct FamilyVerdict {
    FamilyId family;
    std::int64_t degree;
    bool operator==(const FamilyVerdict&) const = default;
};
struct SmallDegreeVerdict {
    std::int64_t degree; // in {0, +-1, +-2}
    bool operator==(const SmallDegreeVerdict&) const = default;
};
struct NonMinimalVerdict {
    std::int64_t genus;
    std::int64_t degree;
    bool operator==(const NonMinimalVerdict&) const = default;
};
struct NotLatticeVerdict {
    ValidationReport report;
    bool operator==(const NotLatticeVerdict& o) const { return report.ok == o.report.ok; }
};

using Classification =
    std::variant<FamilyVerdict, SmallDegreeVerdict, NonMinimalVerdict, NotLatticeVerdict>;

Classification classify(const LatticeDiagram& d);
std::string to_string(const Classification& c);

// Class triple (ab, bc, ca) in AB coordinates.
struct ClassTriple {
    HomClass ab, bc, ca;
};

// Normal form under cyclic relabel and negation; usable as a grouping key.
std::array<std::int64_t, 6> normalize_triple(const ClassTriple& t);

// Classification on bare classes (no geometry); b and eps from the pairing.
Classification classify_classes(const ClassTriple& t);

// One record of the appendix enumeration.
struct CaseRow {
    int ac_case;  // 1..6
    int bc_case;  // 0..5 for a..f
    int ab_case;  // 0..5 for i..vi
    std::int64_t n, m;
    HomClass ab, bc, ca; // AB coordinates
    std::int64_t eps_b;  // <ac,bc>
    std::int64_t c1, c2, c3;
    std::int64_t degree;
    std::int64_t self_int;
    std::int64_t genus;
    bool survives;
    bool not_diagram;        // flagged non-diagram shapes (the (4e)/(5d) cases)
    char class_label;        // 'A'..'H' when surviving, else 0
    std::string case_label;  // e.g. "1di", "3fvi+"
};

struct EnumerationSummary {
    std::vector<CaseRow> rows;       // all rows with eps_b != 0
    std::int64_t survivors = 0;
    std::vector<std::string> surviving_types;                  // distinct case labels
    std::map<char, std::vector<std::string>> class_members;    // A..H -> labels
};

// Sweeps n, m over [-N, N] for every (ac-case, bc-case) shape pair and every
// matching ab shape.
EnumerationSummary enumerate_cases(std::int64_t N = 25);

// Reference table of the 32 genus-minimizing case types: for a given
// positive d, each type's (m, n) and class triple.
struct CaseType {
    std::string label;
    std::int64_t m, n;   // at parameter d
    ClassTriple classes; // AB coordinates
};
std::vector<CaseType> minimizing_case_table(std::int64_t d);

// The grouping of the 32 types into the eight classes.
const std::map<char, std::vector<std::string>>& minimizing_case_classes();

} // namespace hexlat
