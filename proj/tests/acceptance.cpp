// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here.

#include "hexlat/classify.hpp"
#include "hexlat/io_codec.hpp"
#include "hexlat/smooth.hpp"
#include "hexlat/variety_numeric.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hexlat;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

const std::vector<FamilyId> kFamilies = {FamilyId::A, FamilyId::B, FamilyId::C,
                                         FamilyId::D, FamilyId::E, FamilyId::F,
                                         FamilyId::G, FamilyId::H};

std::int64_t expected_b(FamilyId f, std::int64_t d) {
    switch (f) {
    case FamilyId::A:
    case FamilyId::E: return d * d - 3 * d + 3;
    case FamilyId::B:
    case FamilyId::F: return (d - 1) * (d - 1);
    case FamilyId::C:
    case FamilyId::G: return d * d - d;
    default: return d * d;
    }
}

void criterion1() {
    bool ok = true;
    std::string detail;
    for (FamilyId f : kFamilies) {
        for (std::int64_t d = 3; d <= 10; ++d) {
            LatticeDiagram dg = family(f, d);
            Analysis an = analyze(dg);
            InvariantReport r = invariants(dg);
            bool here = an.report.ok && r.b == expected_b(f, d) && r.degree == d &&
                        r.self_int == d * d && r.genus == (d - 1) * (d - 2) / 2 &&
                        r.genus_minimal && r.epsilon == 1;
            if (!here && ok) {
                ok = false;
                detail = std::string(1, family_letter(f)) + std::to_string(d);
            }
        }
    }
    report(1, "family synthesis A-H, d=3..10: validate, degree, [K]^2, genus, b-table",
           ok, detail);
}

void criterion2() {
    bool ok = true;
    std::string detail;
    for (FamilyId f : kFamilies) {
        for (std::int64_t d = 1; d <= 10; ++d) {
            if (!family_admits(f, d)) continue;
            Classification c = classify(family(f, d));
            bool here;
            if (d <= 2) here = std::holds_alternative<SmallDegreeVerdict>(c) &&
                               std::get<SmallDegreeVerdict>(c).degree == d;
            else here = c == Classification{FamilyVerdict{f, d}};
            if (!here && ok) {
                ok = false;
                detail = std::string(1, family_letter(f)) + std::to_string(d) + " -> " +
                         to_string(c);
            }
        }
    }
    report(2, "classification round-trip, SmallDegree for d <= 2", ok, detail);
}

void criterion3() {
    const std::int64_t N = 25;
    EnumerationSummary s = enumerate_cases(N);
    std::set<std::string> want;
    for (auto& t : minimizing_case_table(3)) want.insert(t.label);
    std::set<std::string> got(s.surviving_types.begin(), s.surviving_types.end());
    bool ok = want.size() == 32 && got == want;

    bool classes_ok = s.class_members.size() == 8;
    for (auto& [label, members] : minimizing_case_classes()) {
        auto it = s.class_members.find(label);
        std::vector<std::string> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        if (it == s.class_members.end() || it->second != sorted) classes_ok = false;
    }

    std::string detail;
    bool rows_ok = true;
    for (std::int64_t d = 3; d <= N - 2; ++d) {
        std::int64_t at_d = 0;
        for (const CaseType& t : minimizing_case_table(d)) {
            int found = 0;
            for (const CaseRow& r : s.rows)
                if (r.survives && r.case_label == t.label && r.m == t.m && r.n == t.n &&
                    r.ab == t.classes.ab && r.bc == t.classes.bc && r.ca == t.classes.ca)
                    ++found;
            if (found != 1) {
                rows_ok = false;
                if (detail.empty()) detail = t.label + " at d=" + std::to_string(d);
            }
        }
        for (const CaseRow& r : s.rows)
            if (r.survives && (r.degree == d || r.degree == -d)) ++at_d;
        if (at_d != 32) {
            rows_ok = false;
            if (detail.empty())
                detail = std::to_string(at_d) + " survivors at d=" + std::to_string(d);
        }
    }
    report(3,
           "appendix reproduction (range 25): 32 types, exact triples, eight classes "
           "with the reference memberships",
           ok && classes_ok && rows_ok, detail);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    auto expect_steps = [&](FamilyId f, std::int64_t d,
                            std::vector<std::int64_t> want) {
        try {
            RecursionResult r = build_by_recursion(f, d);
            std::vector<std::int64_t> gotc;
            for (auto& st : r.steps) gotc.push_back(st.crossings);
            bool here = gotc == want && equivalent(r.diagram, family(f, d));
            if (!here && ok) {
                ok = false;
                std::ostringstream os;
                os << family_letter(f) << d << " counts";
                for (auto c : gotc) os << " " << c;
                detail = os.str();
            }
        } catch (const std::exception& e) {
            if (ok) {
                ok = false;
                detail = std::string(1, family_letter(f)) + std::to_string(d) + ": " +
                         e.what();
            }
        }
    };
    for (FamilyId f : {FamilyId::D, FamilyId::H})
        for (std::int64_t d = 2; d <= 8; ++d) {
            std::vector<std::int64_t> want;
            for (std::int64_t m = 2; m <= d; ++m) want.push_back(2 * (m - 1));
            expect_steps(f, d, want);
        }
    for (FamilyId f : {FamilyId::B, FamilyId::F})
        for (std::int64_t d = 3; d <= 8; ++d) expect_steps(f, d, {2 * (d - 2)});
    for (FamilyId f : {FamilyId::C, FamilyId::G})
        for (std::int64_t d = 3; d <= 8; ++d) expect_steps(f, d, {3 * (d - 2)});
    for (FamilyId f : {FamilyId::A, FamilyId::E})
        for (std::int64_t d = 4; d <= 8; ++d) expect_steps(f, d, {3 * (d - 3)});
    report(4,
           "smoothing recursions d <= 8: equivalence, exact additivity, crossing "
           "counts 2(d-1)/2(d-2)/3(d-2)/3(d-3)",
           ok, detail);
}

void criterion5() {
    bool ok = true;
    std::string detail;
    for (std::int64_t d = 1; d <= 8; ++d) {
        LatticeDiagram v = variety_arcs(VarietyKind::V, d);
        Analysis an = analyze(v); // exact interior-disjointness is validated here
        bool here = an.report.ok && an.ab == HomClass{1, d - 1, BasisTag::AB};
        if (d >= 1) here = here && equivalent(v, family(FamilyId::A, d));
        LatticeDiagram vp = variety_arcs(VarietyKind::Vprime, d);
        here = here && validate(vp).ok && equivalent(vp, family(FamilyId::E, d));
        if (!here && ok) {
            ok = false;
            detail = "d=" + std::to_string(d);
        }
    }
    report(5, "variety exactness d=1..8: validate, disjoint, ab = alpha+(d-1)beta, "
              "equivalent to (A)_d/(E)_d", ok, detail);
}

void criterion6() {
    bool ok = true;
    std::string detail;
    try {
        for (std::int64_t d : {3, 4, 5}) {
            auto traces = trace_h1_arcs(d); // throws beyond 1e-6
            for (auto& t : traces)
                if (t.endpoint_deviation > 1e-6) ok = false;
            auto pts = sigma_points(d); // throws unless matched within 1e-6
            if ((std::int64_t)pts.size() != 2 * (d * d - 3 * d + 3)) {
                ok = false;
                detail = "sigma count d=" + std::to_string(d);
            }
        }
        auto [r0, r1] = rd_slice(3, 0.5);
        double q0 = (-0.25 + std::sqrt(1.0 / 16 + 2.0)) / 2.0;
        double q1 = (0.25 + std::sqrt(1.0 / 16 + 2.0)) / 2.0;
        if (std::abs(r0 - q0) > 1e-9 || std::abs(r1 - q1) > 1e-9) {
            ok = false;
            detail = "rd_slice(3,0.5)";
        }
        for (std::int64_t d = 2; d <= 5; ++d) {
            SmoothnessReport rep = smoothness_check(d, 10000);
            if (rep.min_gradient <= 0.1) {
                ok = false;
                detail = "min|df|=" + std::to_string(rep.min_gradient) +
                         " at d=" + std::to_string(d);
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(6, "numeric agreement: traces/sigma within 1e-6, slice within 1e-9, "
              "min gradient > 0.1", ok, detail);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    auto in_corpus = [](FamilyId f, std::int64_t d) {
        switch (f) {
        case FamilyId::D:
        case FamilyId::H: return true; // probed for d <= 6
        case FamilyId::A:
        case FamilyId::E: return d <= 3;
        default: return d == 2;
        }
    };
    for (FamilyId f : kFamilies) {
        for (std::int64_t d = 1; d <= 6; ++d) {
            if (!family_admits(f, d)) continue;
            bool got = check_transverse(family(f, d));
            if (got != in_corpus(f, d)) {
                ok = false;
                if (detail.empty())
                    detail = std::string(1, family_letter(f)) + std::to_string(d) +
                             (got ? " unexpectedly transverse" : " should be transverse");
            }
        }
    }
    // negatively signed diagrams must always fail
    LatticeDiagram neg1 = from_classes({-2, -1, BasisTag::AB}, {-1, 1, BasisTag::AB});
    LatticeDiagram neg2 = from_classes({-1, -1, BasisTag::AB}, {0, 1, BasisTag::AB});
    if (analyze(neg1).eps != -1 || analyze(neg2).eps != -1) {
        ok = false;
        detail = "eps=-1 fixtures wrong";
    }
    if (check_transverse(neg1) || check_transverse(neg2)) {
        ok = false;
        detail = "eps=-1 diagram passed";
    }
    report(7, "transverse calibration: exactly the asserted corpus, false for eps=-1",
           ok, detail);
}

void criterion8() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> famd(0, 7);
    std::uniform_int_distribution<std::int64_t> degd(1, 6);
    std::uniform_int_distribution<std::int64_t> numd(-20, 20);
    std::uniform_int_distribution<std::int64_t> dend(7, 29);

    // lattice-preserving slid variants exist on the small-degree diagrams
    // (the Dehn-twist sphere families); collect a few by trying chord
    // replacements with core-class loops
    std::vector<LatticeDiagram> slid;
    {
        LatticeDiagram a2 = family(FamilyId::A, 2);
        for (int i = 0; i < (int)a2.arcs.size() && slid.size() < 4; ++i) {
            for (int sgn : {+1, -1}) {
                const Arc& arc = a2.arcs[i];
                Vec2 core = arc.family == Family::A ? Vec2{Rat(1), Rat(0)}
                            : arc.family == Family::B
                                ? Vec2{Rat(0), Rat(1)}
                                : Vec2{Rat(-1), Rat(-1)};
                Polyline repl{arc.path.front(),
                              arc.path.back() + core * Rat(sgn)};
                int nth = 0;
                for (int k = 0; k < i; ++k)
                    if (a2.arcs[k].family == arc.family) ++nth;
                try {
                    SlideResult res = shadow_slide(a2, arc.family, nth, repl);
                    if (res.is_lattice) slid.push_back(res.diagram);
                } catch (const SlideConditionError&) {
                }
            }
        }
        if (slid.empty()) {
            ok = false;
            detail = "no lattice-preserving slides found";
        }
    }

    int tested = 0;
    while (tested < 200 && ok) {
        LatticeDiagram dg;
        if (tested < (int)slid.size()) {
            dg = slid[tested];
        } else {
            FamilyId f = static_cast<FamilyId>(famd(rng));
            std::int64_t d = degd(rng);
            if (!family_admits(f, d)) continue;
            dg = family(f, d);
        }
        InvariantReport base = invariants(dg);
        Vec2 shift{Rat(numd(rng), dend(rng)), Rat(numd(rng), dend(rng))};
        int rots = std::uniform_int_distribution<int>(0, 2)(rng);
        LatticeDiagram moved = translate(dg, shift);
        for (int r = 0; r < rots; ++r) moved = relabel_cyclic(moved);
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            moved = reverse_orientation(moved);
        ++tested;

        Analysis an = analyze(moved);
        bool here = an.report.ok;
        if (here) {
            here = (std::int64_t)an.vertices.size() == 2 * an.b &&
                   (std::int64_t)moved.arcs.size() == 3 * an.b &&
                   (std::int64_t)an.faces.size() == an.b &&
                   pair(an.ac(), an.bc) == an.eps * an.b &&
                   an.comp_ab == component_count(an.ab) &&
                   an.comp_bc == component_count(an.bc) &&
                   an.comp_ca == component_count(an.ca);
            InvariantReport r = invariants(moved);
            std::array<std::int64_t, 3> cs{r.c1, r.c2, r.c3};
            std::array<std::int64_t, 3> cb{base.c1, base.c2, base.c3};
            bool c_match = false;
            for (int rot = 0; rot < 3; ++rot) {
                if (cs == cb) c_match = true;
                std::rotate(cs.begin(), cs.begin() + 1, cs.end());
            }
            here = here && r.b == base.b && r.epsilon == base.epsilon &&
                   r.self_int == base.self_int && r.genus == base.genus &&
                   r.genus_minimal == base.genus_minimal && c_match &&
                   std::abs(r.degree) == std::abs(base.degree);
        }
        if (!here) {
            ok = false;
            detail = "sample " + std::to_string(tested);
        }
    }
    report(8,
           "structural properties on 200 randomized diagrams (families + slid "
           "variants): Euler counts, <ac,bc>=eps*b, components, invariance",
           ok, detail + (ok ? std::to_string(slid.size()) + " slid variants" : ""));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
