#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlat/classify.hpp"
#include "hexlat/smooth.hpp"

using namespace hexlat;

TEST_CASE("classify round-trips every synthesized family") {
    for (FamilyId f : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E,
                       FamilyId::F, FamilyId::G, FamilyId::H}) {
        for (std::int64_t d = 3; d <= 8; ++d) {
            Classification c = classify(family(f, d));
            auto* fam = std::get_if<FamilyVerdict>(&c);
            REQUIRE(fam != nullptr);
            CHECK(fam->family == f);
            CHECK(fam->degree == d);
        }
    }
}

TEST_CASE("small degrees and orientation reversal") {
    CHECK(classify(family(FamilyId::D, 2)) == Classification{SmallDegreeVerdict{2}});
    CHECK(classify(family(FamilyId::A, 1)) == Classification{SmallDegreeVerdict{1}});
    Classification r = classify(reverse_orientation(family(FamilyId::A, 4)));
    CHECK(r == Classification{FamilyVerdict{FamilyId::A, 4}});
    // relabeling permutes arcs but not the family verdict
    CHECK(classify(relabel_cyclic(family(FamilyId::B, 5))) ==
          Classification{FamilyVerdict{FamilyId::B, 5}});
}

TEST_CASE("a non-minimizing diagram") {
    // appendix case (1d i) at m = 4: valid diagram, degree -3, genus 10
    LatticeDiagram d = from_classes({5, 1, BasisTag::AB}, {4, 5, BasisTag::AB});
    Classification c = classify(d);
    auto* nm = std::get_if<NonMinimalVerdict>(&c);
    REQUIRE(nm != nullptr);
    CHECK(nm->genus == 10);
    CHECK(nm->degree == -3);
}

TEST_CASE("invalid input returns NotLattice") {
    LatticeDiagram junk;
    junk.arcs.push_back({Family::A, {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}}});
    CHECK(std::holds_alternative<NotLatticeVerdict>(classify(junk)));
}

TEST_CASE("appendix enumeration reproduces the table") {
    const std::int64_t N = 12; // the acceptance suite runs the full N = 25
    EnumerationSummary s = enumerate_cases(N);

    // exactly the 32 parametric types
    std::set<std::string> want;
    for (auto& r : minimizing_case_table(3)) want.insert(r.label);
    CHECK(want.size() == 32);
    std::set<std::string> got(s.surviving_types.begin(), s.surviving_types.end());
    CHECK(got == want);

    // the eight classes with the reference memberships
    REQUIRE(s.class_members.size() == 8);
    for (auto& [label, members] : minimizing_case_classes()) {
        auto it = s.class_members.find(label);
        REQUIRE(it != s.class_members.end());
        std::vector<std::string> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        CHECK(it->second == sorted);
    }

    // per-degree: every type appears exactly once with the table's data
    for (std::int64_t d = 3; d <= N - 2; ++d) {
        for (const CaseType& t : minimizing_case_table(d)) {
            int found = 0;
            for (const CaseRow& r : s.rows) {
                if (!r.survives || r.case_label != t.label) continue;
                if (r.m != t.m || r.n != t.n) continue;
                ++found;
                CHECK(r.ab == t.classes.ab);
                CHECK(r.bc == t.classes.bc);
                CHECK(r.ca == t.classes.ca);
                CHECK(r.self_int == r.degree * r.degree);
            }
            INFO(t.label, " d=", d);
            CHECK(found == 1);
        }
        // and no other survivors at this |degree|
        std::int64_t count = 0;
        for (const CaseRow& r : s.rows)
            if (r.survives && (r.degree == d || r.degree == -d)) ++count;
        CHECK(count == 32);
    }
}

TEST_CASE("every case row's triple sums to zero") {
    EnumerationSummary s = enumerate_cases(6);
    for (const CaseRow& r : s.rows)
        CHECK(add(add(r.ab, r.bc), r.ca) == HomClass{0, 0, BasisTag::AB});
}

TEST_CASE("specific appendix facts") {
    EnumerationSummary s = enumerate_cases(8);
    for (const CaseRow& r : s.rows) {
        // (1a): self-intersection is identically zero
        if (r.ac_case == 1 && r.bc_case == 0) {
            CHECK(r.self_int == 0);
            CHECK_FALSE(r.survives);
        }
        // (1d i): the shape forces n = m+1; survives exactly for m < 1
        if (r.ac_case == 1 && r.bc_case == 3 && r.ab_case == 0) {
            CHECK(r.n == r.m + 1);
            CHECK(r.survives == (r.m < 1 && std::abs(r.degree) >= 3));
            if (r.m < 0) CHECK(2 * r.genus == r.m * r.m + r.m);
        }
        // (4e): a diagram only for n-m = 0 or -2; flagged otherwise
        if (r.ac_case == 4 && r.bc_case == 4 && r.ab_case < 0)
            CHECK(r.not_diagram);
    }
}

TEST_CASE("recursion outputs classify to their targets") {
    CHECK(classify(build_by_recursion(FamilyId::G, 5).diagram) ==
          Classification{FamilyVerdict{FamilyId::G, 5}});
}
