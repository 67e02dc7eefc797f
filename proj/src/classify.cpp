#include "hexlat/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <sstream>

namespace hexlat {

namespace {

// Coordinate action of the cyclic relabel: T(x,y) = (y-x, -x).
HomClass rot(const HomClass& c) {
    HomClass v = to_ab(c);
    return {v.q - v.p, -v.p, BasisTag::AB};
}

ClassTriple sigma(const ClassTriple& t) {
    return {rot(t.bc), rot(t.ca), rot(t.ab)};
}

ClassTriple negate(const ClassTriple& t) {
    return {neg(t.ab), neg(t.bc), neg(t.ca)};
}

std::array<std::int64_t, 6> key_of(const ClassTriple& t) {
    return {t.ab.p, t.ab.q, t.bc.p, t.bc.q, t.ca.p, t.ca.q};
}

} // namespace

std::array<std::int64_t, 6> normalize_triple(const ClassTriple& t0) {
    ClassTriple cur{to_ab(t0.ab), to_ab(t0.bc), to_ab(t0.ca)};
    std::array<std::int64_t, 6> best = key_of(cur);
    for (int r = 0; r < 3; ++r) {
        best = std::min(best, key_of(cur));
        best = std::min(best, key_of(negate(cur)));
        cur = sigma(cur);
    }
    return best;
}

Classification classify_classes(const ClassTriple& t0) {
    ClassTriple t{to_ab(t0.ab), to_ab(t0.bc), to_ab(t0.ca)};
    HomClass sum = add(add(t.ab, t.bc), t.ca);
    if (!(sum == HomClass{0, 0, BasisTag::AB}))
        throw InconsistentError("class triple does not sum to zero");

    HomClass bc_bg = from_ab(t.bc, BasisTag::BG);
    std::int64_t degree = bc_bg.p + t.ab.q;
    std::int64_t ad = degree < 0 ? -degree : degree;
    if (ad <= 2) return SmallDegreeVerdict{degree};

    HomClass ac = neg(t.ca);
    std::int64_t eps_b = pair(ac, t.bc);
    std::int64_t b = eps_b < 0 ? -eps_b : eps_b;
    std::int64_t csum =
        component_count(t.ab) + component_count(t.bc) + component_count(t.ca);
    std::int64_t genus = (b - csum) / 2 + 1;
    if (2 * genus != (ad - 1) * (ad - 2)) return NonMinimalVerdict{genus, degree};

    auto nt = normalize_triple(t);
    for (FamilyId f : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E,
                       FamilyId::F, FamilyId::G, FamilyId::H}) {
        auto [ab, bc] = family_classes(f, ad);
        ClassTriple ft{to_ab(ab), to_ab(bc), neg(add(ab, bc))};
        if (normalize_triple(ft) == nt) return FamilyVerdict{f, ad};
    }
    throw InconsistentError("genus-minimizing triple matches no family template");
}

Classification classify(const LatticeDiagram& d) {
    Analysis an = analyze(d);
    if (!an.report.ok) return NotLatticeVerdict{an.report};
    return classify_classes({an.ab, an.bc, an.ca});
}

std::string to_string(const Classification& c) {
    if (auto* f = std::get_if<FamilyVerdict>(&c)) {
        std::string s = "Family(";
        s += family_letter(f->family);
        return s + "," + std::to_string(f->degree) + ")";
    }
    if (auto* s = std::get_if<SmallDegreeVerdict>(&c))
        return "SmallDegree(" + std::to_string(s->degree) + ")";
    if (auto* nm = std::get_if<NonMinimalVerdict>(&c))
        return "NonMinimal(genus=" + std::to_string(nm->genus) +
               ",degree=" + std::to_string(nm->degree) + ")";
    return "NotLattice(" + std::get<NotLatticeVerdict>(c).report.summary() + ")";
}

// ---------------------------------------------------------------------------
// Appendix enumeration.

namespace {

HomClass ac_shape(int c, std::int64_t n) {
    switch (c) {
    case 1: return {n, 1, BasisTag::AB};
    case 2: return {n, -1, BasisTag::AB};
    case 3: return {n, 0, BasisTag::AB};
    case 4: return {n + 1, n, BasisTag::AB};
    case 5: return {n - 1, n, BasisTag::AB};
    default: return {n, n, BasisTag::AB};
    }
}

bool ac_shape_valid(int c, std::int64_t n) {
    return !((c == 3 || c == 6) && n == 0);
}

HomClass bc_shape(int c, std::int64_t m) {
    switch (c) {
    case 0: return {1, m, BasisTag::AB};
    case 1: return {-1, m, BasisTag::AB};
    case 2: return {0, m, BasisTag::AB};
    case 3: return {m, m + 1, BasisTag::AB};
    case 4: return {m, m - 1, BasisTag::AB};
    default: return {m, m, BasisTag::AB};
    }
}

bool bc_shape_valid(int c, std::int64_t m) {
    return !((c == 2 || c == 5) && m == 0);
}

bool ab_shape_matches(int c, const HomClass& ab) {
    switch (c) {
    case 0: return ab.p == 1;
    case 1: return ab.p == -1;
    case 2: return ab.q == 0 && ab.p != 0;
    case 3: return ab.q == 1;
    case 4: return ab.q == -1;
    default: return ab.p == 0 && ab.q != 0;
    }
}

const char* kRoman[6] = {"i", "ii", "iii", "iv", "v", "vi"};

CaseRow make_row(int acc, int bcc, int abc, std::int64_t n, std::int64_t m,
                 const HomClass& ac, const HomClass& bc, const HomClass& ab) {
    CaseRow r;
    r.ac_case = acc;
    r.bc_case = bcc;
    r.ab_case = abc;
    r.n = n;
    r.m = m;
    r.ab = ab;
    r.bc = bc;
    r.ca = neg(ac);
    r.eps_b = pair(ac, bc);
    r.not_diagram = abc < 0;
    std::int64_t b = r.eps_b < 0 ? -r.eps_b : r.eps_b;
    r.c1 = component_count(ab);
    r.c2 = component_count(bc);
    r.c3 = component_count(r.ca);
    HomClass bc_bg = from_ab(bc, BasisTag::BG);
    HomClass ca_ga = from_ab(r.ca, BasisTag::GA);
    r.degree = bc_bg.p + ab.q;
    if (r.degree != ca_ga.p + bc_bg.q || r.degree != ab.p + ca_ga.q)
        throw InconsistentError("degree formulas disagree in enumeration");
    r.self_int = ab.p * ab.q + bc_bg.p * bc_bg.q + ca_ga.p * ca_ga.q + r.eps_b;
    if (r.self_int != r.degree * r.degree)
        throw InconsistentError("self-intersection formula violated in enumeration");
    std::int64_t ad = r.degree < 0 ? -r.degree : r.degree;
    std::int64_t csum = r.c1 + r.c2 + r.c3;
    if ((b - csum) % 2 != 0) {
        r.not_diagram = true;
        r.genus = 0;
    } else {
        r.genus = (b - csum) / 2 + 1;
    }
    r.survives =
        !r.not_diagram && ad >= 3 && 2 * r.genus == (ad - 1) * (ad - 2) && r.genus >= 0;
    r.class_label = 0;

    std::ostringstream lab;
    lab << acc << char('a' + bcc);
    if (abc >= 0) lab << kRoman[abc];
    else lab << "*";
    r.case_label = lab.str();
    // the two split types are distinguished by parameter sign
    if (r.case_label == "3fvi") r.case_label += m > 0 ? "+" : "-";
    if (r.case_label == "6ciii") r.case_label += n > 0 ? "+" : "-";
    return r;
}

} // namespace

namespace {

std::vector<CaseRow> enumerate_ac_case(int acc, std::int64_t N) {
    std::vector<CaseRow> rows;
    for (std::int64_t n = -N; n <= N; ++n) {
        if (!ac_shape_valid(acc, n)) continue;
        HomClass ac = ac_shape(acc, n);
        for (int bcc = 0; bcc < 6; ++bcc) {
            for (std::int64_t m = -N; m <= N; ++m) {
                if (!bc_shape_valid(bcc, m)) continue;
                HomClass bc = bc_shape(bcc, m);
                if (pair(ac, bc) == 0) continue;
                HomClass ab = add(ac, neg(bc));
                bool any = false;
                for (int abc = 0; abc < 6; ++abc) {
                    if (!ab_shape_matches(abc, ab)) continue;
                    any = true;
                    rows.push_back(make_row(acc, bcc, abc, n, m, ac, bc, ab));
                }
                if (!any) rows.push_back(make_row(acc, bcc, -1, n, m, ac, bc, ab));
            }
        }
    }
    return rows;
}

} // namespace

EnumerationSummary enumerate_cases(std::int64_t N) {
    EnumerationSummary out;
    // the six top-level shapes are independent; HEXLAT_THREADS caps the
    // fan-out and the merge order keeps the result identical either way
    int threads = 1;
    if (const char* env = std::getenv("HEXLAT_THREADS"))
        threads = std::max(1, atoi(env));
    if (threads > 1) {
        std::vector<std::future<std::vector<CaseRow>>> jobs;
        for (int acc = 1; acc <= 6; ++acc)
            jobs.push_back(std::async(std::launch::async, enumerate_ac_case, acc, N));
        for (auto& j : jobs) {
            auto rows = j.get();
            out.rows.insert(out.rows.end(), rows.begin(), rows.end());
        }
    } else {
        for (int acc = 1; acc <= 6; ++acc) {
            auto rows = enumerate_ac_case(acc, N);
            out.rows.insert(out.rows.end(), rows.begin(), rows.end());
        }
    }

    std::set<std::string> types;
    std::map<char, std::set<std::string>> members;
    for (auto& r : out.rows) {
        if (!r.survives) continue;
        ++out.survivors;
        Classification c = classify_classes({r.ab, r.bc, r.ca});
        auto* f = std::get_if<FamilyVerdict>(&c);
        if (!f) throw InconsistentError("surviving row is not a family: " + r.case_label);
        r.class_label = family_letter(f->family);
        types.insert(r.case_label);
        members[r.class_label].insert(r.case_label);
    }
    out.surviving_types.assign(types.begin(), types.end());
    for (auto& [c, s] : members)
        out.class_members[c] = std::vector<std::string>(s.begin(), s.end());
    return out;
}

std::vector<CaseType> minimizing_case_table(std::int64_t d) {
    auto AB = [](std::int64_t x, std::int64_t y) { return HomClass{x, y, BasisTag::AB}; };
    auto BG = [](std::int64_t p, std::int64_t q) {
        return to_ab(HomClass{p, q, BasisTag::BG});
    };
    auto GA = [](std::int64_t p, std::int64_t q) {
        return to_ab(HomClass{p, q, BasisTag::GA});
    };
    std::vector<CaseType> rows;
    auto row = [&](const std::string& label, std::int64_t m, std::int64_t n, HomClass ab,
                   HomClass bc, HomClass ca) {
        rows.push_back({label, m, n, {ab, bc, ca}});
    };
    row("1di", -d + 1, -d + 2, AB(1, d - 1), BG(1, d - 1), GA(1, d - 1));
    row("1dvi", -d + 1, -d + 1, AB(0, d - 1), BG(1, d - 1), GA(1, d));
    row("1fi", -d + 1, -d + 2, AB(1, d), BG(0, d - 1), GA(1, d - 1));
    row("1fvi", -d + 1, -d + 1, AB(0, d), BG(0, d - 1), GA(1, d));
    row("2eii", d - 1, d - 2, AB(-1, -d + 1), BG(-1, -d + 1), GA(-1, -d + 1));
    row("2evi", d - 1, d - 1, AB(0, -d + 1), BG(-1, -d + 1), GA(-1, -d));
    row("2fii", d - 1, d - 2, AB(-1, -d), BG(0, -d + 1), GA(-1, -d + 1));
    row("2fvi", d - 1, d - 1, AB(0, -d), BG(0, -d + 1), GA(-1, -d));
    row("3di", -d, -d + 1, AB(1, d - 1), BG(1, d), GA(0, d - 1));
    row("3dvi", -d, -d, AB(0, d - 1), BG(1, d), GA(0, d));
    // the printed table has ab = alpha + (1-d)beta here, but case (ii) forces
    // the alpha coefficient to -1 (and only then does the triple sum to zero)
    row("3eii", d, d - 1, AB(-1, -d + 1), BG(-1, -d), GA(0, -d + 1));
    row("3evi", d, d, AB(0, -d + 1), BG(-1, -d), GA(0, -d));
    row("3fi", -d, -d + 1, AB(1, d), BG(0, d), GA(0, d - 1));
    row("3fii", d, d - 1, AB(-1, -d), BG(0, -d), GA(0, -d + 1));
    row("3fvi+", d, d, AB(0, -d), BG(0, -d), GA(0, -d));
    row("3fvi-", -d, -d, AB(0, d), BG(0, d), GA(0, d));
    row("4aiii", -d + 1, -d + 1, AB(-d + 1, 0), BG(-d, -1), GA(-d + 1, -1));
    row("4av", -d + 2, -d + 1, AB(-d + 1, -1), BG(-d + 1, -1), GA(-d + 1, -1));
    row("4ciii", -d, -d, AB(-d + 1, 0), BG(-d, 0), GA(-d, -1));
    row("4cv", -d + 1, -d, AB(-d + 1, -1), BG(-d + 1, 0), GA(-d, -1));
    row("5biii", d - 1, d - 1, AB(d - 1, 0), BG(d, 1), GA(d - 1, 1));
    row("5biv", d - 2, d - 1, AB(d - 1, 1), BG(d - 1, 1), GA(d - 1, 1));
    row("5ciii", d, d, AB(d - 1, 0), BG(d, 0), GA(d, 1));
    row("5civ", d - 1, d, AB(d - 1, 1), BG(d - 1, 0), GA(d, 1));
    row("6aiii", -d + 1, -d + 1, AB(-d, 0), BG(-d, -1), GA(-d + 1, 0));
    row("6av", -d + 2, -d + 1, AB(-d, -1), BG(-d + 1, -1), GA(-d + 1, 0));
    row("6biii", d - 1, d - 1, AB(d, 0), BG(d, 1), GA(d - 1, 0));
    row("6biv", d - 2, d - 1, AB(d, 1), BG(d - 1, 1), GA(d - 1, 0));
    row("6ciii+", d, d, AB(d, 0), BG(d, 0), GA(d, 0));
    row("6ciii-", -d, -d, AB(-d, 0), BG(-d, 0), GA(-d, 0));
    row("6civ", d - 1, d, AB(d, 1), BG(d - 1, 0), GA(d, 0));
    row("6cv", -d + 1, -d, AB(-d, -1), BG(-d + 1, 0), GA(-d, 0));
    return rows;
}

const std::map<char, std::vector<std::string>>& minimizing_case_classes() {
    static const std::map<char, std::vector<std::string>> classes = {
        {'A', {"1di", "2eii"}},
        {'B', {"1dvi", "1fi", "2evi", "2fii", "3di", "3eii"}},
        {'C', {"1fvi", "2fvi", "3dvi", "3evi", "3fi", "3fii"}},
        {'D', {"3fvi+", "3fvi-"}},
        {'E', {"4av", "5biv"}},
        {'F', {"4aiii", "4cv", "5biii", "5civ", "6av", "6biv"}},
        {'G', {"4ciii", "5ciii", "6aiii", "6biii", "6civ", "6cv"}},
        {'H', {"6ciii+", "6ciii-"}},
    };
    return classes;
}

} // namespace hexlat
