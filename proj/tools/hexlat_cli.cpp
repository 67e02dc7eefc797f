// Command-line surface for the hexagonal lattice diagram tool.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical verification failure,
// 3 I/O or parse failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "hexlat/classify.hpp"
#include "hexlat/io_codec.hpp"
#include "hexlat/render.hpp"
#include "hexlat/smooth.hpp"
#include "hexlat/variety_numeric.hpp"

#include <fstream>
#include <iostream>

using namespace hexlat;
using nlohmann::json;

namespace {

int threads_cap() {
    const char* env = std::getenv("HEXLAT_THREADS");
    if (!env) return 0;
    return std::max(0, atoi(env));
}

Vec2 parse_offset(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError("offset must be X,Y with exact rational components");
    return {Rat::parse(s.substr(0, comma)), Rat::parse(s.substr(comma + 1))};
}

json invariants_json(const InvariantReport& r) {
    json j;
    j["b"] = r.b;
    j["c"] = {r.c1, r.c2, r.c3};
    j["epsilon"] = r.epsilon;
    j["ab"] = {r.ab.p, r.ab.q};
    j["bc"] = {r.bc.p, r.bc.q};
    j["ca"] = {r.ca.p, r.ca.q};
    j["degree"] = r.degree;
    j["self_intersection"] = r.self_int;
    j["genus"] = r.genus;
    j["genus_minimal"] = r.genus_minimal;
    return j;
}

void print_invariants(const InvariantReport& r, std::ostream& os) {
    os << "b = " << r.b << ", c = (" << r.c1 << "," << r.c2 << "," << r.c3
       << "), epsilon = " << (r.epsilon > 0 ? "+1" : "-1") << "\n";
    os << "ab = " << to_string(r.ab) << ", bc = " << to_string(r.bc)
       << ", ca = " << to_string(r.ca) << "\n";
    os << "degree = " << r.degree << ", [K]^2 = " << r.self_int
       << ", genus = " << r.genus << (r.genus_minimal ? " (genus-minimizing)" : "")
       << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexagonal lattice diagrams for complex curves on the central torus"};
    app.require_subcommand(1);
    (void)threads_cap();

    // ---- synth ----
    auto* synth = app.add_subcommand("synth", "synthesize a family diagram");
    std::string s_family, s_out;
    std::int64_t s_degree = 3;
    synth->add_option("--family", s_family, "family A..H")->required();
    synth->add_option("--degree", s_degree, "degree d")->required();
    synth->add_option("-o,--output", s_out, "output .hexlat.json file")->required();

    // ---- classify ----
    auto* cls = app.add_subcommand("classify", "validate and classify a diagram file");
    std::string c_file;
    bool c_json = false;
    cls->add_option("file", c_file)->required();
    cls->add_flag("--json", c_json, "machine-readable output");

    // ---- smooth ----
    auto* smo = app.add_subcommand("smooth", "overlay two diagrams and smooth all crossings");
    std::string m_f1, m_f2, m_out, m_off = "0,0";
    smo->add_option("file1", m_f1)->required();
    smo->add_option("file2", m_f2)->required();
    smo->add_option("--offset", m_off, "exact rational offset X,Y for the second diagram");
    smo->add_option("-o,--output", m_out)->required();

    // ---- recursion ----
    auto* rec = app.add_subcommand("recursion", "build a family by its smoothing recursion");
    std::string r_family, r_out;
    std::int64_t r_degree = 3;
    rec->add_option("--family", r_family)->required();
    rec->add_option("--degree", r_degree)->required();
    rec->add_option("-o,--output", r_out)->required();

    // ---- variety ----
    auto* var = app.add_subcommand("variety", "exact variety shadow diagram");
    std::string v_kind = "v", v_out;
    std::int64_t v_degree = 3;
    bool v_verify = false;
    var->add_option("--kind", v_kind, "v or vprime");
    var->add_option("--degree", v_degree)->required();
    var->add_option("-o,--output", v_out);
    var->add_flag("--verify", v_verify, "run the disjointness/class/equivalence checks");

    // ---- verify-appendix ----
    auto* va = app.add_subcommand("verify-appendix", "replay the 216-case enumeration");
    std::int64_t a_range = 25;
    std::string a_csv, a_json_out;
    va->add_option("--range", a_range, "parameter sweep bound N");
    va->add_option("--csv", a_csv, "dump all case rows to CSV");
    va->add_option("--json", a_json_out, "dump the summary as JSON");

    // ---- numeric ----
    auto* num = app.add_subcommand("numeric", "numeric verification reports");
    num->require_subcommand(1);
    auto* n_arc = num->add_subcommand("arc", "solid-torus solution arc");
    double na_t = 2.0;
    n_arc->add_option("--t", na_t)->required();
    auto* n_rd = num->add_subcommand("rd-slice", "R_d slice roots");
    std::int64_t nr_d = 3;
    double nr_s = 0.5;
    n_rd->add_option("--d", nr_d)->required();
    n_rd->add_option("--s", nr_s)->required();
    auto* n_sig = num->add_subcommand("sigma", "bridge points on the central torus");
    std::int64_t ns_d = 3;
    n_sig->add_option("--d", ns_d)->required();
    auto* n_tr = num->add_subcommand("trace", "H1 solution arc traces");
    std::int64_t nt_d = 3;
    std::string nt_csv;
    n_tr->add_option("--d", nt_d)->required();
    n_tr->add_option("--csv", nt_csv, "dump samples to CSV");
    auto* n_sm = num->add_subcommand("smoothness", "regular-value sampling");
    std::int64_t nm_d = 3;
    unsigned nm_seed = ToleranceConfig{}.seed;
    n_sm->add_option("--d", nm_d)->required();
    n_sm->add_option("--seed", nm_seed);

    // ---- render ----
    auto* ren = app.add_subcommand("render", "emit an SVG picture");
    std::string re_in, re_out, re_domain = "square";
    ren->add_option("file", re_in)->required();
    ren->add_option("-o,--output", re_out)->required();
    ren->add_option("--domain", re_domain, "square or hexagon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // usage errors are exit 1
    }

    try {
        if (*synth) {
            LatticeDiagram d = family(family_from_letter(s_family.at(0)), s_degree);
            Metadata meta{
                {"family_id", std::string(1, family_letter(family_from_letter(s_family.at(0))))},
                {"degree", std::to_string(s_degree)},
                {"generator", "synth"}};
            save_diagram_file(s_out, d, meta);
            std::cout << "wrote " << s_out << "\n";
            return 0;
        }
        if (*cls) {
            LatticeDiagram d = load_diagram_file(c_file);
            InvariantReport r = invariants(d);
            Classification verdict = classify(d);
            if (c_json) {
                json j = invariants_json(r);
                j["classification"] = to_string(verdict);
                j["transverse"] = check_transverse(d);
                std::cout << j.dump(2) << "\n";
            } else {
                print_invariants(r, std::cout);
                std::cout << "classification: " << to_string(verdict) << "\n";
                std::cout << "transverse orientation: "
                          << (check_transverse(d) ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (*smo) {
            LatticeDiagram d1 = load_diagram_file(m_f1);
            LatticeDiagram d2 = load_diagram_file(m_f2);
            try {
                SmoothResult r = smooth_all(overlay(d1, d2, parse_offset(m_off)));
                save_diagram_file(m_out, r.diagram, {{"generator", "smooth"}});
                std::cout << "smoothed " << r.crossings << " crossings; additivity "
                          << (r.additive ? "holds" : "fails") << "; wrote " << m_out
                          << "\n";
                return r.additive ? 0 : 2;
            } catch (const NotLatticeError& e) {
                std::cerr << "smoothing failed validation: " << e.what() << "\n";
                return 2;
            } catch (const OverlapError& e) {
                std::cerr << "overlay rejected: " << e.what() << "\n";
                return 2;
            }
        }
        if (*rec) {
            RecursionResult r = build_by_recursion(family_from_letter(r_family.at(0)), r_degree);
            save_diagram_file(r_out, r.diagram, {{"generator", "recursion"}});
            for (auto& st : r.steps)
                std::cout << "degree " << st.degree << ": smoothed " << st.crossings
                          << " crossings\n";
            std::cout << "wrote " << r_out << "\n";
            return 0;
        }
        if (*var) {
            VarietyKind kind = v_kind == "vprime" ? VarietyKind::Vprime : VarietyKind::V;
            LatticeDiagram d = variety_arcs(kind, v_degree);
            if (!v_out.empty()) {
                save_diagram_file(v_out, d, {{"generator", "variety"},
                                             {"kind", v_kind},
                                             {"degree", std::to_string(v_degree)}});
                std::cout << "wrote " << v_out << "\n";
            }
            if (v_verify) {
                bool ok = validate(d).ok;
                FamilyId target = kind == VarietyKind::V ? FamilyId::A : FamilyId::E;
                bool eq = v_degree >= 1 && equivalent(d, family(target, v_degree));
                InvariantReport r = invariants(d);
                std::cout << "validates: " << (ok ? "yes" : "no") << "\n";
                std::cout << "ab = " << to_string(r.ab) << " (expect alpha+(d-1)beta for V)\n";
                std::cout << "equivalent to (" << family_letter(target) << ")_" << v_degree
                          << ": " << (eq ? "yes" : "no") << "\n";
                if (!(ok && eq)) return 2;
            }
            return 0;
        }
        if (*va) {
            EnumerationSummary s = enumerate_cases(a_range);
            if (!a_csv.empty()) {
                std::ofstream csv(a_csv);
                csv << "case,n,m,ab_p,ab_q,bc_p,bc_q,ca_p,ca_q,eps_b,c1,c2,c3,degree,"
                       "self_int,genus,survives,class\n";
                for (const CaseRow& r : s.rows)
                    csv << r.case_label << "," << r.n << "," << r.m << "," << r.ab.p << ","
                        << r.ab.q << "," << r.bc.p << "," << r.bc.q << "," << r.ca.p << ","
                        << r.ca.q << "," << r.eps_b << "," << r.c1 << "," << r.c2 << ","
                        << r.c3 << "," << r.degree << "," << r.self_int << "," << r.genus
                        << "," << (r.survives ? 1 : 0) << ","
                        << (r.class_label ? std::string(1, r.class_label) : "") << "\n";
            }
            // compare against the reference table
            std::set<std::string> want;
            for (auto& t : minimizing_case_table(3)) want.insert(t.label);
            std::set<std::string> got(s.surviving_types.begin(), s.surviving_types.end());
            bool classes_ok = s.class_members.size() == 8;
            for (auto& [label, members] : minimizing_case_classes()) {
                auto it = s.class_members.find(label);
                std::vector<std::string> sorted = members;
                std::sort(sorted.begin(), sorted.end());
                if (it == s.class_members.end() || it->second != sorted) classes_ok = false;
            }
            bool rows_ok = true;
            for (std::int64_t dg = 3; dg <= a_range - 2 && rows_ok; ++dg)
                for (const CaseType& t : minimizing_case_table(dg)) {
                    int found = 0;
                    for (const CaseRow& r : s.rows)
                        if (r.survives && r.case_label == t.label && r.m == t.m &&
                            r.n == t.n && r.ab == t.classes.ab && r.bc == t.classes.bc &&
                            r.ca == t.classes.ca)
                            ++found;
                    if (found != 1) rows_ok = false;
                }
            bool match = got == want && classes_ok && rows_ok;
            std::cout << s.surviving_types.size() << " surviving parametric types, "
                      << s.class_members.size() << " classes -- "
                      << (match ? "MATCH" : "MISMATCH") << "\n";
            if (!a_json_out.empty()) {
                json j;
                j["types"] = s.surviving_types;
                for (auto& [c, mem] : s.class_members)
                    j["classes"][std::string(1, c)] = mem;
                j["match"] = match;
                std::ofstream(a_json_out) << j.dump(2) << "\n";
            }
            return match ? 0 : 2;
        }
        if (*num) {
            ToleranceConfig cfg;
            if (*n_arc) {
                TraceResult tr = arc_solution(na_t, cfg);
                std::cout << "r0 = " << tr.r0 << ", samples = " << tr.samples.size()
                          << ", max residual = " << tr.max_residual
                          << ", endpoint deviation = " << tr.endpoint_deviation << "\n";
                return tr.endpoint_deviation < cfg.match_tol ? 0 : 2;
            }
            if (*n_rd) {
                auto [r0, r1] = rd_slice(nr_d, nr_s, cfg);
                std::cout << "R_" << nr_d << "(" << nr_s << ") = [" << r0 << ", " << r1
                          << "]\n";
                return 0;
            }
            if (*n_sig) {
                auto pts = sigma_points(ns_d, cfg);
                std::cout << pts.size() << " torus solutions (expected "
                          << 2 * (ns_d * ns_d - 3 * ns_d + 3)
                          << "), all matched to exact bridge points\n";
                return 0;
            }
            if (*n_tr) {
                auto traces = trace_h1_arcs(nt_d, cfg);
                double worst = 0, res = 0;
                for (auto& t : traces) {
                    worst = std::max(worst, t.endpoint_deviation);
                    res = std::max(res, t.max_residual);
                }
                std::cout << traces.size() << " traces, worst endpoint deviation " << worst
                          << ", max residual " << res << "\n";
                if (!nt_csv.empty()) {
                    std::ofstream csv(nt_csv);
                    csv << "j,sample,r,theta,psi,residual\n";
                    for (size_t j = 0; j < traces.size(); ++j)
                        for (size_t i = 0; i < traces[j].samples.size(); ++i) {
                            const TraceSample& smp = traces[j].samples[i];
                            double rr = std::abs(
                                smp.z1 * std::pow(smp.z2, double(nt_d - 1)) + smp.z2 +
                                std::pow(smp.z1, double(nt_d - 1)));
                            csv << j + 1 << "," << i << "," << smp.r << "," << smp.theta
                                << "," << smp.psi << "," << rr << "\n";
                        }
                }
                return 0;
            }
            if (*n_sm) {
                cfg.seed = nm_seed;
                SmoothnessReport rep = smoothness_check(nm_d, 10000, cfg);
                std::cout << "min |df| = " << rep.min_gradient << " over " << rep.accepted
                          << " zero-set samples (floor " << cfg.grad_floor << ")\n";
                return rep.min_gradient > cfg.grad_floor ? 0 : 2;
            }
        }
        if (*ren) {
            LatticeDiagram d = load_diagram_file(re_in);
            RenderOptions o;
            o.hexagon = re_domain == "hexagon";
            std::ofstream(re_out) << render_svg(d, o);
            std::cout << "wrote " << re_out << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const MismatchError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const SeparationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const GeomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
