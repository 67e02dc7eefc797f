#include "hexlat/io_codec.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace hexlat {

using nlohmann::json;

LatticeDiagram canonicalize(const LatticeDiagram& d) {
    LatticeDiagram out = d;
    std::stable_sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) {
        if (a.family != b.family) return (int)a.family < (int)b.family;
        if (a.path.front() != b.path.front()) return lex_less(a.path.front(), b.path.front());
        return lex_less(a.path.back(), b.path.back());
    });
    return out;
}

namespace {

json rat_to_json(const Rat& r) {
    Rat red = r;
    return json::array({std::to_string((long long)red.num64()),
                        std::to_string((long long)red.den64())});
}

Rat rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("coordinate must be a [\"num\",\"den\"] string pair, got " +
                         j.dump());
    try {
        return Rat::parse(j[0].get<std::string>() + "/" + j[1].get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad rational: ") + e.what());
    }
}

} // namespace

std::string save_diagram(const LatticeDiagram& d, const Metadata& meta) {
    Analysis an = analyze(d);
    if (!an.report.ok) throw ValidationError("cannot save an invalid diagram", an.report);
    LatticeDiagram c = canonicalize(d);
    json out;
    out["format"] = "hexlat-diagram/1";
    out["sign"] = an.eps;
    json arcs = json::array();
    for (const Arc& a : c.arcs) {
        json pts = json::array();
        for (const Vec2& p : a.path)
            pts.push_back(json::array({rat_to_json(p.x), rat_to_json(p.y)}));
        arcs.push_back({{"family", std::string(1, family_letter(a.family))},
                        {"points", pts}});
    }
    out["arcs"] = arcs;
    if (!meta.empty()) {
        json m;
        for (auto& [k, v] : meta) m[k] = v;
        out["metadata"] = m;
    }
    return out.dump(2) + "\n";
}

LatticeDiagram load_diagram(const std::string& text, Metadata* meta) {
    json in;
    try {
        in = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!in.is_object() || in.value("format", "") != "hexlat-diagram/1")
        throw ParseError("missing or unknown format marker");
    if (!in.contains("arcs") || !in["arcs"].is_array())
        throw ParseError("missing arcs array");
    LatticeDiagram d;
    for (const json& ja : in["arcs"]) {
        if (!ja.contains("family") || !ja["family"].is_string())
            throw ParseError("arc without family");
        std::string fam = ja["family"].get<std::string>();
        Family f;
        if (fam == "a") f = Family::A;
        else if (fam == "b") f = Family::B;
        else if (fam == "c") f = Family::C;
        else throw ParseError("unknown family '" + fam + "'");
        if (!ja.contains("points") || !ja["points"].is_array() || ja["points"].size() < 2)
            throw ParseError("arc needs at least two points");
        Arc arc;
        arc.family = f;
        for (const json& jp : ja["points"]) {
            if (!jp.is_array() || jp.size() != 2)
                throw ParseError("point must be a pair of coordinates");
            arc.path.push_back({rat_from_json(jp[0]), rat_from_json(jp[1])});
        }
        d.arcs.push_back(std::move(arc));
    }
    if (meta) {
        meta->clear();
        if (in.contains("metadata"))
            for (auto& [k, v] : in["metadata"].items())
                (*meta)[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    Analysis an = analyze(d);
    if (!an.report.ok)
        throw ValidationError("file parsed but the diagram is invalid", an.report);
    if (in.contains("sign") && in["sign"].is_number_integer() &&
        in["sign"].get<int>() != an.eps)
        throw ValidationError("stored sign disagrees with the diagram", an.report);
    return d;
}

void save_diagram_file(const std::string& path, const LatticeDiagram& d,
                       const Metadata& meta) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << save_diagram(d, meta);
}

LatticeDiagram load_diagram_file(const std::string& path, Metadata* meta) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return load_diagram(text, meta);
}

} // namespace hexlat
