#include "hexlat/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace hexlat {

namespace {

const char* family_color(Family f) {
    switch (f) {
    case Family::A: return "#cc2222";
    case Family::B: return "#2244cc";
    default: return "#118833";
    }
}

// Split a cover segment at integer grid lines so every piece lives inside
// one translate of the unit square.
std::vector<std::pair<Vec2, Vec2>> wrap_split(Vec2 a, Vec2 b) {
    std::vector<std::pair<Vec2, Vec2>> out;
    while (true) {
        Vec2 d = b - a;
        Rat tmin(1);
        auto clampt = [&](const Rat& coord, const Rat& delta) {
            if (delta.is_zero()) return;
            std::int64_t cell = coord.floor();
            Rat wall = delta.sign() > 0 ? Rat(cell + 1) : Rat(cell);
            if (coord == wall) wall = wall + (delta.sign() > 0 ? Rat(1) : Rat(-1));
            Rat t = (wall - coord) / delta;
            if (t < tmin) tmin = t;
        };
        clampt(a.x, d.x);
        clampt(a.y, d.y);
        if (tmin >= Rat(1)) {
            out.push_back({a, b});
            return out;
        }
        Vec2 mid = a + d * tmin;
        out.push_back({a, mid});
        a = mid;
    }
}

struct XY {
    double x, y;
};

XY place(const Vec2& p, const RenderOptions& o, double ox, double oy) {
    double x = p.x.to_double(), y = p.y.to_double();
    if (o.hexagon) {
        // affine image under the triangular-lattice map
        return {ox + o.scale * (x + 0.5 * y), oy + o.scale * (1.0 - y * 0.8660254037844386)};
    }
    return {ox + o.scale * x, oy + o.scale * (1.0 - y)};
}

} // namespace

std::string render_svg(const LatticeDiagram& d, const RenderOptions& opts) {
    Analysis an = analyze(d);
    double margin = 24;
    double w = opts.scale * (opts.hexagon ? 1.5 : 1.0) + 2 * margin;
    double h = opts.scale + 2 * margin;
    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
        << opts.scale * (opts.hexagon ? 1.5 : 1.0) << "\" height=\"" << opts.scale
        << "\" fill=\"#fcfcf8\" stroke=\"#999\"/>\n";

    if (opts.show_foliation) {
        for (int k = 0; k <= 8; ++k) {
            double t = k / 8.0;
            XY a0 = place({Rat(0), Rat((std::int64_t)(t * 1000), 1000)}, opts, margin, margin);
            XY a1 = place({Rat(1), Rat((std::int64_t)(t * 1000), 1000)}, opts, margin, margin);
            svg << "<line x1=\"" << a0.x << "\" y1=\"" << a0.y << "\" x2=\"" << a1.x
                << "\" y2=\"" << a1.y << "\" stroke=\"#eee\"/>\n";
        }
    }

    for (const Arc& arc : d.arcs) {
        // one path element per wrap piece: consecutive pieces in the same
        // cell stay in one polyline
        std::vector<std::vector<XY>> pieces;
        Vec2 cell{Rat(0), Rat(0)};
        bool open = false;
        for (size_t s = 0; s + 1 < arc.path.size(); ++s) {
            for (auto& [p, q] : wrap_split(arc.path[s], arc.path[s + 1])) {
                Vec2 m = (p + q) * Rat(1, 2);
                Vec2 base{Rat(m.x.floor()), Rat(m.y.floor())};
                if (!open || !(base == cell)) {
                    pieces.push_back({place(p - base, opts, margin, margin)});
                    cell = base;
                    open = true;
                }
                pieces.back().push_back(place(q - base, opts, margin, margin));
            }
        }
        for (auto& pl : pieces) {
            svg << "<path d=\"M " << pl[0].x << " " << pl[0].y;
            for (size_t i = 1; i < pl.size(); ++i) svg << " L " << pl[i].x << " " << pl[i].y;
            svg << "\" stroke=\"" << family_color(arc.family)
                << "\" stroke-width=\"2\" fill=\"none\"/>\n";
        }
    }

    if (an.report.ok) {
        for (size_t v = 0; v < an.vertices.size(); ++v) {
            XY c = place(an.vertices[v], opts, margin, margin);
            svg << "<circle cx=\"" << c.x << "\" cy=\"" << c.y
                << "\" r=\"3\" fill=\"#222\"/>\n";
            if (opts.labels)
                svg << "<text x=\"" << c.x + 4 << "\" y=\"" << c.y - 4
                    << "\" font-size=\"10\">" << (an.color[v] > 0 ? "+" : "-")
                    << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hexlat
