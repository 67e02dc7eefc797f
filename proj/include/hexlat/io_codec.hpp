#pragma once

// Lossless diagram serialization: JSON with every coordinate stored as a
// ["num","den"] pair of decimal strings, never floats.  Canonical form sorts
// arcs by family and then by first point, so golden files diff cleanly.

#include "hexlat/diagram.hpp"

#include <map>
#include <string>

namespace hexlat {

struct ParseError : GeomError {
    explicit ParseError(const std::string& m) : GeomError(m) {}
};
struct ValidationError : GeomError {
    ValidationReport report;
    ValidationError(const std::string& m, ValidationReport r)
        : GeomError(m + ": " + r.summary()), report(std::move(r)) {}
};

using Metadata = std::map<std::string, std::string>;

LatticeDiagram canonicalize(const LatticeDiagram& d);

std::string save_diagram(const LatticeDiagram& d, const Metadata& meta = {});
LatticeDiagram load_diagram(const std::string& text, Metadata* meta = nullptr);

void save_diagram_file(const std::string& path, const LatticeDiagram& d,
                       const Metadata& meta = {});
LatticeDiagram load_diagram_file(const std::string& path, Metadata* meta = nullptr);

} // namespace hexlat
