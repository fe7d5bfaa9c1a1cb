#pragma once

#include <string>

#include "starpht/monodromy.hpp"
#include "starpht/pht.hpp"

namespace starpht {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Polygon JSON: {"vertices": [[x, y], ...]}
Polygon read_polygon(const std::string& path);
std::string polygon_json(const Polygon& p);
void write_polygon(const Polygon& p, const std::string& path);

// Diagram JSON: {"direction": theta, "points": [{"birth", "death" | "inf",
// "birth_vertex" | null, "death_vertex" | null}]}
std::string diagram_json(double theta, const PersistenceDiagram& d);
std::string pht_json(const PHTSample& s);
std::string decomposition_json(const DecompositionReport& r);
std::string verdict_json(const MonodromyVerdict& v);

std::string vines_csv(const std::vector<VineRow>& rows);

// Left panel: shape, sectors, center. Right panel: vines colored by section.
std::string pht_svg(const Polygon& p, const std::optional<Point>& center,
                    const std::vector<Section>& sections, const DirectionPlan& plan);

void write_text(const std::string& text, const std::string& path);

}  // namespace starpht
