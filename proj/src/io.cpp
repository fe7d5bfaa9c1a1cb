#include "starpht/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace starpht {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json point_to_json(const DiagramPoint& pt) {
    json j;
    j["birth"] = pt.birth;
    if (pt.essential)
        j["death"] = "inf";
    else
        j["death"] = pt.death;
    if (pt.birth_vertex >= 0)
        j["birth_vertex"] = pt.birth_vertex;
    else
        j["birth_vertex"] = nullptr;
    if (!pt.essential && pt.death_vertex >= 0)
        j["death_vertex"] = pt.death_vertex;
    else
        j["death_vertex"] = nullptr;
    return j;
}

json diagram_to_json(double theta, const PersistenceDiagram& d) {
    json j;
    j["direction"] = theta;
    j["points"] = json::array();
    for (const DiagramPoint& pt : d.points) j["points"].push_back(point_to_json(pt));
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Polygon read_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw IoError(path + ": expected object with a \"vertices\" array");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const json& v = j["vertices"][i];
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw IoError(path + ": vertices[" + std::to_string(i) +
                          "] is not a pair of numbers");
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return validate_polygon(pts);
}

std::string polygon_json(const Polygon& p) {
    json j;
    j["vertices"] = json::array();
    for (const Point& v : p.vertices) j["vertices"].push_back({v.x, v.y});
    return dump(j);
}

void write_polygon(const Polygon& p, const std::string& path) {
    write_text(polygon_json(p), path);
}

std::string diagram_json(double theta, const PersistenceDiagram& d) {
    return dump(diagram_to_json(theta, d));
}

std::string pht_json(const PHTSample& s) {
    json j = json::array();
    for (const auto& [theta, d] : s.entries) j.push_back(diagram_to_json(theta, d));
    return dump(j);
}

std::string decomposition_json(const DecompositionReport& r) {
    json j;
    j["verdict"] = r.verdict;
    j["max_gap"] = r.max_gap;
    j["records"] = json::array();
    for (const DecompositionRecord& rec : r.records) {
        json rj;
        rj["angle"] = rec.angle;
        rj["gap"] = rec.gap;
        rj["reduced_shape"] = diagram_to_json(rec.angle, rec.reduced_shape)["points"];
        rj["sector_union"] = diagram_to_json(rec.angle, rec.sector_union)["points"];
        j["records"].push_back(std::move(rj));
    }
    return dump(j);
}

std::string verdict_json(const MonodromyVerdict& v) {
    json j;
    j["trivial"] = v.trivial;
    j["sections"] = json::array();
    for (const Section& sec : v.sections) {
        json sj;
        sj["essential"] = sec.essential;
        sj["full_circle"] = sec.full_circle;
        if (!sec.full_circle) {
            sj["support_start"] = sec.support_start;
            sj["support_end"] = sec.support_end;
        }
        sj["segments"] = sec.segments.size();
        j["sections"].push_back(std::move(sj));
    }
    if (v.witness_loop) {
        json w;
        w["angle"] = v.witness_loop->angle;
        w["start"] = {v.witness_loop->start.first, v.witness_loop->start.second};
        w["end"] = {v.witness_loop->end.first, v.witness_loop->end.second};
        j["witness_loop"] = std::move(w);
    } else {
        j["witness_loop"] = nullptr;
    }
    return dump(j);
}

std::string vines_csv(const std::vector<VineRow>& rows) {
    std::ostringstream out;
    out << "section_id,theta,birth,death,birth_vertex,death_vertex,essential\n";
    out.precision(17);
    for (const VineRow& r : rows) {
        out << r.section_id << ',' << r.theta << ',' << r.birth << ',';
        if (r.essential)
            out << "inf";
        else
            out << r.death;
        out << ',' << r.birth_vertex << ',';
        if (r.essential || r.death_vertex < 0)
            out << "";
        else
            out << r.death_vertex;
        out << ',' << (r.essential ? 1 : 0) << '\n';
    }
    return out.str();
}

namespace {

std::string color_for(int i) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[i % 10];
}

}  // namespace

std::string pht_svg(const Polygon& p, const std::optional<Point>& center,
                    const std::vector<Section>& sections, const DirectionPlan& plan) {
    const double W = 480.0, H = 480.0, pad = 30.0;
    std::ostringstream svg;
    svg.precision(8);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << 2 * W << " " << H << "\">\n";

    // left panel: the shape (with sectors when a center is given)
    double minx = kInf, maxx = -kInf, miny = kInf, maxy = -kInf;
    for (const Point& v : p.vertices) {
        minx = std::min(minx, v.x), maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y), maxy = std::max(maxy, v.y);
    }
    const double scale = (W - 2 * pad) / std::max(maxx - minx, maxy - miny);
    auto sx = [&](double x) { return pad + (x - minx) * scale; };
    auto sy = [&](double y) { return H - pad - (y - miny) * scale; };

    if (center) {
        const std::vector<Sector> secs = sectors(p, *center, convex_hull(p));
        int ci = 0;
        for (const Sector& s : secs) {
            svg << "  <path fill=\"" << color_for(ci++) << "\" fill-opacity=\"0.25\" "
                << "stroke=\"none\" d=\"";
            for (std::size_t i = 0; i < s.region.size(); ++i)
                svg << (i == 0 ? "M" : "L") << sx(s.region[i].x) << " " << sy(s.region[i].y)
                    << " ";
            svg << "Z\"/>\n";
        }
        svg << "  <circle cx=\"" << sx(center->x) << "\" cy=\"" << sy(center->y)
            << "\" r=\"3\" fill=\"black\"/>\n";
    }
    svg << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        svg << (i == 0 ? "M" : "L") << sx(p.vertices[i].x) << " " << sy(p.vertices[i].y) << " ";
    svg << "Z\"/>\n";

    // right panel: one polyline per section, (theta, birth) and (theta, death)
    const double K = p.max_vertex_norm();
    auto tx = [&](double theta) { return W + pad + normalize_angle(theta) / kTwoPi * (W - 2 * pad); };
    auto ty = [&](double h) { return H / 2 - h / std::max(K, 1e-9) * (H / 2 - pad); };
    int ci = 0;
    for (const Section& sec : sections) {
        const std::string col = sec.essential ? "#000000" : color_for(ci++);
        svg << "  <path fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1\" d=\"";
        bool first = true;
        for (const SectionSegment& seg : sec.segments) {
            std::vector<double> thetas = {seg.theta_start};
            for (double t : plan.samples[seg.arc_index]) thetas.push_back(t);
            thetas.push_back(seg.theta_end);
            for (double t : thetas) {
                auto [b, d] = eval_segment(seg, p, t);
                svg << (first ? "M" : "L") << tx(t) << " " << ty(b) << " ";
                first = false;
                if (!sec.essential) svg << "L" << tx(t) << " " << ty(d) << " L" << tx(t) << " "
                                        << ty(b) << " ";
            }
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace starpht
