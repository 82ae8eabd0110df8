#pragma once

// File ingestion and export: CSV point sets, the JSON graph schema, DOT
// and SVG rendering.

#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spanners/build.hpp"

namespace spanners {

enum class PointFormat { Csv, Json };

namespace detail {

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

inline GraphKind kind_from_name(const std::string& name) {
    if (name == "yao") return GraphKind::Yao;
    if (name == "theta") return GraphKind::Theta;
    if (name == "yao-yao") return GraphKind::YaoYao;
    if (name == "theta-theta") return GraphKind::ThetaTheta;
    if (name == "half-theta6") return GraphKind::HalfTheta6;
    throw std::runtime_error("unknown graph kind '" + name + "'");
}

}  // namespace detail

// CSV schema: header `id,x,y`, one point per line. Parse errors report the
// line number; points are sorted by id and validated.
inline PointSet read_points_csv(const std::string& path) {
    auto in = detail::open_input(path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("id,x,y", 0) != 0) {
        throw std::runtime_error(path + ":1: expected header 'id,x,y'");
    }
    PointSet points;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        Point p;
        char c1 = 0, c2 = 0;
        if (!(row >> p.id >> c1 >> p.x >> c2 >> p.y) || c1 != ',' || c2 != ',') {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed point row '" + line + "'");
        }
        points.push_back(p);
    }
    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a.id < b.id; });
    validate_point_set(points);
    return points;
}

inline void write_points_csv(const PointSet& points, const std::string& path) {
    auto out = detail::open_output(path);
    out << "id,x,y\n";
    out.precision(17);
    for (const Point& p : points) {
        out << p.id << ',' << p.x << ',' << p.y << '\n';
    }
}

inline nlohmann::json points_to_json(const PointSet& points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Point& p : points) {
        arr.push_back({{"id", p.id}, {"x", p.x}, {"y", p.y}});
    }
    return arr;
}

inline PointSet points_from_json(const nlohmann::json& arr) {
    PointSet points;
    for (const auto& item : arr) {
        points.push_back({item.at("id").get<int>(), item.at("x").get<double>(),
                          item.at("y").get<double>()});
    }
    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a.id < b.id; });
    validate_point_set(points);
    return points;
}

inline PointSet read_points(const std::string& path, PointFormat format) {
    if (format == PointFormat::Csv) return read_points_csv(path);
    auto in = detail::open_input(path);
    nlohmann::json doc = nlohmann::json::parse(in);
    return points_from_json(doc.contains("points") ? doc.at("points") : doc);
}

// Canonical graph schema, identical for every kind:
// {scheme:{k}, kind, points:[{id,x,y}], edges:[{source,target,cone,length,
// projection}]}. nlohmann serializes doubles with shortest round-trip
// representation, so coordinates survive bit-exactly.
inline void write_graph_json(const SpannerGraph& graph,
                             const std::string& path) {
    nlohmann::json doc;
    doc["scheme"] = {{"k", graph.scheme.k}};
    doc["kind"] = kind_name(graph.kind);
    doc["points"] = points_to_json(graph.points);
    nlohmann::json edges = nlohmann::json::array();
    for (const DirectedEdge& e : graph.edges) {
        edges.push_back({{"source", e.source},
                         {"target", e.target},
                         {"cone", e.cone},
                         {"length", e.length},
                         {"projection", e.projection}});
    }
    doc["edges"] = edges;
    auto out = detail::open_output(path);
    out << doc.dump(2) << '\n';
}

inline SpannerGraph read_graph_json(const std::string& path) {
    auto in = detail::open_input(path);
    nlohmann::json doc = nlohmann::json::parse(in);
    SpannerGraph graph{ConeScheme(doc.at("scheme").at("k").get<int>()),
                       points_from_json(doc.at("points")),
                       {},
                       detail::kind_from_name(doc.at("kind").get<std::string>())};
    for (const auto& item : doc.at("edges")) {
        graph.edges.push_back({item.at("source").get<int>(),
                               item.at("target").get<int>(),
                               item.at("cone").get<int>(),
                               item.at("length").get<double>(),
                               item.at("projection").get<double>()});
    }
    return graph;
}

// DOT export: point ids as node names with pinned positions.
inline void write_graph_dot(const SpannerGraph& graph,
                            const std::string& path) {
    auto out = detail::open_output(path);
    out.precision(17);
    out << "digraph " << kind_name(graph.kind) << " {\n";
    out << "  node [shape=point];\n";
    for (const Point& p : graph.points) {
        out << "  p" << p.id << " [pos=\"" << p.x << ',' << p.y << "!\"];\n";
    }
    for (const DirectedEdge& e : graph.edges) {
        out << "  p" << e.source << " -> p" << e.target << ";\n";
    }
    out << "}\n";
}

enum class GraphFormat { Json, Dot };

inline void write_graph(const SpannerGraph& graph, const std::string& path,
                        GraphFormat format) {
    if (format == GraphFormat::Json) {
        write_graph_json(graph, path);
    } else {
        write_graph_dot(graph, path);
    }
}

struct SvgOptions {
    double panel_size = 360.0;
    double margin = 20.0;
    int cone_fan_vertex = -1;  // draw the cone partition at this vertex
    bool labels = false;
};

// Renders one panel per graph, side by side, drawn to a shared scale.
inline void export_svg(std::span<const SpannerGraph> graphs,
                       const std::string& path, const SvgOptions& options = {}) {
    if (graphs.empty()) throw std::invalid_argument("export_svg: no graphs");
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    for (const SpannerGraph& g : graphs) {
        for (const Point& p : g.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    double span = std::max(max_x - min_x, max_y - min_y);
    if (span <= 0.0) span = 1.0;
    double inner = options.panel_size - 2.0 * options.margin;
    double scale = inner / span;
    double total_w = options.panel_size * static_cast<double>(graphs.size());

    auto out = detail::open_output(path);
    out.precision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
        << "\" height=\"" << options.panel_size << "\" viewBox=\"0 0 "
        << total_w << ' ' << options.panel_size << "\">\n";
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const SpannerGraph& g = graphs[gi];
        double off = options.panel_size * static_cast<double>(gi);
        auto sx = [&](double x) {
            return off + options.margin + (x - min_x) * scale;
        };
        auto sy = [&](double y) {
            return options.panel_size - options.margin - (y - min_y) * scale;
        };
        out << "  <g id=\"panel-" << gi << "\">\n";
        out << "    <text x=\"" << off + options.margin << "\" y=\"14\" "
            << "font-size=\"12\">" << kind_name(g.kind) << " k=" << g.scheme.k
            << "</text>\n";
        if (options.cone_fan_vertex >= 0 &&
            options.cone_fan_vertex < static_cast<int>(g.points.size())) {
            const Point& v = g.points[options.cone_fan_vertex];
            double ray = span * 0.75;
            for (int c = 0; c < g.scheme.k; ++c) {
                double ang = c * g.scheme.theta;
                out << "    <line x1=\"" << sx(v.x) << "\" y1=\"" << sy(v.y)
                    << "\" x2=\"" << sx(v.x + ray * std::cos(ang)) << "\" y2=\""
                    << sy(v.y + ray * std::sin(ang))
                    << "\" stroke=\"#ccdcf5\" stroke-width=\"0.5\"/>\n";
            }
        }
        for (const DirectedEdge& e : g.edges) {
            const Point& s = g.points[e.source];
            const Point& t = g.points[e.target];
            out << "    <line x1=\"" << sx(s.x) << "\" y1=\"" << sy(s.y)
                << "\" x2=\"" << sx(t.x) << "\" y2=\"" << sy(t.y)
                << "\" stroke=\"#333333\" stroke-width=\"0.8\"/>\n";
        }
        for (const Point& p : g.points) {
            out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
                << "\" r=\"2\" fill=\"#c03030\"/>\n";
            if (options.labels) {
                out << "    <text x=\"" << sx(p.x) + 3 << "\" y=\""
                    << sy(p.y) - 3 << "\" font-size=\"8\">" << p.id
                    << "</text>\n";
            }
        }
        out << "  </g>\n";
    }
    out << "</svg>\n";
}

inline void export_svg(const SpannerGraph& graph, const std::string& path,
                       const SvgOptions& options = {}) {
    export_svg(std::span<const SpannerGraph>(&graph, 1), path, options);
}

}  // namespace spanners
