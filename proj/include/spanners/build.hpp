#pragma once

// Construction of the directed cone spanners: Yao, Theta, their
// reverse-filtered variants Yao-Yao / Theta-Theta, and half-Theta_6.
// Reference O(n^2 k) scans with a fixed tie order, parallelizable per
// source (forward) and per target (reverse).

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "spanners/geometry.hpp"

namespace spanners {

enum class GraphKind { Yao, Theta, YaoYao, ThetaTheta, HalfTheta6 };

inline const char* kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::Yao: return "yao";
        case GraphKind::Theta: return "theta";
        case GraphKind::YaoYao: return "yao-yao";
        case GraphKind::ThetaTheta: return "theta-theta";
        case GraphKind::HalfTheta6: return "half-theta6";
    }
    return "?";
}

struct DirectedEdge {
    int source = -1;
    int target = -1;
    int cone = -1;        // cone of source containing target
    double length = 0.0;
    double projection = 0.0;  // onto the source-cone bisector

    friend bool operator==(const DirectedEdge& a, const DirectedEdge& b) {
        return a.source == b.source && a.target == b.target &&
               a.cone == b.cone;
    }
};

struct SpannerGraph {
    ConeScheme scheme{6};
    PointSet points;
    std::vector<DirectedEdge> edges;
    GraphKind kind = GraphKind::Theta;
};

namespace detail {

// Selection criterion per (source, cone): Yao minimizes length first,
// Theta minimizes projection first; both fall back to the other metric and
// then the target id.
inline bool better_forward(GraphKind kind, const DirectedEdge& e,
                           const DirectedEdge& best) {
    if (kind == GraphKind::Yao) {
        return std::tie(e.length, e.projection, e.target) <
               std::tie(best.length, best.projection, best.target);
    }
    return std::tie(e.projection, e.length, e.target) <
           std::tie(best.projection, best.length, best.target);
}

inline SpannerGraph build_forward(const PointSet& points,
                                  const ConeScheme& scheme, GraphKind kind,
                                  unsigned num_threads) {
    validate_point_set(points);
    SpannerGraph graph{scheme, points, {}, kind};
    const int n = static_cast<int>(points.size());
    const int k = scheme.k;
    std::vector<std::optional<DirectedEdge>> best(
        static_cast<std::size_t>(n) * k);

    auto scan_sources = [&](int lo, int hi) {
        for (int a = lo; a < hi; ++a) {
            for (int b = 0; b < n; ++b) {
                if (b == a) continue;
                DirectedEdge e;
                e.source = a;
                e.target = b;
                e.cone = cone_index(scheme, points[a], points[b]);
                e.length = norm(points[b].pos() - points[a].pos());
                e.projection = bisector_projection(scheme, points[a], points[b]);
                auto& slot = best[static_cast<std::size_t>(a) * k + e.cone];
                if (!slot || better_forward(kind, e, *slot)) slot = e;
            }
        }
    };

    if (num_threads <= 1 || n < 64) {
        scan_sources(0, n);
    } else {
        std::vector<std::future<void>> work;
        int chunk = (n + static_cast<int>(num_threads) - 1) /
                    static_cast<int>(num_threads);
        for (int lo = 0; lo < n; lo += chunk) {
            int hi = std::min(n, lo + chunk);
            work.push_back(std::async(std::launch::async, scan_sources, lo, hi));
        }
        for (auto& f : work) f.get();
    }

    for (const auto& slot : best) {
        if (slot) graph.edges.push_back(*slot);
    }
    return graph;
}

}  // namespace detail

inline SpannerGraph build_yao(const PointSet& points, const ConeScheme& scheme,
                              unsigned num_threads = 1) {
    return detail::build_forward(points, scheme, GraphKind::Yao, num_threads);
}

inline SpannerGraph build_theta(const PointSet& points,
                                const ConeScheme& scheme,
                                unsigned num_threads = 1) {
    return detail::build_forward(points, scheme, GraphKind::Theta, num_threads);
}

// Reverse filtering step: per target point and per cone at that target,
// keep one best incoming edge. "Best" for a Yao input is the shortest edge;
// for a Theta input it is the edge of minimum projection onto the bisector
// of the target's cone containing the source.
inline SpannerGraph reverse_filter(const SpannerGraph& graph) {
    if (graph.kind != GraphKind::Yao && graph.kind != GraphKind::Theta) {
        throw std::invalid_argument(
            "reverse_filter expects a Yao or Theta graph");
    }
    const ConeScheme& scheme = graph.scheme;
    const PointSet& points = graph.points;
    const int k = scheme.k;

    struct Candidate {
        std::size_t edge_index;
        double target_projection;
    };
    std::vector<std::optional<Candidate>> best(points.size() *
                                               static_cast<std::size_t>(k));
    auto better = [&](const Candidate& c, const Candidate& b) {
        const DirectedEdge& e = graph.edges[c.edge_index];
        const DirectedEdge& f = graph.edges[b.edge_index];
        if (graph.kind == GraphKind::Yao) {
            return std::tie(e.length, c.target_projection, e.source) <
                   std::tie(f.length, b.target_projection, f.source);
        }
        return std::tie(c.target_projection, e.length, e.source) <
               std::tie(b.target_projection, f.length, f.source);
    };

    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const DirectedEdge& e = graph.edges[i];
        int cone_at_target = cone_index(scheme, points[e.target],
                                        points[e.source]);
        Candidate c{i, bisector_projection(scheme, points[e.target],
                                           points[e.source])};
        auto& slot = best[static_cast<std::size_t>(e.target) * k +
                          cone_at_target];
        if (!slot || better(c, *slot)) slot = c;
    }

    std::vector<bool> keep(graph.edges.size(), false);
    for (const auto& slot : best) {
        if (slot) keep[slot->edge_index] = true;
    }

    SpannerGraph out{scheme, points, {},
                     graph.kind == GraphKind::Yao ? GraphKind::YaoYao
                                                  : GraphKind::ThetaTheta};
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        if (keep[i]) out.edges.push_back(graph.edges[i]);
    }
    return out;
}

enum class Parity { Even, Odd };

// Subgraph of Theta_6 keeping only edges whose source-cone index has the
// requested parity; planar by the triangular-distance Delaunay property.
inline SpannerGraph build_half_theta6(const PointSet& points, Parity parity,
                                      unsigned num_threads = 1) {
    SpannerGraph theta6 = build_theta(points, ConeScheme(6), num_threads);
    SpannerGraph out{theta6.scheme, points, {}, GraphKind::HalfTheta6};
    int want = parity == Parity::Even ? 0 : 1;
    for (const DirectedEdge& e : theta6.edges) {
        if (e.cone % 2 == want) out.edges.push_back(e);
    }
    return out;
}

}  // namespace spanners
