#pragma once

// Shortest-path machinery, spanning-ratio and per-edge stretch
// measurement, degree statistics, planarity counting, and the closed-form
// spanning-ratio bound table.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "spanners/build.hpp"

namespace spanners {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct PathWitness {
    std::vector<int> vertices;  // ordered point ids, first = a, last = b
    double length = 0.0;
};

struct StretchReport {
    double max_ratio = 0.0;
    std::pair<int, int> witness{-1, -1};
    long pair_count = 0;
    long disconnected_pairs = 0;
};

struct DegreeStats {
    int max_in = 0;
    int max_out = 0;
    int max_total = 0;
    std::vector<int> histogram;  // histogram[d] = number of nodes with total degree d
};

namespace detail {

inline std::vector<std::vector<std::pair<int, double>>> undirected_adjacency(
    const SpannerGraph& graph) {
    std::vector<std::vector<std::pair<int, double>>> adj(graph.points.size());
    for (const DirectedEdge& e : graph.edges) {
        adj[e.source].emplace_back(e.target, e.length);
        adj[e.target].emplace_back(e.source, e.length);
    }
    return adj;
}

// Dijkstra from `source` over the undirected graph. Equal-length paths are
// resolved by preferring the smaller predecessor id.
inline void dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adj,
                     int source, std::vector<double>& dist,
                     std::vector<int>& pred) {
    const std::size_t n = adj.size();
    dist.assign(n, kUnreachable);
    pred.assign(n, -1);
    dist[source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : adj[u]) {
            double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                pred[v] = u;
                queue.emplace(nd, v);
            } else if (nd == dist[v] && pred[v] > u) {
                pred[v] = u;
            }
        }
    }
}

inline void check_id(const SpannerGraph& graph, int id) {
    if (id < 0 || id >= static_cast<int>(graph.points.size())) {
        throw std::invalid_argument("unknown point id " + std::to_string(id));
    }
}

}  // namespace detail

inline std::optional<PathWitness> shortest_path(const SpannerGraph& graph,
                                                int a, int b) {
    detail::check_id(graph, a);
    detail::check_id(graph, b);
    if (a == b) throw std::invalid_argument("shortest_path: a == b");
    auto adj = detail::undirected_adjacency(graph);
    std::vector<double> dist;
    std::vector<int> pred;
    detail::dijkstra(adj, a, dist, pred);
    if (dist[b] == kUnreachable) return std::nullopt;
    PathWitness witness;
    witness.length = dist[b];
    for (int v = b; v != -1; v = pred[v]) witness.vertices.push_back(v);
    std::reverse(witness.vertices.begin(), witness.vertices.end());
    return witness;
}

// Distances from every source; rows are independent Dijkstra runs.
inline std::vector<std::vector<double>> all_pairs_dijkstra(
    const SpannerGraph& graph) {
    auto adj = detail::undirected_adjacency(graph);
    std::vector<std::vector<double>> result(graph.points.size());
    std::vector<int> pred;
    for (std::size_t s = 0; s < graph.points.size(); ++s) {
        detail::dijkstra(adj, static_cast<int>(s), result[s], pred);
    }
    return result;
}

// Floyd-Warshall oracle, independent of the Dijkstra path.
inline std::vector<std::vector<double>> all_pairs_oracle(
    const SpannerGraph& graph) {
    const std::size_t n = graph.points.size();
    if (n > 2000) {
        throw std::invalid_argument("all_pairs_oracle: n > 2000");
    }
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kUnreachable));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const DirectedEdge& e : graph.edges) {
        d[e.source][e.target] = std::min(d[e.source][e.target], e.length);
        d[e.target][e.source] = std::min(d[e.target][e.source], e.length);
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][m] == kUnreachable) continue;
            for (std::size_t j = 0; j < n; ++j) {
                double via = d[i][m] + d[m][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    }
    return d;
}

inline StretchReport spanning_ratio(const SpannerGraph& graph) {
    const std::size_t n = graph.points.size();
    if (n < 2) throw std::invalid_argument("spanning_ratio: need >= 2 points");
    auto dist = all_pairs_dijkstra(graph);
    StretchReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++report.pair_count;
            if (dist[i][j] == kUnreachable) {
                ++report.disconnected_pairs;
                continue;
            }
            double euclid = norm(graph.points[j].pos() - graph.points[i].pos());
            double ratio = dist[i][j] / euclid;
            if (ratio > report.max_ratio) {
                report.max_ratio = ratio;
                report.witness = {static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    return report;
}

// Max over edges ab of Theta_6 of |xi_host(a,b)| / |ab|.
inline double per_edge_stretch(const SpannerGraph& theta6,
                               const SpannerGraph& host) {
    if (theta6.kind != GraphKind::Theta || theta6.scheme.k != 6) {
        throw std::invalid_argument("per_edge_stretch: first graph must be Theta_6");
    }
    if (theta6.points.size() != host.points.size()) {
        throw std::invalid_argument("per_edge_stretch: mismatched point sets");
    }
    for (std::size_t i = 0; i < theta6.points.size(); ++i) {
        if (!(theta6.points[i].pos() == host.points[i].pos())) {
            throw std::invalid_argument("per_edge_stretch: mismatched point sets");
        }
    }
    auto adj = detail::undirected_adjacency(host);
    std::vector<double> dist;
    std::vector<int> pred;
    double worst = 0.0;
    int last_source = -1;
    for (const DirectedEdge& e : theta6.edges) {
        if (e.source != last_source) {
            detail::dijkstra(adj, e.source, dist, pred);
            last_source = e.source;
        }
        double ratio = dist[e.target] / e.length;
        worst = std::max(worst, ratio);
    }
    return worst;
}

inline DegreeStats degree_stats(const SpannerGraph& graph) {
    DegreeStats stats;
    std::vector<int> in(graph.points.size(), 0), out(graph.points.size(), 0);
    for (const DirectedEdge& e : graph.edges) {
        ++out[e.source];
        ++in[e.target];
    }
    int max_deg = 0;
    for (std::size_t i = 0; i < graph.points.size(); ++i) {
        stats.max_in = std::max(stats.max_in, in[i]);
        stats.max_out = std::max(stats.max_out, out[i]);
        max_deg = std::max(max_deg, in[i] + out[i]);
    }
    stats.max_total = max_deg;
    stats.histogram.assign(max_deg + 1, 0);
    for (std::size_t i = 0; i < graph.points.size(); ++i) {
        ++stats.histogram[in[i] + out[i]];
    }
    return stats;
}

namespace detail {

inline double orient(Vec2 a, Vec2 b, Vec2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Proper crossing: interiors intersect, segments strictly straddle each
// other. Shared endpoints and touchings do not count.
inline bool proper_crossing(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    double o1 = orient(a, b, c);
    double o2 = orient(a, b, d);
    double o3 = orient(c, d, a);
    double o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 &&
           o2 != 0 && o3 != 0 && o4 != 0;
}

}  // namespace detail

// Number of properly crossing edge pairs; quadratic scan, intended as an
// oracle at desk scale.
inline long crossing_count(const SpannerGraph& graph) {
    long crossings = 0;
    const auto& edges = graph.edges;
    const auto& pts = graph.points;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const DirectedEdge& e = edges[i];
            const DirectedEdge& f = edges[j];
            if (e.source == f.source || e.source == f.target ||
                e.target == f.source || e.target == f.target) {
                continue;
            }
            if (detail::proper_crossing(pts[e.source].pos(), pts[e.target].pos(),
                                        pts[f.source].pos(), pts[f.target].pos())) {
                ++crossings;
            }
        }
    }
    return crossings;
}

// ---------------------------------------------------------------------------
// Published spanning-ratio bounds per graph family and k.

enum class BoundKind { Finite, Infinite, Open, Unknown };

struct Bound {
    BoundKind kind = BoundKind::Unknown;
    double value = 0.0;

    static Bound finite(double v) { return {BoundKind::Finite, v}; }
    static Bound infinite() { return {BoundKind::Infinite, 0.0}; }
    static Bound open() { return {BoundKind::Open, 0.0}; }
    static Bound unknown() { return {BoundKind::Unknown, 0.0}; }
};

inline Bound theoretical_bound(GraphKind kind, int k) {
    if (k < 1) throw std::invalid_argument("theoretical_bound: k >= 1");
    double theta = kTwoPi / k;
    if (kind == GraphKind::HalfTheta6) {
        return k == 6 ? Bound::finite(2.0) : Bound::unknown();
    }
    if (k < 4) return Bound::infinite();
    switch (kind) {
        case GraphKind::Yao:
            if (k == 4) return Bound::finite(696.1);
            if (k == 5) return Bound::finite(3.74);
            if (k == 6) return Bound::finite(5.8);
            if (k % 2 == 1) {
                return Bound::finite(1.0 / (1.0 - 2.0 * std::sin(3.0 * theta / 8.0)));
            }
            return Bound::finite(1.0 / (1.0 - 2.0 * std::sin(theta / 2.0)));
        case GraphKind::Theta:
            if (k == 4) return Bound::finite(237.0);
            if (k == 5) return Bound::finite(9.96);
            if (k == 6) return Bound::finite(2.0);
            if (k % 4 == 2) return Bound::finite(1.0 + 2.0 * std::sin(theta / 2.0));
            if (k % 4 == 0) {
                return Bound::finite(1.0 + 2.0 * std::sin(theta / 2.0) /
                                               (std::cos(theta / 2.0) -
                                                std::sin(theta / 2.0)));
            }
            return Bound::finite(std::cos(theta / 4.0) /
                                 (std::cos(theta / 2.0) -
                                  std::sin(3.0 * theta / 4.0)));
        case GraphKind::YaoYao:
            if (k == 4 || k == 6) return Bound::infinite();
            if (k == 5) return Bound::open();
            if (k % 6 == 0) {
                int kp = k / 6;
                if (kp >= 8) return Bound::finite(4.75);
                if (kp >= 6) return Bound::finite(11.67);
            }
            return Bound::unknown();
        case GraphKind::ThetaTheta:
            if (k == 4 || k == 5) return Bound::infinite();
            if (k == 6) return Bound::open();
            if (k % 6 == 0) {
                int kp = k / 6;
                if (kp >= 8) return Bound::finite(4.64);
                if (kp == 7) return Bound::finite(5.63);
                if (kp == 6) return Bound::finite(7.82);
                if (kp == 5) return Bound::finite(16.76);
            }
            return Bound::unknown();
        default:
            return Bound::unknown();
    }
}

}  // namespace spanners
