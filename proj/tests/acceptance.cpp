// Acceptance gate: one criterion per invocation, selected by the single
// numeric argument. Prints exactly one pass/fail line per criterion and
// exits nonzero on failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "spanners/spanners.hpp"

using namespace spanners;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::vector<PointSet> uniform_instances() {
    std::vector<PointSet> sets;
    for (unsigned seed = 1; seed <= 20; ++seed) {
        sets.push_back(generate({Distribution::Uniform, 100, seed, 100.0}));
    }
    return sets;
}

// criterion 1: Theta_6 spanning ratio at most 2
Outcome criterion1() {
    Outcome out;
    for (const PointSet& pts : uniform_instances()) {
        StretchReport rep = spanning_ratio(build_theta(pts, ConeScheme(6)));
        out.require(rep.max_ratio <= 2.0 + 1e-9,
                    "ratio " + std::to_string(rep.max_ratio) + " > 2");
    }
    return out;
}

// criterion 2: Theta-Theta spanning ratios per k
Outcome criterion2() {
    Outcome out;
    const int ks[] = {30, 36, 42, 48};
    const double caps[] = {16.76, 7.82, 5.63, 4.64};
    for (const PointSet& pts : uniform_instances()) {
        for (int i = 0; i < 4; ++i) {
            SpannerGraph ttk =
                reverse_filter(build_theta(pts, ConeScheme(ks[i]), 4));
            StretchReport rep = spanning_ratio(ttk);
            out.require(rep.max_ratio <= caps[i] + 1e-6,
                        "k=" + std::to_string(ks[i]) + " ratio " +
                            std::to_string(rep.max_ratio));
        }
    }
    return out;
}

// criterion 3: per-edge stretch and the recursive path on every edge
Outcome criterion3() {
    Outcome out;
    const int ks[] = {30, 36, 42, 48};
    const double caps[] = {8.38, 3.91, 2.811, 2.32};
    for (const PointSet& pts : uniform_instances()) {
        SpannerGraph theta6 = build_theta(pts, ConeScheme(6));
        for (int i = 0; i < 4; ++i) {
            SpannerGraph theta_k = build_theta(pts, ConeScheme(ks[i]), 4);
            SpannerGraph ttk = reverse_filter(theta_k);
            double stretch = per_edge_stretch(theta6, ttk);
            out.require(stretch <= caps[i] + 1e-9,
                        "k=" + std::to_string(ks[i]) + " stretch " +
                            std::to_string(stretch));
            for (const DirectedEdge& e : theta6.edges) {
                try {
                    recursive_theta_path(e.source, e.target, theta6, theta_k,
                                         ttk);
                } catch (const std::exception& err) {
                    out.require(false, std::string("recursion: ") + err.what());
                    return out;
                }
            }
        }
    }
    return out;
}

// criterion 4: stretch-constant tables and intermediates
Outcome criterion4() {
    Outcome out;
    const double thetas[] = {kPi / 15.0, kPi / 18.0, kPi / 21.0, kPi / 24.0};
    const double expected[4][4] = {
        {8.3760, 6.2720, 4.9454, 6.1397},
        {3.9058, 3.3377, 2.9697, 3.3157},
        {2.8109, 2.5014, 2.3117, 2.4936},
        {2.3159, 2.1057, 1.9829, 2.1020},
    };
    const StretchCase cases[] = {
        StretchCase::C62LowBeta, StretchCase::C62HighBeta,
        StretchCase::C66LowAlpha, StretchCase::C66HighAlphaOrC65};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            StretchConstantReport rep = stretch_constant(thetas[r], cases[c]);
            double rel = std::abs(rep.t - expected[r][c]) / expected[r][c];
            out.require(rep.finite && rel < 0.005,
                        std::string(stretch_case_name(cases[c])) + " theta#" +
                            std::to_string(r) + " t=" + std::to_string(rep.t));
        }
    }
    StretchConstantReport x = stretch_constant(kPi / 15.0, StretchCase::C62LowBeta);
    out.require(x.bound_on_detour < 0.88 + 1e-3, "max X");
    StretchConstantReport y = stretch_constant(kPi / 15.0, StretchCase::C62HighBeta);
    out.require(y.bound_on_detour < 0.8397 + 1e-3, "max Y");
    StretchConstantReport z = stretch_constant(kPi / 15.0, StretchCase::C66LowAlpha);
    out.require(z.bound_on_detour >= 0.2022 - 1e-3, "min Z");
    out.require(8.0 * std::sin(kPi / 30.0) <= 0.8363 + 1e-3, "8 sin(pi/30)");
    return out;
}

// criterion 5: lemma harness quotas with zero failures, all four thetas
Outcome criterion5() {
    Outcome out;
    for (int k : {30, 36, 42, 48}) {
        HarnessOptions opt;
        opt.k = k;
        opt.target_per_lemma = 10000;
        HarnessReport rep = run_lemma_harness(opt);
        for (const auto& [lemma, tally] : rep.per_lemma) {
            out.require(tally.checked >= 10000,
                        "k=" + std::to_string(k) + " lemma " +
                            std::to_string(lemma) + " quota " +
                            std::to_string(tally.checked));
            out.require(tally.failures == 0,
                        "k=" + std::to_string(k) + " lemma " +
                            std::to_string(lemma) + " failures " +
                            std::to_string(tally.failures));
        }
    }
    return out;
}

// criterion 6: degree bounds after the reverse filter
Outcome criterion6() {
    Outcome out;
    auto check_degrees = [&](const PointSet& pts, int k) {
        ConeScheme scheme(k);
        for (SpannerGraph g : {reverse_filter(build_yao(pts, scheme)),
                               reverse_filter(build_theta(pts, scheme))}) {
            DegreeStats stats = degree_stats(g);
            out.require(stats.max_total <= 2 * k,
                        kind_name(g.kind) + std::string(" k=") +
                            std::to_string(k) + " degree " +
                            std::to_string(stats.max_total));
        }
    };
    PointSet star = generate({Distribution::CircleStar, 100, 1, 100.0});
    for (int k : {6, 30}) check_degrees(star, k);
    for (const PointSet& pts : uniform_instances()) {
        for (int k : {6, 30}) check_degrees(pts, k);
    }
    // the star center receives an edge from every rim point in Theta_6
    SpannerGraph theta6 = build_theta(star, ConeScheme(6));
    int center = static_cast<int>(star.size()) - 1;
    long in_deg = 0;
    for (const DirectedEdge& e : theta6.edges) {
        if (e.target == center) ++in_deg;
    }
    out.require(in_deg == static_cast<long>(star.size()) - 1,
                "center in-degree " + std::to_string(in_deg));
    return out;
}

// criterion 7: oracle equivalence for paths and builds
Outcome criterion7() {
    Outcome out;
    for (unsigned seed = 1; seed <= 5; ++seed) {
        PointSet pts = generate({Distribution::Uniform, 60, seed, 100.0});
        SpannerGraph g = build_theta(pts, ConeScheme(6));
        auto dj = all_pairs_dijkstra(g);
        auto fw = all_pairs_oracle(g);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                double a = dj[i][j], b = fw[i][j];
                bool ok = (a == b) ||
                          std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
                out.require(ok, "distance mismatch");
                if (!ok) return out;
            }
        }
    }
    // brute-force forward scans, edge for edge
    for (unsigned seed = 1; seed <= 3; ++seed) {
        PointSet pts = generate({Distribution::Uniform, 200, seed, 100.0});
        for (int k : {6, 30}) {
            ConeScheme scheme(k);
            for (GraphKind kind : {GraphKind::Yao, GraphKind::Theta}) {
                SpannerGraph fast = kind == GraphKind::Yao
                                        ? build_yao(pts, scheme)
                                        : build_theta(pts, scheme);
                // independent O(n^2 k) scan
                std::vector<DirectedEdge> slow;
                for (const Point& s : pts) {
                    for (int cone = 0; cone < k; ++cone) {
                        int best = -1;
                        double best_len = 0, best_proj = 0;
                        for (const Point& t : pts) {
                            if (t.id == s.id) continue;
                            if (cone_index(scheme, s, t) != cone) continue;
                            double len = norm(t.pos() - s.pos());
                            double proj = bisector_projection(scheme, s, t);
                            double p1 = kind == GraphKind::Yao ? len : proj;
                            double p2 = kind == GraphKind::Yao ? proj : len;
                            double b1 = kind == GraphKind::Yao ? best_len
                                                               : best_proj;
                            double b2 = kind == GraphKind::Yao ? best_proj
                                                               : best_len;
                            if (best < 0 || p1 < b1 ||
                                (p1 == b1 && (p2 < b2 ||
                                              (p2 == b2 && t.id < best)))) {
                                best = t.id;
                                best_len = len;
                                best_proj = proj;
                            }
                        }
                        if (best >= 0) {
                            slow.push_back({s.id, best, cone, best_len,
                                            best_proj});
                        }
                    }
                }
                bool same = slow.size() == fast.edges.size();
                for (std::size_t i = 0; same && i < slow.size(); ++i) {
                    same = slow[i].source == fast.edges[i].source &&
                           slow[i].target == fast.edges[i].target &&
                           slow[i].cone == fast.edges[i].cone;
                }
                out.require(same, std::string(kind_name(kind)) + " k=" +
                                      std::to_string(k) + " scan mismatch");
            }
        }
    }
    return out;
}

// criterion 8: half-Theta_6 is plane
Outcome criterion8() {
    Outcome out;
    for (const PointSet& pts : uniform_instances()) {
        for (Parity parity : {Parity::Even, Parity::Odd}) {
            SpannerGraph half = build_half_theta6(pts, parity);
            long crossings = crossing_count(half);
            out.require(crossings == 0,
                        "crossings " + std::to_string(crossings));
        }
    }
    return out;
}

// criterion 9: property suite
Outcome criterion9() {
    Outcome out;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);

    // cone partition and rotation invariants
    for (int k : {6, 30, 48}) {
        ConeScheme scheme(k);
        for (int trial = 0; trial < 500; ++trial) {
            Vec2 apex{coord(rng), coord(rng)};
            Vec2 p{coord(rng), coord(rng)};
            if (p == apex) continue;
            int cone = cone_index(scheme, apex, p);
            out.require(cone >= 0 && cone < k, "cone out of range");
            double phi = direction_angle(apex, p);
            double lo = cone * scheme.theta;
            // avoid boundary roundoff in the containment check
            if (std::abs(phi - lo) > 1e-9 &&
                std::abs(phi - lo - scheme.theta) > 1e-9) {
                out.require(phi >= lo && phi < lo + scheme.theta,
                            "containment");
            }
            // rotating the offset by theta advances the cone index by one
            double c = std::cos(scheme.theta), s = std::sin(scheme.theta);
            Vec2 d = p - apex;
            Vec2 q{apex.x + c * d.x - s * d.y, apex.y + s * d.x + c * d.y};
            if (std::abs(phi - lo) > 1e-9 &&
                std::abs(phi - lo - scheme.theta) > 1e-9) {
                out.require(cone_index(scheme, apex, q) == (cone + 1) % k,
                            "rotation");
            }
        }
    }

    // T is strictly decreasing on [0, pi/3]
    double prev = t_function(0.0);
    for (int i = 1; i <= 10000; ++i) {
        double alpha = (kPi / 3.0) * i / 10000.0;
        double cur = t_function(alpha);
        out.require(cur < prev, "T monotonicity");
        prev = cur;
    }

    // serialization round-trips
    {
        PointSet pts = generate({Distribution::Clustered, 60, 33, 100.0});
        auto dir = std::filesystem::temp_directory_path();
        auto csv = dir / "acceptance_points.csv";
        write_points_csv(pts, csv.string());
        PointSet back = read_points_csv(csv.string());
        bool same = back.size() == pts.size();
        for (std::size_t i = 0; same && i < pts.size(); ++i) {
            same = back[i].x == pts[i].x && back[i].y == pts[i].y;
        }
        out.require(same, "csv round-trip");
        std::filesystem::remove(csv);

        SpannerGraph g = reverse_filter(build_theta(pts, ConeScheme(30)));
        auto js = dir / "acceptance_graph.json";
        write_graph_json(g, js.string());
        SpannerGraph gb = read_graph_json(js.string());
        same = gb.edges.size() == g.edges.size() && gb.kind == g.kind;
        for (std::size_t i = 0; same && i < g.edges.size(); ++i) {
            same = gb.edges[i].source == g.edges[i].source &&
                   gb.edges[i].target == g.edges[i].target &&
                   gb.edges[i].length == g.edges[i].length;
        }
        out.require(same, "json round-trip");
        std::filesystem::remove(js);
    }

    // builds are identical under 1, 4 and 8 threads
    {
        PointSet pts = generate({Distribution::Uniform, 150, 77, 100.0});
        ConeScheme scheme(30);
        SpannerGraph one = build_theta(pts, scheme, 1);
        for (int threads : {4, 8}) {
            SpannerGraph many = build_theta(pts, scheme, threads);
            bool same = many.edges.size() == one.edges.size();
            for (std::size_t i = 0; same && i < one.edges.size(); ++i) {
                same = many.edges[i].source == one.edges[i].source &&
                       many.edges[i].target == one.edges[i].target;
            }
            out.require(same,
                        "thread determinism x" + std::to_string(threads));
        }
        SpannerGraph yao_one = build_yao(pts, scheme, 1);
        SpannerGraph yao_many = build_yao(pts, scheme, 8);
        bool same = yao_many.edges.size() == yao_one.edges.size();
        for (std::size_t i = 0; same && i < yao_one.edges.size(); ++i) {
            same = yao_many.edges[i].target == yao_one.edges[i].target;
        }
        out.require(same, "yao thread determinism");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }
    int criterion = std::atoi(argv[1]);
    Outcome (*const table[])() = {criterion1, criterion2, criterion3,
                                  criterion4, criterion5, criterion6,
                                  criterion7, criterion8, criterion9};
    if (criterion < 1 || criterion > 9) {
        std::fprintf(stderr, "criterion must be 1..9\n");
        return 2;
    }
    auto start = Clock::now();
    Outcome out = table[criterion - 1]();
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %d: %s (%.1fs)%s%s\n", criterion,
                out.pass ? "PASS" : "FAIL", secs, out.detail.empty() ? "" : " ",
                out.detail.c_str());
    return out.pass ? 0 : 1;
}
