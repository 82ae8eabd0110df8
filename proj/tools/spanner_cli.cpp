// Command-line surface for the spanner toolkit: generation, construction,
// stretch analysis, lemma/table verification, bounds lookup, and export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "spanners/spanners.hpp"

namespace {

using namespace spanners;

double parse_theta(const std::string& text) {
    if (text.rfind("pi/", 0) == 0) {
        double denom = std::stod(text.substr(3));
        if (denom <= 0) throw std::runtime_error("bad theta '" + text + "'");
        return kPi / denom;
    }
    return std::stod(text);
}

GraphKind parse_kind(const std::string& name) {
    if (name == "yao") return GraphKind::Yao;
    if (name == "theta") return GraphKind::Theta;
    if (name == "yao-yao") return GraphKind::YaoYao;
    if (name == "theta-theta") return GraphKind::ThetaTheta;
    if (name == "half-theta6") return GraphKind::HalfTheta6;
    throw std::runtime_error("unknown kind '" + name + "'");
}

Distribution parse_dist(const std::string& name) {
    if (name == "uniform") return Distribution::Uniform;
    if (name == "grid") return Distribution::Grid;
    if (name == "circle-star") return Distribution::CircleStar;
    if (name == "clustered") return Distribution::Clustered;
    throw std::runtime_error("unknown distribution '" + name + "'");
}

// Paper-reported stretch constants (Tables 2 and 3), indexed by
// theta in {pi/15, pi/18, pi/21, pi/24} and the four proof cases.
struct TableEntry {
    double theta;
    StretchCase which;
    double expected;
};

const std::vector<TableEntry>& table_entries() {
    static const std::vector<TableEntry> entries = {
        {kPi / 15, StretchCase::C62LowBeta, 8.3760},
        {kPi / 15, StretchCase::C62HighBeta, 6.2720},
        {kPi / 18, StretchCase::C62LowBeta, 3.9058},
        {kPi / 18, StretchCase::C62HighBeta, 3.3377},
        {kPi / 21, StretchCase::C62LowBeta, 2.8109},
        {kPi / 21, StretchCase::C62HighBeta, 2.5014},
        {kPi / 24, StretchCase::C62LowBeta, 2.3159},
        {kPi / 24, StretchCase::C62HighBeta, 2.1057},
        {kPi / 15, StretchCase::C66LowAlpha, 4.9454},
        {kPi / 15, StretchCase::C66HighAlphaOrC65, 6.1397},
        {kPi / 18, StretchCase::C66LowAlpha, 2.9697},
        {kPi / 18, StretchCase::C66HighAlphaOrC65, 3.3157},
        {kPi / 21, StretchCase::C66LowAlpha, 2.3117},
        {kPi / 21, StretchCase::C66HighAlphaOrC65, 2.4936},
        {kPi / 24, StretchCase::C66LowAlpha, 1.9829},
        {kPi / 24, StretchCase::C66HighAlphaOrC65, 2.1020},
    };
    return entries;
}

int run_tables() {
    int mismatches = 0;
    std::cout << "theta      case                     t          expected   rel_err\n";
    for (const TableEntry& entry : table_entries()) {
        StretchConstantReport report = stretch_constant(entry.theta, entry.which);
        double rel = std::abs(report.t - entry.expected) / entry.expected;
        bool ok = rel <= 0.005;
        if (!ok) ++mismatches;
        std::cout << std::left << std::setw(10)
                  << ("pi/" + std::to_string(static_cast<int>(
                                  std::lround(kPi / entry.theta))))
                  << ' ' << std::setw(24) << stretch_case_name(entry.which)
                  << ' ' << std::setw(10) << std::setprecision(6) << report.t
                  << ' ' << std::setw(10) << entry.expected << ' '
                  << std::scientific << std::setprecision(2) << rel
                  << std::defaultfloat << (ok ? "" : "  MISMATCH") << '\n';
    }
    std::cout << (16 - mismatches) << "/16 entries matched within 0.5%\n";
    return mismatches == 0 ? 0 : 1;
}

int run_verify(const std::string& lemma_arg, const std::string& theta_arg,
               long trials, std::uint64_t seed, const std::string& report_path) {
    HarnessOptions options;
    double theta = parse_theta(theta_arg);
    options.k = static_cast<int>(std::lround(kTwoPi / theta));
    if (options.k % 6 != 0) {
        throw std::runtime_error("theta must correspond to k = 6k'");
    }
    options.target_per_lemma = trials;
    options.seed = seed;
    if (lemma_arg != "all") {
        int lemma = std::stoi(lemma_arg);
        if (lemma < 2 || lemma > 6) throw std::runtime_error("lemma must be 2..6");
        options.lemmas = {lemma};
    }

    HarnessReport report = run_lemma_harness(options);
    long failures = 0;
    std::ostringstream csv;
    csv << "check,theta,case,trials,failures,worst_slack\n";
    for (const auto& [lemma, tally] : report.per_lemma) {
        failures += tally.failures;
        std::cout << "lemma " << lemma << " [" << lemma_case_label(lemma)
                  << "]: " << tally.checked << " checked, " << tally.failures
                  << " failures, " << tally.skipped << " skipped, worst slack "
                  << std::setprecision(3) << tally.worst_slack << '\n';
        csv << "lemma" << lemma << ',' << std::setprecision(17) << report.theta
            << ',' << lemma_case_label(lemma) << ',' << tally.checked << ','
            << tally.failures << ',' << std::setprecision(6)
            << tally.worst_slack << '\n';
    }
    std::cout << report.configs_extracted << " configurations extracted ("
              << report.degenerate_configs << " degenerate)\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot open " + report_path);
        out << csv.str();
    }
    return failures == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Cone-based geometric spanner construction and verification"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point set");
    std::string gen_dist = "uniform", gen_out;
    int gen_n = 100;
    std::uint64_t gen_seed = 1;
    double gen_bbox = 100.0;
    gen->add_option("--dist", gen_dist, "uniform|grid|circle-star|clustered");
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--bbox", gen_bbox, "bounding-box extent");
    gen->add_option("--out", gen_out, "output CSV path")->required();

    // build
    auto* build = app.add_subcommand("build", "construct a spanner graph");
    std::string build_kind = "theta", build_in, build_out, build_parity = "even";
    int build_k = 6;
    unsigned build_threads = 1;
    build->add_option("--kind", build_kind,
                      "yao|theta|yao-yao|theta-theta|half-theta6");
    build->add_option("--k", build_k, "cone count");
    build->add_option("--parity", build_parity, "even|odd (half-theta6)");
    build->add_option("--threads", build_threads, "worker threads");
    build->add_option("--in", build_in, "input points CSV")->required();
    build->add_option("--out", build_out, "output graph JSON")->required();

    // stretch
    auto* stretch = app.add_subcommand("stretch", "measure spanning ratio");
    std::string stretch_graph, stretch_report;
    bool against_theta6 = false;
    stretch->add_option("--graph", stretch_graph, "graph JSON")->required();
    stretch->add_flag("--against-theta6", against_theta6,
                      "also report per-edge stretch vs Theta_6");
    stretch->add_option("--report", stretch_report, "per-pair CSV report");

    // verify
    auto* verify = app.add_subcommand("verify", "run lemma/table verification");
    std::string verify_lemma = "all", verify_theta = "pi/15", verify_report;
    long verify_trials = 10000;
    std::uint64_t verify_seed = 1;
    bool verify_tables = false;
    verify->add_option("--lemma", verify_lemma, "2|3|4|5|6|all");
    verify->add_option("--theta", verify_theta, "pi/15|pi/18|pi/21|pi/24 or radians");
    verify->add_option("--trials", verify_trials, "target configurations per lemma");
    verify->add_option("--seed", verify_seed, "rng seed");
    verify->add_option("--report", verify_report, "CSV report path");
    verify->add_flag("--tables", verify_tables,
                     "reproduce the stretch-constant tables");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "print the published bound");
    std::string bounds_kind = "theta";
    int bounds_k = 6;
    bounds->add_option("--kind", bounds_kind)->required();
    bounds->add_option("--k", bounds_k)->required();

    // export
    auto* exp = app.add_subcommand("export", "export a graph to dot or svg");
    std::string exp_graph, exp_format = "dot", exp_out;
    int exp_cone_fan = -1;
    exp->add_option("--graph", exp_graph, "graph JSON")->required();
    exp->add_option("--format", exp_format, "dot|svg");
    exp->add_option("--out", exp_out, "output path")->required();
    exp->add_option("--cone-fan", exp_cone_fan, "draw cone rays at vertex id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        PointSetSpec spec{parse_dist(gen_dist), gen_n, gen_seed, gen_bbox};
        write_points_csv(generate(spec), gen_out);
        return 0;
    }

    if (build->parsed()) {
        PointSet points = read_points(build_in, PointFormat::Csv);
        GraphKind kind = parse_kind(build_kind);
        SpannerGraph graph{ConeScheme(6), {}, {}, kind};
        switch (kind) {
            case GraphKind::Yao:
                graph = build_yao(points, ConeScheme(build_k), build_threads);
                break;
            case GraphKind::Theta:
                graph = build_theta(points, ConeScheme(build_k), build_threads);
                break;
            case GraphKind::YaoYao:
                graph = reverse_filter(
                    build_yao(points, ConeScheme(build_k), build_threads));
                break;
            case GraphKind::ThetaTheta:
                graph = reverse_filter(
                    build_theta(points, ConeScheme(build_k), build_threads));
                break;
            case GraphKind::HalfTheta6:
                if (build_k != 6) {
                    throw std::runtime_error("half-theta6 requires --k 6");
                }
                graph = build_half_theta6(points,
                                          build_parity == "odd" ? Parity::Odd
                                                                : Parity::Even,
                                          build_threads);
                break;
        }
        write_graph_json(graph, build_out);
        DegreeStats stats = degree_stats(graph);
        std::cout << kind_name(graph.kind) << " k=" << graph.scheme.k << ": "
                  << graph.points.size() << " points, " << graph.edges.size()
                  << " edges, max in-degree " << stats.max_in
                  << ", max out-degree " << stats.max_out << '\n';
        return 0;
    }

    if (stretch->parsed()) {
        SpannerGraph graph = read_graph_json(stretch_graph);
        StretchReport report = spanning_ratio(graph);
        std::cout << "spanning ratio " << std::setprecision(10)
                  << report.max_ratio << " (witness " << report.witness.first
                  << "," << report.witness.second << "; " << report.pair_count
                  << " pairs";
        if (report.disconnected_pairs > 0) {
            std::cout << ", " << report.disconnected_pairs << " disconnected";
        }
        std::cout << ")\n";
        if (against_theta6) {
            SpannerGraph theta6 = build_theta(graph.points, ConeScheme(6));
            std::cout << "per-edge stretch vs theta6: "
                      << per_edge_stretch(theta6, graph) << '\n';
        }
        if (!stretch_report.empty()) {
            auto dist = all_pairs_dijkstra(graph);
            std::ofstream out(stretch_report);
            if (!out) throw std::runtime_error("cannot open " + stretch_report);
            out << "a,b,euclidean,graph_distance,ratio\n";
            out.precision(17);
            for (std::size_t i = 0; i < graph.points.size(); ++i) {
                for (std::size_t j = i + 1; j < graph.points.size(); ++j) {
                    double euclid = norm(graph.points[j].pos() -
                                         graph.points[i].pos());
                    out << i << ',' << j << ',' << euclid << ',' << dist[i][j]
                        << ',' << dist[i][j] / euclid << '\n';
                }
            }
        }
        return 0;
    }

    if (verify->parsed()) {
        if (verify_tables) return run_tables();
        return run_verify(verify_lemma, verify_theta, verify_trials,
                          verify_seed, verify_report);
    }

    if (bounds->parsed()) {
        Bound bound = theoretical_bound(parse_kind(bounds_kind), bounds_k);
        switch (bound.kind) {
            case BoundKind::Finite:
                std::cout << std::setprecision(10) << bound.value << '\n';
                break;
            case BoundKind::Infinite: std::cout << "infinite\n"; break;
            case BoundKind::Open: std::cout << "open\n"; break;
            case BoundKind::Unknown: std::cout << "unknown\n"; break;
        }
        return 0;
    }

    if (exp->parsed()) {
        SpannerGraph graph = read_graph_json(exp_graph);
        if (exp_format == "dot") {
            write_graph_dot(graph, exp_out);
        } else if (exp_format == "svg") {
            SvgOptions options;
            options.cone_fan_vertex = exp_cone_fan;
            export_svg(graph, exp_out, options);
        } else {
            throw std::runtime_error("unknown format '" + exp_format + "'");
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
