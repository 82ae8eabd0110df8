#pragma once

// Lemma verification harness: draws canonical configurations from random
// point sets plus a boundary-targeted four-point constructor, runs every
// applicable lemma checker, and aggregates pass/fail/skip counts.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spanners/generate.hpp"
#include "spanners/lemmas.hpp"

namespace spanners {

struct LemmaTally {
    long checked = 0;
    long failures = 0;
    long skipped = 0;
    double worst_slack = std::numeric_limits<double>::infinity();

    void add(const CheckOutcome& outcome) {
        if (outcome.result == CheckResult::Skip) {
            ++skipped;
            return;
        }
        ++checked;
        if (outcome.result == CheckResult::Fail) ++failures;
        worst_slack = std::min(worst_slack, outcome.slack);
    }
};

struct HarnessReport {
    double theta = 0.0;
    int k = 0;
    long configs_extracted = 0;
    long degenerate_configs = 0;
    std::map<int, LemmaTally> per_lemma;  // keys 2..6
};

inline const char* lemma_case_label(int lemma) {
    switch (lemma) {
        case 2: return "trapezoid";
        case 3: return "all";
        case 4: return "C62";
        case 5: return "C66_low_alpha";
        case 6: return "C65_or_C66_high_alpha";
    }
    return "?";
}

namespace detail {

// Four-point constructor aimed at the boundary regions of the lemma
// domains: a at the origin, b on the unit circle inside a chosen fine
// cone, b' with a smaller fine-cone projection, a' placed inside the cone
// of b' containing a with a projection just under a's so it wins the
// reverse filter.
// case_cone selects the sixth-cone at a that a' should land in: 1 for C62,
// 4 for C65, 5 for C66 (high_alpha then asks for alpha above pi/6).
inline PointSet targeted_quadruple(std::mt19937_64& rng, const ConeScheme& fine,
                                   int case_cone, bool high_alpha) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double theta = fine.theta;
    int cone_cap = static_cast<int>((kPi / 6.0) / theta - 0.5);  // bisector <= pi/6
    int ik = std::uniform_int_distribution<int>(0, cone_cap)(rng);

    // b near the lower cone boundary, b' near the upper one. The radius of
    // b' is squeezed between c1 (below which a's sixth-cone edge would go
    // to b' instead of b) and c2 (above which a's fine-cone edge would go
    // to b instead of b').
    double u1 = 0.06 + 0.19 * unit(rng);
    double del = 0.01 + (u1 - 0.04) * unit(rng);
    double u2 = 1.0 - u1 + del;
    double phi_b = (ik + u1) * theta;
    double phi_bp = (ik + u2) * theta;
    double bis = (ik + 0.5) * theta;
    double c1 = std::cos(phi_b - kPi / 6.0) / std::cos(phi_bp - kPi / 6.0);
    double c2 = std::cos(phi_b - bis) / std::cos(phi_bp - bis);
    if (!(c1 < c2)) return {};
    double r_bp = c1 + (0.2 + 0.6 * unit(rng)) * (c2 - c1);
    Vec2 a{0.0, 0.0};
    Vec2 b{std::cos(phi_b), std::sin(phi_b)};
    Vec2 bp{r_bp * std::cos(phi_bp), r_bp * std::sin(phi_bp)};

    // a' is a small nudge of a in a direction chosen for the wanted case,
    // restricted so its projection at b' stays under a's.
    double lo = case_cone * kPi / 3.0, hi = lo + kPi / 3.0;
    if (case_cone == 5) {
        if (high_alpha)
            hi = 2.0 * kPi - kPi / 6.0 - 1e-3;  // alpha > pi/6
        else
            lo = 2.0 * kPi - kPi / 6.0 + 1e-3;  // alpha <= pi/6
    }
    double chi = lo + 1e-3 + (hi - lo - 2e-3) * unit(rng);
    int j = cone_index(fine, bp, a);
    double bis_j = (j + 0.5) * theta;
    if (std::cos(chi - bis_j) > -0.05) return {};  // nudge would raise the projection
    double rho = (0.002 + 0.018 * unit(rng)) * norm(bp - a);
    Vec2 ap = a + Vec2{rho * std::cos(chi), rho * std::sin(chi)};
    if (cone_index(fine, bp, ap) != j) return {};

    PointSet points;
    points.push_back({0, a.x, a.y});
    points.push_back({1, b.x, b.y});
    points.push_back({2, bp.x, bp.y});
    points.push_back({3, ap.x, ap.y});
    std::set<std::pair<double, double>> seen;
    for (const Point& p : points) {
        if (!seen.insert({p.x, p.y}).second) return {};  // collision, resample
    }
    return points;
}

}  // namespace detail

struct HarnessOptions {
    int k = 30;
    long target_per_lemma = 10000;
    std::uint64_t seed = 1;
    std::set<int> lemmas = {2, 3, 4, 5, 6};
    int random_set_size = 30;
    int random_sets = 40;
    long attempt_cap = 4000000;
};

inline HarnessReport run_lemma_harness(const HarnessOptions& options) {
    ConeScheme fine(options.k);
    HarnessReport report;
    report.theta = fine.theta;
    report.k = options.k;
    for (int lemma : options.lemmas) report.per_lemma[lemma];
    std::mt19937_64 rng(options.seed);

    auto check_configs = [&](const SpannerGraph& theta6,
                             const ExtractResult& extracted) {
        report.configs_extracted +=
            static_cast<long>(extracted.configs.size());
        report.degenerate_configs += extracted.degenerate;
        for (const CanonicalConfig& cfg : extracted.configs) {
            if (options.lemmas.count(3)) {
                report.per_lemma[3].add(check_lemma_abba(cfg));
            }
            if (options.lemmas.count(4)) {
                report.per_lemma[4].add(check_lemma_paa1(cfg, theta6));
            }
            if (options.lemmas.count(5)) {
                report.per_lemma[5].add(check_lemma_paasecond(cfg, theta6));
            }
            if (options.lemmas.count(6)) {
                report.per_lemma[6].add(check_lemma_paa5(cfg, theta6));
            }
        }
    };

    // Lemma 2 runs over point pairs of random sets, independent of k.
    if (options.lemmas.count(2)) {
        std::uint64_t seed = options.seed;
        while (report.per_lemma[2].checked < options.target_per_lemma) {
            PointSetSpec spec{Distribution::Uniform, 40, ++seed, 100.0};
            PointSet points = generate(spec);
            SpannerGraph theta6 = build_theta(points, ConeScheme(6));
            for (std::size_t a = 0; a < points.size(); ++a) {
                for (std::size_t b = 0; b < points.size(); ++b) {
                    if (a == b) continue;
                    report.per_lemma[2].add(check_lemma_thetapath(
                        theta6, static_cast<int>(a), static_cast<int>(b)));
                }
            }
            if (seed > options.seed + 4000) break;  // safety valve
        }
    }

    // Configurations from random sets.
    for (int s = 0; s < options.random_sets; ++s) {
        PointSetSpec spec{Distribution::Clustered,
                          options.random_set_size,
                          options.seed + 1000 + static_cast<std::uint64_t>(s),
                          100.0};
        PointSet points = generate(spec);
        SpannerGraph theta6 = build_theta(points, ConeScheme(6));
        SpannerGraph theta_k = build_theta(points, fine);
        SpannerGraph ttk = reverse_filter(theta_k);
        check_configs(theta6, extract_configs(theta6, theta_k, ttk));
    }

    // Boundary-targeted quadruples until every requested lemma quota is
    // met (or the attempt cap is reached).
    auto quota_open = [&]() {
        for (int lemma : {3, 4, 5, 6}) {
            if (options.lemmas.count(lemma) &&
                report.per_lemma[lemma].checked < options.target_per_lemma) {
                return true;
            }
        }
        return false;
    };
    auto lemma_open = [&](int lemma) {
        return options.lemmas.count(lemma) &&
               report.per_lemma[lemma].checked < options.target_per_lemma;
    };
    long attempts = 0;
    while (quota_open() && attempts < options.attempt_cap) {
        ++attempts;
        int case_cone = 1;
        bool high_alpha = false;
        if (lemma_open(4)) {
            case_cone = 1;
        } else if (lemma_open(5)) {
            case_cone = 5;
        } else if (lemma_open(6)) {
            case_cone = (attempts % 2 == 0) ? 4 : 5;
            high_alpha = case_cone == 5;
        } else {  // only lemma 3 left, spread over all cases
            int pick = static_cast<int>(attempts % 4);
            case_cone = pick == 0 ? 1 : pick == 1 ? 4 : 5;
            high_alpha = pick == 3;
        }
        PointSet points =
            detail::targeted_quadruple(rng, fine, case_cone, high_alpha);
        if (points.empty()) continue;
        SpannerGraph theta6 = build_theta(points, ConeScheme(6));
        SpannerGraph theta_k = build_theta(points, fine);
        SpannerGraph ttk = reverse_filter(theta_k);
        check_configs(theta6, extract_configs(theta6, theta_k, ttk));
    }
    return report;
}

}  // namespace spanners
