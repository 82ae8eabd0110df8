#pragma once

// Deterministic point-set generators.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "spanners/geometry.hpp"

namespace spanners {

enum class Distribution { Uniform, Grid, CircleStar, Clustered };

struct PointSetSpec {
    Distribution distribution = Distribution::Uniform;
    int n = 100;
    std::uint64_t seed = 1;
    double bbox = 100.0;  // square extent [0, bbox]^2 for random distributions
};

inline PointSet generate(const PointSetSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate: n >= 1 required");
    PointSet points;
    points.reserve(spec.n);
    std::mt19937_64 rng(spec.seed);
    std::set<std::pair<double, double>> used;
    auto push_unique = [&](double x, double y) {
        if (!used.insert({x, y}).second) return false;
        points.push_back({static_cast<int>(points.size()), x, y});
        return true;
    };

    switch (spec.distribution) {
        case Distribution::Uniform: {
            std::uniform_real_distribution<double> coord(0.0, spec.bbox);
            while (static_cast<int>(points.size()) < spec.n) {
                push_unique(coord(rng), coord(rng));
            }
            break;
        }
        case Distribution::Grid: {
            int side = static_cast<int>(std::ceil(std::sqrt(spec.n)));
            double step = side > 1 ? spec.bbox / (side - 1) : 0.0;
            for (int r = 0; r < side && static_cast<int>(points.size()) < spec.n;
                 ++r) {
                for (int c = 0;
                     c < side && static_cast<int>(points.size()) < spec.n; ++c) {
                    push_unique(c * step, r * step);
                }
            }
            break;
        }
        case Distribution::CircleStar: {
            // n-1 rim points around a center; small fixed angular offset
            // keeps points off exact cone rays.
            if (spec.n < 2) {
                throw std::invalid_argument("circle_star needs n >= 2");
            }
            int rim = spec.n - 1;
            for (int j = 0; j < rim; ++j) {
                double ang = kTwoPi * j / rim + 1e-4;
                push_unique(std::cos(ang), std::sin(ang));
            }
            push_unique(0.0, 0.0);  // center is the last id
            break;
        }
        case Distribution::Clustered: {
            int clusters = std::max(1, spec.n / 20);
            std::uniform_real_distribution<double> coord(0.0, spec.bbox);
            std::normal_distribution<double> jitter(0.0, spec.bbox / 50.0);
            std::vector<Vec2> centers;
            for (int c = 0; c < clusters; ++c) {
                centers.push_back({coord(rng), coord(rng)});
            }
            std::uniform_int_distribution<int> pick(0, clusters - 1);
            while (static_cast<int>(points.size()) < spec.n) {
                Vec2 c = centers[pick(rng)];
                push_unique(c.x + jitter(rng), c.y + jitter(rng));
            }
            break;
        }
    }
    validate_point_set(points);
    return points;
}

}  // namespace spanners
