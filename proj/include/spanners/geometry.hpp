#pragma once

// Planar primitives for cone-based spanner construction: points, cone
// schemes with half-open boundary semantics, canonical triangles and the
// bound function T(alpha).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanners {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

struct Point {
    int id = -1;
    double x = 0.0;
    double y = 0.0;

    Vec2 pos() const { return {x, y}; }
};

using PointSet = std::vector<Point>;

// Cone partition parameter k and the derived cone angle theta = 2*pi/k.
struct ConeScheme {
    int k = 6;
    double theta = kTwoPi / 6.0;

    explicit ConeScheme(int cones) : k(cones), theta(kTwoPi / cones) {
        if (cones < 3) {
            throw std::invalid_argument("ConeScheme requires k >= 3, got " +
                                        std::to_string(cones));
        }
    }

    // The paper's stretch analysis requires the cones of the fine scheme to
    // nest inside the Theta_6 cones.
    bool analysis_ready() const { return k % 6 == 0; }
};

// Direction angle of (to - from), normalized to [0, 2*pi). Negative zero
// maps to 0 so the r_1 ray is classified stably.
inline double direction_angle(Vec2 from, Vec2 to) {
    double dx = to.x - from.x;
    double dy = to.y - from.y;
    if (dx == 0.0 && dy == 0.0) {
        throw std::invalid_argument("degenerate direction: coincident points");
    }
    double phi = std::atan2(dy, dx);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    return phi + 0.0;  // -0 -> +0
}

// Index i of the half-open cone [i*theta, (i+1)*theta) containing the
// direction apex -> target. The lower ray belongs to the cone, the upper
// ray does not.
inline int cone_index(const ConeScheme& scheme, Vec2 apex, Vec2 target) {
    double phi = direction_angle(apex, target);
    int i = static_cast<int>(std::floor(phi / scheme.theta));
    if (i >= scheme.k) i = scheme.k - 1;
    if (i < 0) i = 0;
    return i;
}

inline int cone_index(const ConeScheme& scheme, const Point& apex,
                      const Point& target) {
    return cone_index(scheme, apex.pos(), target.pos());
}

inline double cone_bisector_angle(const ConeScheme& scheme, int cone) {
    return (cone + 0.5) * scheme.theta;
}

// Length of the orthogonal projection of (target - apex) onto the bisector
// of the cone of apex containing target.
inline double bisector_projection(const ConeScheme& scheme, Vec2 apex,
                                  Vec2 target) {
    double phi = direction_angle(apex, target);
    int cone = cone_index(scheme, apex, target);
    double rel = phi - cone_bisector_angle(scheme, cone);
    return norm(target - apex) * std::cos(rel);
}

inline double bisector_projection(const ConeScheme& scheme, const Point& apex,
                                  const Point& target) {
    return bisector_projection(scheme, apex.pos(), target.pos());
}

// Isosceles triangle with apex at `apex`, two sides along the rays bounding
// the cone containing `target`, and base through `target` orthogonal to the
// cone bisector.
struct CanonicalTriangle {
    int k = 6;
    Vec2 apex;
    Vec2 target;
    int cone = 0;
    double height = 0.0;  // apex-to-base distance along the bisector
    Vec2 corner_x;        // corner on the lower ray r_{cone}
    Vec2 corner_y;        // corner on the upper ray r_{cone+1}
};

inline CanonicalTriangle canonical_triangle(const ConeScheme& scheme,
                                            Vec2 apex, Vec2 target) {
    CanonicalTriangle tri;
    tri.k = scheme.k;
    tri.apex = apex;
    tri.target = target;
    tri.cone = cone_index(scheme, apex, target);
    tri.height = bisector_projection(scheme, apex, target);
    double side = tri.height / std::cos(scheme.theta / 2.0);
    double lo = tri.cone * scheme.theta;
    double hi = lo + scheme.theta;
    tri.corner_x = apex + side * Vec2{std::cos(lo), std::sin(lo)};
    tri.corner_y = apex + side * Vec2{std::cos(hi), std::sin(hi)};
    return tri;
}

inline CanonicalTriangle canonical_triangle(const ConeScheme& scheme,
                                            const Point& apex,
                                            const Point& target) {
    return canonical_triangle(scheme, apex.pos(), target.pos());
}

// Membership test with the same half-open rule as cone_index on the two ray
// sides and a closed base.
inline bool triangle_contains(const CanonicalTriangle& tri, Vec2 q) {
    if (q == tri.apex) return false;
    ConeScheme scheme(tri.k);
    if (cone_index(scheme, tri.apex, q) != tri.cone) return false;
    return bisector_projection(scheme, tri.apex, q) <= tri.height;
}

// True iff no point of the set, other than the apex and the defining
// target, lies inside or on the triangle.
inline bool triangle_empty(const CanonicalTriangle& tri,
                           const PointSet& points) {
    for (const Point& p : points) {
        Vec2 q = p.pos();
        if (q == tri.apex || q == tri.target) continue;
        if (triangle_contains(tri, q)) return false;
    }
    return true;
}

// T(alpha) = (sin(pi/3 - alpha) - sin(alpha)) / sin(pi/3), defined on
// [0, pi/3]; strictly decreasing, T(0) = 1.
inline double t_function(double alpha) {
    if (alpha < 0.0 || alpha > kPi / 3.0) {
        throw std::invalid_argument("t_function: alpha outside [0, pi/3]");
    }
    return (std::sin(kPi / 3.0 - alpha) - std::sin(alpha)) /
           std::sin(kPi / 3.0);
}

// Checks ids 0..n-1 in order and pairwise-distinct coordinates.
inline void validate_point_set(const PointSet& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].id != static_cast<int>(i)) {
            throw std::invalid_argument(
                "point set ids must be 0..n-1 in order; found id " +
                std::to_string(points[i].id) + " at position " +
                std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].x == points[j].x && points[i].y == points[j].y) {
                throw std::invalid_argument(
                    "coincident points: ids " + std::to_string(points[i].id) +
                    " and " + std::to_string(points[j].id));
            }
        }
    }
}

}  // namespace spanners
