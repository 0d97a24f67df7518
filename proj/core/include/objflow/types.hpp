#pragma once

#include <cmath>
#include <cstdint>

namespace objflow {

// 2-D vector used for pixel coordinates, centroids and flow displacements.
// For flow cells, x is the horizontal (u) and y the vertical (v) component.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

// Inclusive pixel bounding box, x_min <= x_max and y_min <= y_max.
struct BoundingBox {
    int x_min{0};
    int y_min{0};
    int x_max{0};
    int y_max{0};
};

inline bool operator==(const BoundingBox& a, const BoundingBox& b) {
    return a.x_min == b.x_min && a.y_min == b.y_min && a.x_max == b.x_max && a.y_max == b.y_max;
}

}  // namespace objflow
