#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "objflow/types.hpp"

namespace objflow {

// Dense h x w field of 2-D pixel displacements from the reference frame to
// the target frame. Cells are kept in double precision; the .flo interchange
// format narrows to float32 at the file boundary.
//
// Cells whose components reach kInvalidThreshold in magnitude (or are not
// finite) are treated as invalid and skipped by statistics and evaluation,
// following the usual .flo "unknown flow" convention.
class FlowField {
public:
    static constexpr double kInvalidThreshold = 1e9;
    static constexpr double kInvalidValue = 1e10;

    FlowField() = default;
    FlowField(int width, int height, Vec2 fill = {});

    int width() const { return width_; }
    int height() const { return height_; }

    Vec2& at(int x, int y) { return cells_[static_cast<std::size_t>(y) * width_ + x]; }
    const Vec2& at(int x, int y) const {
        return cells_[static_cast<std::size_t>(y) * width_ + x];
    }

    const std::vector<Vec2>& cells() const { return cells_; }
    std::vector<Vec2>& cells() { return cells_; }

    static bool is_valid(Vec2 v) {
        return std::isfinite(v.x) && std::isfinite(v.y) && std::abs(v.x) < kInvalidThreshold &&
               std::abs(v.y) < kInvalidThreshold;
    }

    void mark_invalid(int x, int y) { at(x, y) = {kInvalidValue, kInvalidValue}; }

    friend bool operator==(const FlowField& a, const FlowField& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
    }

private:
    int width_{0};
    int height_{0};
    std::vector<Vec2> cells_;
};

struct FlowStats {
    double max_magnitude{0.0};
    double mean_magnitude{0.0};
    std::int64_t valid_pixel_count{0};
};

FlowStats compute_flow_stats(const FlowField& field);

}  // namespace objflow
