#include "objflow/flow_field.hpp"

#include <stdexcept>

namespace objflow {

FlowField::FlowField(int width, int height, Vec2 fill) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("FlowField: dimensions must be positive");
    }
    cells_.assign(static_cast<std::size_t>(width) * height, fill);
}

FlowStats compute_flow_stats(const FlowField& field) {
    FlowStats stats;
    double sum = 0.0;
    for (const Vec2& v : field.cells()) {
        if (!FlowField::is_valid(v)) continue;
        const double mag = v.norm();
        stats.max_magnitude = std::max(stats.max_magnitude, mag);
        sum += mag;
        ++stats.valid_pixel_count;
    }
    if (stats.valid_pixel_count > 0) {
        stats.mean_magnitude = sum / static_cast<double>(stats.valid_pixel_count);
    }
    return stats;
}

}  // namespace objflow
