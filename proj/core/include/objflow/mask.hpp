#pragma once

#include <cstdint>
#include <vector>

#include "objflow/types.hpp"

namespace objflow {

// Row-major boolean occupancy grid. Pixel (x, y) lives at index y * width + x;
// x is the column and y the row, samples sit on integer coordinates.
class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int width, int height);

    // Takes ownership of a row-major 0/1 buffer of size width * height.
    static BinaryMask from_bits(int width, int height, std::vector<std::uint8_t> bits);

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int x, int y) const { return bits_[static_cast<std::size_t>(y) * width_ + x] != 0; }
    void set(int x, int y, bool value = true);

    std::int64_t area() const { return area_; }
    bool empty() const { return area_ == 0; }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.bits_ == b.bits_;
    }

private:
    int width_{0};
    int height_{0};
    std::int64_t area_{0};
    std::vector<std::uint8_t> bits_;
};

// |a ∩ b| / |a ∪ b|; 0 when both masks are empty. Throws on dimension mismatch.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

// Arithmetic mean of the integer coordinates of all set pixels.
// Throws if the mask is empty.
Vec2 mask_centroid(const BinaryMask& mask);

// Tight bounding box of the set pixels (inclusive). Throws if the mask is empty.
BoundingBox tight_bbox(const BinaryMask& mask);

// Morphological erosion with a (2*radius+1)^2 square structuring element.
// Pixels outside the grid count as unset, so the mask shrinks at the border.
BinaryMask erode(const BinaryMask& mask, int radius);

// Run-length encoding: alternating counts of 0s and 1s over the row-major
// scan, always starting with the count of 0s (possibly zero).
std::vector<std::int64_t> rle_encode(const BinaryMask& mask);
BinaryMask rle_decode(int width, int height, const std::vector<std::int64_t>& counts);

}  // namespace objflow
