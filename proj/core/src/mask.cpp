#include "objflow/mask.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace objflow {

BinaryMask::BinaryMask(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("BinaryMask: dimensions must be positive");
    }
    bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

BinaryMask BinaryMask::from_bits(int width, int height, std::vector<std::uint8_t> bits) {
    BinaryMask m(width, height);
    if (bits.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("BinaryMask: bit count must equal width*height");
    }
    m.bits_ = std::move(bits);
    m.area_ = 0;
    for (auto& b : m.bits_) {
        b = b ? 1 : 0;
        m.area_ += b;
    }
    return m;
}

void BinaryMask::set(int x, int y, bool value) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) {
        throw std::out_of_range("BinaryMask::set: pixel out of range");
    }
    std::uint8_t& cell = bits_[static_cast<std::size_t>(y) * width_ + x];
    area_ += (value ? 1 : 0) - (cell ? 1 : 0);
    cell = value ? 1 : 0;
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw std::invalid_argument("mask_iou: dimension mismatch");
    }
    std::int64_t inter = 0;
    std::int64_t uni = 0;
    const auto& ba = a.bits();
    const auto& bb = b.bits();
    for (std::size_t i = 0; i < ba.size(); ++i) {
        inter += ba[i] & bb[i];
        uni += ba[i] | bb[i];
    }
    if (uni == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

Vec2 mask_centroid(const BinaryMask& mask) {
    if (mask.empty()) {
        throw std::invalid_argument("mask_centroid: centroid of an empty mask is undefined");
    }
    std::int64_t sx = 0;
    std::int64_t sy = 0;
    const auto& bits = mask.bits();
    std::size_t i = 0;
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x, ++i) {
            if (bits[i]) {
                sx += x;
                sy += y;
            }
        }
    }
    const double n = static_cast<double>(mask.area());
    return {static_cast<double>(sx) / n, static_cast<double>(sy) / n};
}

BoundingBox tight_bbox(const BinaryMask& mask) {
    if (mask.empty()) {
        throw std::invalid_argument("tight_bbox: mask has no set pixels");
    }
    BoundingBox box{mask.width(), mask.height(), -1, -1};
    const auto& bits = mask.bits();
    std::size_t i = 0;
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x, ++i) {
            if (!bits[i]) continue;
            box.x_min = std::min(box.x_min, x);
            box.y_min = std::min(box.y_min, y);
            box.x_max = std::max(box.x_max, x);
            box.y_max = std::max(box.y_max, y);
        }
    }
    return box;
}

BinaryMask erode(const BinaryMask& mask, int radius) {
    if (radius < 0) {
        throw std::invalid_argument("erode: radius must be nonnegative");
    }
    if (radius == 0) return mask;
    BinaryMask out(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask.at(x, y)) continue;
            bool keep = true;
            for (int dy = -radius; keep && dy <= radius; ++dy) {
                for (int dx = -radius; keep && dx <= radius; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= mask.width() || ny >= mask.height() ||
                        !mask.at(nx, ny)) {
                        keep = false;
                    }
                }
            }
            if (keep) out.set(x, y);
        }
    }
    return out;
}

std::vector<std::int64_t> rle_encode(const BinaryMask& mask) {
    std::vector<std::int64_t> counts;
    std::uint8_t current = 0;  // runs start with 0s
    std::int64_t run = 0;
    for (std::uint8_t b : mask.bits()) {
        if (b == current) {
            ++run;
        } else {
            counts.push_back(run);
            current = b;
            run = 1;
        }
    }
    counts.push_back(run);
    return counts;
}

BinaryMask rle_decode(int width, int height, const std::vector<std::int64_t>& counts) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(width) * height);
    std::uint8_t value = 0;
    for (std::int64_t c : counts) {
        if (c < 0) throw std::invalid_argument("rle_decode: negative run length");
        bits.insert(bits.end(), static_cast<std::size_t>(c), value);
        value = value ? 0 : 1;
    }
    if (bits.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("rle_decode: counts sum " + std::to_string(bits.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height));
    }
    return BinaryMask::from_bits(width, height, std::move(bits));
}

}  // namespace objflow
