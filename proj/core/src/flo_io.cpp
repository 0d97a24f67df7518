#include "objflow/flo_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace objflow {

namespace {

constexpr float kFloMagic = 202021.25f;

void put_f32(std::vector<std::uint8_t>& out, float v) {
    std::uint8_t raw[4];
    std::memcpy(raw, &v, 4);
    out.insert(out.end(), raw, raw + 4);
}

void put_i32(std::vector<std::uint8_t>& out, std::int32_t v) {
    std::uint8_t raw[4];
    std::memcpy(raw, &v, 4);
    out.insert(out.end(), raw, raw + 4);
}

float get_f32(std::span<const std::uint8_t> bytes, std::size_t offset) {
    float v;
    std::memcpy(&v, bytes.data() + offset, 4);
    return v;
}

std::int32_t get_i32(std::span<const std::uint8_t> bytes, std::size_t offset) {
    std::int32_t v;
    std::memcpy(&v, bytes.data() + offset, 4);
    return v;
}

}  // namespace

std::vector<std::uint8_t> to_flo_bytes(const FlowField& field) {
    std::vector<std::uint8_t> out;
    out.reserve(12 + static_cast<std::size_t>(field.width()) * field.height() * 8);
    put_f32(out, kFloMagic);
    put_i32(out, field.width());
    put_i32(out, field.height());
    for (const Vec2& v : field.cells()) {
        put_f32(out, static_cast<float>(v.x));
        put_f32(out, static_cast<float>(v.y));
    }
    return out;
}

FlowField from_flo_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12) {
        throw std::runtime_error("flo: truncated header");
    }
    if (get_f32(bytes, 0) != kFloMagic) {
        throw std::runtime_error("flo: bad magic number");
    }
    const std::int32_t width = get_i32(bytes, 4);
    const std::int32_t height = get_i32(bytes, 8);
    if (width <= 0 || height <= 0) {
        throw std::runtime_error("flo: nonpositive dimensions");
    }
    const std::size_t expected = 12 + static_cast<std::size_t>(width) * height * 8;
    if (bytes.size() != expected) {
        throw std::runtime_error("flo: truncated payload");
    }
    FlowField field(width, height);
    std::size_t offset = 12;
    for (Vec2& v : field.cells()) {
        v.x = get_f32(bytes, offset);
        v.y = get_f32(bytes, offset + 4);
        offset += 8;
    }
    return field;
}

void write_flo(const std::filesystem::path& path, const FlowField& field) {
    const std::vector<std::uint8_t> bytes = to_flo_bytes(field);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("flo: cannot open for writing: " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("flo: write failed: " + path.string());
    }
}

FlowField read_flo(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("flo: cannot open: " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return from_flo_bytes(bytes);
}

}  // namespace objflow
