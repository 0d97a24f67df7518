#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "objflow/flow_field.hpp"

namespace objflow {

// Middlebury .flo layout, little-endian: float32 magic 202021.25, int32
// width, int32 height, then height*width interleaved float32 (u, v) pairs in
// row-major order. Round trips are bit-exact.
std::vector<std::uint8_t> to_flo_bytes(const FlowField& field);
FlowField from_flo_bytes(std::span<const std::uint8_t> bytes);

void write_flo(const std::filesystem::path& path, const FlowField& field);
FlowField read_flo(const std::filesystem::path& path);

}  // namespace objflow
