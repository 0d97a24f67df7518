#pragma once

#include <map>

#include "objflow/flow_field.hpp"

namespace objflow {

// Per-level weights for adding the downsampled translation field into a
// coarse-to-fine pyramid. Keys must be a subset of {4, 5, 6}: the coarsest
// three levels of a six-level pyramid, where level 1 is full resolution.
struct PyramidInjectionConfig {
    std::map<int, double> alphas{{4, 1.0}, {5, 1.0}, {6, 1.0}};
};

void validate_injection_config(const PyramidInjectionConfig& cfg);

// Repeated 2x2 average pooling with the vectors halved at each step, so a
// constant field (u, v) becomes (u, v) / 2^(level-1). Level 1 is the
// identity. When mask_aware is set, each pooled cell averages only its
// nonzero inputs (zero if all four are zero).
FlowField downsample_flow(const FlowField& field, int level, bool mask_aware = false);

// output[s] = base[s] + alpha_s * downsample_flow(dt, s) for every configured
// level; other levels pass through unchanged. A configured level missing from
// the base pyramid is an error. alpha_s == 0 leaves base[s] bit-identical.
std::map<int, FlowField> inject_translation_field(const std::map<int, FlowField>& base_pyramid,
                                                  const FlowField& dt,
                                                  const PyramidInjectionConfig& cfg);

}  // namespace objflow
