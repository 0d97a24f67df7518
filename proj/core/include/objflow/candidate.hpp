#pragma once

#include <cstdint>
#include <vector>

#include "objflow/mask.hpp"
#include "objflow/types.hpp"

namespace objflow {

inline constexpr int kFeatureDim = 256;

using Feature = std::vector<double>;

enum class Frame { kReference, kTarget };

// One detected object proposal: frame tag, binary mask, tight bbox,
// objectness score, mask score and a 256-D descriptor.
struct InstanceCandidate {
    std::int64_t id{0};
    Frame frame{Frame::kReference};
    BinaryMask mask;
    BoundingBox bbox{};
    double objectness{0.0};
    double mask_score{0.0};
    Feature feature;
};

bool operator==(const InstanceCandidate& a, const InstanceCandidate& b);

// Enforces the candidate invariants: 256-D feature, scores in [0,1],
// nonempty mask and bbox equal to the mask's tight bounding box.
void validate_candidate(const InstanceCandidate& c);

// Builds a candidate with the bbox derived from the mask.
InstanceCandidate make_candidate(std::int64_t id, Frame frame, BinaryMask mask, double objectness,
                                 double mask_score, Feature feature);

}  // namespace objflow
