#include "objflow/candidate.hpp"

#include <stdexcept>
#include <string>

namespace objflow {

bool operator==(const InstanceCandidate& a, const InstanceCandidate& b) {
    return a.id == b.id && a.frame == b.frame && a.mask == b.mask && a.bbox == b.bbox &&
           a.objectness == b.objectness && a.mask_score == b.mask_score && a.feature == b.feature;
}

void validate_candidate(const InstanceCandidate& c) {
    if (c.feature.size() != static_cast<std::size_t>(kFeatureDim)) {
        throw std::invalid_argument("candidate " + std::to_string(c.id) + ": feature length " +
                                    std::to_string(c.feature.size()) + ", expected 256");
    }
    if (c.objectness < 0.0 || c.objectness > 1.0) {
        throw std::invalid_argument("candidate " + std::to_string(c.id) +
                                    ": objectness outside [0,1]");
    }
    if (c.mask_score < 0.0 || c.mask_score > 1.0) {
        throw std::invalid_argument("candidate " + std::to_string(c.id) +
                                    ": mask_score outside [0,1]");
    }
    if (c.mask.empty()) {
        throw std::invalid_argument("candidate " + std::to_string(c.id) + ": empty mask");
    }
    if (!(tight_bbox(c.mask) == c.bbox)) {
        throw std::invalid_argument("candidate " + std::to_string(c.id) +
                                    ": bbox is not the tight bounding box of the mask");
    }
}

InstanceCandidate make_candidate(std::int64_t id, Frame frame, BinaryMask mask, double objectness,
                                 double mask_score, Feature feature) {
    InstanceCandidate c;
    c.id = id;
    c.frame = frame;
    c.bbox = tight_bbox(mask);
    c.mask = std::move(mask);
    c.objectness = objectness;
    c.mask_score = mask_score;
    c.feature = std::move(feature);
    validate_candidate(c);
    return c;
}

}  // namespace objflow
