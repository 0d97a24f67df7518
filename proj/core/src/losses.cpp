#include "objflow/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace objflow {

namespace {

void require_dim(const Feature& f, const char* what) {
    if (f.size() != static_cast<std::size_t>(kFeatureDim)) {
        throw std::invalid_argument(std::string(what) + ": feature length must be 256");
    }
}

}  // namespace

double feature_l1_distance(const Feature& a, const Feature& b) {
    require_dim(a, "feature_l1_distance");
    require_dim(b, "feature_l1_distance");
    double sum = 0.0;
    for (int i = 0; i < kFeatureDim; ++i) sum += std::abs(a[i] - b[i]);
    return sum;
}

double feature_l2_distance(const Feature& a, const Feature& b) {
    require_dim(a, "feature_l2_distance");
    require_dim(b, "feature_l2_distance");
    double sum = 0.0;
    for (int i = 0; i < kFeatureDim; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

SimilarityLosses feature_similarity_losses(const Feature& anchor,
                                           std::span<const Feature> matching,
                                           std::span<const Feature> nonmatching) {
    if (matching.empty() || nonmatching.empty()) {
        throw std::invalid_argument("feature_similarity_losses: empty feature set");
    }
    SimilarityLosses out;
    for (const Feature& f : matching) out.similarity += feature_l1_distance(anchor, f);
    for (const Feature& f : nonmatching) out.dissimilarity += feature_l1_distance(anchor, f);
    out.similarity /= static_cast<double>(matching.size());
    out.dissimilarity /= static_cast<double>(nonmatching.size());
    return out;
}

double feature_triplet_loss(std::span<const SimilarityLosses> per_object, double margin) {
    if (per_object.empty()) {
        throw std::invalid_argument("feature_triplet_loss: no objects");
    }
    if (margin < 0.0) {
        throw std::invalid_argument("feature_triplet_loss: margin must be nonnegative");
    }
    double sum = 0.0;
    for (const SimilarityLosses& l : per_object) {
        sum += std::max(l.similarity - l.dissimilarity + margin, 0.0);
    }
    return sum / static_cast<double>(per_object.size());
}

double mask_confirmation_loss(std::span<const ScoredMaskPair> candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("mask_confirmation_loss: no candidates");
    }
    double sum = 0.0;
    for (const ScoredMaskPair& c : candidates) {
        sum += std::abs(mask_iou(c.estimated, c.ground_truth) - c.mask_score);
    }
    return sum / static_cast<double>(candidates.size());
}

std::vector<Feature> sample_feature_subset(const std::vector<Feature>& pool, std::size_t cap,
                                           std::mt19937_64& rng) {
    std::vector<Feature> out;
    if (pool.size() <= cap) {
        out = pool;
        return out;
    }
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), cap, rng);
    return out;
}

}  // namespace objflow
