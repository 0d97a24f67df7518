#pragma once

#include <random>
#include <span>
#include <vector>

#include "objflow/candidate.hpp"
#include "objflow/mask.hpp"

namespace objflow {

// Margin used by the triplet objective and the cap on how many matching /
// non-matching descriptors feed a single anchor's loss.
inline constexpr double kDefaultTripletMargin = 2.0;
inline constexpr std::size_t kFeatureSubsetCap = 9;

struct SimilarityLosses {
    double similarity{0.0};     // mean L1 distance anchor -> matching set
    double dissimilarity{0.0};  // mean L1 distance anchor -> non-matching set
};

// L1 distance summed over all 256 components. Throws on length mismatch.
double feature_l1_distance(const Feature& a, const Feature& b);

// Euclidean distance over all 256 components. Throws on length mismatch.
double feature_l2_distance(const Feature& a, const Feature& b);

// Mean L1 distances from the anchor to the matching and non-matching sets.
// Both sets must be nonempty; callers cap the set sizes beforehand.
SimilarityLosses feature_similarity_losses(const Feature& anchor,
                                           std::span<const Feature> matching,
                                           std::span<const Feature> nonmatching);

// Mean over objects of max(similarity - dissimilarity + margin, 0).
double feature_triplet_loss(std::span<const SimilarityLosses> per_object, double margin);

struct ScoredMaskPair {
    BinaryMask estimated;
    BinaryMask ground_truth;
    double mask_score{0.0};
};

// Mean over candidates of |IoU(estimated, ground_truth) - mask_score|.
double mask_confirmation_loss(std::span<const ScoredMaskPair> candidates);

// Uniform sample without replacement of at most `cap` descriptors, keeping
// the relative order of the pool. Deterministic for a given generator state.
std::vector<Feature> sample_feature_subset(const std::vector<Feature>& pool, std::size_t cap,
                                           std::mt19937_64& rng);

}  // namespace objflow
