#pragma once

#include <cstddef>
#include <vector>

#include "disco/dc_core.hpp"
#include "disco/errors.hpp"

namespace disco {

/// The reserved label value for noise points.
inline constexpr int kNoiseLabel = -1;

/// A hard partition of n points into k disjoint clusters plus a noise set.
///
/// Built from a plain label vector: -1 marks noise, any other integer is a
/// cluster id. Non-contiguous ids are normalized to 0..k-1 in ascending
/// label order, which keeps the normalized ids independent of point order.
class Clustering {
public:
    static Clustering from_labels(std::vector<int> labels);

    std::size_t size() const { return labels_.size(); }
    std::size_t num_clusters() const { return clusters_.size(); }
    std::size_t num_noise() const { return noise_.size(); }

    const std::vector<int>& labels() const { return labels_; }

    /// Normalized cluster id of point i, or -1 for noise.
    int cluster_of(std::size_t i) const { return cluster_of_[i]; }
    bool is_noise(std::size_t i) const { return cluster_of_[i] < 0; }

    /// Member indices (ascending) of normalized cluster c.
    const std::vector<std::size_t>& members(std::size_t c) const { return clusters_[c]; }
    const std::vector<std::vector<std::size_t>>& clusters() const { return clusters_; }
    const std::vector<std::size_t>& noise() const { return noise_; }

    /// The original label value behind normalized cluster id c.
    int original_label(std::size_t c) const { return original_labels_[c]; }

private:
    std::vector<int> labels_;
    std::vector<int> cluster_of_;
    std::vector<std::vector<std::size_t>> clusters_;
    std::vector<std::size_t> noise_;
    std::vector<int> original_labels_;
};

/// Per-cluster aggregates used by the noise scores: the maximum
/// core-distance within each cluster and the member count.
struct ClusterStats {
    std::vector<double> kappa_max;
    std::vector<std::size_t> size;
};

ClusterStats cluster_stats(const Clustering& c, const CoreDistances& cd);

}  // namespace disco
