#pragma once

#include <span>
#include <vector>

namespace disco {

/// Replace every noise label (-1) with a fresh singleton cluster label so
/// pair-counting indices treat noise points as their own clusters. Fresh
/// labels start above the largest existing label.
std::vector<int> noise_to_singletons(std::span<const int> labels);

/// Adjusted Rand index (permutation-model correction). Noise labels are
/// converted to singletons on both sides first. When the correction is
/// degenerate (expected index equals maximum index) the value is 1 for
/// identical partitions and 0 otherwise.
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

/// Pearson correlation of two equal-length sequences. A zero-variance
/// sequence has no defined correlation and raises a parameter error.
double pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace disco
