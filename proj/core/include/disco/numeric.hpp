#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace disco {

/// Sum of a value multiset in a canonical order (ascending), so the result
/// depends on the multiset only. Two collections holding the same values in
/// any order sum to bit-identical doubles, which is what makes scores
/// reproducible under point permutations and thread-count changes.
inline double stable_sum(std::span<const double> values) {
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

/// In-place variant for callers that own a scratch buffer.
inline double stable_sum_inplace(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

inline double stable_mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return stable_sum(values) / static_cast<double>(values.size());
}

inline double stable_mean_inplace(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const auto n = static_cast<double>(v.size());
    return stable_sum_inplace(v) / n;
}

/// (a - b) / max(a, b) for non-negative operands, with the 0/0 case mapped
/// to 0 so degenerate configurations (duplicate points, zero distances)
/// never produce NaN. Result is always in [-1, 1].
inline double bounded_ratio(double a, double b) {
    const double denom = std::max(a, b);
    if (denom == 0.0) return 0.0;
    return (a - b) / denom;
}

}  // namespace disco
