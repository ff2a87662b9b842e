#include "disco/external_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "disco/clustering.hpp"
#include "disco/errors.hpp"

namespace disco {

std::vector<int> noise_to_singletons(std::span<const int> labels) {
    int max_label = -1;
    for (int lab : labels) {
        if (lab < kNoiseLabel) {
            throw label_error("label " + std::to_string(lab) +
                              " is invalid; labels must be -1 (noise) or >= 0");
        }
        max_label = std::max(max_label, lab);
    }
    std::vector<int> out(labels.begin(), labels.end());
    int next = max_label + 1;
    for (int& lab : out) {
        if (lab == kNoiseLabel) lab = next++;
    }
    return out;
}

namespace {

int64_t choose2(int64_t n) { return n * (n - 1) / 2; }

}  // namespace

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        throw label_error("label vectors differ in length: " +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    if (a.empty()) {
        throw label_error("label vectors are empty");
    }
    if (a.size() == 1) return 1.0;  // one point: the partitions cannot differ
    const std::vector<int> la = noise_to_singletons(a);
    const std::vector<int> lb = noise_to_singletons(b);

    std::map<std::pair<int, int>, int64_t> cells;
    std::map<int, int64_t> rows, cols;
    for (std::size_t i = 0; i < la.size(); ++i) {
        ++cells[{la[i], lb[i]}];
        ++rows[la[i]];
        ++cols[lb[i]];
    }

    int64_t index = 0;
    for (const auto& [key, count] : cells) index += choose2(count);
    int64_t sum_rows = 0, sum_cols = 0;
    for (const auto& [lab, count] : rows) sum_rows += choose2(count);
    for (const auto& [lab, count] : cols) sum_cols += choose2(count);

    const long double pairs = static_cast<long double>(choose2(static_cast<int64_t>(la.size())));
    const long double expected =
        static_cast<long double>(sum_rows) * static_cast<long double>(sum_cols) / pairs;
    const long double max_index =
        (static_cast<long double>(sum_rows) + static_cast<long double>(sum_cols)) / 2.0L;

    if (max_index == expected) {
        // Both partitions all-singletons or both one block: the correction
        // collapses, so fall back to exact partition equality.
        const bool same = rows.size() == cols.size() && rows.size() == cells.size();
        return same ? 1.0 : 0.0;
    }
    return static_cast<double>((static_cast<long double>(index) - expected) /
                               (max_index - expected));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw label_error("sequences differ in length: " + std::to_string(xs.size()) +
                          " vs " + std::to_string(ys.size()));
    }
    if (xs.size() < 2) {
        throw parameter_error("pearson needs at least two observations");
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw parameter_error("a zero-variance sequence makes the correlation undefined");
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace disco
