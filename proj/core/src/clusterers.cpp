#include "disco/clusterers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "disco/errors.hpp"
#include "disco/parallel.hpp"
#include "disco/rng.hpp"

namespace disco {

Clustering dbscan(const PointSet& ps, const DbscanParams& p) {
    if (p.eps <= 0.0) {
        throw parameter_error("eps must be positive, got " + std::to_string(p.eps));
    }
    if (p.min_pts < 1) {
        throw parameter_error("min_pts must be >= 1");
    }
    const std::size_t n = ps.size();

    // Neighborhoods (self-inclusive) computed up front; O(n^2) like the rest
    // of the pipeline.
    std::vector<std::vector<std::size_t>> neighbors(n);
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (ps.euclidean(i, j) <= p.eps) neighbors[i].push_back(j);
        }
    });

    std::vector<bool> core(n);
    for (std::size_t i = 0; i < n; ++i) core[i] = neighbors[i].size() >= p.min_pts;

    // Expand core components in ascending seed order so cluster ids are
    // deterministic, then attach border points to the lowest adjacent id.
    std::vector<int> labels(n, kNoiseLabel);
    int next_id = 0;
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (!core[seed] || labels[seed] != kNoiseLabel) continue;
        const int id = next_id++;
        labels[seed] = id;
        stack.assign(1, seed);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : neighbors[u]) {
                if (!core[v] || labels[v] != kNoiseLabel) continue;
                labels[v] = id;
                stack.push_back(v);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (core[i] || labels[i] != kNoiseLabel) continue;
        int best = std::numeric_limits<int>::max();
        for (std::size_t v : neighbors[i]) {
            if (core[v] && labels[v] >= 0) best = std::min(best, labels[v]);
        }
        if (best != std::numeric_limits<int>::max()) labels[i] = best;
    }
    return Clustering::from_labels(std::move(labels));
}

Clustering kmeans(const PointSet& ps, const KMeansParams& p) {
    const std::size_t n = ps.size();
    const std::size_t m = ps.dims();
    if (p.k < 1 || p.k > n) {
        throw parameter_error("k must satisfy 1 <= k <= n, got k=" +
                              std::to_string(p.k) + " with n=" + std::to_string(n));
    }
    if (p.max_iters < 1) {
        throw parameter_error("max_iters must be >= 1");
    }

    Rng rng(p.seed);
    const std::vector<std::size_t> order = rng.permutation(n);
    std::vector<double> centers(p.k * m);
    for (std::size_t c = 0; c < p.k; ++c) {
        for (std::size_t d = 0; d < m; ++d) centers[c * m + d] = ps(order[c], d);
    }

    auto dist2_to_center = [&](std::size_t i, std::size_t c) {
        double s = 0.0;
        for (std::size_t d = 0; d < m; ++d) {
            const double dv = ps(i, d) - centers[c * m + d];
            s += dv * dv;
        }
        return s;
    };

    std::vector<int> assign(n, 0);
    std::vector<double> sums(p.k * m);
    std::vector<std::size_t> counts(p.k);

    for (std::size_t iter = 0; iter < p.max_iters; ++iter) {
        parallel_for(n, [&](std::size_t i) {
            double best = dist2_to_center(i, 0);
            int best_c = 0;
            for (std::size_t c = 1; c < p.k; ++c) {
                const double d2 = dist2_to_center(i, c);
                if (d2 < best) {
                    best = d2;
                    best_c = static_cast<int>(c);
                }
            }
            assign[i] = best_c;
        });

        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(assign[i]);
            ++counts[c];
            for (std::size_t d = 0; d < m; ++d) sums[c * m + d] += ps(i, d);
        }

        // Reseed an emptied cluster from the point farthest from its center.
        for (std::size_t c = 0; c < p.k; ++c) {
            if (counts[c] > 0) continue;
            double worst = -1.0;
            std::size_t pick = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d2 = dist2_to_center(i, static_cast<std::size_t>(assign[i]));
                if (d2 > worst) {
                    worst = d2;
                    pick = i;
                }
            }
            counts[c] = 1;
            const auto old = static_cast<std::size_t>(assign[pick]);
            --counts[old];
            for (std::size_t d = 0; d < m; ++d) {
                sums[old * m + d] -= ps(pick, d);
                sums[c * m + d] = ps(pick, d);
            }
            assign[pick] = static_cast<int>(c);
        }

        double shift = 0.0;
        for (std::size_t c = 0; c < p.k; ++c) {
            for (std::size_t d = 0; d < m; ++d) {
                const double nv = sums[c * m + d] / static_cast<double>(counts[c]);
                shift = std::max(shift, std::abs(nv - centers[c * m + d]));
                centers[c * m + d] = nv;
            }
        }
        if (shift <= p.tolerance) break;
    }

    // Final assignment against the converged centers.
    parallel_for(n, [&](std::size_t i) {
        double best = dist2_to_center(i, 0);
        int best_c = 0;
        for (std::size_t c = 1; c < p.k; ++c) {
            const double d2 = dist2_to_center(i, c);
            if (d2 < best) {
                best = d2;
                best_c = static_cast<int>(c);
            }
        }
        assign[i] = best_c;
    });
    return Clustering::from_labels(std::move(assign));
}

}  // namespace disco
