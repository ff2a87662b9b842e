#include "disco/dc_core.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "disco/errors.hpp"
#include "disco/parallel.hpp"

namespace disco {

SquareMatrix pairwise_euclidean(const PointSet& ps) {
    const std::size_t n = ps.size();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = ps.euclidean(i, j);
            out.at(i, j) = d;
            out.at(j, i) = d;
        }
    }
    return out;
}

CoreDistances core_distances(const PointSet& ps, std::size_t mu) {
    const std::size_t n = ps.size();
    if (mu < 1 || mu > n - 1) {
        throw parameter_error("mu must satisfy 1 <= mu <= n-1, got mu=" +
                              std::to_string(mu) + " with n=" + std::to_string(n));
    }
    CoreDistances cd;
    cd.mu = mu;
    cd.kappa.assign(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        // mu-th smallest among distances to the n-1 other points; the order
        // statistic is a value, so ties need no extra handling
        std::vector<double> dist;
        dist.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) dist.push_back(ps.euclidean(i, j));
        }
        std::nth_element(dist.begin(), dist.begin() + (mu - 1), dist.end());
        cd.kappa[i] = dist[mu - 1];
    });
    return cd;
}

double mutual_reachability_at(const PointSet& ps, const CoreDistances& cd,
                              std::size_t i, std::size_t j) {
    if (i == j) return 0.0;
    return std::max({cd.kappa[i], cd.kappa[j], ps.euclidean(i, j)});
}

SquareMatrix mutual_reachability(const PointSet& ps, const CoreDistances& cd) {
    const std::size_t n = ps.size();
    if (cd.kappa.size() != n) {
        throw input_error("core-distance vector size " + std::to_string(cd.kappa.size()) +
                          " does not match point count " + std::to_string(n));
    }
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = mutual_reachability_at(ps, cd, i, j);
            out.at(i, j) = d;
            out.at(j, i) = d;
        }
    }
    return out;
}

namespace {

// Strict total order on edges: weight, then sorted endpoint pair. Makes the
// MST unique, so any correct algorithm run under this order returns the
// same tree that Kruskal over the globally sorted edge list would.
struct EdgeKey {
    double w;
    std::size_t lo;
    std::size_t hi;

    bool operator<(const EdgeKey& o) const {
        if (w != o.w) return w < o.w;
        if (lo != o.lo) return lo < o.lo;
        return hi < o.hi;
    }
};

EdgeKey make_key(double w, std::size_t a, std::size_t b) {
    return {w, std::min(a, b), std::max(a, b)};
}

}  // namespace

MrdMst build_mst(const PointSet& ps, const CoreDistances& cd) {
    const std::size_t n = ps.size();
    if (cd.kappa.size() != n) {
        throw input_error("core-distance vector size does not match point count");
    }
    MrdMst mst;
    mst.n = n;
    if (n == 1) return mst;

    // Prim over the implicit complete graph with EdgeKey comparisons:
    // O(n^2) time, O(n) memory, and exactly the canonical tree.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<bool> in_tree(n, false);
    std::vector<double> best_w(n, inf);
    std::vector<std::size_t> best_from(n, 0);

    std::size_t current = 0;
    in_tree[0] = true;
    mst.edges.reserve(n - 1);

    for (std::size_t added = 1; added < n; ++added) {
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double w = mutual_reachability_at(ps, cd, current, v);
            if (best_w[v] == inf ||
                make_key(w, current, v) < make_key(best_w[v], best_from[v], v)) {
                best_w[v] = w;
                best_from[v] = current;
            }
        }
        std::size_t pick = n;
        EdgeKey pick_key{inf, 0, 0};
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v] || best_w[v] == inf) continue;
            const EdgeKey k = make_key(best_w[v], best_from[v], v);
            if (pick == n || k < pick_key) {
                pick = v;
                pick_key = k;
            }
        }
        in_tree[pick] = true;
        mst.edges.push_back({std::min(best_from[pick], pick),
                             std::max(best_from[pick], pick), best_w[pick]});
        current = pick;
    }

    std::sort(mst.edges.begin(), mst.edges.end(), [](const MstEdge& x, const MstEdge& y) {
        return make_key(x.weight, x.a, x.b) < make_key(y.weight, y.a, y.b);
    });
    return mst;
}

DcDistIndex::DcDistIndex(const MrdMst& mst) : n_(mst.n) {
    std::vector<std::size_t> degree(n_, 0);
    for (const auto& e : mst.edges) {
        ++degree[e.a];
        ++degree[e.b];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    neighbor_.assign(offsets_[n_], 0);
    weight_.assign(offsets_[n_], 0.0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : mst.edges) {
        neighbor_[cursor[e.a]] = e.b;
        weight_[cursor[e.a]++] = e.weight;
        neighbor_[cursor[e.b]] = e.a;
        weight_[cursor[e.b]++] = e.weight;
    }
}

void DcDistIndex::check_index(std::size_t i) const {
    if (i >= n_) {
        throw input_error("point index " + std::to_string(i) +
                          " out of range for n=" + std::to_string(n_));
    }
}

void DcDistIndex::row_from(std::size_t source, std::vector<double>& out) const {
    check_index(source);
    out.assign(n_, 0.0);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> parent(n_, n_);
    stack.push_back(source);
    parent[source] = source;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
            const std::size_t v = neighbor_[k];
            if (parent[v] != n_) continue;
            parent[v] = u;
            out[v] = std::max(out[u], weight_[k]);
            stack.push_back(v);
        }
    }
    out[source] = 0.0;
}

std::vector<double> DcDistIndex::row_from(std::size_t source) const {
    std::vector<double> out;
    row_from(source, out);
    return out;
}

double DcDistIndex::query(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return 0.0;
    // DFS from i tracking the running max, stop once j is reached
    std::vector<std::size_t> stack;
    std::vector<double> running(n_, 0.0);
    std::vector<bool> seen(n_, false);
    stack.push_back(i);
    seen[i] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
            const std::size_t v = neighbor_[k];
            if (seen[v]) continue;
            seen[v] = true;
            running[v] = std::max(running[u], weight_[k]);
            if (v == j) return running[v];
            stack.push_back(v);
        }
    }
    throw input_error("points " + std::to_string(i) + " and " + std::to_string(j) +
                      " are not connected in the spanning tree");
}

double dc_dist(const DcDistIndex& idx, std::size_t i, std::size_t j) {
    return idx.query(i, j);
}

std::vector<double> dc_rows_from(const DcDistIndex& idx, std::size_t i) {
    return idx.row_from(i);
}

}  // namespace disco
