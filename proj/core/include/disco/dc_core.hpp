#pragma once

#include <cstddef>
#include <vector>

#include "disco/point_set.hpp"

namespace disco {

/// Per-point core-distances: kappa[i] is the Euclidean distance from point i
/// to its mu-th nearest *other* point (mu = 1 means the nearest neighbor
/// excluding the point itself). kappa[i] == 0 exactly when point i has at
/// least mu exact duplicates.
struct CoreDistances {
    std::vector<double> kappa;
    std::size_t mu = 0;
};

struct MstEdge {
    std::size_t a;  // a < b
    std::size_t b;
    double weight;
};

/// Minimum spanning tree over the mutual reachability distances, with edges
/// held in the canonical total order: ascending weight, ties broken by the
/// sorted endpoint index pair. Under that strict order the tree itself is
/// unique, so the structure is a pure function of the input.
struct MrdMst {
    std::size_t n = 0;
    std::vector<MstEdge> edges;  // n - 1 entries, canonical order
};

/// Answers density-connectivity (minimax path) distance queries against an
/// MrdMst. Queries allocate O(n) scratch per call and never mutate shared
/// state, so concurrent queries on one index are safe.
class DcDistIndex {
public:
    explicit DcDistIndex(const MrdMst& mst);

    std::size_t size() const { return n_; }

    /// Largest edge weight on the tree path between i and j; 0 when i == j.
    double query(std::size_t i, std::size_t j) const;

    /// All distances from source in one tree traversal carrying the running
    /// maximum edge weight. Equivalent to n individual queries, O(n) time.
    std::vector<double> row_from(std::size_t source) const;

    /// row_from into a caller-owned buffer (resized to n).
    void row_from(std::size_t source, std::vector<double>& out) const;

private:
    void check_index(std::size_t i) const;

    std::size_t n_ = 0;
    // CSR adjacency of the tree
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> neighbor_;
    std::vector<double> weight_;
};

/// Full n-by-n Euclidean distance matrix. Intended for small inputs and
/// cross-checks; the scoring path streams distances instead.
SquareMatrix pairwise_euclidean(const PointSet& ps);

/// Core-distances for the given neighborhood size. Requires 1 <= mu <= n-1.
CoreDistances core_distances(const PointSet& ps, std::size_t mu);

/// max(kappa[i], kappa[j], euclidean(i, j)); 0 on the diagonal.
SquareMatrix mutual_reachability(const PointSet& ps, const CoreDistances& cd);

/// Lazy single-pair mutual reachability distance.
double mutual_reachability_at(const PointSet& ps, const CoreDistances& cd,
                              std::size_t i, std::size_t j);

/// Canonical MST over the (implicit) complete mutual reachability graph.
/// O(n^2) time, O(n) working memory beyond the output.
MrdMst build_mst(const PointSet& ps, const CoreDistances& cd);

/// Convenience wrapper for single queries.
double dc_dist(const DcDistIndex& idx, std::size_t i, std::size_t j);

/// Convenience wrapper for one row of dc-dists.
std::vector<double> dc_rows_from(const DcDistIndex& idx, std::size_t i);

}  // namespace disco
