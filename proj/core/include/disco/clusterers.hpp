#pragma once

#include <cstddef>
#include <cstdint>

#include "disco/clustering.hpp"
#include "disco/point_set.hpp"

namespace disco {

struct DbscanParams {
    double eps = 1.0;
    std::size_t min_pts = 5;
};

/// Classic DBSCAN. Neighbor counts include the point itself (the usual
/// convention; deliberately independent of the scoring side's mu).
/// Clusters are grown from core points in ascending index order; border
/// points join the lowest adjacent cluster id. Bit-deterministic.
Clustering dbscan(const PointSet& ps, const DbscanParams& p);

struct KMeansParams {
    std::size_t k = 2;
    std::size_t max_iters = 100;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;  // stop when no center moves further than this
};

/// Lloyd k-means with seeded random distinct initial centers. Assignment
/// ties go to the lowest cluster id; an emptied cluster is reseeded from the
/// point farthest from its center. Never labels noise.
Clustering kmeans(const PointSet& ps, const KMeansParams& p);

}  // namespace disco
