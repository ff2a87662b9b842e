#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "disco/clustering.hpp"
#include "disco/dc_core.hpp"
#include "disco/point_set.hpp"

namespace disco {

inline constexpr std::size_t kDefaultMu = 5;

/// Which rule produced a point's score.
enum class ScoreKind {
    cluster,               // regular cluster point, k >= 2
    noise,                 // noise point scored against the clusters
    singleton_zero,        // member of a one-point cluster
    one_cluster_zero,      // single cluster covering the whole dataset
    all_noise_minus_one,   // clustering with no clusters at all
    one_cluster_vs_noise,  // single cluster evaluated against the noise set
};

const char* to_string(ScoreKind kind);

/// Pointwise score with the ingredients that explain it. Detail fields are
/// set only where they apply (see ScoreKind).
struct PointScore {
    std::size_t index = 0;
    double value = 0.0;
    ScoreKind kind = ScoreKind::cluster;

    /// Mean dc-dist to the own cluster (cluster / one_cluster_vs_noise).
    std::optional<double> own_mean;
    /// Best opposing mean dc-dist for cluster points; for the one-cluster
    /// case the minimum dc-dist to any noise point.
    std::optional<double> other_mean;
    /// Normalized id of the cluster attaining the minimum in the cluster score.
    std::optional<int> closest_cluster;

    std::optional<double> rho_sparse;     // noise points
    std::optional<double> rho_far;        // noise points
    std::optional<int> sparse_cluster;    // argmin cluster of rho_sparse
    std::optional<int> far_cluster;       // argmin cluster of rho_far
};

struct ScoreReport {
    double disco = 0.0;  // mean of all pointwise values, in [-1, 1]
    std::vector<PointScore> point_scores;
    std::size_t mu = kDefaultMu;
    std::size_t num_clusters = 0;
    std::size_t num_noise = 0;
};

/// Shared per-dataset state for the pointwise score functions: the density
/// graph over the full dataset (clusters and noise together) plus cluster
/// aggregates. Immutable once built; safe to share across threads.
struct ScoreContext {
    const PointSet& points;
    const Clustering& clustering;
    CoreDistances core;
    MrdMst mst;
    DcDistIndex index;
    ClusterStats stats;

    static ScoreContext build(const PointSet& ps, const Clustering& c, std::size_t mu);
};

/// Mean dc-dist from a point (given its dc-dist row) to a cluster. When the
/// point itself belongs to the cluster its own zero entry is part of the
/// mean, taking the definition literally.
double mean_dc_to_cluster(std::span<const double> row,
                          const std::vector<std::size_t>& members);

/// Silhouette-style cluster-point score under dc-dist. Requires x in a
/// cluster and at least two clusters.
double rho_cluster(const ScoreContext& ctx, std::size_t x);

/// Sparseness score of a noise point: its core-distance against each
/// cluster's maximum core-distance, minimized over clusters.
double rho_sparse(const ScoreContext& ctx, std::size_t x);

/// Separation score of a noise point: its minimum dc-dist into each cluster
/// against that cluster's maximum core-distance, minimized over clusters.
double rho_far(const ScoreContext& ctx, std::size_t x);

/// min(rho_sparse, rho_far).
double rho_noise(const ScoreContext& ctx, std::size_t x);

/// Cluster-point score when the clustering has exactly one cluster plus
/// noise: the noise set stands in for the missing opposing cluster.
double rho_cluster_vs_noise(const ScoreContext& ctx, std::size_t x);

/// Full pointwise evaluation plus the aggregate value. Deterministic: the
/// result is a pure function of the point multiset and labels, identical
/// across runs, thread counts, and input permutations.
ScoreReport score(const PointSet& ps, const Clustering& c, std::size_t mu = kDefaultMu);

/// One CSV row per point: index, label, kind, value, then detail columns.
/// Values are written in full precision so the file mean matches the
/// aggregate exactly.
void write_pointwise_csv(std::ostream& out, const ScoreReport& report,
                         const Clustering& c);

}  // namespace disco
