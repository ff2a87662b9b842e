// Independent reference implementations used only by tests: naive loops and
// matrix algorithms kept deliberately separate from the library's code paths.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disco/clustering.hpp"
#include "disco/dc_core.hpp"
#include "disco/point_set.hpp"
#include "disco/rng.hpp"

namespace disco::oracle {

using Matrix = std::vector<std::vector<double>>;

Matrix euclidean_matrix(const PointSet& ps);

// Full sort of each point's n-1 distances, kappa = the mu-th smallest.
std::vector<double> brute_kappa(const PointSet& ps, std::size_t mu);

Matrix mrd_matrix(const PointSet& ps, std::size_t mu);

// Kruskal over the fully materialized, globally sorted edge list.
// reverse_ties flips the index order among equal-weight edges to exercise a
// different (still minimal) spanning tree.
std::vector<MstEdge> kruskal_mst(const PointSet& ps, const CoreDistances& cd,
                                 bool reverse_ties = false);

// Floyd-Warshall style minimax closure iterated to a fixpoint.
Matrix minimax_closure(Matrix d);

double max_edge_on_tree_path(const std::vector<MstEdge>& edges, std::size_t n,
                             std::size_t a, std::size_t b);

// Literal transcription of the score formulas evaluated from the closure
// matrix with plain index-order loops.
struct NaiveScore {
    double disco = 0.0;
    std::vector<double> values;
};
NaiveScore naive_disco(const PointSet& ps, const Clustering& c, std::size_t mu);

// Pair-counting ARI (noise as singletons) without a contingency table.
double brute_ari(std::span<const int> a, std::span<const int> b);

// Fuzz helpers.
PointSet random_points(Rng& rng, std::size_t n, std::size_t m, double scale = 1.0);
// max_label -1 gives all-noise labelings a chance too.
std::vector<int> random_labels(Rng& rng, std::size_t n, int max_label,
                               double noise_prob);

}  // namespace disco::oracle
