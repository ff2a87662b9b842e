#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "disco/dc_core.hpp"
#include "disco/errors.hpp"
#include "disco/point_set.hpp"
#include "disco/rng.hpp"
#include "oracles.hpp"

using namespace disco;

namespace {

PointSet line(std::initializer_list<double> xs) {
    std::vector<double> data(xs);
    const std::size_t n = data.size();
    return PointSet(n, 1, std::move(data));
}

}  // namespace

TEST_CASE("pairwise euclidean basics") {
    PointSet ps(2, 2, {0.0, 0.0, 3.0, 4.0});
    SquareMatrix d = pairwise_euclidean(ps);
    CHECK(d.at(0, 1) == 5.0);
    CHECK(d.at(1, 0) == 5.0);
    CHECK(d.at(0, 0) == 0.0);
    CHECK(d.at(1, 1) == 0.0);
}

TEST_CASE("pairwise euclidean matches the per-pair loop") {
    Rng rng(11);
    const PointSet ps = oracle::random_points(rng, 6, 3);
    const SquareMatrix d = pairwise_euclidean(ps);
    const auto ref = oracle::euclidean_matrix(ps);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(d.at(i, j) == ref[i][j]);
        }
    }
}

TEST_CASE("core distances on collinear points") {
    const CoreDistances cd = core_distances(line({0.0, 1.0, 3.0}), 1);
    CHECK(cd.kappa == std::vector<double>{1.0, 1.0, 2.0});
    CHECK(cd.mu == 1);
}

TEST_CASE("duplicates force zero core distance") {
    // mu+1 copies: every copy has mu exact duplicates among the others.
    const std::size_t mu = 3;
    PointSet ps(mu + 1, 2, std::vector<double>(2 * (mu + 1), 7.5));
    const CoreDistances cd = core_distances(ps, mu);
    for (double k : cd.kappa) CHECK(k == 0.0);
}

TEST_CASE("core distances equal the full-sort oracle") {
    Rng rng(5);
    const PointSet ps = oracle::random_points(rng, 10, 2);
    const CoreDistances cd = core_distances(ps, 3);
    CHECK(cd.kappa == oracle::brute_kappa(ps, 3));
}

TEST_CASE("mu out of range fails loudly") {
    const PointSet ps = line({0.0, 1.0, 3.0});
    CHECK_THROWS_AS(core_distances(ps, 3), parameter_error);
    CHECK_THROWS_AS(core_distances(ps, 0), parameter_error);
    CHECK_THROWS_WITH_AS(core_distances(ps, 5), doctest::Contains("mu"),
                         parameter_error);
}

TEST_CASE("mutual reachability basics") {
    SUBCASE("all three terms equal") {
        PointSet ps(2, 1, {0.0, 5.0});
        const CoreDistances cd = core_distances(ps, 1);
        CHECK(cd.kappa == std::vector<double>{5.0, 5.0});
        CHECK(mutual_reachability_at(ps, cd, 0, 1) == 5.0);
    }
    SUBCASE("large kappa dominates adjacent points") {
        const PointSet ps = line({0.0, 0.1, 10.0});
        const CoreDistances cd = core_distances(ps, 2);
        CHECK(cd.kappa[0] == 10.0);
        CHECK(mutual_reachability_at(ps, cd, 0, 1) == 10.0);
    }
}

TEST_CASE("mutual reachability is the elementwise max of the oracle parts") {
    Rng rng(17);
    const PointSet ps = oracle::random_points(rng, 8, 2);
    const CoreDistances cd = core_distances(ps, 2);
    const SquareMatrix m = mutual_reachability(ps, cd);
    const auto ref = oracle::mrd_matrix(ps, 2);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(m.at(i, j) == ref[i][j]);
        }
    }
}

TEST_CASE("mst on three collinear points") {
    const PointSet ps = line({0.0, 1.0, 3.0});
    const MrdMst mst = build_mst(ps, core_distances(ps, 1));
    REQUIRE(mst.edges.size() == 2);
    CHECK(mst.edges[0].a == 0);
    CHECK(mst.edges[0].b == 1);
    CHECK(mst.edges[0].weight == 1.0);
    CHECK(mst.edges[1].a == 1);
    CHECK(mst.edges[1].b == 2);
    CHECK(mst.edges[1].weight == 2.0);
}

TEST_CASE("single point yields an empty mst") {
    PointSet ps(1, 2, {0.0, 0.0});
    CHECK(build_mst(ps, CoreDistances{{0.0}, 1}).edges.empty());
}

TEST_CASE("mst equals the materialized kruskal oracle") {
    Rng rng(23);
    for (int round = 0; round < 10; ++round) {
        const PointSet ps = oracle::random_points(rng, 12, 2);
        const CoreDistances cd = core_distances(ps, 2);
        const MrdMst mst = build_mst(ps, cd);
        const auto ref = oracle::kruskal_mst(ps, cd);
        REQUIRE(mst.edges.size() == ref.size());
        double total = 0.0, ref_total = 0.0;
        for (std::size_t e = 0; e < ref.size(); ++e) {
            CHECK(mst.edges[e].a == ref[e].a);
            CHECK(mst.edges[e].b == ref[e].b);
            CHECK(mst.edges[e].weight == ref[e].weight);
            total += mst.edges[e].weight;
            ref_total += ref[e].weight;
        }
        CHECK(total == ref_total);
    }
}

TEST_CASE("dc_dist basics") {
    const PointSet ps = line({0.0, 1.0, 2.0, 3.0, 4.0});
    const MrdMst mst = build_mst(ps, core_distances(ps, 1));
    const DcDistIndex idx(mst);
    CHECK(dc_dist(idx, 2, 2) == 0.0);
    CHECK(dc_dist(idx, 0, 4) == 1.0);  // every hop on the chain is 1
    CHECK_THROWS_AS(dc_dist(idx, 0, 9), input_error);
}

TEST_CASE("dc_dist never exceeds the direct mutual reachability") {
    Rng rng(31);
    const PointSet ps = oracle::random_points(rng, 10, 2);
    const CoreDistances cd = core_distances(ps, 2);
    const DcDistIndex idx(build_mst(ps, cd));
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            if (i == j) continue;
            CHECK(dc_dist(idx, i, j) <= mutual_reachability_at(ps, cd, i, j));
        }
    }
}

TEST_CASE("dc row equals per-pair queries and has zero self entry") {
    Rng rng(37);
    const PointSet ps = oracle::random_points(rng, 10, 3);
    const DcDistIndex idx(build_mst(ps, core_distances(ps, 2)));
    for (std::size_t i = 0; i < 10; ++i) {
        const std::vector<double> row = dc_rows_from(idx, i);
        CHECK(row[i] == 0.0);
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(row[j] == dc_dist(idx, i, j));
        }
    }
}

TEST_CASE("ultrametric and lower-bound properties") {
    Rng rng(41);
    const PointSet ps = oracle::random_points(rng, 20, 2);
    const CoreDistances cd = core_distances(ps, 3);
    const DcDistIndex idx(build_mst(ps, cd));
    std::vector<std::vector<double>> dc(20);
    for (std::size_t i = 0; i < 20; ++i) dc[i] = dc_rows_from(idx, i);
    for (std::size_t i = 0; i < 20; ++i) {
        for (std::size_t j = 0; j < 20; ++j) {
            if (i != j) CHECK(dc[i][j] >= std::max(cd.kappa[i], cd.kappa[j]));
            CHECK(dc[i][j] == dc[j][i]);
            for (std::size_t l = 0; l < 20; ++l) {
                CHECK(dc[i][j] <= std::max(dc[i][l], dc[l][j]));
            }
        }
    }
}

TEST_CASE("minimax distances are invariant to which minimal tree is used") {
    // A unit grid is full of tied edge weights, so different tie orders give
    // genuinely different minimal trees.
    std::vector<double> data;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            data.push_back(static_cast<double>(x));
            data.push_back(static_cast<double>(y));
        }
    }
    PointSet ps(9, 2, std::move(data));
    const CoreDistances cd = core_distances(ps, 2);
    const auto asc = oracle::kruskal_mst(ps, cd, false);
    const auto desc = oracle::kruskal_mst(ps, cd, true);
    bool same_edges = true;
    for (std::size_t e = 0; e < asc.size(); ++e) {
        if (asc[e].a != desc[e].a || asc[e].b != desc[e].b) same_edges = false;
    }
    CHECK_FALSE(same_edges);

    const DcDistIndex idx(build_mst(ps, cd));
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            const double via_asc = oracle::max_edge_on_tree_path(asc, 9, i, j);
            const double via_desc = oracle::max_edge_on_tree_path(desc, 9, i, j);
            CHECK(via_asc == via_desc);
            CHECK(dc_dist(idx, i, j) == via_asc);
        }
    }
}

TEST_CASE("permutation leaves kappa, weights, and dc values bit-identical") {
    Rng rng(43);
    const PointSet ps = oracle::random_points(rng, 25, 2);
    const CoreDistances cd = core_distances(ps, 3);
    const DcDistIndex idx(build_mst(ps, cd));

    const std::vector<std::size_t> perm = rng.permutation(25);
    std::vector<double> data(25 * 2);
    for (std::size_t i = 0; i < 25; ++i) {
        data[i * 2] = ps(perm[i], 0);
        data[i * 2 + 1] = ps(perm[i], 1);
    }
    PointSet permuted(25, 2, std::move(data));
    const CoreDistances cd2 = core_distances(permuted, 3);
    const MrdMst mst2 = build_mst(permuted, cd2);
    const DcDistIndex idx2(mst2);

    for (std::size_t i = 0; i < 25; ++i) {
        CHECK(cd2.kappa[i] == cd.kappa[perm[i]]);
    }

    std::vector<double> w1, w2;
    for (const MstEdge& e : build_mst(ps, cd).edges) w1.push_back(e.weight);
    for (const MstEdge& e : mst2.edges) w2.push_back(e.weight);
    std::sort(w1.begin(), w1.end());
    std::sort(w2.begin(), w2.end());
    CHECK(w1 == w2);

    for (std::size_t i = 0; i < 25; ++i) {
        const std::vector<double> row = dc_rows_from(idx2, i);
        for (std::size_t j = 0; j < 25; ++j) {
            CHECK(row[j] == dc_dist(idx, perm[i], perm[j]));
        }
    }
}

TEST_CASE("dc_dist equals the minimax closure on small instances") {
    Rng rng(47);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 3 + rng.index(10);
        const std::size_t m = 1 + rng.index(3);
        const std::size_t mu = 1 + rng.index(n - 1);
        const PointSet ps = oracle::random_points(rng, n, m);
        const DcDistIndex idx(build_mst(ps, core_distances(ps, mu)));
        const auto closure = oracle::minimax_closure(oracle::mrd_matrix(ps, mu));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(dc_dist(idx, i, j) == closure[i][j]);
            }
        }
    }
}
