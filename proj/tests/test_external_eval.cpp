#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "disco/errors.hpp"
#include "disco/external_eval.hpp"
#include "disco/rng.hpp"
#include "oracles.hpp"

using namespace disco;

TEST_CASE("noise becomes fresh singleton labels") {
    SUBCASE("fresh labels start above the maximum") {
        const std::vector<int> in = {0, -1, 2, -1};
        CHECK(noise_to_singletons(in) == std::vector<int>{0, 3, 2, 4});
    }
    SUBCASE("no noise leaves labels untouched") {
        const std::vector<int> in = {5, 1, 5};
        CHECK(noise_to_singletons(in) == in);
    }
    SUBCASE("all noise becomes all singletons") {
        const std::vector<int> in = {-1, -1, -1};
        CHECK(noise_to_singletons(in) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("labels below -1 are rejected") {
        const std::vector<int> in = {0, -2};
        CHECK_THROWS_AS(noise_to_singletons(in), label_error);
    }
}

TEST_CASE("identical partitions have index one") {
    const std::vector<int> a = {0, 0, 1, 1, 2};
    CHECK(adjusted_rand_index(a, a) == 1.0);
    const std::vector<int> b = {7, 7, 3, 3, 9};  // same partition, new names
    CHECK(adjusted_rand_index(a, b) == 1.0);
}

TEST_CASE("handmade four-point partitions") {
    // (0,0,1,1) vs (0,0,0,1): the adjustment exactly cancels the agreement,
    // leaving 0. Shrinking the merge to (0,0,1,2) instead gives 4/7.
    const std::vector<int> a = {0, 0, 1, 1};
    const std::vector<int> merged = {0, 0, 0, 1};
    const std::vector<int> split = {0, 0, 1, 2};
    CHECK(adjusted_rand_index(a, merged) == 0.0);
    CHECK(adjusted_rand_index(a, split) == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
    CHECK(oracle::brute_ari(a, merged) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(oracle::brute_ari(a, split) == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("degenerate partitions") {
    SUBCASE("all singletons against one block") {
        const std::vector<int> singles = {0, 1, 2, 3};
        const std::vector<int> block = {0, 0, 0, 0};
        CHECK(adjusted_rand_index(singles, block) == 0.0);
    }
    SUBCASE("all singletons on both sides") {
        const std::vector<int> a = {0, 1, 2, 3};
        const std::vector<int> b = {3, 2, 1, 0};
        CHECK(adjusted_rand_index(a, b) == 1.0);
    }
    SUBCASE("single point") {
        const std::vector<int> a = {0};
        const std::vector<int> b = {-1};
        CHECK(adjusted_rand_index(a, b) == 1.0);
    }
}

TEST_CASE("noise handling in the index") {
    // Noise points count as singletons, so labeling them identically on both
    // sides still gives 1 only through the singleton conversion.
    const std::vector<int> a = {0, 0, 1, -1, -1};
    const std::vector<int> b = {4, 4, 2, -1, -1};
    CHECK(adjusted_rand_index(a, b) == 1.0);

    const std::vector<int> c = {0, 0, 1, 1, 1};
    CHECK(adjusted_rand_index(a, c) < 1.0);
}

TEST_CASE("index is symmetric and bounded") {
    Rng rng(19);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng.index(8);
        const std::vector<int> a =
            oracle::random_labels(rng, n, static_cast<int>(rng.index(4)) - 1, 0.25);
        const std::vector<int> b =
            oracle::random_labels(rng, n, static_cast<int>(rng.index(4)) - 1, 0.25);
        const double ab = adjusted_rand_index(a, b);
        CHECK(ab == adjusted_rand_index(b, a));
        CHECK(std::isfinite(ab));
        CHECK(ab <= 1.0);
    }
}

TEST_CASE("index matches the pair-counting oracle") {
    Rng rng(23);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 2 + rng.index(7);
        const std::vector<int> a =
            oracle::random_labels(rng, n, static_cast<int>(rng.index(4)) - 1, 0.2);
        const std::vector<int> b =
            oracle::random_labels(rng, n, static_cast<int>(rng.index(4)) - 1, 0.2);
        const double got = adjusted_rand_index(a, b);
        const double want = oracle::brute_ari(a, b);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("index input validation") {
    const std::vector<int> a = {0, 1};
    const std::vector<int> longer = {0, 1, 2};
    const std::vector<int> empty;
    CHECK_THROWS_AS(adjusted_rand_index(a, longer), label_error);
    CHECK_THROWS_AS(adjusted_rand_index(empty, empty), label_error);
}

TEST_CASE("pearson on exact linear relationships") {
    const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> up, down;
    for (double x : xs) {
        up.push_back(2.0 * x + 1.0);
        down.push_back(-x);
    }
    CHECK(pearson(xs, up) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pearson(xs, down) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("pearson on a worked example") {
    const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0, 5.0};
    const std::vector<double> ys = {2.0, 1.0, 4.0, 3.0, 5.0};
    // cov = 1.6, sd_x = sqrt(2), sd_y = sqrt(2) under either normalization.
    CHECK(pearson(xs, ys) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("pearson is invariant under affine maps with positive slope") {
    Rng rng(31);
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(rng.normal());
        ys.push_back(rng.normal());
    }
    const double base = pearson(xs, ys);
    std::vector<double> xs2, ys2;
    for (int i = 0; i < 20; ++i) {
        xs2.push_back(3.0 * xs[i] - 7.0);
        ys2.push_back(0.5 * ys[i] + 2.0);
    }
    CHECK(pearson(xs2, ys2) == doctest::Approx(base).epsilon(1e-12));
    // Flipping one side flips the sign.
    for (double& y : ys2) y = -y;
    CHECK(pearson(xs2, ys2) == doctest::Approx(-base).epsilon(1e-12));
}

TEST_CASE("pearson error conditions") {
    const std::vector<double> xs = {1.0, 2.0, 3.0};
    const std::vector<double> flat = {4.0, 4.0, 4.0};
    const std::vector<double> shorter = {1.0, 2.0};
    const std::vector<double> one = {1.0};
    CHECK_THROWS_AS(pearson(xs, flat), parameter_error);
    CHECK_THROWS_AS(pearson(flat, xs), parameter_error);
    CHECK_THROWS_AS(pearson(xs, shorter), label_error);
    CHECK_THROWS_AS(pearson(one, one), parameter_error);
}
