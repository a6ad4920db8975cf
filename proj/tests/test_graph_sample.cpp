#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "specmom/graph_sample.hpp"

using namespace specmom;

TEST_CASE("counter stream reproduces the splitmix64 reference sequence") {
    // Value at counter c = (c+1)-th output of Vigna's splitmix64 from `seed`.
    CHECK(counter_hash64(0, 0) == 16294208416658607535ull);
    CHECK(counter_hash64(0, 1) == 7960286522194355700ull);
    CHECK(counter_hash64(0, 2) == 487617019471545679ull);
    CHECK(counter_hash64(42, 0) == 13679457532755275413ull);
    CHECK(counter_hash64(42, 1) == 2949826092126892291ull);
    CHECK(counter_hash64(42, 2) == 5139283748462763858ull);
    CHECK(counter_uniform01(42, 0) == doctest::Approx(0.7415648787718233).epsilon(1e-15));
    for (int c = 0; c < 1000; ++c) {
        const double u = counter_uniform01(9, c);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("pair index walks the upper triangle row-major") {
    const std::uint32_t n = 7;
    std::uint64_t expected = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) CHECK(pair_index(n, i, j) == expected++);
    CHECK(expected == n * (n - 1) / 2);
}

TEST_CASE("sampling is reproducible and well-formed") {
    const GraphSample a = sample_graph(200, 1.5, 99);
    const GraphSample b = sample_graph(200, 1.5, 99);
    CHECK(a.edges == b.edges);
    CHECK(!sample_graph(200, 1.5, 100).edges.empty());
    CHECK(sample_graph(200, 1.5, 100).edges != a.edges);

    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& [i, j] : a.edges) {
        CHECK(i < j);  // no self-loops, canonical orientation
        CHECK(j < 200);
        CHECK(seen.insert({i, j}).second);  // no duplicates
    }
}

TEST_CASE("parallel and serial samplers are identical") {
    for (std::uint64_t seed : {1ull, 7ull, 123456789ull}) {
        const GraphSample parallel = sample_graph(513, 2.0, seed);
        const GraphSample serial = sample_graph_serial(513, 2.0, seed);
        CHECK(parallel.edges == serial.edges);
    }
}

TEST_CASE("degenerate intensities") {
    CHECK(sample_graph(1, 1.0, 5).edges.empty());  // no pairs at all
    const GraphSample complete = sample_graph(50, 50.0, 7);
    CHECK(complete.edges.size() == 50 * 49 / 2);  // probability 1 per pair

    CHECK_THROWS_AS(sample_graph(10, 11.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_graph(10, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_graph(0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("edge count matches the binomial mean over many seeds") {
    // 4950 pairs at probability 1/100: mean 49.5, per-sample sd ~ 7.0.
    const int seeds = 1000;
    double total = 0.0;
    for (int seed = 0; seed < seeds; ++seed)
        total += static_cast<double>(sample_graph(100, 1.0, 2000 + seed).edges.size());
    const double mean = total / seeds;
    const double sd_of_mean = std::sqrt(4950.0 * 0.01 * 0.99 / seeds);
    CHECK(std::abs(mean - 49.5) <= 3.0 * sd_of_mean);
}

TEST_CASE("component counting") {
    GraphSample empty{5, 1.0, 0, {}};
    CHECK(component_count(empty) == 5);

    CHECK(component_count(sample_graph(20, 20.0, 3)) == 1);  // complete graph

    GraphSample two_edges{4, 1.0, 0, {{0, 1}, {2, 3}}};
    CHECK(component_count(two_edges) == 2);

    GraphSample path{4, 1.0, 0, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(component_count(path) == 1);
}

TEST_CASE("degree statistics") {
    GraphSample empty{6, 1.0, 0, {}};
    const auto histogram = degree_statistics(empty);
    REQUIRE(histogram.size() == 1);
    CHECK(histogram.at(0) == 6);
    CHECK(max_degree(empty) == 0);

    GraphSample star{4, 1.0, 0, {{0, 1}, {0, 2}, {0, 3}}};
    const auto star_hist = degree_statistics(star);
    CHECK(star_hist.at(1) == 3);
    CHECK(star_hist.at(3) == 1);
    CHECK(max_degree(star) == 3);

    std::uint64_t vertices = 0;
    for (const auto& [d, c] : star_hist) {
        (void)d;
        vertices += c;
    }
    CHECK(vertices == 4);
}

TEST_CASE("total variation against the Poisson limit") {
    // A perfect Poisson(0) sample: all degrees zero.
    GraphSample empty{100, 1.0, 0, {}};
    CHECK(tv_distance_to_poisson(degree_statistics(empty), 100, 0.0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // All mass at 0 against Poisson(1): TV = 1 - e^{-1}.
    CHECK(tv_distance_to_poisson(degree_statistics(empty), 100, 1.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));

    // Large sparse sample should be close to Poisson(1).
    const GraphSample big = sample_graph(2000, 1.0, 77);
    CHECK(tv_distance_to_poisson(degree_statistics(big), 2000, 1.0) < 0.08);
}
