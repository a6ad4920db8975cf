#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "specmom/spectrum.hpp"

using namespace specmom;

namespace {

constexpr double kTol = 1e-10;

}  // namespace

TEST_CASE("single edge on two vertices") {
    GraphSample sample{2, 1.0, 0, {{0, 1}}};

    const auto adjacency = spectrum(sample, MatrixKind::adjacency);
    REQUIRE(adjacency.eigenvalues.size() == 2);
    CHECK(adjacency.eigenvalues[0] == doctest::Approx(-1.0).epsilon(kTol));
    CHECK(adjacency.eigenvalues[1] == doctest::Approx(1.0).epsilon(kTol));

    const auto laplacian = spectrum(sample, MatrixKind::laplacian);
    REQUIRE(laplacian.eigenvalues.size() == 2);
    CHECK(laplacian.eigenvalues[0] == doctest::Approx(0.0).epsilon(kTol));
    CHECK(laplacian.eigenvalues[1] == doctest::Approx(2.0).epsilon(kTol));
}

TEST_CASE("path on three vertices") {
    GraphSample sample{3, 1.0, 0, {{0, 1}, {1, 2}}};
    const auto result = spectrum(sample, MatrixKind::adjacency);
    REQUIRE(result.eigenvalues.size() == 3);
    CHECK(result.eigenvalues[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(kTol));
    CHECK(std::abs(result.eigenvalues[1]) < 1e-10);
    CHECK(result.eigenvalues[2] == doctest::Approx(std::sqrt(2.0)).epsilon(kTol));
}

TEST_CASE("adjacency trace identities on a random sample") {
    const GraphSample sample = sample_graph(300, 1.0, 4);
    const auto result = spectrum(sample, MatrixKind::adjacency);
    REQUIRE(result.eigenvalues.size() == 300);

    double sum = 0.0, sum_sq = 0.0;
    double previous = result.eigenvalues.front();
    for (double ev : result.eigenvalues) {
        CHECK(ev >= previous);  // ascending
        previous = ev;
        sum += ev;
        sum_sq += ev * ev;
    }
    CHECK(std::abs(sum) <= 1e-8 * 300);
    const double expected_sq = 2.0 * static_cast<double>(sample.edges.size());
    CHECK(std::abs(sum_sq - expected_sq) <= 1e-8 * expected_sq);
}

TEST_CASE("laplacian spectrum: nonnegative, trace, zero multiplicity") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const GraphSample sample = sample_graph(200, 1.0, 1000 + seed);
        const auto result = spectrum(sample, MatrixKind::laplacian);

        double sum = 0.0;
        int zeros = 0;
        for (double ev : result.eigenvalues) {
            CHECK(ev >= -1e-8);
            sum += ev;
            if (std::abs(ev) < 1e-6) ++zeros;
        }
        const double expected = 2.0 * static_cast<double>(sample.edges.size());
        CHECK(std::abs(sum - expected) <= 1e-10 * std::max(1.0, expected));
        CHECK(zeros == component_count(sample));
    }
}

TEST_CASE("guards") {
    GraphSample tiny{1, 1.0, 0, {}};
    const auto result = spectrum(tiny, MatrixKind::adjacency);
    REQUIRE(result.eigenvalues.size() == 1);
    CHECK(result.eigenvalues[0] == 0.0);

    GraphSample oversized{kMaxDenseOrder + 1, 1.0, 0, {}};
    CHECK_THROWS_AS(spectrum(oversized, MatrixKind::adjacency), std::invalid_argument);
}
