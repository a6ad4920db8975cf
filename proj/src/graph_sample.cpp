#include "specmom/graph_sample.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace specmom {

std::uint64_t counter_hash64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double counter_uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(counter_hash64(seed, counter) >> 11) * 0x1.0p-53;
}

std::uint64_t pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    const std::uint64_t row = i, size = n;
    return row * (2 * size - row - 1) / 2 + (j - i - 1);
}

namespace {

void validate_sample_args(std::uint32_t n, double intensity) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (!(intensity > 0.0) || intensity > static_cast<double>(n))
        throw std::invalid_argument("intensity must lie in (0, n]");
}

// Edge decisions for one row i, appended in increasing j.
void sample_row(std::uint32_t n, double threshold, std::uint64_t seed, std::uint32_t i,
                std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
    for (std::uint32_t j = i + 1; j < n; ++j)
        if (counter_uniform01(seed, pair_index(n, i, j)) < threshold) out.emplace_back(i, j);
}

}  // namespace

GraphSample sample_graph(std::uint32_t n, double intensity, std::uint64_t seed) {
    validate_sample_args(n, intensity);
    const double threshold = intensity / static_cast<double>(n);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::uint32_t i = 0; i < n; ++i) sample_row(n, threshold, seed, i, rows[i]);

    GraphSample sample{n, intensity, seed, {}};
    for (const auto& row : rows)
        sample.edges.insert(sample.edges.end(), row.begin(), row.end());
    return sample;
}

GraphSample sample_graph_serial(std::uint32_t n, double intensity, std::uint64_t seed) {
    validate_sample_args(n, intensity);
    const double threshold = intensity / static_cast<double>(n);
    GraphSample sample{n, intensity, seed, {}};
    for (std::uint32_t i = 0; i < n; ++i) sample_row(n, threshold, seed, i, sample.edges);
    return sample;
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(std::uint32_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

int component_count(const GraphSample& sample) {
    UnionFind uf(sample.n);
    int components = static_cast<int>(sample.n);
    for (const auto& [i, j] : sample.edges)
        if (uf.unite(i, j)) --components;
    return components;
}

std::map<std::uint32_t, std::uint64_t> degree_statistics(const GraphSample& sample) {
    std::vector<std::uint32_t> degree(sample.n, 0);
    for (const auto& [i, j] : sample.edges) {
        ++degree[i];
        ++degree[j];
    }
    std::map<std::uint32_t, std::uint64_t> histogram;
    for (std::uint32_t d : degree) histogram[d] += 1;
    return histogram;
}

std::uint32_t max_degree(const GraphSample& sample) {
    const auto histogram = degree_statistics(sample);
    return histogram.empty() ? 0 : histogram.rbegin()->first;
}

double tv_distance_to_poisson(const std::map<std::uint32_t, std::uint64_t>& histogram,
                              std::uint64_t vertex_count, double mean) {
    if (vertex_count == 0) throw std::invalid_argument("empty degree histogram");
    const std::uint32_t top = histogram.empty() ? 0 : histogram.rbegin()->first;
    double pmf = std::exp(-mean);  // Poisson(mean) at 0, advanced iteratively
    double tail = 1.0;
    double tv = 0.0;
    for (std::uint32_t d = 0; d <= top; ++d) {
        const auto it = histogram.find(d);
        const double empirical =
            it == histogram.end() ? 0.0
                                  : static_cast<double>(it->second) / static_cast<double>(vertex_count);
        tv += std::abs(empirical - pmf);
        tail -= pmf;
        pmf *= mean / static_cast<double>(d + 1);
    }
    tv += std::max(tail, 0.0);  // Poisson mass above the largest observed degree
    return tv / 2.0;
}

}  // namespace specmom
