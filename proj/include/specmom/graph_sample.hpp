#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace specmom {

// One realization of the sparse random graph on n vertices: every unordered
// pair {i, j} is an edge independently with probability intensity / n.
// Reproducible: the edge set is a pure function of (n, intensity, seed).
struct GraphSample {
    std::uint32_t n = 0;
    double intensity = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted
};

/// Counter-based stream (splitmix64 output function): the value at counter c
/// is the (c+1)-th output of Vigna's splitmix64 started from `seed`. Pure in
/// (seed, counter), so pair decisions are order-independent.
std::uint64_t counter_hash64(std::uint64_t seed, std::uint64_t counter);

/// counter_hash64 mapped to [0, 1) with 53 random bits.
double counter_uniform01(std::uint64_t seed, std::uint64_t counter);

/// Flat index of the pair (i, j), i < j, in row-major upper-triangle order;
/// used as the RNG counter for that pair's edge decision.
std::uint64_t pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j);

/// Samples the random graph. Requires n >= 1 and 0 < intensity <= n.
/// Parallel over rows when compiled with OpenMP; the edge set is identical
/// to the serial build either way.
GraphSample sample_graph(std::uint32_t n, double intensity, std::uint64_t seed);

/// Serial reference for sample_graph.
GraphSample sample_graph_serial(std::uint32_t n, double intensity, std::uint64_t seed);

/// Connected components via union-find over the edge list.
int component_count(const GraphSample& sample);

/// Empirical degree distribution: degree -> number of vertices.
std::map<std::uint32_t, std::uint64_t> degree_statistics(const GraphSample& sample);

std::uint32_t max_degree(const GraphSample& sample);

/// Total-variation distance between the empirical degree distribution and
/// Poisson(mean), with the Poisson tail beyond the largest observed degree
/// accounted for.
double tv_distance_to_poisson(const std::map<std::uint32_t, std::uint64_t>& histogram,
                              std::uint64_t vertex_count, double mean);

}  // namespace specmom
