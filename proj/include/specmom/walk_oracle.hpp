#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specmom/plane_tree.hpp"

namespace specmom {

/// Cost guards for exhaustive walk enumeration. Configuration constants, not
/// silent truncations: calls beyond them throw std::invalid_argument.
inline constexpr int kMaxOracleOrder = 6;  // oracle_moment / walks_by_returns
inline constexpr int kMaxCoverOrder = 8;   // count_covering_walks per tree

// One enumerated closed root walk. Vertices carry the preorder ids of the
// covered tree (root = 0); steps are the directed edge traversals in order.
struct CoveringWalk {
    PlaneRootedTree tree;
    std::vector<std::pair<int, int>> steps;
    int returns_to_root = 0;
};

/// Number of 2k-step closed root walks that cover `tree` (every edge passed
/// an even, positive number of times) and obey the leftmost-unopened-edge
/// rule. Returns 0 when k < tree.edge_count().
std::uint64_t count_covering_walks(const PlaneRootedTree& tree, int k);

/// Same search, but materializes every walk in canonical generation order
/// (step to the parent first, then children left to right).
std::vector<CoveringWalk> enumerate_covering_walks(const PlaneRootedTree& tree, int k);

/// Replays the steps of `walk` against its tree and re-checks every walk
/// invariant independently of the generator: closed at the root, edges even
/// and positive, leftmost-unopened rule at every step, up/down traversals
/// matched per edge, and the recorded return count. On failure, `reason`
/// (when given) receives a short description.
bool validate_walk(const CoveringWalk& walk, std::string* reason = nullptr);

/// Brute-force limiting moment for intensity 1: total number of 2k-step
/// walks over all plane rooted trees with 1..k edges. Parallel over trees.
std::uint64_t oracle_moment(int k);

/// Serial reference for oracle_moment.
std::uint64_t oracle_moment_serial(int k);

/// Tally of all 2u-step walks by their number of returns to the root,
/// generated directly by growing the tree as the walk proceeds (edges open
/// left to right, so each step sequence is one distinct walk). Keys with a
/// zero tally are omitted.
std::map<int, std::uint64_t> walks_by_returns(int u);

/// Second route to the same tally: per-tree covering-walk search summed over
/// all trees with at most u edges, parallel over trees.
std::map<int, std::uint64_t> walks_by_returns_per_tree(int u);

}  // namespace specmom
