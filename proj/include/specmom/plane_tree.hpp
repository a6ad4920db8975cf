#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace specmom {

/// Enumeration guard: plane rooted trees with more edges than this are never
/// generated (the count is the Catalan number, so it explodes quickly).
inline constexpr int kMaxTreeEdges = 8;

// Rooted tree with a significant left-to-right child order (the plane
// embedding). Equality is structural, order included.
struct PlaneRootedTree {
    std::vector<PlaneRootedTree> children;

    int edge_count() const;

    /// Balanced-parenthesis encoding: "(...)...": one "(...)" per child
    /// subtree, in plane order. The root contributes no parentheses.
    std::string to_parens() const;

    /// Inverse of to_parens(); throws std::invalid_argument on malformed input.
    static PlaneRootedTree from_parens(std::string_view text);

    bool operator==(const PlaneRootedTree& other) const = default;
};

/// All plane rooted trees with exactly edge_count edges, in lexicographic
/// order of their parenthesis encoding ('(' < ')'). The list length is the
/// edge_count-th Catalan number. Throws std::invalid_argument beyond the
/// enumeration guard.
std::vector<PlaneRootedTree> enumerate_trees(int edge_count);

}  // namespace specmom
