#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "specmom/plane_tree.hpp"
#include "specmom/walk_oracle.hpp"
#include "specmom/walk_table.hpp"

using namespace specmom;

namespace {

PlaneRootedTree tree(const char* parens) { return PlaneRootedTree::from_parens(parens); }

}  // namespace

TEST_CASE("tree counts are the Catalan numbers") {
    const std::vector<std::size_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int e = 0; e <= 8; ++e) {
        CAPTURE(e);
        CHECK(enumerate_trees(e).size() == catalan[e]);
    }
    CHECK_THROWS_AS(enumerate_trees(9), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(-1), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
    const auto trees = enumerate_trees(4);
    for (std::size_t i = 0; i + 1 < trees.size(); ++i)
        CHECK(trees[i].to_parens() < trees[i + 1].to_parens());
    for (const auto& t : trees) CHECK(t.edge_count() == 4);
}

TEST_CASE("parenthesis round trip") {
    for (int e = 0; e <= 5; ++e)
        for (const auto& t : enumerate_trees(e))
            CHECK(PlaneRootedTree::from_parens(t.to_parens()) == t);
    CHECK_THROWS_AS(PlaneRootedTree::from_parens("(()"), std::invalid_argument);
    CHECK_THROWS_AS(PlaneRootedTree::from_parens("))"), std::invalid_argument);
    CHECK_THROWS_AS(PlaneRootedTree::from_parens("(x)"), std::invalid_argument);
}

TEST_CASE("covering-walk counts on small trees") {
    CHECK(count_covering_walks(tree("()"), 1) == 1);   // out and back
    CHECK(count_covering_walks(tree("()"), 2) == 1);   // out-back-out-back
    CHECK(count_covering_walks(tree("()()"), 2) == 1);
    CHECK(count_covering_walks(tree("(())"), 2) == 1);
    CHECK(count_covering_walks(tree("()"), 0) == 0);   // too short to cover
    CHECK(count_covering_walks(tree(""), 0) == 1);     // empty walk on the bare root
    CHECK_THROWS_AS(count_covering_walks(tree("()"), 9), std::invalid_argument);
}

TEST_CASE("every walk of 2k steps covers exactly one tree") {
    // Summing the per-tree counts over trees with 1..k edges must reproduce
    // the direct generation total.
    for (int k = 1; k <= 5; ++k) {
        std::uint64_t per_tree_total = 0;
        for (int e = 1; e <= k; ++e)
            for (const auto& t : enumerate_trees(e)) per_tree_total += count_covering_walks(t, k);
        std::uint64_t direct_total = 0;
        for (const auto& [returns, count] : walks_by_returns(k)) {
            (void)returns;
            direct_total += count;
        }
        CAPTURE(k);
        CHECK(per_tree_total == direct_total);
    }
}

TEST_CASE("oracle moments match the recurrence exactly") {
    const WalkCountTable table = build_walk_table(6, BigRat(1));
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(BigRat(static_cast<long>(oracle_moment(k))) == moment_limit(k, table));
    }
    CHECK_THROWS_AS(oracle_moment(7), std::invalid_argument);
    CHECK_THROWS_AS(oracle_moment(0), std::invalid_argument);
}

TEST_CASE("parallel and serial oracle agree") {
    for (int k = 1; k <= 5; ++k) CHECK(oracle_moment(k) == oracle_moment_serial(k));
}

TEST_CASE("return tallies match the table columns") {
    const WalkCountTable table = build_walk_table(6, BigRat(1));
    for (int u = 0; u <= 6; ++u) {
        const auto tally = walks_by_returns(u);
        for (int v = 0; v <= u; ++v) {
            const auto it = tally.find(v);
            const std::uint64_t count = it == tally.end() ? 0 : it->second;
            CAPTURE(u);
            CAPTURE(v);
            CHECK(table.at(u, v) == BigRat(static_cast<long>(count)));
        }
        for (const auto& [v, count] : tally) {
            CHECK(v >= 0);
            CHECK(v <= u);
            CHECK(count > 0);
        }
    }
}

TEST_CASE("known small tallies") {
    CHECK(walks_by_returns(0) == std::map<int, std::uint64_t>{{0, 1}});
    CHECK(walks_by_returns(1) == std::map<int, std::uint64_t>{{1, 1}});
    CHECK(walks_by_returns(2) == std::map<int, std::uint64_t>{{1, 1}, {2, 2}});
    CHECK_THROWS_AS(walks_by_returns(7), std::invalid_argument);
}

TEST_CASE("both tally routes agree") {
    for (int u = 0; u <= 5; ++u) {
        CAPTURE(u);
        CHECK(walks_by_returns(u) == walks_by_returns_per_tree(u));
    }
}

TEST_CASE("tally totals equal the oracle moments") {
    for (int u = 1; u <= 5; ++u) {
        std::uint64_t total = 0;
        for (const auto& [v, count] : walks_by_returns(u)) {
            (void)v;
            total += count;
        }
        CHECK(total == oracle_moment(u));
    }
}

TEST_CASE("every enumerated walk survives the independent validator") {
    for (int k = 1; k <= 5; ++k)
        for (int e = 1; e <= k; ++e)
            for (const auto& t : enumerate_trees(e)) {
                const auto walks = enumerate_covering_walks(t, k);
                CHECK(walks.size() == count_covering_walks(t, k));
                for (const auto& walk : walks) {
                    std::string reason;
                    const bool ok = validate_walk(walk, &reason);
                    CAPTURE(t.to_parens());
                    CAPTURE(reason);
                    CHECK(ok);
                    CHECK(walk.steps.size() == 2 * static_cast<std::size_t>(k));
                }
            }
}

TEST_CASE("the validator rejects corrupted walks") {
    const auto walks = enumerate_covering_walks(tree("()()"), 3);
    REQUIRE(!walks.empty());

    CoveringWalk wrong_start = walks.front();
    wrong_start.steps.front().first = 1;
    CHECK_FALSE(validate_walk(wrong_start));

    CoveringWalk wrong_returns = walks.front();
    wrong_returns.returns_to_root += 1;
    CHECK_FALSE(validate_walk(wrong_returns));

    CoveringWalk truncated = walks.front();
    truncated.steps.pop_back();
    CHECK_FALSE(validate_walk(truncated));

    // Re-rooting the steps onto a bigger tree leaves an uncovered edge.
    CoveringWalk uncovered = walks.front();
    uncovered.tree = tree("()()()");
    CHECK_FALSE(validate_walk(uncovered));

    // Opening the right child before the left one breaks the leftmost rule.
    CoveringWalk unordered{tree("()()"), {{0, 2}, {2, 0}, {0, 1}, {1, 0}}, 2};
    std::string reason;
    CHECK_FALSE(validate_walk(unordered, &reason));
    CHECK(reason == "opened an edge left of an untouched sibling");
}

TEST_CASE("generation order is deterministic") {
    const auto first = enumerate_covering_walks(tree("(())()"), 4);
    const auto second = enumerate_covering_walks(tree("(())()"), 4);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].steps == second[i].steps);
        CHECK(first[i].returns_to_root == second[i].returns_to_root);
    }
}
