#include "specmom/walk_oracle.hpp"

#include <stdexcept>

namespace specmom {

namespace {

// Array form of a plane rooted tree under preorder ids; the edge to the
// parent of vertex v is identified by v itself.
struct FlatTree {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> depth;

    explicit FlatTree(const PlaneRootedTree& tree) {
        parent.push_back(-1);
        children.emplace_back();
        depth.push_back(0);
        build(tree, 0);
    }

    void build(const PlaneRootedTree& node, int id) {
        for (const auto& child : node.children) {
            const int cid = static_cast<int>(parent.size());
            parent.push_back(id);
            children.emplace_back();
            depth.push_back(depth[id] + 1);
            children[id].push_back(cid);
            build(child, cid);
        }
    }

    int vertex_count() const { return static_cast<int>(parent.size()); }
};

// Depth-first search over all rule-compliant walks on a fixed tree.
// At each position the walk may step onto any already-passed incident edge,
// or open the leftmost untouched child edge; untouched edges are opened left
// to right, so touched children always form a prefix of the child list.
struct CoverSearch {
    const FlatTree& tree;
    int total_steps;
    std::vector<int> passes;  // traversals of the parent edge of each vertex
    int untouched;
    std::uint64_t found = 0;

    std::map<int, std::uint64_t>* returns_tally = nullptr;
    std::vector<CoveringWalk>* sink = nullptr;
    const PlaneRootedTree* source_tree = nullptr;
    std::vector<std::pair<int, int>> trace;

    CoverSearch(const FlatTree& t, int k)
        : tree(t), total_steps(2 * k), passes(t.vertex_count(), 0),
          untouched(t.vertex_count() - 1) {}

    void run() { dfs(0, 0, 0); }

    void dfs(int cur, int steps_used, int returns) {
        if (steps_used == total_steps) {
            if (cur == 0 && untouched == 0) {
                ++found;
                if (returns_tally) (*returns_tally)[returns] += 1;
                if (sink) sink->push_back({*source_tree, trace, returns});
            }
            return;
        }
        // Each untouched edge still costs two traversals and the walk must
        // climb back to the root.
        if (total_steps - steps_used < tree.depth[cur] + 2 * untouched) return;

        if (cur != 0) step(cur, tree.parent[cur], cur, steps_used, returns);
        for (int child : tree.children[cur]) {
            if (passes[child] > 0) {
                step(cur, child, child, steps_used, returns);
            } else {
                // Leftmost untouched child; later siblings stay closed.
                --untouched;
                step(cur, child, child, steps_used, returns);
                ++untouched;
                break;
            }
        }
    }

    void step(int from, int to, int edge, int steps_used, int returns) {
        ++passes[edge];
        if (sink) trace.emplace_back(from, to);
        dfs(to, steps_used + 1, returns + (to == 0 ? 1 : 0));
        if (sink) trace.pop_back();
        --passes[edge];
    }
};

void check_cover_order(int k) {
    if (k < 0 || k > kMaxCoverOrder)
        throw std::invalid_argument("walk order exceeds the covering-walk guard");
}

void check_oracle_order(int k, int low) {
    if (k < low || k > kMaxOracleOrder)
        throw std::invalid_argument("walk order exceeds the oracle guard");
}

std::vector<PlaneRootedTree> trees_up_to(int max_edges) {
    std::vector<PlaneRootedTree> all;
    for (int e = 1; e <= max_edges; ++e)
        for (auto& tree : enumerate_trees(e)) all.push_back(std::move(tree));
    return all;
}

}  // namespace

std::uint64_t count_covering_walks(const PlaneRootedTree& tree, int k) {
    check_cover_order(k);
    if (k < tree.edge_count()) return 0;
    const FlatTree flat(tree);
    CoverSearch search(flat, k);
    search.run();
    return search.found;
}

std::vector<CoveringWalk> enumerate_covering_walks(const PlaneRootedTree& tree, int k) {
    check_cover_order(k);
    std::vector<CoveringWalk> walks;
    if (k < tree.edge_count()) return walks;
    const FlatTree flat(tree);
    CoverSearch search(flat, k);
    search.sink = &walks;
    search.source_tree = &tree;
    search.run();
    return walks;
}

std::uint64_t oracle_moment(int k) {
    check_oracle_order(k, 1);
    const auto trees = trees_up_to(k);
    std::vector<std::uint64_t> per_tree(trees.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < trees.size(); ++i)
        per_tree[i] = count_covering_walks(trees[i], k);
    std::uint64_t total = 0;
    for (std::uint64_t c : per_tree) total += c;
    return total;
}

std::uint64_t oracle_moment_serial(int k) {
    check_oracle_order(k, 1);
    std::uint64_t total = 0;
    for (const auto& tree : trees_up_to(k)) total += count_covering_walks(tree, k);
    return total;
}

namespace {

// Direct generation: the tree is grown while the walk runs. A new edge is
// appended to the right of the current vertex's children, which realizes the
// leftmost-unopened rule against the final tree; every step sequence is
// therefore one distinct (tree, walk) pair.
struct GrowSearch {
    int total_steps;
    std::vector<int> parent{-1};
    std::vector<std::vector<int>> children{{}};
    std::vector<int> depth{0};
    std::map<int, std::uint64_t> tally;

    explicit GrowSearch(int u) : total_steps(2 * u) {}

    void dfs(int cur, int steps_used, int returns) {
        if (steps_used == total_steps) {
            if (cur == 0) tally[returns] += 1;
            return;
        }
        const int remaining = total_steps - steps_used;
        if (remaining < depth[cur]) return;

        if (cur != 0) dfs(parent[cur], steps_used + 1, returns + (parent[cur] == 0 ? 1 : 0));
        for (int child : children[cur]) dfs(child, steps_used + 1, returns);
        if (remaining >= depth[cur] + 2) {
            const int fresh = static_cast<int>(parent.size());
            parent.push_back(cur);
            children.emplace_back();
            depth.push_back(depth[cur] + 1);
            children[cur].push_back(fresh);
            dfs(fresh, steps_used + 1, returns);
            children[cur].pop_back();
            parent.pop_back();
            children.pop_back();
            depth.pop_back();
        }
    }
};

}  // namespace

std::map<int, std::uint64_t> walks_by_returns(int u) {
    check_oracle_order(u, 0);
    if (u == 0) return {{0, 1}};
    GrowSearch search(u);
    search.dfs(0, 0, 0);
    return search.tally;
}

std::map<int, std::uint64_t> walks_by_returns_per_tree(int u) {
    check_oracle_order(u, 0);
    if (u == 0) return {{0, 1}};
    const auto trees = trees_up_to(u);
    std::vector<std::map<int, std::uint64_t>> per_tree(trees.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const FlatTree flat(trees[i]);
        CoverSearch search(flat, u);
        search.returns_tally = &per_tree[i];
        search.run();
    }
    std::map<int, std::uint64_t> merged;
    for (const auto& part : per_tree)
        for (const auto& [returns, count] : part) merged[returns] += count;
    return merged;
}

bool validate_walk(const CoveringWalk& walk, std::string* reason) {
    const auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };

    const FlatTree flat(walk.tree);
    if (walk.steps.empty())
        return walk.tree.children.empty() && walk.returns_to_root == 0
                   ? true
                   : fail("empty step list on a nonempty tree");
    if (walk.steps.size() % 2 != 0) return fail("odd number of steps");
    if (walk.steps.front().first != 0) return fail("walk does not start at the root");
    if (walk.steps.back().second != 0) return fail("walk does not end at the root");

    std::vector<int> down(flat.vertex_count(), 0), up(flat.vertex_count(), 0);
    int at = 0, returns = 0;
    for (const auto& [from, to] : walk.steps) {
        if (from != at) return fail("steps are not contiguous");
        int edge;
        bool downward;
        if (to >= 0 && to < flat.vertex_count() && flat.parent[to] == from) {
            edge = to;
            downward = true;
        } else if (from >= 0 && from < flat.vertex_count() && flat.parent[from] == to) {
            edge = from;
            downward = false;
        } else {
            return fail("step is not along a tree edge");
        }
        if (down[edge] + up[edge] == 0) {
            // Opening move: must go down the leftmost untouched child edge.
            if (!downward) return fail("edge first traversed upward");
            for (int sibling : flat.children[from]) {
                if (sibling == to) break;
                if (down[sibling] + up[sibling] == 0)
                    return fail("opened an edge left of an untouched sibling");
            }
        }
        (downward ? down[edge] : up[edge]) += 1;
        at = to;
        if (to == 0) ++returns;
    }
    for (int v = 1; v < flat.vertex_count(); ++v) {
        const int passes = down[v] + up[v];
        if (passes == 0) return fail("tree edge never traversed");
        if (passes % 2 != 0) return fail("tree edge traversed an odd number of times");
        if (down[v] != up[v]) return fail("downward and upward traversals unmatched");
    }
    if (returns != walk.returns_to_root) return fail("recorded return count is wrong");
    return true;
}

}  // namespace specmom
