#include "specmom/plane_tree.hpp"

#include <stdexcept>

namespace specmom {

int PlaneRootedTree::edge_count() const {
    int total = 0;
    for (const auto& child : children) total += 1 + child.edge_count();
    return total;
}

std::string PlaneRootedTree::to_parens() const {
    std::string out;
    for (const auto& child : children) {
        out += '(';
        out += child.to_parens();
        out += ')';
    }
    return out;
}

PlaneRootedTree PlaneRootedTree::from_parens(std::string_view text) {
    PlaneRootedTree root;
    std::vector<PlaneRootedTree*> stack{&root};
    for (char c : text) {
        if (c == '(') {
            stack.back()->children.emplace_back();
            stack.push_back(&stack.back()->children.back());
        } else if (c == ')') {
            if (stack.size() < 2) throw std::invalid_argument("unbalanced ')'");
            stack.pop_back();
        } else {
            throw std::invalid_argument("tree encoding may contain only parentheses");
        }
    }
    if (stack.size() != 1) throw std::invalid_argument("unbalanced '('");
    return root;
}

namespace {

void generate(std::string& word, int open_used, int close_used, int edges,
              std::vector<PlaneRootedTree>& out) {
    if (open_used == edges && close_used == edges) {
        out.push_back(PlaneRootedTree::from_parens(word));
        return;
    }
    // '(' before ')' keeps the output lexicographic.
    if (open_used < edges) {
        word.push_back('(');
        generate(word, open_used + 1, close_used, edges, out);
        word.pop_back();
    }
    if (close_used < open_used) {
        word.push_back(')');
        generate(word, open_used, close_used + 1, edges, out);
        word.pop_back();
    }
}

}  // namespace

std::vector<PlaneRootedTree> enumerate_trees(int edge_count) {
    if (edge_count < 0) throw std::invalid_argument("edge_count must be nonnegative");
    if (edge_count > kMaxTreeEdges)
        throw std::invalid_argument("edge_count exceeds the enumeration guard");
    std::vector<PlaneRootedTree> out;
    std::string word;
    word.reserve(2 * edge_count);
    generate(word, 0, 0, edge_count, out);
    return out;
}

}  // namespace specmom
