#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace muperm {

// Canonical level sequences of all rooted trees on n vertices, generated with
// the classic successor rule (Beyer-Hedetniemi): start from the path
// (1,2,...,n); to step, take the last position p with level > 2, find its
// would-be parent level position q, and tile the tail from p onward with the
// segment starting at q.
inline std::vector<std::vector<int>> rooted_tree_level_sequences(int n) {
    if (n < 1) throw precondition_error("tree order must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        out.push_back(levels);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[static_cast<std::size_t>(i)] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[static_cast<std::size_t>(i)] == levels[static_cast<std::size_t>(p)] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
    }
    return out;
}

// Vertex i+1 is the i-th entry of the level sequence; its parent is the
// nearest earlier position one level up.
inline LabeledGraph tree_from_level_sequence(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<Edge> edges;
    edges.reserve(levels.size());
    for (int i = 1; i < n; ++i) {
        int parent = -1;
        for (int j = i - 1; j >= 0; --j)
            if (levels[static_cast<std::size_t>(j)] == levels[static_cast<std::size_t>(i)] - 1) {
                parent = j;
                break;
            }
        if (parent < 0) throw precondition_error("malformed level sequence");
        edges.push_back(make_edge(parent + 1, i + 1));
    }
    return LabeledGraph(n, std::move(edges));
}

// Isomorphism key: the smallest parenthesized subtree encoding over every
// choice of root. Two trees are isomorphic exactly when the keys match.
inline std::string free_tree_canonical_form(const LabeledGraph& tree) {
    if (!tree.is_tree()) throw precondition_error("canonical form requires a tree");
    std::function<std::string(int, int)> encode = [&](int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : tree.adjacency()[static_cast<std::size_t>(v)])
            if (w != parent) kids.push_back(encode(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ')';
        return s;
    };
    std::string best;
    for (int r = 1; r <= tree.order(); ++r) {
        std::string s = encode(r, 0);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

// One representative per isomorphism class, ordered by canonical key.
inline std::vector<LabeledGraph> all_free_trees(int n) {
    std::map<std::string, LabeledGraph> classes;
    for (const auto& levels : rooted_tree_level_sequences(n)) {
        LabeledGraph tree = tree_from_level_sequence(levels);
        std::string key = free_tree_canonical_form(tree);
        classes.emplace(std::move(key), std::move(tree));
    }
    std::vector<LabeledGraph> out;
    out.reserve(classes.size());
    for (auto& [key, tree] : classes) out.push_back(std::move(tree));
    return out;
}

// Standard Pruefer decode; the code has length n-2 with entries in {1..n}.
inline LabeledGraph tree_from_pruefer(const std::vector<int>& code, int n) {
    if (n < 1) throw precondition_error("tree order must be >= 1");
    if (static_cast<int>(code.size()) != std::max(0, n - 2)) throw precondition_error("pruefer code has wrong length");
    if (n == 1) return LabeledGraph(1, {});

    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int v : code) {
        if (v < 1 || v > n) throw precondition_error("pruefer code entry out of range");
        ++degree[static_cast<std::size_t>(v)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int v : code) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.push_back(make_edge(leaf, v));
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    edges.push_back(make_edge(a, b));
    return LabeledGraph(n, std::move(edges));
}

}  // namespace muperm
