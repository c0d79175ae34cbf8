#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "io.hpp"

namespace muperm {

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int u, int v) {
    if (u == v) throw precondition_error("loop edge is not allowed");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on the vertex set {1..n}. The vertex ids double as
// the labels, so a graph value is a labeled graph by construction.
class LabeledGraph {
public:
    LabeledGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw precondition_error("graph needs at least one vertex");
        for (auto& e : edges_) e = make_edge(e.first, e.second);
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& [u, v] = edges_[i];
            if (u < 1 || v > n_) throw precondition_error("edge endpoint out of range");
            if (i > 0 && edges_[i] == edges_[i - 1]) throw precondition_error("duplicate edge");
        }
        adjacency_.assign(static_cast<std::size_t>(n_) + 1, {});
        for (const auto& [u, v] : edges_) {
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // 1-based; index 0 unused. Neighbor lists sorted ascending.
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

    int degree(int v) const { return static_cast<int>(adjacency_.at(static_cast<std::size_t>(v)).size()); }

    bool has_edge(int u, int v) const {
        return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
    }

    bool is_connected() const {
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int visited = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++visited;
            for (int w : adjacency_[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        return visited == n_;
    }

    bool is_acyclic() const {
        std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
        for (int v = 0; v <= n_; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        for (const auto& [u, v] : edges_) {
            const int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[static_cast<std::size_t>(ru)] = rv;
        }
        return true;
    }

    bool is_tree() const { return static_cast<int>(edges_.size()) == n_ - 1 && is_connected(); }

    bool operator==(const LabeledGraph&) const = default;

    // Format: the vertex count n, then one "u v" pair per edge (1-based ids),
    // whitespace separated; '#' comments.
    static LabeledGraph parse(std::istream& in) {
        const int n = detail::parse_count(detail::next_token(in), "graph file");
        std::vector<Edge> edges;
        for (;;) {
            const std::string u_tok = detail::next_token(in);
            if (u_tok.empty()) break;
            const std::string v_tok = detail::next_token(in);
            if (v_tok.empty()) throw parse_error("graph file: dangling edge endpoint");
            edges.emplace_back(detail::parse_count(u_tok, "graph file"), detail::parse_count(v_tok, "graph file"));
        }
        return LabeledGraph(n, std::move(edges));
    }

    static LabeledGraph load(const std::string& path) {
        auto in = detail::open_file(path);
        return parse(in);
    }

    // Path whose t-th vertex carries label sequence[t]; the sequence must be
    // a permutation of {1..m}.
    static LabeledGraph path_from_sequence(const std::vector<int>& sequence) {
        const int m = static_cast<int>(sequence.size());
        if (m < 1) throw precondition_error("path sequence must be nonempty");
        std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
        for (int v : sequence) {
            if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
                throw precondition_error("path sequence is not a permutation of {1..m}");
            seen[static_cast<std::size_t>(v)] = true;
        }
        std::vector<Edge> edges;
        edges.reserve(sequence.size());
        for (std::size_t t = 0; t + 1 < sequence.size(); ++t) edges.push_back(make_edge(sequence[t], sequence[t + 1]));
        return LabeledGraph(m, std::move(edges));
    }

    static LabeledGraph complete(int n) {
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
        return LabeledGraph(n, std::move(edges));
    }

    static LabeledGraph path(int n) {
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
        return LabeledGraph(n, std::move(edges));
    }

    // Graph on the same vertex count with every vertex v renamed label[v];
    // label must be a bijection {1..n} -> {1..n} given as a vector indexed by
    // vertex (slot 0 unused).
    LabeledGraph relabeled(const std::vector<int>& label) const {
        if (static_cast<int>(label.size()) != n_ + 1) throw precondition_error("label map has wrong size");
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        for (int v = 1; v <= n_; ++v) {
            const int l = label[static_cast<std::size_t>(v)];
            if (l < 1 || l > n_ || seen[static_cast<std::size_t>(l)])
                throw precondition_error("label map is not a bijection");
            seen[static_cast<std::size_t>(l)] = true;
        }
        std::vector<Edge> edges;
        edges.reserve(edges_.size());
        for (const auto& [u, v] : edges_)
            edges.push_back(make_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]));
        return LabeledGraph(n_, std::move(edges));
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

struct CrossingWitness {
    Edge first, second;
};

struct MuLabelingResult {
    bool valid = true;
    std::optional<CrossingWitness> witness;
    explicit operator bool() const { return valid; }
};

// The labeling predicate: for every pair of vertex-disjoint edges {i,j} and
// {k,l} written with i<j, k<l, i<k, either i<j<k<l (separated) or i<k<l<j
// (nested) must hold; i<k<j<l is a crossing. Edges sharing a vertex impose no
// constraint. On failure the first crossing pair in sorted edge order is the
// witness.
inline MuLabelingResult is_mu_labeling(const LabeledGraph& g) {
    const auto& es = g.edges();
    for (std::size_t p = 0; p < es.size(); ++p) {
        for (std::size_t q = p + 1; q < es.size(); ++q) {
            int i = es[p].first, j = es[p].second;
            int k = es[q].first, l = es[q].second;
            if (i == k || i == l || j == k || j == l) continue;
            if (k < i) {
                std::swap(i, k);
                std::swap(j, l);
            }
            if (j < k || l < j) continue;
            return {false, CrossingWitness{es[p], es[q]}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace muperm
