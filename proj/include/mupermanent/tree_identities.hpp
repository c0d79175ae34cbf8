#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"
#include "mu_permanent.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace muperm {

// Exponent attached to edge {i,j}: the inversion count of the transposition
// (i j), i.e. 2|j-i|-1.
inline long long edge_exponent(int i, int j) {
    if (i > j) std::swap(i, j);
    return transposition_inversions(i, j);
}

// Off-diagonal zero pattern of a symmetric matrix as a graph on {1..n}.
inline LabeledGraph graph_of(const SquareMatrix& a) {
    if (!a.is_symmetric()) throw precondition_error("graph_of requires a symmetric matrix");
    std::vector<Edge> edges;
    for (int i = 1; i <= a.order(); ++i)
        for (int j = i + 1; j <= a.order(); ++j)
            if (a.at(i, j) != 0) edges.emplace_back(i, j);
    return LabeledGraph(a.order(), std::move(edges));
}

struct IdentityCheck {
    bool holds = false;
    MuPolynomial lhs, rhs;
    MuPolynomial residual() const { return lhs - rhs; }
};

namespace detail {

inline LabeledGraph checked_acyclic_graph(const SquareMatrix& a, bool require_connected, bool require_labeling) {
    LabeledGraph g = graph_of(a);
    if (!g.is_acyclic()) throw precondition_error("matrix graph contains a cycle");
    if (require_connected && !g.is_tree()) throw precondition_error("matrix graph is not a tree");
    if (require_labeling && !is_mu_labeling(g).valid)
        throw precondition_error("matrix labeling violates the disjoint-edge condition");
    return g;
}

}  // namespace detail

// P(A) = a_ii P(A_i) + sum over neighbors j of i of a_ij^2 P(A_ij) mu^{l(ij)}.
// Both sides are recomputed with the brute-force evaluator so the check is
// independent of the fast tree evaluator built on top of it. The identity is
// stated for mu-labeled acyclic symmetric matrices; strict=false skips the
// labeling precondition and simply reports whether the identity held.
inline IdentityCheck check_expansion_identity(const SquareMatrix& a, int vertex, bool strict = true,
                                              int max_order = kDefaultBruteCap) {
    if (vertex < 1 || vertex > a.order()) throw precondition_error("expansion vertex out of range");
    LabeledGraph g = detail::checked_acyclic_graph(a, false, strict);

    IdentityCheck result;
    result.lhs = mu_permanent_brute(a, max_order);
    result.rhs = MuPolynomial(a.at(vertex, vertex)) * mu_permanent_brute(mask(a, {vertex}), max_order);
    for (int j : g.adjacency()[static_cast<std::size_t>(vertex)]) {
        const Rational w = a.at(vertex, j) * a.at(vertex, j);
        result.rhs += (MuPolynomial(w) * mu_permanent_brute(mask(a, {vertex, j}), max_order))
                          .shifted(static_cast<int>(edge_exponent(vertex, j)));
    }
    result.holds = result.lhs == result.rhs;
    return result;
}

// d/dmu P(A) = sum over edges {i,j}, i<j, of l(ij) a_ij^2 P(A_ij) mu^{l(ij)-1}.
inline IdentityCheck check_derivative_identity(const SquareMatrix& a, bool strict = true,
                                               int max_order = kDefaultBruteCap) {
    LabeledGraph g = detail::checked_acyclic_graph(a, false, strict);

    IdentityCheck result;
    result.lhs = mu_permanent_brute(a, max_order).derivative();
    for (const auto& [i, j] : g.edges()) {
        const long long e = edge_exponent(i, j);
        const Rational w = a.at(i, j) * a.at(i, j);
        result.rhs += (MuPolynomial(Rational(e) * w) * mu_permanent_brute(mask(a, {i, j}), max_order))
                          .shifted(static_cast<int>(e) - 1);
    }
    result.holds = result.lhs == result.rhs;
    return result;
}

using Matching = std::vector<Edge>;

namespace detail {

template <typename Sink>
void for_each_matching(const LabeledGraph& g, Sink&& sink) {
    const auto& edges = g.edges();
    std::vector<bool> taken(static_cast<std::size_t>(g.order()) + 1, false);
    Matching current;
    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (idx == edges.size()) {
            sink(current);
            return;
        }
        self(self, idx + 1);  // without this edge
        const auto& [u, v] = edges[idx];
        if (!taken[static_cast<std::size_t>(u)] && !taken[static_cast<std::size_t>(v)]) {
            taken[static_cast<std::size_t>(u)] = taken[static_cast<std::size_t>(v)] = true;
            current.push_back(edges[idx]);
            self(self, idx + 1);
            current.pop_back();
            taken[static_cast<std::size_t>(u)] = taken[static_cast<std::size_t>(v)] = false;
        }
    };
    walk(walk, 0);
}

}  // namespace detail

// Every matching of a forest, the empty one included. On a forest these are
// exactly the supports of the permutations with nonzero weight in the
// mu-permanent: fixed points plus 2-cycles along edges.
inline std::vector<Matching> acyclic_matchings(const LabeledGraph& g) {
    if (!g.is_acyclic()) throw precondition_error("matchings enumeration requires an acyclic graph");
    std::vector<Matching> out;
    detail::for_each_matching(g, [&](const Matching& m) { out.push_back(m); });
    return out;
}

inline std::vector<Matching> acyclic_matchings(const SquareMatrix& a) {
    return acyclic_matchings(graph_of(a));
}

// The involution swapping each matched pair and fixing everything else.
inline Permutation matching_involution(int n, const Matching& m) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [u, v] : m) {
        if (u < 1 || v > n || seen[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(v)])
            throw precondition_error("matching edges must be disjoint and in range");
        seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(v)] = true;
        std::swap(image[static_cast<std::size_t>(u) - 1], image[static_cast<std::size_t>(v) - 1]);
    }
    return Permutation(std::move(image));
}

// Matching expansion of the mu-permanent, valid for any symmetric matrix
// whose graph is a forest under any labeling: each matching contributes
// (prod of a_ij^2 over matched edges) (prod of diagonal entries over
// unmatched vertices) mu^{inversions of its involution}. Cost is linear in
// the number of matchings.
inline MuPolynomial mu_permanent_matchings(const SquareMatrix& a) {
    if (!a.is_symmetric()) throw precondition_error("matching expansion requires a symmetric matrix");
    LabeledGraph g = graph_of(a);
    if (!g.is_acyclic()) throw precondition_error("matching expansion requires an acyclic graph");

    const int n = a.order();
    MuPolynomial total;
    detail::for_each_matching(g, [&](const Matching& m) {
        Rational weight(1);
        std::vector<bool> matched(static_cast<std::size_t>(n) + 1, false);
        for (const auto& [u, v] : m) {
            weight *= a.at(u, v) * a.at(u, v);
            matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = true;
        }
        for (int k = 1; k <= n && weight != 0; ++k)
            if (!matched[static_cast<std::size_t>(k)]) weight *= a.at(k, k);
        if (weight == 0) return;
        total += MuPolynomial::mu_power(matching_involution(n, m).inversions(), weight);
    });
    return total;
}

// Polynomial-time evaluator for mu-labeled trees. Rooted matching dynamic
// program: a matched edge {i,j} contributes a_ij^2 mu^{2(j-i)-1}, an
// unmatched vertex its diagonal entry; children combine by polynomial
// multiplication. The mu-labeling is what makes the per-edge exponents add up
// to each involution's true inversion count, so with require_mu_labeling=false
// the matching expansion above (correct for any labeling) is used instead.
inline MuPolynomial mu_permanent_tree_fast(const SquareMatrix& a, bool require_mu_labeling = true) {
    if (!a.is_symmetric()) throw precondition_error("tree evaluator requires a symmetric matrix");
    LabeledGraph g = detail::checked_acyclic_graph(a, true, require_mu_labeling);
    if (!require_mu_labeling) return mu_permanent_matchings(a);

    const int n = a.order();
    // breadth-first order from vertex 1 puts every parent before its children
    std::vector<int> order, parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
    {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        order.push_back(1);
        seen[1] = true;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int v = order[head];
            for (int w : g.adjacency()[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    parent[static_cast<std::size_t>(w)] = v;
                    children[static_cast<std::size_t>(v)].push_back(w);
                    order.push_back(w);
                }
        }
    }

    // free[v]: subtree value with v unmatched and its diagonal factor withheld
    // best[v]: full subtree value (v unmatched-with-diagonal, or matched down)
    std::vector<MuPolynomial> free_poly(static_cast<std::size_t>(n) + 1), best(static_cast<std::size_t>(n) + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const auto& kids = children[static_cast<std::size_t>(v)];

        MuPolynomial product{Rational(1)};
        std::vector<MuPolynomial> prefix{product};
        for (int c : kids) {
            product = product * best[static_cast<std::size_t>(c)];
            prefix.push_back(product);
        }
        free_poly[static_cast<std::size_t>(v)] = product;

        MuPolynomial value = MuPolynomial(a.at(v, v)) * product;
        MuPolynomial suffix{Rational(1)};
        for (std::size_t idx = kids.size(); idx-- > 0;) {
            const int c = kids[idx];
            const Rational w = a.at(v, c) * a.at(v, c);
            value += (MuPolynomial(w) * free_poly[static_cast<std::size_t>(c)] * prefix[idx] * suffix)
                         .shifted(static_cast<int>(edge_exponent(v, c)));
            suffix = suffix * best[static_cast<std::size_t>(c)];
        }
        best[static_cast<std::size_t>(v)] = std::move(value);
    }
    return best[1];
}

}  // namespace muperm
