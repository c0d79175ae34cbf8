#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace muperm {

namespace detail {

// Length of the longest path that starts at v and stays on unlabeled vertices.
inline int unlabeled_depth(const LabeledGraph& g, const std::vector<int>& label, int v, int prev) {
    int best = 0;
    for (int w : g.adjacency()[static_cast<std::size_t>(v)]) {
        if (w == prev || label[static_cast<std::size_t>(w)] != 0) continue;
        best = std::max(best, unlabeled_depth(g, label, w, v));
    }
    return best + 1;
}

}  // namespace detail

// Deterministic tree labeling. The root gets 1; then, repeatedly, the labeled
// vertex carrying the largest label that still has unlabeled neighbors is
// taken and the longest path from it into unlabeled territory is labeled with
// consecutive numbers. Among equally long paths the one through the smaller
// vertex id at the first divergence wins. Each rooted subtree therefore
// receives one consecutive label block starting at its own root, which is
// exactly the interval structure the labeling predicate accepts.
//
// Returns label[v] for v in 1..n (slot 0 unused).
inline std::vector<int> label_tree(const LabeledGraph& tree, std::optional<int> root = std::nullopt) {
    if (!tree.is_tree()) throw precondition_error("label_tree requires a connected acyclic graph");
    const int n = tree.order();
    const int start = root.value_or(1);
    if (start < 1 || start > n) throw precondition_error("root is not a vertex of the tree");

    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> vertex_of_label(static_cast<std::size_t>(n) + 1, 0);
    int next_label = 1;
    label[static_cast<std::size_t>(start)] = 1;
    vertex_of_label[1] = start;

    auto walk_longest_path = [&](int from) {
        int current = from;
        for (;;) {
            int best_len = 0, next = 0;
            for (int w : tree.adjacency()[static_cast<std::size_t>(current)]) {
                if (label[static_cast<std::size_t>(w)] != 0) continue;
                const int len = detail::unlabeled_depth(tree, label, w, current);
                if (len > best_len) {  // ties keep the earlier (smaller-id) neighbor
                    best_len = len;
                    next = w;
                }
            }
            if (next == 0) break;
            label[static_cast<std::size_t>(next)] = ++next_label;
            vertex_of_label[static_cast<std::size_t>(next_label)] = next;
            current = next;
        }
    };

    walk_longest_path(start);
    while (next_label < n) {
        int restart = 0;
        for (int l = next_label; l >= 1 && restart == 0; --l) {
            const int v = vertex_of_label[static_cast<std::size_t>(l)];
            for (int w : tree.adjacency()[static_cast<std::size_t>(v)])
                if (label[static_cast<std::size_t>(w)] == 0) {
                    restart = v;
                    break;
                }
        }
        walk_longest_path(restart);
    }
    return label;
}

enum class EnumerationEngine { exhaustive, pruned };

inline constexpr int kExhaustiveEnumerationCap = 12;
inline constexpr int kPrunedEnumerationCap = 20;

// A path sequence is valid when no two vertex-disjoint edges cross.
inline bool valid_path_sequence(const std::vector<int>& sequence) {
    const int m = static_cast<int>(sequence.size());
    for (int p = 0; p + 3 < m; ++p) {
        int i = sequence[static_cast<std::size_t>(p)], j = sequence[static_cast<std::size_t>(p) + 1];
        if (i > j) std::swap(i, j);
        for (int q = p + 2; q + 1 < m; ++q) {
            int k = sequence[static_cast<std::size_t>(q)], l = sequence[static_cast<std::size_t>(q) + 1];
            if (k > l) std::swap(k, l);
            int ii = i, jj = j, kk = k, ll = l;
            if (kk < ii) {
                std::swap(ii, kk);
                std::swap(jj, ll);
            }
            if (!(jj < kk || ll < jj)) return false;
        }
    }
    return true;
}

namespace detail {

// Exhaustive engine: fix the endpoint pair, run every arrangement of the
// middle labels through the predicate. This is the behavioral reference.
template <typename Sink>
void enumerate_paths_exhaustive(int m, bool canonical, Sink&& sink) {
    std::vector<int> seq(static_cast<std::size_t>(m));
    for (int first = 1; first <= m; ++first) {
        for (int last = 1; last <= m; ++last) {
            if (last == first) continue;
            if (canonical && last < first) continue;
            std::vector<int> middle;
            for (int v = 1; v <= m; ++v)
                if (v != first && v != last) middle.push_back(v);
            do {
                seq.front() = first;
                std::copy(middle.begin(), middle.end(), seq.begin() + 1);
                seq.back() = last;
                if (valid_path_sequence(seq)) sink(seq);
            } while (std::next_permutation(middle.begin(), middle.end()));
        }
    }
}

// Pruned engine: grow the sequence left to right and reject as soon as the
// newest edge crosses any earlier (necessarily disjoint) edge. Emits in
// lexicographic order.
template <typename Sink>
void enumerate_paths_pruned(int m, bool canonical, Sink&& sink) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(m));
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);

    auto crosses_earlier_edge = [&](int v) {
        const int t = static_cast<int>(seq.size());
        int i = seq[static_cast<std::size_t>(t) - 1], j = v;
        if (i > j) std::swap(i, j);
        for (int s = 0; s + 2 < t; ++s) {
            int k = seq[static_cast<std::size_t>(s)], l = seq[static_cast<std::size_t>(s) + 1];
            if (k > l) std::swap(k, l);
            int ii = i, jj = j, kk = k, ll = l;
            if (kk < ii) {
                std::swap(ii, kk);
                std::swap(jj, ll);
            }
            if (!(jj < kk || ll < jj)) return true;
        }
        return false;
    };

    auto grow = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == m) {
            if (!canonical || seq.front() < seq.back()) sink(seq);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!seq.empty() && crosses_earlier_edge(v)) continue;
            used[static_cast<std::size_t>(v)] = true;
            seq.push_back(v);
            self(self);
            seq.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    grow(grow);
}

template <typename Sink>
void enumerate_paths(int m, bool canonical, EnumerationEngine engine, Sink&& sink) {
    if (m < 2) throw precondition_error("path enumeration requires order >= 2");
    if (engine == EnumerationEngine::exhaustive) {
        if (m > kExhaustiveEnumerationCap)
            throw resource_limit_error("exhaustive enumeration capped at order " +
                                       std::to_string(kExhaustiveEnumerationCap) + "; use the pruned engine");
        enumerate_paths_exhaustive(m, canonical, sink);
    } else {
        if (m > kPrunedEnumerationCap)
            throw resource_limit_error("pruned enumeration capped at order " + std::to_string(kPrunedEnumerationCap));
        enumerate_paths_pruned(m, canonical, sink);
    }
}

}  // namespace detail

// All valid label sequences for the path on m vertices, sorted
// lexicographically. canonical=true keeps one sequence per reversal pair (the
// one whose first label is smaller than its last), which is the normalization
// used by the A001792 cross-checks; canonical=false returns both directions.
inline std::vector<std::vector<int>> enumerate_path_labelings(int m, bool canonical = true,
                                                              EnumerationEngine engine = EnumerationEngine::exhaustive) {
    std::vector<std::vector<int>> out;
    detail::enumerate_paths(m, canonical, engine, [&](const std::vector<int>& seq) { out.push_back(seq); });
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer count_path_labelings(int m, bool canonical = true,
                                    EnumerationEngine engine = EnumerationEngine::exhaustive) {
    Integer count = 0;
    detail::enumerate_paths(m, canonical, engine, [&](const std::vector<int>&) { ++count; });
    return count;
}

inline constexpr int kDefaultExistsCap = 8;

// Exhaustive search for any vertex -> label bijection under which g passes
// the labeling predicate; nullopt is a definitive "none exists". Labels are
// assigned in increasing order and a branch dies as soon as a completed edge
// crosses an earlier one.
inline std::optional<std::vector<int>> exists_mu_labeling(const LabeledGraph& g, int max_order = kDefaultExistsCap) {
    const int n = g.order();
    if (n > max_order)
        throw resource_limit_error("exhaustive labeling search capped at order " + std::to_string(max_order));

    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Edge> completed;
    completed.reserve(g.edges().size());

    auto crossing = [&](const Edge& e) {
        for (const auto& d : completed) {
            int i = d.first, j = d.second, k = e.first, l = e.second;
            if (i == k || i == l || j == k || j == l) continue;
            if (k < i) {
                std::swap(i, k);
                std::swap(j, l);
            }
            if (!(j < k || l < j)) return true;
        }
        return false;
    };

    auto assign = [&](auto&& self, int next_label) -> bool {
        if (next_label > n) return true;
        for (int v = 1; v <= n; ++v) {
            if (label[static_cast<std::size_t>(v)] != 0) continue;
            label[static_cast<std::size_t>(v)] = next_label;
            std::size_t added = 0;
            bool ok = true;
            for (int w : g.adjacency()[static_cast<std::size_t>(v)]) {
                if (label[static_cast<std::size_t>(w)] == 0) continue;
                const Edge e = make_edge(label[static_cast<std::size_t>(w)], next_label);
                if (crossing(e)) {
                    ok = false;
                    break;
                }
                completed.push_back(e);
                ++added;
            }
            if (ok && self(self, next_label + 1)) return true;
            completed.resize(completed.size() - added);
            label[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };

    if (assign(assign, 1)) return label;
    return std::nullopt;
}

}  // namespace muperm
