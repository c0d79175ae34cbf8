#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "free_trees.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "matrix.hpp"

namespace muperm {

// Seeded random source for the reproducible verification corpora.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational rational(int num_bound = 9, int den_bound = 9) {
        return make_rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
    }

    Rational nonzero_rational(int num_bound = 9, int den_bound = 9) {
        int num = 0;
        while (num == 0) num = uniform(-num_bound, num_bound);
        return make_rational(num, uniform(1, den_bound));
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// Distinct stream per (base seed, order, instance) triple; splitmix mixing
// keeps neighboring instances decorrelated.
inline std::uint64_t corpus_seed(std::uint64_t base, int order, int instance) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull *
                                 (static_cast<std::uint64_t>(order) * 4096u + static_cast<std::uint64_t>(instance) + 1u);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform random tree shape via a random Pruefer code.
inline LabeledGraph random_tree(int n, Rng& rng) {
    if (n < 1) throw precondition_error("tree order must be >= 1");
    if (n == 1) return LabeledGraph(1, {});
    if (n == 2) return LabeledGraph(2, {{1, 2}});
    std::vector<int> code(static_cast<std::size_t>(n) - 2);
    for (auto& c : code) c = rng.uniform(1, n);
    return tree_from_pruefer(code, n);
}

// A valid labeling of the tree, found by rejection sampling over random
// bijections; falls back to the deterministic algorithm from a random root
// when sampling misses (dense constraint sets make misses common).
inline std::vector<int> random_valid_labeling(const LabeledGraph& tree, Rng& rng, int attempts = 200) {
    const int n = tree.order();
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        for (int v = 1; v <= n; ++v) label[static_cast<std::size_t>(v)] = v;
        for (int v = n; v >= 2; --v) std::swap(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(rng.uniform(1, v))]);
        if (is_mu_labeling(tree.relabeled(label)).valid) return label;
    }
    return label_tree(tree, rng.uniform(1, n));
}

// Random tree shape relabeled so its vertex ids form a valid mu-labeling.
inline LabeledGraph random_mu_labeled_tree(int n, Rng& rng, bool sampled_labeling) {
    LabeledGraph tree = random_tree(n, rng);
    const std::vector<int> label =
        sampled_labeling ? random_valid_labeling(tree, rng) : label_tree(tree, rng.uniform(1, n));
    return tree.relabeled(label);
}

// Symmetric matrix whose graph is exactly g: nonzero random entries on the
// edges, random (possibly zero) rationals on the diagonal, zeros elsewhere.
inline SquareMatrix random_symmetric_tree_matrix(const LabeledGraph& g, Rng& rng) {
    SquareMatrix a(g.order());
    for (int v = 1; v <= g.order(); ++v) a.at(v, v) = rng.rational();
    for (const auto& [u, v] : g.edges()) {
        const Rational w = rng.nonzero_rational();
        a.at(u, v) = w;
        a.at(v, u) = w;
    }
    return a;
}

// Dense random rational matrix, zeros allowed anywhere.
inline SquareMatrix random_rational_matrix(int n, Rng& rng) {
    SquareMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a.at(i, j) = rng.rational();
    return a;
}

}  // namespace muperm
