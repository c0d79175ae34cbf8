#include "test_support.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace muperm;

namespace {

// The worked 12-vertex example: vertex ids are already the intended labels.
LabeledGraph twelve_vertex_tree() {
    return LabeledGraph(12, {{4, 3}, {3, 2}, {2, 1}, {1, 7}, {7, 8}, {4, 5}, {3, 6}, {8, 9}, {1, 10}, {10, 11}, {10, 12}});
}

}  // namespace

TEST_CASE("graph construction and validation") {
    CHECK_THROWS_AS(LabeledGraph(3, {{1, 1}}), precondition_error);
    CHECK_THROWS_AS(LabeledGraph(3, {{1, 2}, {2, 1}}), precondition_error);
    CHECK_THROWS_AS(LabeledGraph(3, {{1, 4}}), precondition_error);
    CHECK_THROWS_AS(LabeledGraph(0, {}), precondition_error);

    const LabeledGraph g(4, {{2, 1}, {3, 2}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK(!g.is_connected());
    CHECK(g.is_acyclic());
    CHECK(!g.is_tree());
    CHECK(LabeledGraph::path(5).is_tree());
    CHECK(!LabeledGraph::complete(3).is_acyclic());
}

TEST_CASE("graph parsing") {
    std::istringstream in(
        "5        # path on five vertices\n"
        "1 2\n2 3\n3 4\n4 5\n");
    const LabeledGraph g = LabeledGraph::parse(in);
    CHECK(g == LabeledGraph::path(5));

    std::istringstream dangling("3\n1 2\n3\n");
    CHECK_THROWS_AS(LabeledGraph::parse(dangling), parse_error);
    std::istringstream junk("3\n1 b\n");
    CHECK_THROWS_AS(LabeledGraph::parse(junk), parse_error);
}

TEST_CASE("labeling predicate on the path examples") {
    const MuLabelingResult bad = is_mu_labeling(LabeledGraph::path_from_sequence({2, 1, 4, 3, 5}));
    REQUIRE(!bad.valid);
    CHECK(bad.witness->first == Edge{1, 4});
    CHECK(bad.witness->second == Edge{3, 5});

    CHECK(is_mu_labeling(LabeledGraph::path_from_sequence({5, 1, 2, 3, 4})).valid);
    CHECK(is_mu_labeling(LabeledGraph::path_from_sequence({2, 1, 3, 4, 5})).valid);
    for (int n = 1; n <= 9; ++n) CHECK(is_mu_labeling(LabeledGraph::path(n)).valid);
}

TEST_CASE("labeling predicate on other graphs") {
    CHECK(is_mu_labeling(twelve_vertex_tree()).valid);
    CHECK(is_mu_labeling(LabeledGraph::complete(3)).valid);
    CHECK(!is_mu_labeling(LabeledGraph::complete(4)).valid);
    CHECK(is_mu_labeling(LabeledGraph(1, {})).valid);
    // nested pair is fine, crossing pair is not
    CHECK(is_mu_labeling(LabeledGraph(4, {{1, 4}, {2, 3}})).valid);
    CHECK(!is_mu_labeling(LabeledGraph(4, {{1, 3}, {2, 4}})).valid);
}

TEST_CASE("labeling predicate is reversal stable on paths") {
    for (int m = 2; m <= 7; ++m) {
        std::vector<int> seq(static_cast<std::size_t>(m));
        std::iota(seq.begin(), seq.end(), 1);
        do {
            std::vector<int> reversed(seq.rbegin(), seq.rend());
            REQUIRE(is_mu_labeling(LabeledGraph::path_from_sequence(seq)).valid ==
                    is_mu_labeling(LabeledGraph::path_from_sequence(reversed)).valid);
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
}

TEST_CASE("label_tree on the five-vertex path") {
    // rooting the path 1-2-3-4-5 at vertex 2 yields the sequence 5 1 2 3 4
    const std::vector<int> label = label_tree(LabeledGraph::path(5), 2);
    CHECK(label == std::vector<int>{0, 5, 1, 2, 3, 4});
}

TEST_CASE("label_tree reproduces the twelve-vertex example") {
    const LabeledGraph tree = twelve_vertex_tree();
    const std::vector<int> label = label_tree(tree, 1);
    for (int v = 1; v <= 12; ++v) REQUIRE(label[static_cast<std::size_t>(v)] == v);
    CHECK(is_mu_labeling(tree.relabeled(label)).valid);
}

TEST_CASE("label_tree edge cases") {
    CHECK(label_tree(LabeledGraph(1, {})) == std::vector<int>{0, 1});

    // star rooted at the center: center 1, leaves in id order
    const LabeledGraph star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK(label_tree(star, 1) == std::vector<int>{0, 1, 2, 3, 4, 5});

    CHECK_THROWS_AS(label_tree(LabeledGraph::complete(3)), precondition_error);
    CHECK_THROWS_AS(label_tree(LabeledGraph(4, {{1, 2}, {3, 4}})), precondition_error);
    CHECK_THROWS_AS(label_tree(LabeledGraph::path(3), 4), precondition_error);
}

TEST_CASE("label_tree default root is the smallest id") {
    const LabeledGraph tree(4, {{2, 4}, {4, 1}, {1, 3}});
    CHECK(label_tree(tree) == label_tree(tree, 1));
}

TEST_CASE("label_tree is sound on every small free tree and root") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& tree : all_free_trees(n)) {
            for (int root = 1; root <= n; ++root) {
                const std::vector<int> label = label_tree(tree, root);
                REQUIRE(label[static_cast<std::size_t>(root)] == 1);
                REQUIRE(is_mu_labeling(tree.relabeled(label)).valid);
            }
        }
    }
}

TEST_CASE("any preorder interval labeling is valid") {
    // each rooted subtree gets a consecutive block starting at its root; such
    // labelings always pass the predicate, whatever the child order
    std::mt19937_64 gen(17);
    for (int round = 0; round < 200; ++round) {
        const int n = std::uniform_int_distribution<int>(2, 10)(gen);
        Rng rng(gen());
        const LabeledGraph tree = random_tree(n, rng);
        const int root = std::uniform_int_distribution<int>(1, n)(gen);

        std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
        int next = 0;
        auto dfs = [&](auto&& self, int v, int parent) -> void {
            label[static_cast<std::size_t>(v)] = ++next;
            std::vector<int> kids;
            for (int w : tree.adjacency()[static_cast<std::size_t>(v)])
                if (w != parent) kids.push_back(w);
            std::shuffle(kids.begin(), kids.end(), gen);
            for (int w : kids) self(self, w, v);
        };
        dfs(dfs, root, 0);
        REQUIRE(is_mu_labeling(tree.relabeled(label)).valid);
    }
}

TEST_CASE("path enumeration reproduces the order-4 list") {
    const std::vector<std::vector<int>> expected{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 2, 3}, {1, 4, 3, 2},
                                                 {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 3, 1, 4}, {3, 2, 1, 4}};
    CHECK(enumerate_path_labelings(4, true, EnumerationEngine::exhaustive) == expected);
    CHECK(enumerate_path_labelings(4, true, EnumerationEngine::pruned) == expected);
}

TEST_CASE("path enumeration small cases") {
    CHECK(enumerate_path_labelings(2) == std::vector<std::vector<int>>{{1, 2}});
    CHECK(count_path_labelings(2) == 1);
    CHECK_THROWS_AS(enumerate_path_labelings(1), precondition_error);
}

TEST_CASE("path labeling counts match the reference table") {
    const std::vector<long long> expected{1, 3, 8, 20, 48, 112, 256, 576, 1280, 2816};
    for (int m = 2; m <= 11; ++m)
        REQUIRE(count_path_labelings(m, true, EnumerationEngine::pruned) ==
                expected[static_cast<std::size_t>(m) - 2]);
    // the two engines agree where the exhaustive one is cheap
    for (int m = 2; m <= 9; ++m)
        REQUIRE(count_path_labelings(m, true, EnumerationEngine::exhaustive) ==
                count_path_labelings(m, true, EnumerationEngine::pruned));
    // count(m) = m * 2^(m-3)
    for (int m = 3; m <= 11; ++m)
        REQUIRE(count_path_labelings(m, true, EnumerationEngine::pruned) == Integer(m) * pow(Integer(2), static_cast<unsigned>(m - 3)));
}

TEST_CASE("full enumeration is exactly both directions of the canonical one") {
    for (int m = 2; m <= 9; ++m) {
        const Integer canonical = count_path_labelings(m, true, EnumerationEngine::pruned);
        const Integer full = count_path_labelings(m, false, EnumerationEngine::pruned);
        REQUIRE(full == 2 * canonical);
    }
    const auto full = enumerate_path_labelings(5, false, EnumerationEngine::exhaustive);
    for (const auto& seq : full) {
        const std::vector<int> reversed(seq.rbegin(), seq.rend());
        REQUIRE(std::find(full.begin(), full.end(), reversed) != full.end());
    }
}

TEST_CASE("order 12 count matches the closed form") {
    CHECK(count_path_labelings(12, true, EnumerationEngine::pruned) == 6144);
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(count_path_labelings(13, true, EnumerationEngine::exhaustive), resource_limit_error);
    CHECK_THROWS_AS(count_path_labelings(21, true, EnumerationEngine::pruned), resource_limit_error);
}

TEST_CASE("labeling existence search") {
    CHECK(!exists_mu_labeling(LabeledGraph::complete(4)).has_value());
    CHECK(!exists_mu_labeling(LabeledGraph::complete(5)).has_value());

    const auto k3 = exists_mu_labeling(LabeledGraph::complete(3));
    REQUIRE(k3.has_value());
    CHECK(is_mu_labeling(LabeledGraph::complete(3).relabeled(*k3)).valid);

    for (int n = 1; n <= 8; ++n) {
        for (const auto& tree : all_free_trees(n)) {
            const auto found = exists_mu_labeling(tree);
            REQUIRE(found.has_value());
            REQUIRE(is_mu_labeling(tree.relabeled(*found)).valid);
        }
    }

    CHECK_THROWS_AS(exists_mu_labeling(LabeledGraph::complete(9)), resource_limit_error);
}

TEST_CASE("free tree generation") {
    const std::vector<std::size_t> rooted{1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
    const std::vector<std::size_t> free_trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        REQUIRE(rooted_tree_level_sequences(n).size() == rooted[static_cast<std::size_t>(n) - 1]);
        const auto trees = all_free_trees(n);
        REQUIRE(trees.size() == free_trees[static_cast<std::size_t>(n) - 1]);
        for (const auto& tree : trees) REQUIRE(tree.is_tree());
    }
}

TEST_CASE("free tree classes agree with exhaustive pruefer enumeration") {
    for (int n = 3; n <= 8; ++n) {
        std::set<std::string> keys;
        std::vector<int> code(static_cast<std::size_t>(n) - 2, 1);
        for (;;) {
            keys.insert(free_tree_canonical_form(tree_from_pruefer(code, n)));
            int idx = static_cast<int>(code.size()) - 1;
            while (idx >= 0 && code[static_cast<std::size_t>(idx)] == n) {
                code[static_cast<std::size_t>(idx)] = 1;
                --idx;
            }
            if (idx < 0) break;
            ++code[static_cast<std::size_t>(idx)];
        }
        REQUIRE(keys.size() == all_free_trees(n).size());
    }
}
