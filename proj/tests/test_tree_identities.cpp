#include "test_support.hpp"

#include <chrono>

using namespace muperm;
using test_support::matrix_from;
using test_support::poly;
using test_support::rat;

namespace {

SquareMatrix tridiagonal_primes() { return matrix_from({{2, 3, 0}, {3, 7, 11}, {0, 11, 13}}); }
SquareMatrix arrow_primes() { return matrix_from({{7, 3, 11}, {3, 2, 0}, {11, 0, 13}}); }

// Matching expansion computed from scratch in test code: this is the oracle
// route that stays independent of the library evaluators it checks.
MuPolynomial expansion_by_matchings(const SquareMatrix& a) {
    MuPolynomial total;
    for (const auto& m : acyclic_matchings(a)) {
        Rational weight(1);
        std::vector<bool> matched(static_cast<std::size_t>(a.order()) + 1, false);
        for (const auto& [u, v] : m) {
            weight *= a.at(u, v) * a.at(u, v);
            matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = true;
        }
        for (int k = 1; k <= a.order(); ++k)
            if (!matched[static_cast<std::size_t>(k)]) weight *= a.at(k, k);
        total += MuPolynomial::mu_power(matching_involution(a.order(), m).inversions(), weight);
    }
    return total;
}

}  // namespace

TEST_CASE("masking") {
    const SquareMatrix a = tridiagonal_primes();
    CHECK(mask(a, {}) == a);
    CHECK(mask(a, {1, 2, 3}) == SquareMatrix::identity(3));

    const SquareMatrix m12 = mask(a, {1, 2});
    CHECK(m12 == matrix_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 13}}));
    CHECK(mu_permanent_brute(m12) == MuPolynomial(rat(13)));

    CHECK_THROWS_AS(mask(a, {0}), precondition_error);
    CHECK_THROWS_AS(mask(a, {4}), precondition_error);
}

TEST_CASE("edge exponents") {
    CHECK(edge_exponent(1, 2) == 1);
    CHECK(edge_exponent(2, 1) == 1);
    CHECK(edge_exponent(1, 3) == 3);
    CHECK(edge_exponent(3, 10) == 13);
}

TEST_CASE("graph extraction") {
    CHECK(graph_of(tridiagonal_primes()) == LabeledGraph::path(3));
    CHECK(graph_of(arrow_primes()) == LabeledGraph(3, {{1, 2}, {1, 3}}));
    CHECK_THROWS_AS(graph_of(matrix_from({{1, 2}, {3, 4}})), precondition_error);
}

TEST_CASE("expansion identity on the tridiagonal example") {
    const SquareMatrix a = tridiagonal_primes();
    for (int v = 1; v <= 3; ++v) {
        const IdentityCheck check = check_expansion_identity(a, v);
        REQUIRE(check.holds);
        REQUIRE(check.residual().is_zero());
    }
    // at vertex 1 the right side assembles a11 (a22 a33 + a23^2 mu) + a12^2 a33 mu
    const IdentityCheck at1 = check_expansion_identity(a, 1);
    CHECK(at1.rhs == poly({rat(2 * 7 * 13), rat(2 * 11 * 11 + 3 * 3 * 13)}));
}

TEST_CASE("expansion identity on the arrow example uses exponents 1 and 3") {
    const SquareMatrix a = arrow_primes();
    const IdentityCheck check = check_expansion_identity(a, 1);
    REQUIRE(check.holds);
    CHECK(check.rhs == poly({rat(182), rat(117), rat(0), rat(242)}));
}

TEST_CASE("expansion identity preconditions") {
    CHECK_THROWS_AS(check_expansion_identity(matrix_from({{1, 2}, {3, 4}}), 1), precondition_error);
    // a full symmetric 3x3 has a triangle for a graph
    CHECK_THROWS_AS(check_expansion_identity(matrix_from({{2, 3, 5}, {3, 7, 11}, {5, 11, 13}}), 1),
                    precondition_error);
    CHECK_THROWS_AS(check_expansion_identity(tridiagonal_primes(), 0), precondition_error);
    CHECK_THROWS_AS(check_expansion_identity(tridiagonal_primes(), 4), precondition_error);
}

TEST_CASE("derivative identity on the worked examples") {
    // tridiagonal: d/dmu P = a11 a23^2 + a12^2 a33, a constant
    const IdentityCheck tri = check_derivative_identity(tridiagonal_primes());
    REQUIRE(tri.holds);
    CHECK(tri.lhs == MuPolynomial(rat(2 * 11 * 11 + 3 * 3 * 13)));

    // arrow: d/dmu P = a12^2 a33 + 3 a13^2 a22 mu^2
    const IdentityCheck arrow = check_derivative_identity(arrow_primes());
    REQUIRE(arrow.holds);
    CHECK(arrow.lhs == poly({rat(117), rat(0), rat(3 * 11 * 11 * 2)}));

    // diagonal matrix: an edgeless graph, both sides vanish
    const IdentityCheck diag = check_derivative_identity(matrix_from({{2, 0}, {0, 5}}));
    REQUIRE(diag.holds);
    CHECK(diag.lhs.is_zero());
    CHECK(diag.rhs.is_zero());
}

TEST_CASE("identities hold on random mu-labeled trees") {
    for (int n = 2; n <= 7; ++n) {
        for (int instance = 0; instance < 20; ++instance) {
            Rng rng(corpus_seed(100, n, instance));
            const LabeledGraph tree = random_mu_labeled_tree(n, rng, instance % 2 == 1);
            const SquareMatrix a = random_symmetric_tree_matrix(tree, rng);
            for (int v = 1; v <= n; ++v) REQUIRE(check_expansion_identity(a, v).holds);
            REQUIRE(check_derivative_identity(a).holds);
        }
    }
}

TEST_CASE("identity checks enforce the labeling in strict mode only") {
    // path labeled 1-3-2-4 carries the crossing pair {1,3},{2,4}
    Rng rng(corpus_seed(4, 4, 0));
    const SquareMatrix bad = random_symmetric_tree_matrix(LabeledGraph::path_from_sequence({1, 3, 2, 4}), rng);
    CHECK_THROWS_AS(check_expansion_identity(bad, 1), precondition_error);
    CHECK_THROWS_AS(check_derivative_identity(bad), precondition_error);
    CHECK_NOTHROW(check_expansion_identity(bad, 1, false));
    CHECK_NOTHROW(check_derivative_identity(bad, false));
}

TEST_CASE("matchings of small forests") {
    const auto path3 = acyclic_matchings(LabeledGraph::path(3));
    REQUIRE(path3.size() == 3);
    CHECK(std::count(path3.begin(), path3.end(), Matching{}) == 1);
    CHECK(std::count(path3.begin(), path3.end(), Matching{{1, 2}}) == 1);
    CHECK(std::count(path3.begin(), path3.end(), Matching{{2, 3}}) == 1);

    CHECK(acyclic_matchings(LabeledGraph::path(4)).size() == 5);
    CHECK(acyclic_matchings(LabeledGraph(3, {})).size() == 1);
    CHECK_THROWS_AS(acyclic_matchings(LabeledGraph::complete(3)), precondition_error);

    // the matrix overload goes through the extracted graph
    CHECK(acyclic_matchings(tridiagonal_primes()).size() == 3);
    CHECK_THROWS_AS(acyclic_matchings(matrix_from({{1, 2}, {3, 4}})), precondition_error);
}

TEST_CASE("matching involutions") {
    CHECK(matching_involution(4, {}) == Permutation::identity(4));
    CHECK(matching_involution(4, {{1, 3}, {2, 4}}) == Permutation({3, 4, 1, 2}));
    CHECK_THROWS_AS(matching_involution(4, {{1, 2}, {2, 3}}), precondition_error);
}

TEST_CASE("exponent additivity under valid labelings, with the crossing counterexample") {
    for (int n = 1; n <= 9; ++n) {
        for (const auto& shape : all_free_trees(n)) {
            for (int root = 1; root <= n; ++root) {
                const LabeledGraph labeled = shape.relabeled(label_tree(shape, root));
                for (const auto& m : acyclic_matchings(labeled)) {
                    long long exponent_sum = 0;
                    for (const auto& [i, j] : m) exponent_sum += edge_exponent(i, j);
                    REQUIRE(matching_involution(n, m).inversions() == exponent_sum);
                }
            }
        }
    }

    // crossing matching {1,3},{2,4}: 4 inversions, exponent sum 3 + 3 = 6
    CHECK(matching_involution(4, {{1, 3}, {2, 4}}).inversions() == 4);
    CHECK(edge_exponent(1, 3) + edge_exponent(2, 4) == 6);
}

TEST_CASE("matching expansion equals brute force on any acyclic labeling") {
    // includes labelings with crossings, where per-edge exponents would fail
    const std::vector<std::vector<int>> sequences{{1, 2, 3, 4}, {1, 3, 2, 4}, {2, 1, 4, 3, 5}, {5, 1, 2, 3, 4}};
    for (const auto& seq : sequences) {
        Rng rng(corpus_seed(11, static_cast<int>(seq.size()), 0));
        const SquareMatrix a = random_symmetric_tree_matrix(LabeledGraph::path_from_sequence(seq), rng);
        REQUIRE(mu_permanent_matchings(a) == mu_permanent_brute(a));
        REQUIRE(expansion_by_matchings(a) == mu_permanent_brute(a));
    }

    // disconnected forests as well
    Rng rng(corpus_seed(12, 6, 0));
    const SquareMatrix forest = random_symmetric_tree_matrix(LabeledGraph(6, {{1, 3}, {2, 6}, {4, 5}}), rng);
    REQUIRE(mu_permanent_matchings(forest) == mu_permanent_brute(forest));
    REQUIRE(expansion_by_matchings(forest) == mu_permanent_brute(forest));
}

TEST_CASE("fast tree evaluator equals brute force") {
    // identity-labeled 3-path reproduces the tridiagonal golden polynomial
    CHECK(mu_permanent_tree_fast(tridiagonal_primes()) == poly({rat(182), rat(359)}));

    for (int n = 1; n <= 8; ++n) {
        for (const auto& shape : all_free_trees(n)) {
            Rng rng(corpus_seed(13, n, static_cast<int>(shape.edges().size())));
            const LabeledGraph labeled = shape.relabeled(label_tree(shape));
            const SquareMatrix a = random_symmetric_tree_matrix(labeled, rng);
            const MuPolynomial reference = mu_permanent_brute(a);
            REQUIRE(mu_permanent_tree_fast(a, true) == reference);
            REQUIRE(mu_permanent_tree_fast(a, false) == reference);
        }
    }
}

TEST_CASE("fast tree evaluator preconditions") {
    const SquareMatrix one = matrix_from({{7}});
    CHECK(mu_permanent_tree_fast(one) == MuPolynomial(rat(7)));

    CHECK_THROWS_AS(mu_permanent_tree_fast(matrix_from({{1, 2}, {3, 4}})), precondition_error);

    Rng rng(corpus_seed(14, 4, 0));
    const SquareMatrix crossing = random_symmetric_tree_matrix(LabeledGraph::path_from_sequence({1, 3, 2, 4}), rng);
    CHECK_THROWS_AS(mu_permanent_tree_fast(crossing, true), precondition_error);
    // the matching fallback handles the crossing labeling exactly
    CHECK(mu_permanent_tree_fast(crossing, false) == mu_permanent_brute(crossing));

    const SquareMatrix disconnected = matrix_from({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(mu_permanent_tree_fast(disconnected), precondition_error);
}

TEST_CASE("fast evaluator handles a long identity-labeled path quickly") {
    const int n = 200;
    SquareMatrix a(n);
    for (int i = 1; i <= n; ++i) a.at(i, i) = (i % 5) + 1;
    for (int i = 1; i < n; ++i) {
        a.at(i, i + 1) = (i % 3) + 1;
        a.at(i + 1, i) = (i % 3) + 1;
    }
    const auto start = std::chrono::steady_clock::now();
    const MuPolynomial p = mu_permanent_tree_fast(a);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(p.degree() == 100);  // a perfect matching of 100 edges, each exponent 1
    CHECK(elapsed < 1.0);
}
