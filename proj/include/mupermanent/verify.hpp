#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "free_trees.hpp"
#include "labeling.hpp"
#include "sequence.hpp"
#include "tree_identities.hpp"

namespace muperm {

struct SuiteRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string parameters;
    std::vector<SuiteRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }

    std::string to_table() const {
        std::ostringstream os;
        os << "suite: " << suite;
        if (!parameters.empty()) os << " (" << parameters << ')';
        os << '\n';
        for (const auto& r : rows) {
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) os << "  [" << r.detail << ']';
            os << '\n';
        }
        os << "result: " << (all_pass() ? "PASS" : "FAIL") << '\n';
        return os.str();
    }
};

// Expansion identity at every vertex and the derivative identity on seeded
// random mu-labeled trees with random rational entries, plus the
// exponent-additivity law the fast evaluator rests on (checked over every
// free tree on up to 9 vertices, every root, every matching) and the crossing
// counterexample showing the labeling hypothesis is necessary.
inline SuiteReport verify_identities(int max_order = 7, std::uint64_t seed = 0, int instances_per_order = 100) {
    if (max_order < 2) throw precondition_error("identity suite needs max order >= 2");
    SuiteReport report;
    report.suite = "identities";
    report.parameters =
        "seed " + std::to_string(seed) + ", orders 2.." + std::to_string(max_order) + ", " +
        std::to_string(instances_per_order) + " trees per order";

    for (int order = 2; order <= max_order; ++order) {
        int expansion_ok = 0, derivative_ok = 0;
        for (int instance = 0; instance < instances_per_order; ++instance) {
            Rng rng(corpus_seed(seed, order, instance));
            const LabeledGraph tree = random_mu_labeled_tree(order, rng, instance % 2 == 1);
            const SquareMatrix a = random_symmetric_tree_matrix(tree, rng);

            bool expansion_all_vertices = true;
            for (int v = 1; v <= order && expansion_all_vertices; ++v)
                expansion_all_vertices = check_expansion_identity(a, v).holds;
            if (expansion_all_vertices) ++expansion_ok;
            if (check_derivative_identity(a).holds) ++derivative_ok;
        }
        const std::string tally = "/" + std::to_string(instances_per_order) + " trees";
        report.rows.push_back({"expansion identity, order " + std::to_string(order) + ", every vertex",
                               expansion_ok == instances_per_order, std::to_string(expansion_ok) + tally});
        report.rows.push_back({"derivative identity, order " + std::to_string(order),
                               derivative_ok == instances_per_order, std::to_string(derivative_ok) + tally});
    }

    {
        bool additive = true;
        long long matchings_checked = 0;
        for (int n = 1; n <= 9 && additive; ++n) {
            for (const auto& shape : all_free_trees(n)) {
                for (int root = 1; root <= n && additive; ++root) {
                    const LabeledGraph labeled = shape.relabeled(label_tree(shape, root));
                    for (const auto& m : acyclic_matchings(labeled)) {
                        long long exponent_sum = 0;
                        for (const auto& [i, j] : m) exponent_sum += edge_exponent(i, j);
                        ++matchings_checked;
                        if (matching_involution(n, m).inversions() != exponent_sum) {
                            additive = false;
                            break;
                        }
                    }
                }
            }
        }
        report.rows.push_back({"exponent additivity, free trees up to order 9, every root and matching", additive,
                               std::to_string(matchings_checked) + " matchings"});
    }

    {
        // crossing pair {1,3},{2,4}: the involution has 4 inversions, the edge
        // exponents sum to 6, so additivity genuinely needs the labeling
        const Matching crossing{{1, 3}, {2, 4}};
        const int involution_inversions = matching_involution(4, crossing).inversions();
        const long long exponent_sum = edge_exponent(1, 3) + edge_exponent(2, 4);
        const bool differs = involution_inversions == 4 && exponent_sum == 6;
        report.rows.push_back({"crossing counterexample {1,3},{2,4}", differs,
                               "inversions " + std::to_string(involution_inversions) + " != exponent sum " +
                                   std::to_string(exponent_sum)});
    }

    return report;
}

// Canonical path-labeling counts against the closed form (n+2)2^(n-1), with
// an exhaustive/pruned engine cross-check on the small orders, plus the K4
// and K5 non-existence searches.
inline SuiteReport verify_labelings(int max_order = 11) {
    if (max_order < 2) throw precondition_error("labeling suite needs max order >= 2");
    SuiteReport report;
    report.suite = "labelings";
    report.parameters = "orders 2.." + std::to_string(max_order);

    for (int m = 2; m <= max_order; ++m) {
        const Integer count = count_path_labelings(m, true, EnumerationEngine::pruned);
        const Integer expected = a001792_closed_form(m - 2);
        bool ok = count == expected;
        std::string detail = "count " + count.str() + ", expected " + expected.str();
        if (m <= 9) {
            const Integer exhaustive = count_path_labelings(m, true, EnumerationEngine::exhaustive);
            ok = ok && exhaustive == count;
            detail += exhaustive == count ? ", engines agree" : ", engines disagree";
        }
        report.rows.push_back({"path order " + std::to_string(m), ok, std::move(detail)});
    }

    for (int n : {4, 5}) {
        const bool none = !exists_mu_labeling(LabeledGraph::complete(n)).has_value();
        report.rows.push_back({"K" + std::to_string(n) + " admits no labeling", none,
                               none ? "search exhausted" : "labeling found"});
    }
    return report;
}

}  // namespace muperm
