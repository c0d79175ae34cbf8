// Command-line front end: exact mu-permanents, tree labelings, path-labeling
// enumeration, and the A001792 cross-validation suites.
//
// Exit codes: 0 success, 1 failed check/verification, 2 unparseable input,
// 3 violated precondition, 4 resource cap exceeded.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mupermanent/mupermanent.hpp"

namespace {

using namespace muperm;

int cmd_compute(const std::string& matrix_path, const std::string& mu_text, const std::string& method, int max_n) {
    const SquareMatrix a = SquareMatrix::load(matrix_path);
    MuPolynomial p;
    if (method == "brute")
        p = mu_permanent_brute(a, max_n);
    else if (method == "tree-fast")
        p = mu_permanent_tree_fast(a, true);
    else
        p = mu_permanent_tree_fast(a, false);

    if (!mu_text.empty()) {
        std::cout << format_rational(p.eval(parse_rational(mu_text))) << '\n';
    } else {
        std::cout << p.to_string() << '\n' << p.coeff_line() << '\n';
    }
    return 0;
}

int cmd_label(const std::string& tree_path, std::optional<int> root) {
    const LabeledGraph tree = LabeledGraph::load(tree_path);
    const std::vector<int> label = label_tree(tree, root);
    for (int v = 1; v <= tree.order(); ++v) std::cout << v << ' ' << label[static_cast<std::size_t>(v)] << '\n';
    const bool valid = is_mu_labeling(tree.relabeled(label)).valid;
    std::cout << "valid: " << (valid ? "true" : "false") << '\n';
    return valid ? 0 : 1;
}

int cmd_check(const std::string& graph_path) {
    const LabeledGraph g = LabeledGraph::load(graph_path);
    const MuLabelingResult r = is_mu_labeling(g);
    if (r.valid) {
        std::cout << "valid\n";
        return 0;
    }
    const auto& w = *r.witness;
    std::cout << "invalid witness {" << w.first.first << ',' << w.first.second << "} {" << w.second.first << ','
              << w.second.second << "}\n";
    return 1;
}

int cmd_enumerate(int path_order, bool count_only, bool all, const std::string& engine_name) {
    const EnumerationEngine engine =
        engine_name == "pruned" ? EnumerationEngine::pruned : EnumerationEngine::exhaustive;
    const bool canonical = !all;
    if (count_only) {
        std::cout << count_path_labelings(path_order, canonical, engine).str() << '\n';
        return 0;
    }
    for (const auto& seq : enumerate_path_labelings(path_order, canonical, engine)) {
        for (std::size_t t = 0; t < seq.size(); ++t) std::cout << (t ? " " : "") << seq[t];
        std::cout << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_order, std::uint64_t seed, const std::string& format) {
    if (suite == "identities") {
        const SuiteReport report = verify_identities(max_order > 0 ? max_order : 7, seed);
        std::cout << report.to_table();
        return report.all_pass() ? 0 : 1;
    }
    if (suite == "labelings") {
        const SuiteReport report = verify_labelings(max_order > 0 ? max_order : 11);
        std::cout << report.to_table();
        return report.all_pass() ? 0 : 1;
    }
    const SequenceReport report = cross_validate(max_order > 0 ? max_order : 20);
    if (format == "csv") {
        std::cout << report.to_csv();
    } else {
        std::cout << report.to_table();
        std::cout << "result: " << (report.all_agree() ? "PASS" : "FAIL") << '\n';
    }
    return report.all_agree() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mu-permanents, mu-labelings of trees, and A001792 cross-checks"};
    app.require_subcommand(1);

    std::string matrix_path, mu_text, method = "brute";
    int max_n = kDefaultBruteCap;
    auto* compute = app.add_subcommand("compute", "mu-permanent of a matrix file, as a polynomial or at a point");
    compute->add_option("--matrix", matrix_path, "matrix file")->required();
    compute->add_option("--mu", mu_text, "evaluate at this exact rational (e.g. -1 or 3/4)");
    compute->add_option("--method", method, "evaluation method")
        ->check(CLI::IsMember({"brute", "tree-fast", "tree-matchings"}));
    compute->add_option("--max-n", max_n, "order cap for the brute-force sweep");

    std::string tree_path;
    int root = 0;
    auto* label = app.add_subcommand("label", "construct a valid labeling of a tree");
    label->add_option("--tree", tree_path, "tree file")->required();
    label->add_option("--root", root, "root vertex (default: smallest id)");

    std::string graph_path;
    auto* check = app.add_subcommand("check", "test whether a labeled graph satisfies the labeling condition");
    check->add_option("--graph", graph_path, "graph file")->required();

    int path_order = 0;
    bool count_only = false, all = false;
    std::string engine = "exhaustive";
    auto* enumerate = app.add_subcommand("enumerate", "list or count the valid labelings of a path");
    enumerate->add_option("--path-order", path_order, "number of path vertices")->required();
    enumerate->add_flag("--count-only", count_only, "print only the count");
    enumerate->add_flag("--all", all, "include reversed sequences instead of one per reversal pair");
    enumerate->add_option("--engine", engine, "enumeration engine")->check(CLI::IsMember({"exhaustive", "pruned"}));

    std::string suite, format = "table";
    int max_order = -1;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "which suite")
        ->required()
        ->check(CLI::IsMember({"identities", "sequence", "labelings"}));
    verify->add_option("--max-order", max_order, "largest order / sequence index");
    verify->add_option("--seed", seed, "seed for the random corpora");
    verify->add_option("--format", format, "sequence report format")->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*compute) return cmd_compute(matrix_path, mu_text, method, max_n);
        if (*label) return cmd_label(tree_path, label->count("--root") ? std::optional<int>(root) : std::nullopt);
        if (*check) return cmd_check(graph_path);
        if (*enumerate) return cmd_enumerate(path_order, count_only, all, engine);
        return cmd_verify(suite, max_order, seed, format);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
