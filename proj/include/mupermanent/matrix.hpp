#pragma once

#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"
#include "rational.hpp"

namespace muperm {

// n x n matrix of exact rationals with 1-based (row, column) indexing.
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(checked_order(n)), entries_(cell_count(n), Rational(0)) {}

    SquareMatrix(int n, std::vector<Rational> row_major) : n_(checked_order(n)), entries_(std::move(row_major)) {
        if (entries_.size() != cell_count(n)) throw precondition_error("matrix entry count does not match order");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    int order() const { return n_; }

    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
    Rational& at(int i, int j) { return entries_[index(i, j)]; }

    bool is_symmetric() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const SquareMatrix&) const = default;

    // Format: the order n, then n*n entries in row-major order, whitespace
    // separated; each entry is an integer or a p/q fraction; '#' comments.
    static SquareMatrix parse(std::istream& in) {
        const int n = detail::parse_count(detail::next_token(in), "matrix file");
        std::vector<Rational> entries;
        entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int k = 0; k < n * n; ++k) {
            const std::string token = detail::next_token(in);
            if (token.empty())
                throw parse_error("matrix file: expected " + std::to_string(n * n) + " entries, got " +
                                  std::to_string(k));
            try {
                entries.push_back(parse_rational(token));
            } catch (const precondition_error& e) {
                throw parse_error(std::string("matrix file: ") + e.what());
            }
        }
        detail::require_end_of_input(in, "matrix file");
        return SquareMatrix(n, std::move(entries));
    }

    static SquareMatrix load(const std::string& path) {
        auto in = detail::open_file(path);
        return parse(in);
    }

private:
    static int checked_order(int n) {
        if (n < 1) throw precondition_error("matrix order must be >= 1");
        return n;
    }
    static std::size_t cell_count(int n) {
        return static_cast<std::size_t>(checked_order(n)) * static_cast<std::size_t>(n);
    }
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw precondition_error("matrix index out of range");
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
    }

    int n_;
    std::vector<Rational> entries_;
};

// A_S: rows and columns indexed by S replaced by zeros, except the diagonal
// entries in S, which become 1.
inline SquareMatrix mask(const SquareMatrix& a, const std::set<int>& s) {
    for (int v : s)
        if (v < 1 || v > a.order()) throw precondition_error("mask index out of range");
    SquareMatrix m = a;
    for (int v : s) {
        for (int k = 1; k <= a.order(); ++k) {
            m.at(v, k) = 0;
            m.at(k, v) = 0;
        }
        m.at(v, v) = 1;
    }
    return m;
}

}  // namespace muperm
