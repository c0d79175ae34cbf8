#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace muperm {

// Orders above this take noticeably more than a desk minute at n!.
inline constexpr int kDefaultBruteCap = 11;

// P(A) = sum over all sigma in S_n of (prod_i a_{i,sigma(i)}) * mu^{inversions(sigma)}.
//
// Denominators are cleared up front so the permutation sweep runs on plain
// integers; the DFS visits column choices in increasing order (lexicographic
// permutation order) and abandons a branch once its partial product is zero,
// which changes nothing about the exact sum. Throws resource_limit_error for
// order > max_order.
inline MuPolynomial mu_permanent_brute(const SquareMatrix& a, int max_order = kDefaultBruteCap) {
    const int n = a.order();
    if (n > max_order)
        throw resource_limit_error("mu_permanent_brute: order " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(max_order) + " (raise the cap to force it)");
    if (n > 63) throw resource_limit_error("mu_permanent_brute: orders above 63 are not addressable");

    Integer den_lcm = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) den_lcm = lcm(den_lcm, denominator(a.at(i, j)));

    std::vector<Integer> scaled;
    scaled.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            scaled.push_back(numerator(a.at(i, j)) * (den_lcm / denominator(a.at(i, j))));

    const int max_inversions = n * (n - 1) / 2;
    std::vector<Integer> accum(static_cast<std::size_t>(max_inversions) + 1, Integer(0));
    std::vector<Integer> partial(static_cast<std::size_t>(n) + 1);
    partial[0] = 1;

    auto dfs = [&](auto&& self, int row, std::uint64_t used, int inversions) -> void {
        if (row == n) {
            accum[static_cast<std::size_t>(inversions)] += partial[static_cast<std::size_t>(n)];
            return;
        }
        for (int col = 0; col < n; ++col) {
            if (used & (std::uint64_t{1} << col)) continue;
            const Integer& entry = scaled[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) +
                                          static_cast<std::size_t>(col)];
            if (entry == 0) continue;
            partial[static_cast<std::size_t>(row) + 1] = partial[static_cast<std::size_t>(row)] * entry;
            // every used column to the right of col is one new inversion
            const int gained = std::popcount(used >> (col + 1));
            self(self, row + 1, used | (std::uint64_t{1} << col), inversions + gained);
        }
    };
    dfs(dfs, 0, std::uint64_t{0}, 0);

    const Integer scale = pow(den_lcm, static_cast<unsigned>(n));
    std::vector<Rational> coefficients;
    coefficients.reserve(accum.size());
    for (auto& c : accum) coefficients.push_back(make_rational(std::move(c), scale));
    return MuPolynomial::from_coefficients(std::move(coefficients));
}

// Classical determinant by exact Gaussian elimination with row pivoting;
// the independent reference for P(A) at mu = -1.
inline Rational determinant_oracle(const SquareMatrix& a) {
    const int n = a.order();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i + 1, j + 1);

    Rational det(1);
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            negate = !negate;
        }
        const Rational& head = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= head;
        for (int row = col + 1; row < n; ++row) {
            auto& r = m[static_cast<std::size_t>(row)];
            if (r[static_cast<std::size_t>(col)] == 0) continue;
            const Rational factor = r[static_cast<std::size_t>(col)] / head;
            for (int k = col; k < n; ++k) r[static_cast<std::size_t>(k)] -= factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
        }
    }
    return negate ? Rational(-det) : det;
}

// Permanent by Ryser's inclusion-exclusion over column subsets; the
// independent reference for P(A) at mu = 1. Same cap as the brute force.
inline Rational permanent_oracle(const SquareMatrix& a, int max_order = kDefaultBruteCap) {
    const int n = a.order();
    if (n > max_order)
        throw resource_limit_error("permanent_oracle: order " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(max_order));
    if (n > 63) throw resource_limit_error("permanent_oracle: orders above 63 are not addressable");
    Rational total(0);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
        Rational product(1);
        for (int i = 1; i <= n && product != 0; ++i) {
            Rational row_sum(0);
            for (int j = 0; j < n; ++j)
                if (subset & (std::uint64_t{1} << j)) row_sum += a.at(i, j + 1);
            product *= row_sum;
        }
        if ((n - std::popcount(subset)) % 2 == 0)
            total += product;
        else
            total -= product;
    }
    return total;
}

// Product of the main diagonal; the value of P(A) at mu = 0.
inline Rational diagonal_product(const SquareMatrix& a) {
    Rational product(1);
    for (int i = 1; i <= a.order() && product != 0; ++i) product *= a.at(i, i);
    return product;
}

}  // namespace muperm
