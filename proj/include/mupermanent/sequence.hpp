#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "labeling.hpp"
#include "matrix.hpp"
#include "mu_permanent.hpp"
#include "rational.hpp"

namespace muperm {

// a(k) = (k+2) 2^(k-1); the k = 0 term is 2 * (1/2) = 1 exactly.
inline Integer a001792_closed_form(long long k) {
    if (k < 0) throw precondition_error("sequence index must be >= 0");
    const Rational power = k == 0 ? Rational(1, 2) : Rational(pow(Integer(2), static_cast<unsigned>(k - 1)));
    const Rational value = Rational(k + 2) * power;
    return numerator(value);
}

// a(0) = 1, a(1) = 3, a(k) = 4 a(k-1) - 4 a(k-2).
inline Integer a001792_recurrence(long long k) {
    if (k < 0) throw precondition_error("sequence index must be >= 0");
    Integer prev = 1, curr = 3;
    if (k == 0) return prev;
    for (long long i = 2; i <= k; ++i) {
        Integer next = 4 * curr - 4 * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

// Determinant of the k x k matrix with 3 on the diagonal and 1 elsewhere;
// equals a(k) for k >= 1.
inline Integer a001792_det_3diag(long long k) {
    if (k < 1) throw precondition_error("matrix size must be >= 1");
    SquareMatrix m(static_cast<int>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m.at(i, j) = i == j ? 3 : 1;
    return numerator(determinant_oracle(m));
}

// |det| of the k x k Toeplitz matrix with entry |p-q|+1 (first row 1..k);
// equals a(k-1). The offset is pinned by the cross-validation below, not
// assumed.
inline Integer a001792_det_toeplitz(long long k) {
    if (k < 1) throw precondition_error("matrix size must be >= 1");
    SquareMatrix m(static_cast<int>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m.at(i, j) = (i > j ? i - j : j - i) + 1;
    Integer det = numerator(determinant_oracle(m));
    return det < 0 ? Integer(-det) : det;
}

struct SequenceRow {
    long long k = 0;
    Integer closed, recurrence;
    std::optional<Integer> det3;         // defined for k >= 1
    Integer toeplitz;                    // |det| at size k+1 reads off a(k)
    std::optional<Integer> enumeration;  // canonical path count of order k+2
    bool agree = false;
};

struct SequenceReport {
    long long k_max = 0;
    std::vector<SequenceRow> rows;

    bool all_agree() const {
        for (const auto& r : rows)
            if (!r.agree) return false;
        return true;
    }

    std::string to_table() const {
        std::ostringstream os;
        os << "k      closed          recurrence      det3            toeplitz        enumeration     status\n";
        for (const auto& r : rows) {
            auto cell = [&](const std::string& s) {
                os << s;
                for (std::size_t pad = s.size(); pad < 16; ++pad) os << ' ';
            };
            std::string kk = std::to_string(r.k);
            os << kk;
            for (std::size_t pad = kk.size(); pad < 7; ++pad) os << ' ';
            cell(r.closed.str());
            cell(r.recurrence.str());
            cell(r.det3 ? r.det3->str() : "-");
            cell(r.toeplitz.str());
            cell(r.enumeration ? r.enumeration->str() : "-");
            os << (r.agree ? "PASS" : "FAIL") << '\n';
        }
        return os.str();
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "k,closed,recurrence,det3,toeplitz,enumeration\n";
        for (const auto& r : rows) {
            os << r.k << ',' << r.closed.str() << ',' << r.recurrence.str() << ','
               << (r.det3 ? r.det3->str() : "") << ',' << r.toeplitz.str() << ','
               << (r.enumeration ? r.enumeration->str() : "") << '\n';
        }
        return os.str();
    }
};

// One row per k: the closed form, the linear recurrence, both determinant
// oracles, and (through enumeration_max) the canonical path-labeling count of
// order k+2. A row agrees when every defined column equals the closed form.
inline SequenceReport cross_validate(long long k_max, long long enumeration_max = 9) {
    if (k_max < 0) throw precondition_error("sequence index must be >= 0");
    SequenceReport report;
    report.k_max = k_max;
    for (long long k = 0; k <= k_max; ++k) {
        SequenceRow row;
        row.k = k;
        row.closed = a001792_closed_form(k);
        row.recurrence = a001792_recurrence(k);
        if (k >= 1) row.det3 = a001792_det_3diag(k);
        row.toeplitz = a001792_det_toeplitz(k + 1);
        if (k <= enumeration_max)
            row.enumeration = count_path_labelings(static_cast<int>(k) + 2, true, EnumerationEngine::pruned);
        row.agree = row.recurrence == row.closed && row.toeplitz == row.closed &&
                    (!row.det3 || *row.det3 == row.closed) && (!row.enumeration || *row.enumeration == row.closed);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace muperm
