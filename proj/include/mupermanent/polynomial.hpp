#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace muperm {

// Dense polynomial in mu over the exact rationals; coefficient(k) belongs to
// mu^k. Canonical form: the zero polynomial stores nothing, otherwise the
// last stored coefficient is nonzero, so equality is structural.
class MuPolynomial {
public:
    MuPolynomial() = default;
    explicit MuPolynomial(Rational constant) {
        coefficients_.push_back(std::move(constant));
        trim();
    }

    static MuPolynomial from_coefficients(std::vector<Rational> ascending) {
        MuPolynomial p;
        p.coefficients_ = std::move(ascending);
        p.trim();
        return p;
    }

    // coefficient * mu^k
    static MuPolynomial mu_power(int k, Rational coefficient = Rational(1)) {
        if (k < 0) throw precondition_error("mu_power exponent must be >= 0");
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
        c.back() = std::move(coefficient);
        return from_coefficients(std::move(c));
    }

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }  // zero polynomial -> -1

    Rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coefficients_.size())) return Rational(0);
        return coefficients_[static_cast<std::size_t>(k)];
    }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    MuPolynomial& operator+=(const MuPolynomial& rhs) {
        if (coefficients_.size() < rhs.coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Rational(0));
        for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
        trim();
        return *this;
    }
    MuPolynomial& operator-=(const MuPolynomial& rhs) {
        if (coefficients_.size() < rhs.coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Rational(0));
        for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
        trim();
        return *this;
    }

    friend MuPolynomial operator+(MuPolynomial lhs, const MuPolynomial& rhs) { return lhs += rhs; }
    friend MuPolynomial operator-(MuPolynomial lhs, const MuPolynomial& rhs) { return lhs -= rhs; }

    MuPolynomial operator-() const {
        MuPolynomial p = *this;
        for (auto& c : p.coefficients_) c = -c;
        return p;
    }

    friend MuPolynomial operator*(const MuPolynomial& lhs, const MuPolynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Rational> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
            if (lhs.coefficients_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
                out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
        }
        return from_coefficients(std::move(out));
    }

    friend MuPolynomial operator*(MuPolynomial p, const Rational& s) {
        for (auto& c : p.coefficients_) c *= s;
        p.trim();
        return p;
    }
    friend MuPolynomial operator*(const Rational& s, MuPolynomial p) { return std::move(p) * s; }

    bool operator==(const MuPolynomial&) const = default;

    // Multiply by mu^k.
    MuPolynomial shifted(int k) const {
        if (k < 0) throw precondition_error("shift exponent must be >= 0");
        if (is_zero()) return {};
        std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
        out.insert(out.end(), coefficients_.begin(), coefficients_.end());
        return from_coefficients(std::move(out));
    }

    Rational eval(const Rational& mu) const {
        Rational value(0);
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * mu + *it;
        return value;
    }

    MuPolynomial derivative() const {
        if (coefficients_.size() <= 1) return {};
        std::vector<Rational> out;
        out.reserve(coefficients_.size() - 1);
        for (std::size_t k = 1; k < coefficients_.size(); ++k)
            out.push_back(coefficients_[k] * Rational(static_cast<long long>(k)));
        return from_coefficients(std::move(out));
    }

    // "182 + 117*mu + 175*mu^3"; zero terms are skipped, the zero polynomial is "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = 0; k < coefficients_.size(); ++k) {
            const Rational& c = coefficients_[k];
            if (c == 0) continue;
            const bool negative = c < 0;
            if (first) {
                if (negative) out += '-';
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            out += format_rational(negative ? Rational(-c) : c);
            if (k >= 1) {
                out += "*mu";
                if (k >= 2) {
                    out += '^';
                    out += std::to_string(k);
                }
            }
        }
        return out;
    }

    // Machine line: ascending coefficients, trimmed; zero polynomial prints one 0.
    std::string coeff_line() const {
        std::string s = "coeffs:";
        if (is_zero()) return s + " 0";
        for (const auto& c : coefficients_) {
            s += ' ';
            s += format_rational(c);
        }
        return s;
    }

private:
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    }

    std::vector<Rational> coefficients_;
};

}  // namespace muperm
