#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mbf/rational.hpp"

namespace mbf {

/// Dense univariate polynomial in the indeterminate "p" with rational
/// coefficients. Canonical form: no trailing zero coefficients, the zero
/// polynomial has an empty coefficient list.
class PPoly {
public:
    PPoly() = default;
    PPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static PPoly from_coeffs(std::vector<Rational> coeffs) {
        PPoly f;
        f.c_ = std::move(coeffs);
        f.trim();
        return f;
    }

    static PPoly constant(const Rational& c) { return PPoly{c}; }

    /// The indeterminate itself.
    static PPoly variable() { return PPoly{Rational(0), Rational(1)}; }

    bool is_zero() const { return c_.empty(); }

    /// -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    /// Exact evaluation at an integer argument (Horner).
    Rational operator()(const BigInt& at) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * Rational(at) + c_[i];
        return acc;
    }

    PPoly operator-() const {
        std::vector<Rational> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(-c);
        return from_coeffs(std::move(out));
    }

    friend PPoly operator+(const PPoly& a, const PPoly& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return from_coeffs(std::move(out));
    }

    friend PPoly operator-(const PPoly& a, const PPoly& b) { return a + (-b); }

    friend PPoly operator*(const PPoly& a, const PPoly& b) {
        if (a.is_zero() || b.is_zero()) return PPoly();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return from_coeffs(std::move(out));
    }

    friend PPoly operator*(const PPoly& a, const Rational& k) {
        std::vector<Rational> out;
        out.reserve(a.c_.size());
        for (const auto& c : a.c_) out.push_back(c * k);
        return from_coeffs(std::move(out));
    }

    friend PPoly operator*(const Rational& k, const PPoly& a) { return a * k; }

    friend bool operator==(const PPoly& a, const PPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PPoly& a, const PPoly& b) { return !(a == b); }

    /// Coefficient strings, index = power of p (serialization order).
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c.str());
        return out;
    }

    /// Human-readable form, e.g. "-1/8*p^2 + 1/2*p - 3/8".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            std::string mag = c.abs().str();
            if (i == 0) out += mag;
            else {
                if (mag != "1") out += mag + "*";
                out += i == 1 ? "p" : "p^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Cauchy bound B = 1 + max_i |f_i / f_deg| over i < deg: every real root of f
/// has absolute value <= B, so the sign of f is stable beyond B.
inline Rational cauchy_root_bound(const PPoly& f) {
    if (f.degree() < 1) throw parameter_error("constant polynomial has no root bound");
    Rational lead = f.leading();
    Rational best(0);
    for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) {
        Rational q = (f.coeff(i) / lead).abs();
        if (q > best) best = q;
    }
    return Rational(1) + best;
}

} // namespace mbf
