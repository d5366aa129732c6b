#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mbf/ppoly.hpp"
#include "mbf/rational.hpp"

namespace mbf {

/// Coefficient-ring hooks for TruncSeries. The two rings in use are Rational
/// (numeric Chow-ring computations) and PPoly (the characteristic p kept
/// symbolic).
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_unit(const Rational& a) { return !a.is_zero(); }
    static Rational invert(const Rational& a) { return a.inverse(); }
    static Rational scale(const Rational& a, const Rational& k) { return a * k; }
};

template <>
struct RingOps<PPoly> {
    static PPoly zero() { return PPoly(); }
    static PPoly one() { return PPoly::constant(Rational(1)); }
    static bool is_unit(const PPoly& a) { return a.degree() == 0; }
    static PPoly invert(const PPoly& a) {
        if (a.degree() != 0) throw parameter_error("polynomial is not invertible");
        return PPoly::constant(a.coeff(0).inverse());
    }
    static PPoly scale(const PPoly& a, const Rational& k) { return a * k; }
};

/// Truncated power series: order = number of retained coefficients, all
/// arithmetic truncates at x^(order-1). Models Q[[x]]/(x^order) and, with
/// order = n+1, the Chow ring Q[h]/(h^{n+1}) of the projective n-space.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : c_(order, RingOps<R>::zero()) {
        if (order == 0) throw parameter_error("series order must be positive");
    }

    static TruncSeries from_coeffs(std::vector<R> coeffs) {
        if (coeffs.empty()) throw parameter_error("series order must be positive");
        TruncSeries s(coeffs.size());
        s.c_ = std::move(coeffs);
        return s;
    }

    static TruncSeries constant(const R& value, std::size_t order) {
        TruncSeries s(order);
        s.c_[0] = value;
        return s;
    }

    static TruncSeries one(std::size_t order) { return constant(RingOps<R>::one(), order); }

    std::size_t order() const { return c_.size(); }
    const R& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<R>& coeffs() const { return c_; }
    void set_coeff(std::size_t i, R value) { c_.at(i) = std::move(value); }

    TruncSeries operator-() const {
        TruncSeries out(order());
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = RingOps<R>::scale(c_[i], Rational(-1));
        return out;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries out(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    /// Cauchy product, truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries out(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_elem(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Multiplicative inverse at this order, by the usual recursive
    /// convolution b_0 = a_0^{-1}, b_k = -a_0^{-1} sum_{i=1..k} a_i b_{k-i}.
    TruncSeries inverse() const {
        if (!RingOps<R>::is_unit(c_[0])) throw parameter_error("series not invertible");
        R c0_inv = RingOps<R>::invert(c_[0]);
        TruncSeries out(order());
        out.c_[0] = c0_inv;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            R acc = RingOps<R>::zero();
            for (std::size_t i = 1; i <= k; ++i) acc = acc + c_[i] * out.c_[k - i];
            out.c_[k] = RingOps<R>::scale(c0_inv * acc, Rational(-1));
        }
        return out;
    }

    TruncSeries pow(unsigned long long e) const {
        TruncSeries acc = one(order());
        TruncSeries base = *this;
        while (e > 0) {
            if (e & 1ULL) acc = acc * base;
            base = base * base;
            e >>= 1ULL;
        }
        return acc;
    }

private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) throw parameter_error("series order mismatch");
    }
    static bool is_zero_elem(const Rational& v) { return v.is_zero(); }
    static bool is_zero_elem(const PPoly& v) { return v.is_zero(); }

    std::vector<R> c_;
};

/// e^{cx} truncated: sum_k c^k x^k / k!. The argument may be rational or a
/// polynomial in p (Chern characters of twists like O(-dp)).
template <class R>
TruncSeries<R> exp_linear(const R& c, std::size_t order) {
    TruncSeries<R> out(order);
    R term = RingOps<R>::one();
    out.set_coeff(0, term);
    for (std::size_t k = 1; k < order; ++k) {
        term = RingOps<R>::scale(term * c, Rational(1, static_cast<long long>(k)));
        out.set_coeff(k, term);
    }
    return out;
}

/// (e^{cx} - 1)/(cx) truncated: sum_k c^k x^k / (k+1)!. Always a unit series;
/// this is how reciprocal Todd factors enter products without dividing
/// non-units.
template <class R>
TruncSeries<R> expm1_over_x(const R& c, std::size_t order) {
    TruncSeries<R> out(order);
    R term = RingOps<R>::one();
    out.set_coeff(0, term);
    for (std::size_t k = 1; k < order; ++k) {
        term = RingOps<R>::scale(term * c, Rational(1, static_cast<long long>(k + 1)));
        out.set_coeff(k, term);
    }
    return out;
}

} // namespace mbf
