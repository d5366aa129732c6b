#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>
#include <utility>

#include "mbf/errors.hpp"

namespace mbf {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division a/b for b > 0 (cpp_int's operator/ truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw parameter_error("floor_div requires a positive divisor");
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return -floor_div(-a, b);
}

/// Exact rational scalar, the only number type in the core.
/// Always held in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long value) : v_(value) {}
    Rational(const BigInt& value) : v_(value) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw parameter_error("rational with zero denominator");
        v_ = Backend(num);
        v_ /= Backend(den);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Backend(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw parameter_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw parameter_error("zero has no inverse");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    BigInt floor() const { return floor_div(num(), den()); }
    BigInt ceil() const { return ceil_div(num(), den()); }

    /// "num/den", or just "num" when the denominator is one.
    std::string str() const {
        BigInt d = den();
        if (d == 1) return num().str();
        return num().str() + "/" + d.str();
    }

    static Rational parse(const std::string& text) {
        try {
            auto slash = text.find('/');
            if (slash == std::string::npos) return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw parameter_error("cannot parse rational: \"" + text + "\"");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : v_(std::move(v)) {}
    Backend v_;
};

inline BigInt pow(const BigInt& base, unsigned long long e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

} // namespace mbf
