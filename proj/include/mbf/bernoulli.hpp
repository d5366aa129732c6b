#pragma once

#include <cstddef>
#include <vector>

#include "mbf/series.hpp"

namespace mbf {

/// First `count` Bernoulli numbers under the B_1 = +1/2 convention, so that
/// x/(1 - e^{-x}) = sum_i B_i x^i / i!. Computed by series inversion of
/// (1 - e^{-x})/x = sum_k (-1)^k x^k/(k+1)!, one code path for one convention.
inline std::vector<Rational> bernoulli_list(std::size_t count) {
    if (count == 0) return {};
    TruncSeries<Rational> todd = expm1_over_x(Rational(-1), count).inverse();
    std::vector<Rational> out;
    out.reserve(count);
    Rational factorial(1);
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) factorial *= Rational(static_cast<long long>(i));
        out.push_back(todd.coeff(i) * factorial);
    }
    return out;
}

inline Rational bernoulli(std::size_t i) { return bernoulli_list(i + 1)[i]; }

/// Todd series of a line bundle with first Chern class a*h:
/// td = ax/(1 - e^{-ax}) = sum_i B_i a^i x^i / i!. The argument may be a
/// rational or a polynomial in p (e.g. a = dp kept symbolic).
template <class R>
TruncSeries<R> todd_series(const R& a, std::size_t order) {
    std::vector<Rational> B = bernoulli_list(order);
    TruncSeries<R> out(order);
    R power = RingOps<R>::one();
    out.set_coeff(0, RingOps<R>::scale(power, B[0]));
    for (std::size_t k = 1; k < order; ++k) {
        power = RingOps<R>::scale(power * a, Rational(1, static_cast<long long>(k)));
        out.set_coeff(k, RingOps<R>::scale(power, B[k]));
    }
    return out;
}

} // namespace mbf
