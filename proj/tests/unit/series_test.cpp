#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mbf/bernoulli.hpp"
#include "mbf/series.hpp"

using namespace mbf;

namespace {

using RS = TruncSeries<Rational>;
using PS = TruncSeries<PPoly>;

RS make(std::vector<Rational> c) { return RS::from_coeffs(std::move(c)); }

RS random_unit_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<long long> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 4);
    std::vector<Rational> coeffs(order);
    coeffs[0] = Rational(BigInt(num(rng) * 2 + 1), BigInt(den(rng)));  // nonzero
    for (std::size_t i = 1; i < order; ++i) coeffs[i] = Rational(BigInt(num(rng)), BigInt(den(rng)));
    return make(std::move(coeffs));
}

} // namespace

TEST_CASE("series arithmetic") {
    // (1+x)(1-x) truncated at order 2 is 1.
    RS plus = make({Rational(1), Rational(1)});
    RS minus = make({Rational(1), Rational(-1)});
    REQUIRE(plus * minus == RS::one(2));

    // (1 + x/2 + x^2/12)^2 = 1 + x + 5x^2/12, by hand convolution.
    RS todd2 = make({Rational(1), Rational(1, 2), Rational(1, 12)});
    REQUIRE(todd2 * todd2 == make({Rational(1), Rational(1), Rational(5, 12)}));

    REQUIRE_THROWS_AS(RS::one(2) + RS::one(3), parameter_error);
}

TEST_CASE("series inverse contract") {
    REQUIRE(RS::one(4).inverse() == RS::one(4));

    // inv(sum (-1)^k x^k/(k+1)!) = x/(1-e^{-x}): coefficients B_i/i!.
    RS base = expm1_over_x(Rational(-1), 5);
    REQUIRE(base.inverse() ==
            make({Rational(1), Rational(1, 2), Rational(1, 12), Rational(0), Rational(-1, 720)}));

    // Geometric series.
    REQUIRE(make({Rational(1), Rational(-1), Rational(0)}).inverse() ==
            make({Rational(1), Rational(1), Rational(1)}));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        RS a = random_unit_series(rng, 6);
        REQUIRE(a * a.inverse() == RS::one(6));
        REQUIRE(a.inverse() * a == RS::one(6));
        REQUIRE(a.inverse().inverse() == a);
    }

    RS nonunit = make({Rational(0), Rational(1)});
    REQUIRE_THROWS_AS(nonunit.inverse(), parameter_error);
}

TEST_CASE("exponentials of linear classes") {
    REQUIRE(exp_linear(Rational(0), 5) == RS::one(5));

    // e^{-4x}: the twist factor of the n=3, d=1, s=1 integrand.
    REQUIRE(exp_linear(Rational(-4), 4) ==
            make({Rational(1), Rational(-4), Rational(8), Rational(-32, 3)}));

    for (long long k : {1LL, 2LL, -3LL, 7LL}) {
        REQUIRE(exp_linear(Rational(k), 8) * exp_linear(Rational(-k), 8) == RS::one(8));
    }

    // Group law with rational and with polynomial arguments.
    REQUIRE(exp_linear(Rational(2, 3), 7) * exp_linear(Rational(1, 3), 7) ==
            exp_linear(Rational(1), 7));
    PPoly p = PPoly::variable();
    PPoly q{Rational(1), Rational(-2)};
    REQUIRE(exp_linear(p, 6) * exp_linear(q, 6) == exp_linear(p + q, 6));
}

TEST_CASE("todd series") {
    REQUIRE(todd_series(Rational(0), 6) == RS::one(6));
    REQUIRE(todd_series(Rational(1), 3) == make({Rational(1), Rational(1, 2), Rational(1, 12)}));

    // Symbolic argument: td(p x) = 1 + (p/2)x + (p^2/12)x^2.
    PS symbolic = todd_series(PPoly::variable(), 3);
    REQUIRE(symbolic.coeff(0) == PPoly::constant(Rational(1)));
    REQUIRE(symbolic.coeff(1) == PPoly::from_coeffs({Rational(0), Rational(1, 2)}));
    REQUIRE(symbolic.coeff(2) == PPoly::from_coeffs({Rational(0), Rational(0), Rational(1, 12)}));

    // td(a) * (1 - e^{-ax})/(ax) = 1 at every order up to 12.
    for (long long a : {1LL, 2LL, -3LL}) {
        for (std::size_t order : {3u, 7u, 12u}) {
            REQUIRE(todd_series(Rational(a), order) * expm1_over_x(Rational(-a), order) ==
                    RS::one(order));
        }
    }
}

TEST_CASE("expm1_over_x matches a shifted exponential") {
    // (e^{cx}-1)/(cx): coefficient k is c^k/(k+1)!, i.e. coefficient k+1 of
    // e^{cx} with one factor of c stripped.
    for (long long c : {2LL, -5LL}) {
        RS lifted = exp_linear(Rational(c), 7);
        RS factor = expm1_over_x(Rational(c), 6);
        for (std::size_t k = 0; k < 6; ++k)
            REQUIRE(factor.coeff(k) * Rational(c) == lifted.coeff(k + 1));
    }
}

TEST_CASE("bernoulli numbers under the B1 = +1/2 convention") {
    auto B = bernoulli_list(13);
    REQUIRE(B[0] == Rational(1));
    REQUIRE(B[1] == Rational(1, 2));
    REQUIRE(B[2] == Rational(1, 6));
    REQUIRE(B[3] == Rational(0));
    REQUIRE(B[4] == Rational(-1, 30));
    REQUIRE(B[5] == Rational(0));
    REQUIRE(B[6] == Rational(1, 42));
    REQUIRE(B[7] == Rational(0));
    REQUIRE(B[8] == Rational(-1, 30));
    REQUIRE(B[12] == Rational(-691, 2730));
    REQUIRE(bernoulli(2) == Rational(1, 6));

    // sign(B_{2j}) = (-1)^{j-1}.
    auto more = bernoulli_list(19);
    for (std::size_t j = 1; 2 * j < more.size(); ++j) {
        REQUIRE(more[2 * j].sign() == (j % 2 == 1 ? 1 : -1));
        if (2 * j + 1 < more.size()) REQUIRE(more[2 * j + 1].is_zero());
    }
}

TEST_CASE("exact coefficients survive mixed pipelines") {
    // No denominator is ever approximated: push a product through inversion
    // and back and compare exactly.
    RS a = todd_series(Rational(3), 9);
    RS b = exp_linear(Rational(-7, 2), 9);
    REQUIRE((a * b).inverse() == a.inverse() * b.inverse());
}
