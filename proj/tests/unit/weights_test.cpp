#include <catch2/catch_amalgamated.hpp>

#include "mbf/weights.hpp"

using namespace mbf;

TEST_CASE("weight sets") {
    // H^2(O_Y) is pure of weight p^2 w0.
    for (long long p : {2, 3, 5, 7, 11})
        for (long long l = 2; l <= 7; ++l)
            for (long long w0 = 0; w0 < l; ++w0) {
                WeightSet w = weight_set(WeightGroup::H2Structure, p, l, w0);
                REQUIRE(w.pure());
                REQUIRE(*w.residues.begin() == p * p % l * w0 % l);
            }

    // p=3, l=2, w0=1: 4, 10, 12 are all even.
    WeightSet rel = weight_set(WeightGroup::H1ThetaRelative, 3, 2, 1);
    REQUIRE(rel.residues == std::set<long long>{0});

    // Trivial generator weight kills every group.
    for (auto group :
         {WeightGroup::H2Structure, WeightGroup::H1ThetaRelative, WeightGroup::H1ThetaPullback}) {
        WeightSet w = weight_set(group, 5, 6, 0);
        REQUIRE(w.residues == std::set<long long>{0});
    }

    REQUIRE_THROWS_AS(weight_set(WeightGroup::H2Structure, 3, 1, 0), parameter_error);
    REQUIRE_THROWS_AS(weight_set(WeightGroup::H2Structure, 4, 3, 1), parameter_error);
}

TEST_CASE("weights are residues") {
    for (long long w0 = -3; w0 <= 9; ++w0) {
        WeightSet a = weight_set(WeightGroup::H1ThetaPullback, 5, 4, w0);
        WeightSet b = weight_set(WeightGroup::H1ThetaPullback, 5, 4, w0 + 4);
        REQUIRE(a.residues == b.residues);
        for (long long r : a.residues) {
            REQUIRE(r >= 0);
            REQUIRE(r < 4);
        }
    }
}

TEST_CASE("frobenius twist coherence") {
    // The H^2 weight is two applications of multiplication by p on the
    // character group.
    for (long long p : {3, 5, 7})
        for (long long l = 2; l <= 9; ++l)
            for (long long w0 = 0; w0 < l; ++w0) {
                WeightSet w = weight_set(WeightGroup::H2Structure, p, l, w0);
                REQUIRE(*w.residues.begin() == p * (p * w0 % l) % l);
            }
}

TEST_CASE("sign involution report") {
    SignInvolutionReport at3 = sign_involution_report(3);
    REQUIRE(at3.h2_scalar == -1);
    REQUIRE(at3.theta_rel_scalar == +1);
    REQUIRE(at3.theta_pullback_scalar == -1);

    SignInvolutionReport at11 = sign_involution_report(11);
    REQUIRE(at11.h2_scalar == -1);
    REQUIRE(at11.theta_rel_scalar == +1);
    REQUIRE(at11.theta_pullback_scalar == -1);

    REQUIRE_THROWS_WITH(sign_involution_report(2), "sign involution requires p != 2");
    REQUIRE_THROWS_AS(sign_involution_report(15), parameter_error);

    // Constant (-1, +1, -1) for every odd prime below 100.
    for (long long p = 3; p < 100; p += 2) {
        if (!is_prime(p)) continue;
        SignInvolutionReport rep = sign_involution_report(p);
        REQUIRE(rep.h2_scalar == -1);
        REQUIRE(rep.theta_rel_scalar == +1);
        REQUIRE(rep.theta_pullback_scalar == -1);
    }
}
