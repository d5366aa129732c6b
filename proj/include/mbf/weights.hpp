#pragma once

#include <set>
#include <vector>

#include "mbf/combinatorics.hpp"
#include "mbf/errors.hpp"

namespace mbf {

/// mu_l-weight data: residues mod l of the characters acting on one
/// cohomology group, for a generator weight w0 on Lie(A).
struct WeightSet {
    long long modulus = 2;
    long long generator_weight = 0;
    std::set<long long> residues;

    bool pure() const { return residues.size() == 1; }
};

enum class WeightGroup { H2Structure, H1ThetaRelative, H1ThetaPullback };

/// Weight coefficients per group: H^2(O_Y) is pure of weight p^2*w0;
/// H^1(Theta_{Y/P^n}) can only carry m*w0 for m in {p+1, p^2+1, p^2+p};
/// H^1(phi^* Theta) only m*w0 for m in {p, p^2}. Carries the documented
/// caveat (p, n) != (2, 1) of the underlying statement.
inline WeightSet weight_set(WeightGroup group, long long p, long long modulus, long long w0) {
    if (modulus < 2) throw parameter_error("weight modulus must be >= 2");
    if (!is_prime(p)) throw parameter_error("p must be prime");
    BigInt l(modulus);
    BigInt pm = BigInt(p) % l;
    BigInt p2 = pm * pm % l;
    std::vector<BigInt> coefficients;
    switch (group) {
        case WeightGroup::H2Structure: coefficients = {p2}; break;
        case WeightGroup::H1ThetaRelative:
            coefficients = {(pm + 1) % l, (p2 + 1) % l, (p2 + pm) % l};
            break;
        case WeightGroup::H1ThetaPullback: coefficients = {pm, p2}; break;
    }
    WeightSet out;
    out.modulus = modulus;
    out.generator_weight = ((w0 % modulus) + modulus) % modulus;
    for (const auto& m : coefficients) {
        BigInt r = m * out.generator_weight % l;
        out.residues.insert(static_cast<long long>(r));
    }
    return out;
}

/// The sign involution acts through mu_2 with w0 = 1: each group is pure, and
/// the scalar is -1 on odd weight, +1 on even weight.
struct SignInvolutionReport {
    long long p = 0;
    int h2_scalar = +1;
    int theta_rel_scalar = +1;
    int theta_pullback_scalar = +1;
};

inline SignInvolutionReport sign_involution_report(long long p) {
    if (p == 2) throw parameter_error("sign involution requires p != 2");
    if (!is_prime(p)) throw parameter_error("p must be prime");
    auto scalar = [&](WeightGroup group) {
        WeightSet w = weight_set(group, p, 2, 1);
        if (!w.pure()) throw consistency_error("sign involution weights are not pure");
        return *w.residues.begin() == 0 ? +1 : -1;
    };
    SignInvolutionReport out;
    out.p = p;
    out.h2_scalar = scalar(WeightGroup::H2Structure);
    out.theta_rel_scalar = scalar(WeightGroup::H1ThetaRelative);
    out.theta_pullback_scalar = scalar(WeightGroup::H1ThetaPullback);
    return out;
}

} // namespace mbf
