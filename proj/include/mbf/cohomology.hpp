#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbf/combinatorics.hpp"

namespace mbf {

// ---------------------------------------------------------------------------
// Bott formula on P^n:
//
//   h^s(Omega^r(l)) = C(n+l-r, n-r) C(l-1, r)    s = 0
//                     C(r-l, r) C(-l-1, n-r)     s = n
//                     1                          0 <= r = s <= n, l = 0
//                     0                          otherwise
//
// with lattice-counting binomials. The s = 0 first factor is often
// mistranscribed as C(n+l-r, n); that variant breaks Serre duality already at
// h^0(Omega^2_{P^2}(3)) = h^0(O) = 1 and fails the Euler-sequence check
// h^0(Omega^1_{P^3}(2)) = 4*4 - 10 = 6. All matching cases are evaluated and
// must agree; a mismatch means a transcription error in one branch.
// ---------------------------------------------------------------------------
inline BigInt bott(long long n, long long r, long long s, long long l) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (r < 0 || r > n || s < 0 || s > n) return 0;
    std::vector<BigInt> candidates;
    if (s == 0) candidates.push_back(choose(n + l - r, n - r) * choose(l - 1, r));
    if (s == n) candidates.push_back(choose(r - l, r) * choose(-l - 1, n - r));
    if (r == s && l == 0) candidates.push_back(1);
    if (candidates.empty()) return 0;
    for (const auto& c : candidates)
        if (c != candidates.front())
            throw consistency_error("bott case mismatch at (n,r,s,l)=(" + std::to_string(n) + "," +
                                    std::to_string(r) + "," + std::to_string(s) + "," +
                                    std::to_string(l) + ")");
    return candidates.front();
}

// ---------------------------------------------------------------------------
// Frobenius push-forward splitting on P^n (toric splitting):
// F_*(O(t)) = sum_l O(l)^{mu_{t,l}}, nonzero exactly on the twist window
// a = ceil((t-(n+1)(p-1))/p) <= l <= b = floor(t/p), total rank p^n.
// ---------------------------------------------------------------------------
struct SplittingType {
    long long lowest = 0;   // a
    long long highest = 0;  // b
    std::map<long long, BigInt> entries;

    BigInt rank() const {
        BigInt total = 0;
        for (const auto& [twist, mult] : entries) total += mult;
        return total;
    }
};

inline SplittingType frobenius_splitting_type(long long n, long long p, long long t) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (!is_prime(p)) throw parameter_error("characteristic p must be prime");
    SplittingType out;
    out.lowest = static_cast<long long>(ceil_div(BigInt(t) - (n + 1) * (p - 1), BigInt(p)));
    out.highest = static_cast<long long>(floor_div(BigInt(t), BigInt(p)));
    if (out.lowest > out.highest) throw consistency_error("empty splitting window");
    for (long long l = out.lowest; l <= out.highest; ++l) {
        BigInt mult = splitting_multiplicity(n, p, t, l);
        if (mult == 0)
            throw consistency_error("zero multiplicity inside the splitting window at l=" +
                                    std::to_string(l));
        out.entries.emplace(l, std::move(mult));
    }
    return out;
}

// ---------------------------------------------------------------------------
// h^s of F_{r,t} = Lambda^r(F^*(Omega^1(1))) (x) O(t). Since
// F_*(F_{r,t}) = Omega^r(r) (x) F_*(O(t)) = sum_l Omega^r(l+r)^{mu_{t,l}},
// the dimension is sum_l mu_{t,l} * bott(n, r, s, l+r). The specialized case
// formulas
//   s = 0:       sum_l mu_{t,l} C(n+l, n-r) C(l+r-1, r)
//   s = n:       sum_l mu_{t,l} C(-l, r) C(-r-l-1, n-r)
//   0 < s=r < n: mu_{t,-r}
//   otherwise:   0
// are evaluated as an independent route and must agree with the push-forward
// sum (the s = 0 first factor inherits the n-r correction from the Bott
// case above).
// ---------------------------------------------------------------------------
inline BigInt exterior_frobenius_cohomology(long long n, long long p, long long r, long long t,
                                            long long s) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (!is_prime(p)) throw parameter_error("characteristic p must be prime");
    if (r < 0 || r > n || s < 0 || s > n) return 0;

    long long lo = static_cast<long long>(ceil_div(BigInt(t) - (n + 1) * (p - 1), BigInt(p)));
    long long hi = static_cast<long long>(floor_div(BigInt(t), BigInt(p)));
    BigInt pushforward = 0;
    for (long long l = lo; l <= hi; ++l)
        pushforward += splitting_multiplicity(n, p, t, l) * bott(n, r, s, l + r);

    BigInt cases;
    if (s == 0) {
        for (long long l = lo; l <= hi; ++l)
            cases += splitting_multiplicity(n, p, t, l) * choose(n + l, n - r) * choose(l + r - 1, r);
    } else if (s == n) {
        for (long long l = lo; l <= hi; ++l)
            cases += splitting_multiplicity(n, p, t, l) * choose(-l, r) * choose(-r - l - 1, n - r);
    } else if (s == r) {
        cases = splitting_multiplicity(n, p, t, -r);
    } else {
        cases = 0;
    }

    if (cases != pushforward)
        throw consistency_error("exterior/Frobenius case formula disagrees with the push-forward sum");
    return pushforward;
}

// ---------------------------------------------------------------------------
// Hodge numbers of the family (d = 1, p >= n+1):
//   h^{2j}(O_Y) = mu_{0,-j},  h^{2j+1}(O_Y) = mu_{1,-j},   j = 0..n.
// ---------------------------------------------------------------------------
struct HodgeVector {
    long long n = 0;
    long long p = 0;
    std::vector<BigInt> values;  // h^0 ... h^{2n+1}

    bool palindromic() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] != values[values.size() - 1 - i]) return false;
        return true;
    }
};

inline HodgeVector hodge_vector(long long n, long long p) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (!is_prime(p)) throw parameter_error("characteristic p must be prime");
    if (p < n + 1) throw parameter_error("formula requires p >= n+1");
    HodgeVector out;
    out.n = n;
    out.p = p;
    out.values.reserve(static_cast<std::size_t>(2 * n + 2));
    for (long long i = 0; i <= 2 * n + 1; ++i) {
        long long j = i / 2;
        out.values.push_back(splitting_multiplicity(n, p, i % 2, -j));
    }
    return out;
}

/// h^1(O_Y) = C(n+d, d), any degree d >= 1.
inline BigInt h1_structure(long long n, long long d) {
    if (n < 0 || d < 1) throw parameter_error("h1 requires n >= 0 and d >= 1");
    return binomial_int(n + d, d);
}

/// h^2(O_Y) for d = 1: lattice points with l_0+...+l_n = p inside the
/// hypercube. Holds without the p >= n+1 hypothesis.
inline BigInt h2_structure(long long n, long long p) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (!is_prime(p)) throw parameter_error("characteristic p must be prime");
    return splitting_multiplicity(n, p, p, 0);
}

/// l-adic Betti number b_i of the (2n+1)-fold: Kuenneth sum
/// sum_{j even, 0 <= j <= 2n} C(2n+2, i-j). Zero outside 0 <= i <= 2(2n+1).
inline BigInt betti_number(long long n, long long i) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (i < 0 || i > 2 * (2 * n + 1)) return 0;
    BigInt total = 0;
    for (long long j = 0; j <= 2 * n; j += 2) total += choose(2 * n + 2, i - j);
    return total;
}

// ---------------------------------------------------------------------------
// Family parameters and first invariants
// ---------------------------------------------------------------------------
struct FamilyParams {
    long long n;  // base projective space P^n
    long long d;  // degree of the defining polynomials
    long long p;  // characteristic

    FamilyParams(long long n_, long long d_, long long p_) : n(n_), d(d_), p(p_) {
        if (n < 0) throw parameter_error("dimension n must be >= 0");
        if (d < 1) throw parameter_error("degree d must be >= 1");
        if (!is_prime(p)) throw parameter_error("p must be prime");
    }

    long long dim_y() const { return 2 * n + 1; }
    long long fiber_dim() const { return n + 1; }  // g
};

/// omega_Y = O_Y(m) with m = d(p-1) - (n+1); m = 0 is the c_1 = 0 boundary.
inline long long canonical_degree(const FamilyParams& fp) {
    return fp.d * (fp.p - 1) - (fp.n + 1);
}

enum class Kodaira { MinusInfinity, Zero, N };

inline Kodaira kodaira_dimension(const FamilyParams& fp) {
    long long m = canonical_degree(fp);
    if (m < 0) return Kodaira::MinusInfinity;
    if (m == 0) return Kodaira::Zero;
    return Kodaira::N;
}

/// Serialized Kodaira dimension: "-inf", "0", or the value n in decimal.
inline std::string kodaira_string(Kodaira k, long long n) {
    switch (k) {
        case Kodaira::MinusInfinity: return "-inf";
        case Kodaira::Zero: return "0";
        default: return std::to_string(n);
    }
}

/// The closed-form invariants of one family, as reported by the CLI.
struct InvariantReport {
    FamilyParams fp;
    long long dim_y;
    long long g;
    long long m;
    bool omega_trivial;
    Kodaira kodaira;
    BigInt h1;
    std::optional<BigInt> h2;  // d = 1 only; the lattice-count law needs d = 1
    BigInt b1;
    BigInt b2;
    BigInt b_middle;  // b_{2n+1}
};

inline InvariantReport invariant_report(const FamilyParams& fp) {
    InvariantReport rep{fp,
                        fp.dim_y(),
                        fp.fiber_dim(),
                        canonical_degree(fp),
                        canonical_degree(fp) == 0,
                        kodaira_dimension(fp),
                        h1_structure(fp.n, fp.d),
                        std::nullopt,
                        betti_number(fp.n, 1),
                        betti_number(fp.n, 2),
                        betti_number(fp.n, 2 * fp.n + 1)};
    if (fp.d == 1) rep.h2 = h2_structure(fp.n, fp.p);
    return rep;
}

} // namespace mbf
