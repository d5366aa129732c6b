#pragma once

#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mbf/bernoulli.hpp"
#include "mbf/rational.hpp"

namespace mbf {

/// Generalized binomial coefficient C(x, r) = x(x-1)...(x-r+1)/r!, defined for
/// any integer x; zero for r < 0. Always an integer for integer x, but exposed
/// as Rational to match the falling-factorial definition.
inline Rational binomial(const BigInt& x, long long r) {
    if (r < 0) return Rational(0);
    BigInt num = 1, den = 1;
    for (long long k = 0; k < r; ++k) {
        num *= x - k;
        den *= k + 1;
    }
    return Rational(num, den);
}

/// Same, as an exact integer.
inline BigInt binomial_int(const BigInt& x, long long r) {
    Rational v = binomial(x, r);
    if (!v.is_integer()) throw consistency_error("binomial not integral at x=" + x.str());
    return v.num();
}

/// Counting convention: the number of r-subsets. Zero whenever x < r with
/// r >= 1, and 1 for r = 0 regardless of x (the empty choice). This is the
/// convention the Bott and push-forward case formulas require; the
/// generalized binomial above stays nonzero at negative arguments.
inline BigInt choose(const BigInt& x, long long r) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    if (x < r) return 0;
    return binomial_int(x, r);
}

inline BigInt choose(long long x, long long r) { return choose(BigInt(x), r); }

// ---------------------------------------------------------------------------
// Lattice-point multiplicities
//
// mu_{t,l} = #{ (l_0,...,l_n) in Z^{n+1} : l_0+...+l_n = t - p*l,
//               0 <= l_i <= p-1 },
// the slice of the side-(p-1) hypercube by an affine hyperplane. It is both a
// splitting multiplicity of the Frobenius push-forward F_*(O(t)) and, for
// t in {0,1}, a cohomological dimension of the family.
// ---------------------------------------------------------------------------

/// Closed-form count by inclusion-exclusion over the upper bounds:
///   sum_j (-1)^j C(n+1, j) C(s - jp + n, n),  s = t - pl,
/// terms with negative upper argument dropped. Sub-millisecond for any input
/// in range; the two oracles below guard it.
inline BigInt splitting_multiplicity(long long n, long long p, long long t, long long l) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (p < 2) throw parameter_error("characteristic p must be >= 2");
    long long s = t - p * l;
    if (s < 0 || s > (n + 1) * (p - 1)) return 0;
    BigInt total = 0;
    for (long long j = 0; j <= n + 1; ++j) {
        long long top = s - j * p + n;
        if (top < 0) continue;
        BigInt term = binomial_int(n + 1, j) * binomial_int(top, n);
        total += (j % 2 == 0) ? term : -term;
    }
    if (total < 0) throw consistency_error("negative lattice point count");
    return total;
}

enum class MuMethod { Enumerate, Convolve };

namespace detail {

inline unsigned enumerate_threads() {
    const char* env = std::getenv("MBF_ENUM_THREADS");
    if (env == nullptr) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
}

/// Walks every point of [0, p-1]^k with an odometer, counting those with
/// coordinate sum == s. Cost p^k.
inline unsigned long long walk_box(long long k, long long p, long long s) {
    if (s < 0 || s > k * (p - 1)) return 0;
    if (k == 0) return s == 0 ? 1 : 0;
    std::vector<long long> digits(static_cast<std::size_t>(k), 0);
    long long sum = 0;
    unsigned long long hits = 0;
    for (;;) {
        if (sum == s) ++hits;
        std::size_t i = 0;
        while (i < digits.size()) {
            if (digits[i] + 1 < p) {
                ++digits[i];
                ++sum;
                break;
            }
            sum -= digits[i];
            digits[i] = 0;
            ++i;
        }
        if (i == digits.size()) break;
    }
    return hits;
}

} // namespace detail

/// Independent verification oracles for splitting_multiplicity.
///   Enumerate: brute-force walk of all p^(n+1) lattice points, optionally
///     partitioned over the first coordinate (MBF_ENUM_THREADS); the count is
///     a deterministic sum independent of the worker count.
///   Convolve: coefficient of x^(t-pl) in (1 + x + ... + x^(p-1))^(n+1) by
///     exact polynomial multiplication.
inline BigInt splitting_multiplicity_oracle(long long n, long long p, long long t, long long l,
                                            MuMethod method) {
    if (n < 0) throw parameter_error("dimension n must be >= 0");
    if (p < 2) throw parameter_error("characteristic p must be >= 2");
    long long s = t - p * l;
    if (method == MuMethod::Enumerate) {
        long double size = 1.0L;
        for (long long i = 0; i <= n; ++i) size *= static_cast<long double>(p);
        if (size > 1e8L) throw parameter_error("enumeration infeasible, use convolve");
        if (s < 0 || s > (n + 1) * (p - 1)) return 0;
        unsigned workers = detail::enumerate_threads();
        if (workers <= 1 || n == 0) {
            unsigned long long hits = 0;
            for (long long first = 0; first < p; ++first)
                hits += detail::walk_box(n, p, s - first);
            return BigInt(hits);
        }
        std::vector<unsigned long long> partial(static_cast<std::size_t>(p), 0);
        std::atomic<long long> next{0};
        auto body = [&]() {
            for (;;) {
                long long first = next.fetch_add(1);
                if (first >= p) return;
                partial[static_cast<std::size_t>(first)] = detail::walk_box(n, p, s - first);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
        unsigned long long hits = 0;
        for (auto v : partial) hits += v;
        return BigInt(hits);
    }

    // Convolve.
    if (s < 0 || s > (n + 1) * (p - 1)) return 0;
    std::vector<BigInt> acc{1};
    std::vector<BigInt> box(static_cast<std::size_t>(p), 1);
    for (long long factor = 0; factor <= n; ++factor) {
        std::size_t cap = static_cast<std::size_t>(s) + 1;
        std::vector<BigInt> next(std::min(acc.size() + box.size() - 1, cap), 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (std::size_t j = 0; j < box.size() && i + j < next.size(); ++j)
                next[i + j] += acc[i];
        }
        acc = std::move(next);
    }
    return static_cast<std::size_t>(s) < acc.size() ? acc[static_cast<std::size_t>(s)] : BigInt(0);
}

// ---------------------------------------------------------------------------
// Primes and the Hasse polynomial
// ---------------------------------------------------------------------------

inline bool is_prime(long long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0 || p % 3 == 0) return false;
    for (long long f = 5; f * f <= p; f += 6)
        if (p % f == 0 || p % (f + 2) == 0) return false;
    return true;
}

inline long long next_prime(long long p) {
    long long q = p + 1;
    while (!is_prime(q)) ++q;
    return q;
}

namespace detail {

inline long long mod_pow(long long base, long long e, long long m) {
    unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(((base % m) + m) % m);
    while (e > 0) {
        if (e & 1) acc = acc * b % static_cast<unsigned __int128>(m);
        b = b * b % static_cast<unsigned __int128>(m);
        e >>= 1;
    }
    return static_cast<long long>(acc);
}

inline long long mod_inverse(long long a, long long p) { return mod_pow(a, p - 2, p); }

} // namespace detail

/// Report on F_p-roots of the Hasse polynomial P(T) = sum_i C(m,i)^2 T^i,
/// m = (p-1)/2, whose roots are supersingular Legendre parameters.
struct SupersingularWitness {
    long long p = 0;
    bool has_root_in_fp = false;
    std::optional<long long> lambda_in_base_field;
};

/// Scans lambda in {2,...,p-1}: the Legendre form needs lambda outside {0,1},
/// and P(0) = 1, P(1) = C(p-1, m) = (-1)^m (mod p) never vanish anyway.
inline SupersingularWitness supersingular_witness(long long p) {
    if (p == 2 || !is_prime(p)) throw parameter_error("supersingular witness requires an odd prime");
    long long m = (p - 1) / 2;
    // Row of binomials C(m, i) mod p by the multiplicative recurrence.
    std::vector<long long> row(static_cast<std::size_t>(m) + 1, 1);
    for (long long i = 1; i <= m; ++i) {
        unsigned __int128 v = static_cast<unsigned __int128>(row[static_cast<std::size_t>(i - 1)]);
        v = v * static_cast<unsigned __int128>(m - i + 1) % static_cast<unsigned __int128>(p);
        v = v * static_cast<unsigned __int128>(detail::mod_inverse(i, p)) % static_cast<unsigned __int128>(p);
        row[static_cast<std::size_t>(i)] = static_cast<long long>(v);
    }
    SupersingularWitness out;
    out.p = p;
    for (long long lambda = 2; lambda < p; ++lambda) {
        unsigned __int128 acc = 0;
        for (long long i = m; i >= 0; --i) {
            unsigned __int128 coeff = static_cast<unsigned __int128>(row[static_cast<std::size_t>(i)]);
            coeff = coeff * coeff % static_cast<unsigned __int128>(p);
            acc = (acc * static_cast<unsigned __int128>(lambda) + coeff) % static_cast<unsigned __int128>(p);
        }
        if (acc == 0) {
            out.has_root_in_fp = true;
            out.lambda_in_base_field = lambda;
            return out;
        }
    }
    return out;
}

} // namespace mbf
