// Test-side oracles: independent routes to the quantities under test.  These
// deliberately use the most literal formulations (factorial ratios, O(N^2)
// double loops, per-term rational powers) and stay clear of the library's
// optimized paths.
#ifndef DZETA_TESTS_ORACLES_HPP
#define DZETA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dzeta/enclosure.hpp"
#include "dzeta/rational.hpp"
#include "dzeta/zeta_expr.hpp"

namespace oracles {

using dzeta::BigInt;
using dzeta::BigRational;
using dzeta::Sign;
using dzeta::ZetaAtom;
using dzeta::ZetaExpr;
using dzeta::ZetaTerm;

inline BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

// n! / (r! (n-r)!)
inline BigRational binom_factorial(long long n, long long r) {
    if (r < 0 || r > n) return BigRational(0);
    return BigRational(factorial(n)) / BigRational(factorial(r) * factorial(n - r));
}

// Akiyama-Tanigawa transform; independent of the defining recurrence used by
// the library.
inline BigRational bernoulli_at(int n) {
    std::vector<BigRational> row(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        row[static_cast<std::size_t>(m)] = dzeta::rat(1, m + 1);
        for (int j = m; j >= 1; --j)
            row[static_cast<std::size_t>(j - 1)] =
                BigRational(j) * (row[static_cast<std::size_t>(j - 1)] - row[static_cast<std::size_t>(j)]);
    }
    // AT yields B_n with B_1 = +1/2; flip to the B_1 = -1/2 convention
    if (n == 1) return -row[0];
    return row[0];
}

// literal double loop, no prefix reuse
inline BigRational double_sum_literal(int s, int t, const BigRational& ws, const BigRational& wt,
                                      long long N) {
    BigRational total = 0;
    for (long long n = 1; n <= N; ++n)
        for (long long k = 1; k < n; ++k)
            total += dzeta::pow_rat(ws, n) * dzeta::pow_rat(wt, k) /
                     (BigRational(dzeta::ipow(BigInt(n), static_cast<unsigned>(s))) *
                      BigRational(dzeta::ipow(BigInt(k), static_cast<unsigned>(t))));
    return total;
}

inline BigRational single_sum_literal(int s, const BigRational& w, long long N) {
    BigRational total = 0;
    for (long long n = 1; n <= N; ++n)
        total += dzeta::pow_rat(w, n) /
                 BigRational(dzeta::ipow(BigInt(n), static_cast<unsigned>(s)));
    return total;
}

// sum_{k=1..N-1} sum_{m=1..N-k} w1^{m+k} w2^m / (k^A m^B), literally
inline BigRational remainder_sum_literal(int A, int B, const BigRational& w1,
                                         const BigRational& w2, long long N) {
    BigRational total = 0;
    for (long long k = 1; k <= N - 1; ++k)
        for (long long m = 1; m <= N - k; ++m)
            total += dzeta::pow_rat(w1, m + k) * dzeta::pow_rat(w2, m) /
                     (BigRational(dzeta::ipow(BigInt(k), static_cast<unsigned>(A))) *
                      BigRational(dzeta::ipow(BigInt(m), static_cast<unsigned>(B))));
    return total;
}

// sum_{n=N+1..2N} sum_{x=n-N..N} wx^x wn^n / (x^Ax n^Bn), literally
inline BigRational boundary_sum_literal(int Ax, int Bn, const BigRational& wx,
                                        const BigRational& wn, long long N) {
    BigRational total = 0;
    for (long long n = N + 1; n <= 2 * N; ++n)
        for (long long x = n - N; x <= N; ++x)
            total += dzeta::pow_rat(wx, x) * dzeta::pow_rat(wn, n) /
                     (BigRational(dzeta::ipow(BigInt(x), static_cast<unsigned>(Ax))) *
                      BigRational(dzeta::ipow(BigInt(n), static_cast<unsigned>(Bn))));
    return total;
}

// zeta(s;+1), s >= 2, via the alternating eta series: partial sums of an
// alternating series with decreasing terms straddle the limit, and
// zeta = eta / (1 - 2^{1-s}).  Independent of the library's direct-sum route.
inline dzeta::Enclosure zeta_eta_oracle(int s, long long M) {
    long double sum = 0.0L, prev = 0.0L;
    long double sign = 1.0L;
    for (long long n = 1; n <= M + 1; ++n) {
        long double p = 1.0L;
        for (int i = 0; i < s; ++i) p *= static_cast<long double>(n);
        prev = sum;
        sum += sign / p;
        sign = -sign;
    }
    // the last two partials straddle eta(s); rounding fudge covers the
    // plain-summation error of M terms
    const long double lo = std::min(sum, prev), hi = std::max(sum, prev);
    const long double scale = 1.0L / (1.0L - exp2l(static_cast<long double>(1 - s)));
    dzeta::Enclosure e;
    e.value = scale * (lo + hi) / 2;
    e.error_bound = scale * (hi - lo) / 2 + 2e-18L * (static_cast<long double>(M) + 4);
    return e;
}

struct RandomRational {
    std::mt19937_64 rng;
    std::uniform_int_distribution<int> num{-50, 50};
    std::uniform_int_distribution<int> den{1, 50};
    explicit RandomRational(std::uint64_t seed) : rng(seed) {}
    BigRational nonzero() {
        for (;;) {
            const int p = num(rng);
            if (p != 0) return dzeta::rat(p, den(rng));
        }
    }
    BigRational any() { return dzeta::rat(num(rng), den(rng)); }
};

// arbitrary (not normalized) expressions for normalization laws
inline ZetaExpr random_expr(std::mt19937_64& rng, bool allow_zeta_one = false) {
    std::uniform_int_distribution<int> n_terms(0, 6);
    std::uniform_int_distribution<int> n_atoms(0, 2);
    std::uniform_int_distribution<int> arg(0, 6);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coeff_num(-6, 6);
    std::uniform_int_distribution<int> coeff_den(1, 6);
    std::vector<ZetaTerm> terms;
    const int T = n_terms(rng);
    for (int i = 0; i < T; ++i) {
        ZetaTerm t;
        t.coeff = dzeta::rat(coeff_num(rng), coeff_den(rng));
        const int A = n_atoms(rng);
        for (int a = 0; a < A; ++a) {
            int v = arg(rng);
            Sign sg = coin(rng) ? Sign::plus : Sign::minus;
            if (!allow_zeta_one && v == 1 && sg == Sign::plus) v = 2;
            t.atoms.push_back({v, sg});
        }
        terms.push_back(std::move(t));
    }
    return ZetaExpr::from_terms(std::move(terms), allow_zeta_one);
}

} // namespace oracles

#endif
