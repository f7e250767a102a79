#include "dzeta/identities.hpp"

#include "dzeta/combinatorics.hpp"

namespace dzeta {

namespace {

void require_pos(int s, int t) {
    if (s < 1 || t < 1) throw domain_error("identity check: s and t must be >= 1");
}

void require_sign_args(int s, int t, std::int64_t N) {
    require_pos(s, t);
    if (N < 1) throw domain_error("identity check: N must be >= 1");
}

// prefix[j] = sum_{m=1..j} w^m / m^A, for j = 0..upTo
std::vector<BigRational> weighted_prefix(int A, const BigRational& w, std::int64_t upTo) {
    std::vector<BigRational> prefix(static_cast<std::size_t>(upTo) + 1);
    prefix[0] = 0;
    BigRational wm = 1;
    for (std::int64_t m = 1; m <= upTo; ++m) {
        wm *= w;
        prefix[static_cast<std::size_t>(m)] =
            prefix[static_cast<std::size_t>(m - 1)] +
            wm / BigRational(ipow(BigInt(m), static_cast<unsigned>(A)));
    }
    return prefix;
}

} // namespace

BigRational remainder_double_sum(int A, int B, const BigRational& w1, const BigRational& w2,
                                 std::int64_t N) {
    // sum_k w1^k/k^A * sum_{m<=N-k} (w1 w2)^m/m^B
    const auto inner = weighted_prefix(B, w1 * w2, N - 1 >= 0 ? N - 1 : 0);
    BigRational total = 0;
    BigRational w1k = 1;
    for (std::int64_t k = 1; k <= N - 1; ++k) {
        w1k *= w1;
        total += w1k / BigRational(ipow(BigInt(k), static_cast<unsigned>(A))) *
                 inner[static_cast<std::size_t>(N - k)];
    }
    return total;
}

BigRational boundary_double_sum(int Ax, int Bn, const BigRational& wx, const BigRational& wn,
                                std::int64_t N) {
    // sum_n wn^n/n^Bn * (Q(N) - Q(n-N-1)), Q = prefix of wx^x/x^Ax
    const auto Q = weighted_prefix(Ax, wx, N);
    BigRational total = 0;
    BigRational wnn = pow_rat(wn, N);
    for (std::int64_t n = N + 1; n <= 2 * N; ++n) {
        wnn *= wn;
        total += wnn / BigRational(ipow(BigInt(n), static_cast<unsigned>(Bn))) *
                 (Q[static_cast<std::size_t>(N)] - Q[static_cast<std::size_t>(n - N - 1)]);
    }
    return total;
}

std::vector<PartialFracTerm> partial_fraction_terms(int s, int t) {
    require_pos(s, t);
    std::vector<PartialFracTerm> terms;
    terms.reserve(static_cast<std::size_t>(s + t));
    for (int a = 0; a < s; ++a)
        terms.push_back({binom(a + t - 1, t - 1), s - a, t + a, 0});
    for (int a = 0; a < t; ++a)
        terms.push_back({binom(a + s - 1, s - 1), 0, s + a, t - a});
    return terms;
}

bool verify_partial_fraction(int s, int t, const BigRational& x, const BigRational& y) {
    require_pos(s, t);
    if (x == 0 || y == 0) throw domain_error("verify_partial_fraction: x and y must be nonzero");
    const BigRational xy = x + y;
    if (xy == 0) throw domain_error("verify_partial_fraction: x+y must be nonzero");

    const BigRational lhs = BigRational(1) / (pow_rat(x, s) * pow_rat(y, t));
    BigRational rhs = 0;
    for (const auto& term : partial_fraction_terms(s, t)) {
        BigRational v = term.coefficient / pow_rat(xy, term.xy_power);
        if (term.x_power > 0) v /= pow_rat(x, term.x_power);
        if (term.y_power > 0) v /= pow_rat(y, term.y_power);
        rhs += v;
    }
    return lhs == rhs;
}

bool check_symmetric_identity(int s, int t, const BigRational& sigma, const BigRational& tau,
                              std::int64_t N) {
    require_sign_args(s, t, N);
    if (sigma == 0 || tau == 0) throw domain_error("check_symmetric_identity: zero weight");
    const BigRational st = sigma * tau;
    const BigRational inv_sigma = BigRational(1) / sigma;
    const BigRational inv_tau = BigRational(1) / tau;
    const int ps = (s % 2 == 0) ? 1 : -1;
    const int pt = (t % 2 == 0) ? 1 : -1;

    const BigRational lhs = BigRational(pt) * zeta_partial_double_weighted(s, t, sigma, tau, N) +
                            BigRational(ps) * zeta_partial_double_weighted(t, s, tau, sigma, N);

    BigRational rhs = 0;
    for (int a = 0; a < s; ++a)
        rhs += binom(a + t - 1, t - 1) * zeta_partial_single_weighted(s - a, st, N) *
               zeta_partial_single_weighted(t + a, inv_tau, N);
    for (int a = 0; a < t; ++a)
        rhs += binom(a + s - 1, s - 1) * zeta_partial_single_weighted(t - a, st, N) *
               zeta_partial_single_weighted(s + a, inv_sigma, N);
    for (int a = 0; a < s; ++a)
        rhs -= binom(a + t - 1, t - 1) * zeta_partial_double_weighted(t + a, s - a, inv_tau, st, N);
    for (int a = 0; a < t; ++a)
        rhs -= binom(a + s - 1, s - 1) * zeta_partial_double_weighted(s + a, t - a, inv_sigma, st, N);
    rhs -= binom(s + t - 1, s - 1) * zeta_partial_single_weighted(s + t, sigma, N);
    rhs -= binom(s + t - 1, t - 1) * zeta_partial_single_weighted(s + t, tau, N);

    BigRational acc = 0;
    for (int a = 0; a < t; ++a)
        acc += binom(a + s - 1, s - 1) * BigRational(a % 2 == 0 ? 1 : -1) *
               remainder_double_sum(s + a, t - a, sigma, tau, N);
    rhs += BigRational(pt) * acc;

    acc = 0;
    for (int a = 0; a < s; ++a)
        acc += binom(a + t - 1, t - 1) * BigRational(a % 2 == 0 ? 1 : -1) *
               remainder_double_sum(t + a, s - a, tau, sigma, N);
    rhs += BigRational(ps) * acc;

    return lhs == rhs;
}

bool check_shuffle_identity(int s, int t, const BigRational& sigma, const BigRational& tau,
                            std::int64_t N) {
    require_sign_args(s, t, N);
    if (sigma == 0 || tau == 0) throw domain_error("check_shuffle_identity: zero weight");
    const BigRational inv_sigma = BigRational(1) / sigma;
    const BigRational inv_tau = BigRational(1) / tau;

    BigRational lhs = 0;
    for (int a = 0; a < s; ++a)
        lhs += binom(a + t - 1, t - 1) *
               zeta_partial_double_weighted(t + a, s - a, inv_tau, tau / sigma, N);
    for (int a = 0; a < t; ++a)
        lhs += binom(a + s - 1, s - 1) *
               zeta_partial_double_weighted(s + a, t - a, inv_sigma, sigma / tau, N);

    BigRational rhs = zeta_partial_single_weighted(s, inv_sigma, N) *
                      zeta_partial_single_weighted(t, inv_tau, N);
    for (int a = 0; a < s; ++a)
        rhs -= binom(a + t - 1, t - 1) *
               boundary_double_sum(s - a, t + a, tau / sigma, inv_tau, N);
    for (int a = 0; a < t; ++a)
        rhs -= binom(a + s - 1, s - 1) *
               boundary_double_sum(t - a, s + a, sigma / tau, inv_sigma, N);

    return lhs == rhs;
}

bool check_stillsymmetric_identity(int s, int t, Sign sigma, Sign tau, std::int64_t N) {
    require_sign_args(s, t, N);
    const BigRational sg = to_rational(sigma);
    const BigRational tu = to_rational(tau);
    const BigRational st = sg * tu;
    const int ps = (s % 2 == 0) ? 1 : -1;
    const int pt = (t % 2 == 0) ? 1 : -1;

    const BigRational lhs = BigRational(pt) * zeta_partial_double_weighted(s, t, sg, tu, N) +
                            BigRational(ps) * zeta_partial_double_weighted(t, s, tu, sg, N);

    BigRational rhs = 0;
    for (int a = 0; a < s; ++a)
        rhs += binom(a + t - 1, t - 1) * zeta_partial_single_weighted(s - a, st, N) *
               zeta_partial_single_weighted(t + a, tu, N);
    for (int a = 0; a < t; ++a)
        rhs += binom(a + s - 1, s - 1) * zeta_partial_single_weighted(t - a, st, N) *
               zeta_partial_single_weighted(s + a, sg, N);
    rhs -= zeta_partial_single_weighted(s, sg, N) * zeta_partial_single_weighted(t, tu, N);
    rhs -= binom(s + t - 1, s - 1) * zeta_partial_single_weighted(s + t, sg, N);
    rhs -= binom(s + t - 1, t - 1) * zeta_partial_single_weighted(s + t, tu, N);

    BigRational acc = 0;
    for (int a = 0; a < t; ++a)
        acc += binom(a + s - 1, s - 1) * BigRational(a % 2 == 0 ? 1 : -1) *
               remainder_double_sum(s + a, t - a, sg, tu, N);
    rhs += BigRational(pt) * acc;

    acc = 0;
    for (int a = 0; a < s; ++a)
        acc += binom(a + t - 1, t - 1) * BigRational(a % 2 == 0 ? 1 : -1) *
               remainder_double_sum(t + a, s - a, tu, sg, N);
    rhs += BigRational(ps) * acc;

    for (int a = 0; a < s; ++a)
        rhs += binom(a + t - 1, t - 1) * boundary_double_sum(s - a, t + a, st, tu, N);
    for (int a = 0; a < t; ++a)
        rhs += binom(a + s - 1, s - 1) * boundary_double_sum(t - a, s + a, st, sg, N);

    return lhs == rhs;
}

bool check_finite_identity(int s, int t, Sign sigma, Sign tau, std::int64_t N) {
    require_sign_args(s, t, N);
    if ((s + t) % 2 == 0) throw domain_error("check_finite_identity: s+t must be odd");
    const BigRational sg = to_rational(sigma);
    const BigRational tu = to_rational(tau);
    const BigRational st = sg * tu;
    const int pt = (t % 2 == 0) ? 1 : -1;

    const BigRational lhs = 2 * zeta_partial_double_weighted(s, t, sg, tu, N);

    BigRational rhs = BigRational(s % 2 == 0 ? 2 : 0) * zeta_partial_single_weighted(s, sg, N) *
                          zeta_partial_single_weighted(t, tu, N) -
                      zeta_partial_single_weighted(s + t, st, N);

    BigRational acc = 0;
    for (int b = 1; b <= s; ++b) {
        BigRational bracket = zeta_partial_single_weighted(b, st, N) *
                              zeta_partial_single_weighted(s + t - b, tu, N);
        bracket += BigRational(b % 2 == 0 ? 1 : -1) *
                   remainder_double_sum(s + t - b, b, tu, sg, N);
        bracket += boundary_double_sum(b, s + t - b, st, tu, N);
        acc += binom(s + t - b - 1, t - 1) * bracket;
    }
    for (int b = 1; b <= t; ++b) {
        BigRational bracket = zeta_partial_single_weighted(b, st, N) *
                              zeta_partial_single_weighted(s + t - b, sg, N);
        bracket += BigRational(b % 2 == 0 ? 1 : -1) *
                   remainder_double_sum(s + t - b, b, sg, tu, N);
        bracket += boundary_double_sum(b, s + t - b, st, sg, N);
        acc += binom(s + t - b - 1, s - 1) * bracket;
    }
    rhs += BigRational(pt) * acc;
    rhs -= BigRational(pt) * binom(s + t - 1, s - 1) * zeta_partial_single_weighted(s + t, sg, N);
    rhs -= BigRational(pt) * binom(s + t - 1, t - 1) * zeta_partial_single_weighted(s + t, tu, N);

    return lhs == rhs;
}

TailWitness tail_witness_b_odd(int s, int t, Sign sigma, Sign tau, int b, std::int64_t N) {
    require_sign_args(s, t, N);
    if ((s + t) % 2 == 0) throw domain_error("tail_witness_b_odd: s+t must be odd");
    if (b < 1 || b > t || b % 2 == 0)
        throw domain_error("tail_witness_b_odd: b must be odd and in [1,t]");
    const BigRational sg = to_rational(sigma);
    const BigRational tu = to_rational(tau);
    const BigRational st = sg * tu;

    BigRational bracket = zeta_partial_single_weighted(b, st, N) *
                          zeta_partial_single_weighted(s + t - b, sg, N);
    bracket -= remainder_double_sum(s + t - b, b, sg, tu, N); // (-1)^b with b odd
    bracket += boundary_double_sum(b, s + t - b, st, sg, N);

    TailWitness w;
    w.bracket_abs = abs(bracket);
    w.bound = rat(3, N) * harmonic(N);
    return w;
}

} // namespace dzeta
