#include "dzeta/numeric_eval.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>

#include "dzeta/errors.hpp"

namespace dzeta {

namespace {

// n^e by binary powering; exponents in scope are small (<= ~60) and the
// intermediate squarings stay far inside long double range.
inline long double ld_ipow(std::int64_t n, int e) {
    long double x = static_cast<long double>(n);
    long double r = 1.0L;
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

// Compensated accumulator: summation error <= 2 eps sum|x_i|, independent of
// the term count (plain recursive summation would cost (n-1) eps sum|x_i|).
struct Kahan {
    long double sum = 0.0L;
    long double carry = 0.0L;
    void add(long double x) {
        const long double y = x - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void require_tol(long double tol) {
    if (!(tol > 0)) throw domain_error("target tolerance must be positive");
    if (tol < 32 * kMachineEps)
        throw resource_error("target tolerance below working precision");
}

// integral comparison: sum_{n>M} n^{-s} lies in [I(M+1), I(M)], I(x) = x^{1-s}/(s-1)
long double zeta_tail_integral(std::int64_t M, int s) {
    return 1.0L / (ld_ipow(M, s - 1) * (s - 1));
}

// zeta(s;+1) for s >= 2: direct sum to M plus the bracketed integral tail.
Enclosure zeta_plus_direct(int s, long double tol) {
    constexpr std::int64_t kMaxM = 2'000'000'000;
    std::int64_t M = static_cast<std::int64_t>(powl(1.0L / (1.8L * tol), 1.0L / s)) + 2;
    M = std::max<std::int64_t>(M, 16);
    auto half_width = [s](std::int64_t m) {
        return (zeta_tail_integral(m, s) - zeta_tail_integral(m + 1, s)) / 2;
    };
    while (half_width(M) > 0.45L * tol) {
        if (M > kMaxM) throw resource_error("zeta_single_value: tolerance needs M beyond ceiling");
        M *= 2;
    }

    Kahan acc;
    for (std::int64_t n = 1; n <= M; ++n) acc.add(1.0L / ld_ipow(n, s));
    const long double tail_hi = zeta_tail_integral(M, s);
    const long double tail_lo = zeta_tail_integral(M + 1, s);

    const long double value = acc.sum + (tail_hi + tail_lo) / 2;
    // 2 eps A from Kahan, ~10 eps A from per-term powering/division, plus
    // slack for the tail bracket arithmetic itself
    const long double rounding = kMachineEps * (16 * acc.sum + 8 * tail_hi + 4 * fabsl(value));
    return {value, (tail_hi - tail_lo) / 2 + rounding};
}

std::mutex atom_cache_mutex;
std::map<std::pair<int, int>, Enclosure> atom_cache; // (argument, sign) -> tightest so far

Enclosure zeta_single_cached(int arg, Sign sign, long double tol) {
    const std::pair<int, int> key{arg, to_int(sign)};
    {
        std::lock_guard<std::mutex> lock(atom_cache_mutex);
        const auto it = atom_cache.find(key);
        if (it != atom_cache.end() && it->second.error_bound <= tol) return it->second;
    }
    const Enclosure e = zeta_single_value({arg, sign}, tol, true);
    std::lock_guard<std::mutex> lock(atom_cache_mutex);
    auto [it, inserted] = atom_cache.emplace(key, e);
    if (!inserted && e.error_bound < it->second.error_bound) it->second = e;
    return e;
}

} // namespace

Enclosure zeta_single_value(SignedIndex idx, long double target_tol, bool zeta_one_convention) {
    require_tol(target_tol);
    const int s = idx.exponent;
    if (s < 0) throw domain_error("zeta_single_value: exponent must be >= 0");

    if (s == 0) return enc_exact(-0.5L); // analytic continuation, either sign

    if (s == 1) {
        if (idx.sign == Sign::minus) {
            const long double v = -std::numbers::ln2_v<long double>;
            return {v, 2 * kMachineEps * fabsl(v)};
        }
        if (!zeta_one_convention)
            throw divergence_error("zeta_single_value: zeta(1;+1) diverges "
                                   "(pass the zeta(1;1)=0 convention to evaluate it as 0)");
        return enc_exact(0.0L);
    }

    if (idx.sign == Sign::plus) return zeta_plus_direct(s, target_tol);

    // zeta(s;-1) = (2^{1-s} - 1) zeta(s); the factor is a power of two minus
    // one, representable to within 1 ulp, and |factor| < 1
    const Enclosure z = zeta_plus_direct(s, target_tol);
    const long double factor = exp2l(static_cast<long double>(1 - s)) - 1.0L;
    const long double v = factor * z.value;
    const long double e = fabsl(factor) * z.error_bound + 4 * kMachineEps * (fabsl(v) + 1);
    return {v, e};
}

Enclosure eval_expr(const ZetaExpr& e, long double target_tol) {
    require_tol(target_tol);
    const ZetaExpr en = normalize(e); // folds zeta(0;.), drops flagged zeta(1;+1)
    if (en.is_zero()) return enc_exact(0.0L);

    const long double per_term = target_tol / static_cast<long double>(en.terms().size());
    Enclosure total = enc_exact(0.0L);
    for (const auto& term : en.terms()) {
        // |atom values| <= 2 throughout, so a per-atom tolerance of
        // per_term / (6 |c| #atoms) keeps |c| (|v1| e2 + |v2| e1 + e1 e2)
        // under the term budget with room for the arithmetic slack
        const long double c_abs = std::max(fabsl(to_long_double(term.coeff)), 1e-30L);
        Enclosure t = enc_exact(1.0L);
        if (!term.atoms.empty()) {
            const long double atom_tol =
                per_term / (6.0L * c_abs * static_cast<long double>(term.atoms.size()));
            for (const auto& a : term.atoms)
                t = enc_mul(t, zeta_single_cached(a.argument, a.sign, atom_tol));
        }
        total = enc_add(total, enc_scale(term.coeff, t));
    }
    return total;
}

long double double_tail_bound(int s, int t, Truncation N) {
    if (s < 2) throw domain_error("double_tail_bound: s must be >= 2");
    if (t < 1) throw domain_error("double_tail_bound: t must be >= 1");
    if (N.N < 1) throw domain_error("double_tail_bound: N must be >= 1");
    // rational upper bound on zeta(2), strictly above pi^2/6
    constexpr long double kZeta2Upper = 1.6449340668482265L;
    const long double a = 1.0L / (ld_ipow(N.N, s - 1) * (s - 1));
    if (t >= 2) return kZeta2Upper * a;
    return (1.0L + logl(static_cast<long double>(N.N) + 1.0L)) * a + a / (s - 1);
}

namespace {

// smallest N with double_tail_bound <= goal (bound is monotone in N)
std::int64_t choose_direct_n(int s, int t, long double goal, const DirectOptions& opt,
                             bool* capped) {
    *capped = false;
    std::int64_t hi = 1;
    while (double_tail_bound(s, t, {hi}) > goal) {
        if (hi >= opt.n_ceiling) {
            if (!opt.best_effort)
                throw resource_error("double_zeta_direct: tolerance unreachable within the "
                                     "configured summation ceiling");
            *capped = true;
            return opt.n_ceiling;
        }
        hi = std::min(hi * 2, opt.n_ceiling);
    }
    std::int64_t lo = hi / 2 + 1;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (double_tail_bound(s, t, {mid}) <= goal)
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

DirectResult heuristic_alternating(int t, Sign tau, long double target_tol,
                                   const DirectOptions& opt) {
    // s=1, sigma=-1: outer terms tend to zeta(t;tau)(-1)^n/n, so consecutive
    // partial sums eventually straddle the limit.  Estimate only.
    const std::int64_t cap = std::min<std::int64_t>(opt.n_ceiling, 1 << 25);
    long double inner = 0.0L;
    Kahan acc;
    long double prev = 0.0L, last_step = 1.0L;
    std::int64_t n = 1;
    for (; n <= cap; ++n) {
        if (n >= 2) {
            const std::int64_t k = n - 1;
            const long double u = 1.0L / ld_ipow(k, t);
            inner += (tau == Sign::plus || (k % 2 == 0)) ? u : -u;
        }
        prev = acc.sum;
        const long double term = ((n % 2 == 0) ? 1.0L : -1.0L) * inner / static_cast<long double>(n);
        acc.add(term);
        last_step = fabsl(acc.sum - prev);
        if (n >= 64 && last_step <= target_tol) break;
    }
    DirectResult r;
    r.n_used = std::min(n, cap);
    r.rigorous = false;
    r.enclosure.value = (acc.sum + prev) / 2;
    r.enclosure.error_bound = 2 * last_step + 64 * kMachineEps;
    return r;
}

} // namespace

DirectFamily double_zeta_direct_family(int s, int t, long double target_tol,
                                       const DirectOptions& opt) {
    require_tol(target_tol);
    if (s < 2) throw domain_error("double_zeta_direct_family: s must be >= 2");
    if (t < 1) throw domain_error("double_zeta_direct_family: t must be >= 1");

    bool capped = false;
    const std::int64_t N = choose_direct_n(s, t, 0.9L * target_tol, opt, &capped);

    long double prefix_p = 0.0L, prefix_m = 0.0L, prefix_abs = 0.0L;
    Kahan acc[4];
    long double abs_outer = 0.0L;   // sum_n |inner| / n^s, caps the Kahan error
    long double prefix_drift = 0.0L; // sum_n n * prefix_abs / n^s, plain-sum error model
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t k = n - 1;
        const long double u = 1.0L / ld_ipow(k, t);
        prefix_p += u;
        prefix_abs += u;
        if (k & 1)
            prefix_m -= u;
        else
            prefix_m += u;
        const long double inv = 1.0L / ld_ipow(n, s);
        const long double xp = inv * prefix_p;
        const long double xm = inv * prefix_m;
        acc[sign_pair_index(Sign::plus, Sign::plus)].add(xp);
        acc[sign_pair_index(Sign::plus, Sign::minus)].add(xm);
        if (n & 1) {
            acc[sign_pair_index(Sign::minus, Sign::plus)].add(-xp);
            acc[sign_pair_index(Sign::minus, Sign::minus)].add(-xm);
        } else {
            acc[sign_pair_index(Sign::minus, Sign::plus)].add(xp);
            acc[sign_pair_index(Sign::minus, Sign::minus)].add(xm);
        }
        abs_outer += inv * prefix_abs;
        prefix_drift += inv * static_cast<long double>(n) * prefix_abs;
    }

    const long double tail = double_tail_bound(s, t, {N});
    // Kahan: 2 eps A; term powering/division: O(s+t) eps A; inner prefix via
    // plain summation: eps sum_n n prefix_abs(n) / n^s, all first order
    const long double rounding =
        kMachineEps * ((2.0L * (s + t) + 16.0L) * abs_outer + 2.0L * prefix_drift + 1.0L);

    DirectFamily fam;
    fam.n_used = N;
    for (int i = 0; i < 4; ++i) {
        fam.results[i].enclosure = {acc[i].sum, tail + rounding};
        fam.results[i].n_used = N;
        fam.results[i].rigorous = true;
    }
    if (!capped && tail + rounding > target_tol)
        throw resource_error("double_zeta_direct: rounding margin exceeded the tolerance");
    return fam;
}

DirectResult double_zeta_direct(int s, int t, Sign sigma, Sign tau, long double target_tol,
                                const DirectOptions& opt) {
    require_tol(target_tol);
    if (s < 1 || t < 1) throw domain_error("double_zeta_direct: s and t must be >= 1");
    if (s == 1) {
        if (sigma == Sign::plus)
            throw divergence_error("double_zeta_direct: zeta(1,t;+1,tau) diverges");
        return heuristic_alternating(t, tau, target_tol, opt);
    }
    const DirectFamily fam = double_zeta_direct_family(s, t, target_tol, opt);
    return fam.results[sign_pair_index(sigma, tau)];
}

} // namespace dzeta
