#ifndef DZETA_NUMERIC_EVAL_HPP
#define DZETA_NUMERIC_EVAL_HPP

#include <array>
#include <cstdint>

#include "dzeta/enclosure.hpp"
#include "dzeta/partial_sums.hpp"
#include "dzeta/zeta_expr.hpp"

namespace dzeta {

// zeta(s;sigma) with error_bound <= target_tol.
//   sigma=+1, s>=2 : direct sum to M, tail bracketed by integral comparison
//   sigma=-1, s>=2 : eta relation zeta(s;-1) = (2^{1-s}-1) zeta(s)
//   s=1, sigma=-1  : -ln 2
//   s=0            : exactly -1/2 (either sign)
//   s=1, sigma=+1  : 0 under the zeta(1;1)=0 convention, else divergence_error
Enclosure zeta_single_value(SignedIndex idx, long double target_tol,
                            bool zeta_one_convention = false);

// Enclosure of a ZetaExpr value; per-atom tolerances are budgeted from the
// term count and coefficient sizes so the total stays within target_tol.
Enclosure eval_expr(const ZetaExpr& e, long double target_tol);

// Proven bound for |zeta(s,t;sigma,tau) - zeta_N(s,t;sigma,tau)|, any signs:
//   t >= 2 : zeta(2) N^{1-s}/(s-1)
//   t == 1 : (1+ln(N+1)) N^{1-s}/(s-1) + N^{1-s}/(s-1)^2
// Requires s >= 2.
long double double_tail_bound(int s, int t, Truncation N);

struct DirectOptions {
    std::int64_t n_ceiling = 6'000'000'000; // outer-index cap for the rigorous path
    // On tolerance overflow: throw resource_error (false) or sum to the
    // ceiling and report the achieved bound (true).
    bool best_effort = false;
};

struct DirectResult {
    Enclosure enclosure;
    std::int64_t n_used = 0;
    bool rigorous = true; // false only on the s=1, sigma=-1 heuristic path
};

// Direct summation of the double series with N chosen from double_tail_bound
// to meet target_tol.  s >= 2 is the rigorous path; (s=1, sigma=-1) falls
// back to a heuristic estimate (consecutive partial sums), flagged
// non-rigorous; (s=1, sigma=+1) is divergent.
DirectResult double_zeta_direct(int s, int t, Sign sigma, Sign tau, long double target_tol,
                                const DirectOptions& opt = {});

// All four sign pairs from one pass over the same N (the bound does not
// depend on the signs).  Index by sign_pair_index(sigma, tau).
struct DirectFamily {
    std::array<DirectResult, 4> results;
    std::int64_t n_used = 0;
};

constexpr int sign_pair_index(Sign sigma, Sign tau) {
    return (sigma == Sign::minus ? 2 : 0) + (tau == Sign::minus ? 1 : 0);
}

DirectFamily double_zeta_direct_family(int s, int t, long double target_tol,
                                       const DirectOptions& opt = {});

} // namespace dzeta

#endif
