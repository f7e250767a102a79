#ifndef DZETA_REDUCTION_HPP
#define DZETA_REDUCTION_HPP

#include "dzeta/zeta_expr.hpp"

namespace dzeta {

// Closed form of the signed double zeta value zeta(s,t;sigma,tau) as a
// combination of single zeta values, for s+t odd:
//
//   zeta(s,t;sigma,tau) = 1/2 (1+(-1)^s) zeta(s;sigma) zeta(t;tau)
//                       - 1/2 zeta(s+t;sigma tau)
//     + (-1)^t sum_{0<=k<=t/2} binom(s+t-2k-1, s-1) zeta(2k;sigma tau) zeta(s+t-2k;sigma)
//     + (-1)^t sum_{0<=k<=s/2} binom(s+t-2k-1, t-1) zeta(2k;sigma tau) zeta(s+t-2k;tau)
//
// with zeta(0;.) = -1/2 and, on the (t=1, tau=+1, s even) extension path,
// zeta(1;1) = 0 (the returned expression is then flagged accordingly).
//
// Preconditions: s+t odd; s > (1+sigma)/2; and t > (1+tau)/2 unless
// (t == 1, tau == +1, s even).
ZetaExpr reduce_signed(int s, int t, Sign sigma, Sign tau);

// Classical unsigned reduction, s,t >= 2 and s+t odd:
//
//   zeta(s,t) = 1/2 (1+(-1)^s) zeta(s) zeta(t)
//             + 1/2 [(-1)^s binom(s+t,s) - 1] zeta(s+t)
//             + (-1)^{s+1} sum_{k=1..floor(max(s,t)/2)}
//               [binom(s+t-2k-1,t-1) + binom(s+t-2k-1,s-1)] zeta(2k) zeta(s+t-2k)
//
// The sum limit is floor(max(s,t)/2); when max(s,t) is odd the would-be
// extra term carries vanishing binomials either way, and the floor choice
// is pinned by exact agreement with reduce_signed at sigma=tau=+1.
ZetaExpr reduce_euler(int s, int t);

// zeta(s,1) = s/2 zeta(s+1) - 1/2 sum_{k=2..s-1} zeta(k) zeta(s+1-k),
// valid for every integer s >= 2.
ZetaExpr reduce_s1(int s);

// zeta(s,1;sigma,+1) for even s >= 2:
//
//   1/2 (s-1) zeta(s+1;sigma) + 1/2 zeta(s+1)
//   - sum_{k=1..s/2-1} zeta(2k;sigma) zeta(s+1-2k)
ZetaExpr reduce_even_s_t1(int s, Sign sigma);

} // namespace dzeta

#endif
