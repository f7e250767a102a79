#ifndef DZETA_PARTIAL_SUMS_HPP
#define DZETA_PARTIAL_SUMS_HPP

#include <cstdint>

#include "dzeta/rational.hpp"

namespace dzeta {

// One argument slot (s;sigma) of a signed sum.
struct SignedIndex {
    int exponent; // >= 1
    Sign sign;
};

struct Truncation {
    std::int64_t N; // >= 1
};

// Weighted core: partial sums with an arbitrary nonzero exact-rational weight
// in place of the +-1 sign.  The general weight is what the symmetric and
// shuffle identities are stated for; the Sign overloads below are the
// specialization everything else uses.
//
//   zeta_partial_single_weighted(s, w, N)    = sum_{n=1..N} w^n / n^s
//   zeta_partial_double_weighted(s,t,ws,wt,N)= sum_{n=1..N} sum_{k=1..n-1}
//                                              ws^n wt^k / (n^s k^t)
//
// The double sum reuses the running inner prefix, so a call costs O(N)
// rational operations, not O(N^2).
BigRational zeta_partial_single_weighted(int s, const BigRational& w, std::int64_t N);
BigRational zeta_partial_double_weighted(int s, int t, const BigRational& ws,
                                         const BigRational& wt, std::int64_t N);

BigRational zeta_partial_single(SignedIndex idx, Truncation N);
BigRational zeta_partial_double(SignedIndex outer, SignedIndex inner, Truncation N);

// The three pieces of the reflection (stuffle) split of a product of single
// partial sums:
//   zeta_N(s;sigma) zeta_N(t;tau) = zeta_N(s,t;sigma,tau)
//                                 + zeta_N(s+t;sigma tau)
//                                 + zeta_N(t,s;tau,sigma).
struct StuffleParts {
    BigRational double_st;  // zeta_N(s,t;sigma,tau)
    BigRational single_sum; // zeta_N(s+t;sigma tau)
    BigRational double_ts;  // zeta_N(t,s;tau,sigma)
};

StuffleParts stuffle_decompose(SignedIndex outer, SignedIndex inner, Truncation N);

} // namespace dzeta

#endif
