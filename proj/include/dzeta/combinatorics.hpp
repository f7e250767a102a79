#ifndef DZETA_COMBINATORICS_HPP
#define DZETA_COMBINATORICS_HPP

#include "dzeta/rational.hpp"

namespace dzeta {

// Binomial coefficient with the truncation convention binom(n,r) = 0 for
// r < 0 or r > n, so sums over shifted upper indices cut off by themselves.
BigRational binom(long long n, long long r);

// H_N = sum_{k=1..N} 1/k, exact.
BigRational harmonic(long long N);

// Bernoulli number B_n with B_1 = -1/2, by the defining recurrence
// sum_{k=0..n} binom(n+1,k) B_k = 0.  Memoized; thread-safe.
BigRational bernoulli(long long n);

} // namespace dzeta

#endif
