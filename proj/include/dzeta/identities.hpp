#ifndef DZETA_IDENTITIES_HPP
#define DZETA_IDENTITIES_HPP

#include <cstdint>
#include <vector>

#include "dzeta/partial_sums.hpp"

namespace dzeta {

// One summand of the two-variable partial fraction split of 1/(x^s y^t):
// coefficient / (x^x_power (x+y)^xy_power y^y_power), with at most one of
// x_power, y_power nonzero per term.
struct PartialFracTerm {
    BigRational coefficient;
    int x_power;
    int xy_power;
    int y_power;

    friend bool operator==(const PartialFracTerm&, const PartialFracTerm&) = default;
};

// The s+t terms of
//   1/(x^s y^t) = sum_{a=0..s-1} binom(a+t-1,t-1) / (x^{s-a} (x+y)^{t+a})
//              + sum_{a=0..t-1} binom(a+s-1,s-1) / ((x+y)^{s+a} y^{t-a}).
std::vector<PartialFracTerm> partial_fraction_terms(int s, int t);

// Exact check of the identity above at a rational point.  x, y and x+y must
// all be nonzero; violations raise domain_error (never a false verdict).
bool verify_partial_fraction(int s, int t, const BigRational& x, const BigRational& y);

// Finite-N identity checks, all in exact rational arithmetic.  sigma and tau
// are general nonzero rationals where the identity is stated that way
// (symmetric, shuffle) and +-1 signs where its derivation requires them
// (stillsymmetric, finite, tail witness).
bool check_symmetric_identity(int s, int t, const BigRational& sigma, const BigRational& tau,
                              std::int64_t N);
bool check_shuffle_identity(int s, int t, const BigRational& sigma, const BigRational& tau,
                            std::int64_t N);
// Derived check: the symmetric identity with the shuffle product substituted
// in, valid once sigma, tau are restricted to +-1.  No new content beyond the
// two checks above.
bool check_stillsymmetric_identity(int s, int t, Sign sigma, Sign tau, std::int64_t N);
// The doubled finite reduction identity; requires s+t odd.
bool check_finite_identity(int s, int t, Sign sigma, Sign tau, std::int64_t N);

// For odd b <= t (and s+t odd), the bracketed combination
//   zeta_N(b;sigma tau) zeta_N(s+t-b;sigma)
//   + (-1)^b sum_{k=1..N-1} sum_{m=1..N-k} sigma^{m+k} tau^m / (k^{s+t-b} m^b)
//   + sum_{n=N+1..2N}  sum_{y=n-N..N}      sigma^{y+n} tau^y / (n^{s+t-b} y^b)
// is bounded by 3 H_N / N.  Returns (|bracket|, 3 H_N / N), both exact.
struct TailWitness {
    BigRational bracket_abs;
    BigRational bound; // 3 H_N / N
};

TailWitness tail_witness_b_odd(int s, int t, Sign sigma, Sign tau, int b, std::int64_t N);

// Building blocks, exposed for the tests' literal-loop cross checks.
//   remainder_double_sum(A,B,w1,w2,N) = sum_{k=1..N-1} sum_{m=1..N-k} w1^{m+k} w2^m / (k^A m^B)
//   boundary_double_sum(Ax,Bn,wx,wn,N) = sum_{n=N+1..2N} sum_{x=n-N..N} wx^x wn^n / (x^Ax n^Bn)
// Both run in O(N) rational operations via inner prefix sums.
BigRational remainder_double_sum(int A, int B, const BigRational& w1, const BigRational& w2,
                                 std::int64_t N);
BigRational boundary_double_sum(int Ax, int Bn, const BigRational& wx, const BigRational& wn,
                                std::int64_t N);

} // namespace dzeta

#endif
