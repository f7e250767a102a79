#include "dzeta/partial_sums.hpp"

namespace dzeta {

namespace {

void require_args(int s, std::int64_t N) {
    if (s < 0) throw domain_error("partial sum: exponent must be >= 0");
    if (N < 1) throw domain_error("partial sum: truncation must be >= 1");
}

} // namespace

BigRational zeta_partial_single_weighted(int s, const BigRational& w, std::int64_t N) {
    require_args(s, N);
    if (w == 0) throw domain_error("partial sum: zero weight");
    BigRational total = 0;
    BigRational wn = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        wn *= w;
        total += wn / BigRational(ipow(BigInt(n), static_cast<unsigned>(s)));
    }
    return total;
}

BigRational zeta_partial_double_weighted(int s, int t, const BigRational& ws,
                                         const BigRational& wt, std::int64_t N) {
    require_args(s, N);
    require_args(t, N);
    if (ws == 0 || wt == 0) throw domain_error("partial sum: zero weight");
    BigRational total = 0;
    BigRational inner = 0; // sum_{k<n} wt^k / k^t
    BigRational wsn = 1, wtk = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        wsn *= ws;
        if (n >= 2) {
            const std::int64_t k = n - 1;
            wtk *= wt;
            inner += wtk / BigRational(ipow(BigInt(k), static_cast<unsigned>(t)));
        }
        if (n >= 2)
            total += wsn * inner / BigRational(ipow(BigInt(n), static_cast<unsigned>(s)));
    }
    return total;
}

BigRational zeta_partial_single(SignedIndex idx, Truncation N) {
    if (idx.exponent < 1) throw domain_error("zeta_partial_single: exponent must be >= 1");
    return zeta_partial_single_weighted(idx.exponent, to_rational(idx.sign), N.N);
}

BigRational zeta_partial_double(SignedIndex outer, SignedIndex inner, Truncation N) {
    if (outer.exponent < 1 || inner.exponent < 1)
        throw domain_error("zeta_partial_double: exponents must be >= 1");
    return zeta_partial_double_weighted(outer.exponent, inner.exponent,
                                        to_rational(outer.sign), to_rational(inner.sign), N.N);
}

StuffleParts stuffle_decompose(SignedIndex outer, SignedIndex inner, Truncation N) {
    StuffleParts parts;
    parts.double_st = zeta_partial_double(outer, inner, N);
    parts.single_sum = zeta_partial_single(
        {outer.exponent + inner.exponent, outer.sign * inner.sign}, N);
    parts.double_ts = zeta_partial_double(inner, outer, N);
    return parts;
}

} // namespace dzeta
