#include "dzeta/reduction.hpp"

#include "dzeta/combinatorics.hpp"

namespace dzeta {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace

ZetaExpr reduce_signed(int s, int t, Sign sigma, Sign tau) {
    if (s < 1 || t < 1) throw domain_error("reduce_signed: s and t must be >= 1");
    if ((s + t) % 2 == 0) throw domain_error("reduce_signed: s+t must be odd");
    if (sigma == Sign::plus && s < 2)
        throw divergence_error("reduce_signed: s=1 with sigma=+1 is divergent");
    const bool t1_extension = (t == 1 && tau == Sign::plus);
    if (t1_extension && s % 2 != 0)
        throw domain_error("reduce_signed: t=1, tau=+1 requires even s");

    const Sign st = sigma * tau;
    std::vector<ZetaTerm> terms;

    if (s % 2 == 0)
        terms.push_back({rat(1), {ZetaAtom{s, sigma}, ZetaAtom{t, tau}}});
    terms.push_back({rat(-1, 2), {ZetaAtom{s + t, st}}});

    const BigRational outer(parity_sign(t));
    for (int k = 0; 2 * k <= t; ++k)
        terms.push_back({outer * binom(s + t - 2 * k - 1, s - 1),
                         {ZetaAtom{2 * k, st}, ZetaAtom{s + t - 2 * k, sigma}}});
    for (int k = 0; 2 * k <= s; ++k)
        terms.push_back({outer * binom(s + t - 2 * k - 1, t - 1),
                         {ZetaAtom{2 * k, st}, ZetaAtom{s + t - 2 * k, tau}}});

    return normalize(ZetaExpr::from_terms(std::move(terms), t1_extension));
}

ZetaExpr reduce_euler(int s, int t) {
    if (s < 2 || t < 2) throw domain_error("reduce_euler: s and t must be >= 2");
    if ((s + t) % 2 == 0) throw domain_error("reduce_euler: s+t must be odd");

    std::vector<ZetaTerm> terms;
    if (s % 2 == 0)
        terms.push_back({rat(1), {ZetaAtom{s, Sign::plus}, ZetaAtom{t, Sign::plus}}});
    terms.push_back({rat(1, 2) * (BigRational(parity_sign(s)) * binom(s + t, s) - 1),
                     {ZetaAtom{s + t, Sign::plus}}});

    const BigRational outer(parity_sign(s + 1));
    const int m = std::max(s, t) / 2;
    for (int k = 1; k <= m; ++k)
        terms.push_back({outer * (binom(s + t - 2 * k - 1, t - 1) + binom(s + t - 2 * k - 1, s - 1)),
                         {ZetaAtom{2 * k, Sign::plus}, ZetaAtom{s + t - 2 * k, Sign::plus}}});

    return normalize(ZetaExpr::from_terms(std::move(terms)));
}

ZetaExpr reduce_s1(int s) {
    if (s < 2) throw domain_error("reduce_s1: s must be >= 2");
    std::vector<ZetaTerm> terms;
    terms.push_back({rat(s, 2), {ZetaAtom{s + 1, Sign::plus}}});
    for (int k = 2; k <= s - 1; ++k)
        terms.push_back({rat(-1, 2),
                         {ZetaAtom{k, Sign::plus}, ZetaAtom{s + 1 - k, Sign::plus}}});
    return normalize(ZetaExpr::from_terms(std::move(terms)));
}

ZetaExpr reduce_even_s_t1(int s, Sign sigma) {
    if (s < 2 || s % 2 != 0) throw domain_error("reduce_even_s_t1: s must be even and >= 2");
    std::vector<ZetaTerm> terms;
    terms.push_back({rat(s - 1, 2), {ZetaAtom{s + 1, sigma}}});
    terms.push_back({rat(1, 2), {ZetaAtom{s + 1, Sign::plus}}});
    for (int k = 1; k <= s / 2 - 1; ++k)
        terms.push_back({rat(-1),
                         {ZetaAtom{2 * k, sigma}, ZetaAtom{s + 1 - 2 * k, Sign::plus}}});
    return normalize(ZetaExpr::from_terms(std::move(terms)));
}

} // namespace dzeta
