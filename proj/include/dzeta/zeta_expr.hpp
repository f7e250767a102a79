#ifndef DZETA_ZETA_EXPR_HPP
#define DZETA_ZETA_EXPR_HPP

#include <vector>

#include "dzeta/rational.hpp"

namespace dzeta {

// A single zeta symbol zeta(n;sigma), n >= 0.  Two atoms are special by
// convention: (0;sigma) stands for the analytically continued value -1/2,
// and (1;+1) stands for 0 inside expressions flagged with the zeta(1;1)=0
// convention (it is divergent otherwise).
struct ZetaAtom {
    int argument; // >= 0
    Sign sign;

    friend bool operator==(const ZetaAtom&, const ZetaAtom&) = default;
};

// Canonical atom order: by argument, then sign (-1 before +1).
inline bool operator<(const ZetaAtom& a, const ZetaAtom& b) {
    if (a.argument != b.argument) return a.argument < b.argument;
    return to_int(a.sign) < to_int(b.sign);
}

// coefficient * product of at most two atoms; an empty atom list is an exact
// rational constant.
struct ZetaTerm {
    BigRational coeff;
    std::vector<ZetaAtom> atoms;
};

inline bool operator==(const ZetaTerm& a, const ZetaTerm& b) {
    return a.coeff == b.coeff && a.atoms == b.atoms;
}

// An exact-rational linear combination of products of zeta atoms.  Values of
// this type returned by the reduction and arithmetic operations are always
// normalized: atoms sorted within terms, terms sorted, like terms merged,
// zero coefficients dropped, zeta(0;.) rewritten into the coefficient, and
// flagged zeta(1;+1) terms deleted.
class ZetaExpr {
public:
    ZetaExpr() = default;

    // Raw construction; does NOT normalize.  Used by builders and by tests
    // that exercise normalize() itself.
    static ZetaExpr from_terms(std::vector<ZetaTerm> terms, bool zeta_one_convention = false);

    static ZetaExpr zero() { return {}; }
    static ZetaExpr constant(BigRational c);
    static ZetaExpr single(BigRational coeff, ZetaAtom a);
    static ZetaExpr product(BigRational coeff, ZetaAtom a, ZetaAtom b);

    const std::vector<ZetaTerm>& terms() const { return terms_; }
    bool uses_zeta_one_convention() const { return zeta_one_convention_; }
    void set_zeta_one_convention(bool on) { zeta_one_convention_ = on; }

    bool is_zero() const { return terms_.empty(); }

    // Exact structural equality (terms and convention flag).  Compare
    // normalized values; raw term lists are order-sensitive.
    friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) {
        return a.zeta_one_convention_ == b.zeta_one_convention_ && a.terms_ == b.terms_;
    }

private:
    std::vector<ZetaTerm> terms_;
    bool zeta_one_convention_ = false;
};

// Canonical form.  Idempotent.  Throws convention_error if an atom (1;+1)
// occurs and the expression is not flagged with the zeta(1;1)=0 convention.
ZetaExpr normalize(const ZetaExpr& e);

// Sum / scalar multiple; results are normalized.  Addition ORs the
// convention flags.
ZetaExpr operator+(const ZetaExpr& a, const ZetaExpr& b);
ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b);
ZetaExpr operator*(const BigRational& c, const ZetaExpr& e);

} // namespace dzeta

#endif
