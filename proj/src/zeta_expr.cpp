#include "dzeta/zeta_expr.hpp"

#include <algorithm>

namespace dzeta {

namespace {

void require_atom(const ZetaAtom& a) {
    if (a.argument < 0) throw domain_error("ZetaAtom: argument must be >= 0");
}

// term order: fewer atoms first, then lexicographic on the (sorted) atoms
bool term_before(const ZetaTerm& a, const ZetaTerm& b) {
    if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
        if (a.atoms[i] == b.atoms[i]) continue;
        return a.atoms[i] < b.atoms[i];
    }
    return false;
}

} // namespace

ZetaExpr ZetaExpr::from_terms(std::vector<ZetaTerm> terms, bool zeta_one_convention) {
    for (const auto& t : terms) {
        if (t.atoms.size() > 2)
            throw domain_error("ZetaExpr: products longer than 2 atoms are out of range");
        for (const auto& a : t.atoms) require_atom(a);
    }
    ZetaExpr e;
    e.terms_ = std::move(terms);
    e.zeta_one_convention_ = zeta_one_convention;
    return e;
}

ZetaExpr ZetaExpr::constant(BigRational c) {
    return from_terms({ZetaTerm{std::move(c), {}}});
}

ZetaExpr ZetaExpr::single(BigRational coeff, ZetaAtom a) {
    return from_terms({ZetaTerm{std::move(coeff), {a}}});
}

ZetaExpr ZetaExpr::product(BigRational coeff, ZetaAtom a, ZetaAtom b) {
    return from_terms({ZetaTerm{std::move(coeff), {a, b}}});
}

ZetaExpr normalize(const ZetaExpr& e) {
    std::vector<ZetaTerm> work;
    work.reserve(e.terms().size());
    for (const auto& term : e.terms()) {
        ZetaTerm t{term.coeff, {}};
        bool dropped = false;
        for (const auto& a : term.atoms) {
            require_atom(a);
            if (a.argument == 0) {
                t.coeff *= rat(-1, 2); // zeta(0;sigma) = -1/2, both signs
            } else if (a.argument == 1 && a.sign == Sign::plus) {
                if (!e.uses_zeta_one_convention())
                    throw convention_error(
                        "normalize: atom zeta(1;+1) requires the zeta(1;1)=0 convention");
                dropped = true; // whole term is zero under the convention
            } else {
                t.atoms.push_back(a);
            }
        }
        if (dropped || t.coeff == 0) continue;
        std::sort(t.atoms.begin(), t.atoms.end());
        work.push_back(std::move(t));
    }

    std::sort(work.begin(), work.end(), term_before);

    std::vector<ZetaTerm> merged;
    for (auto& t : work) {
        if (!merged.empty() && merged.back().atoms == t.atoms) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff == 0) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    return ZetaExpr::from_terms(std::move(merged), e.uses_zeta_one_convention());
}

ZetaExpr operator+(const ZetaExpr& a, const ZetaExpr& b) {
    std::vector<ZetaTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return normalize(ZetaExpr::from_terms(
        std::move(terms), a.uses_zeta_one_convention() || b.uses_zeta_one_convention()));
}

ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b) {
    return a + (rat(-1) * b);
}

ZetaExpr operator*(const BigRational& c, const ZetaExpr& e) {
    std::vector<ZetaTerm> terms = e.terms();
    for (auto& t : terms) t.coeff *= c;
    return normalize(ZetaExpr::from_terms(std::move(terms), e.uses_zeta_one_convention()));
}

} // namespace dzeta
