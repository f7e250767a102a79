#include "dzeta/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "dzeta/combinatorics.hpp"

namespace dzeta {

namespace {

constexpr const char* kZetaOneFlag = "uses_zeta_one_convention";

std::string atom_text(const ZetaAtom& a) {
    std::string s = "zeta(" + std::to_string(a.argument);
    if (a.sign == Sign::minus) s += ";-1";
    s += ")";
    return s;
}

std::string atom_latex(const ZetaAtom& a) {
    std::string s = "\\zeta(" + std::to_string(a.argument);
    if (a.sign == Sign::minus) s += ";-1";
    s += ")";
    return s;
}

std::string rational_latex(const BigRational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    std::string s;
    if (q < 0) s += "-";
    s += "\\tfrac{" + BigInt(abs(numerator(q))).str() + "}{" + denominator(q).str() + "}";
    return s;
}

// zeta(2k) = (-1)^{k+1} B_{2k} 2^{2k-1} pi^{2k} / (2k)!
BigRational zeta_even_pi_coefficient(int two_k) {
    const int k = two_k / 2;
    BigRational c = bernoulli(two_k) * BigRational(ipow(BigInt(2), two_k - 1));
    BigInt fact = 1;
    for (int i = 2; i <= two_k; ++i) fact *= i;
    c /= BigRational(fact);
    if (k % 2 == 0) c = -c;
    return c;
}

// one rendered factor, or a coefficient adjustment when the atom folds into
// a pi power
struct LatexFactor {
    std::string body;
    BigRational scale{1};
};

LatexFactor latex_factor(const ZetaAtom& a, bool pi_powers) {
    if (pi_powers && a.sign == Sign::plus && a.argument >= 2 && a.argument % 2 == 0) {
        LatexFactor f;
        f.scale = zeta_even_pi_coefficient(a.argument);
        f.body = "\\pi^{" + std::to_string(a.argument) + "}";
        return f;
    }
    return {atom_latex(a), BigRational(1)};
}

} // namespace

nlohmann::ordered_json expr_to_json(const ZetaExpr& e) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : e.terms()) {
        nlohmann::ordered_json jt;
        jt["coeff"] = to_fraction_string(t.coeff);
        jt["atoms"] = nlohmann::ordered_json::array();
        for (const auto& a : t.atoms)
            jt["atoms"].push_back({{"arg", a.argument}, {"sign", to_int(a.sign)}});
        j["terms"].push_back(std::move(jt));
    }
    j["flags"] = nlohmann::ordered_json::array();
    if (e.uses_zeta_one_convention()) j["flags"].push_back(kZetaOneFlag);
    return j;
}

ZetaExpr expr_from_json(const nlohmann::json& j) {
    std::vector<ZetaTerm> terms;
    for (const auto& jt : j.at("terms")) {
        ZetaTerm t;
        t.coeff = parse_fraction(jt.at("coeff").get<std::string>());
        for (const auto& ja : jt.at("atoms")) {
            const int sign = ja.at("sign").get<int>();
            if (sign != 1 && sign != -1) throw domain_error("expr_from_json: bad sign");
            t.atoms.push_back({ja.at("arg").get<int>(), sign == 1 ? Sign::plus : Sign::minus});
        }
        terms.push_back(std::move(t));
    }
    bool flag = false;
    if (j.contains("flags"))
        for (const auto& f : j.at("flags"))
            if (f.get<std::string>() == kZetaOneFlag) flag = true;
    return ZetaExpr::from_terms(std::move(terms), flag);
}

std::string format_long_double_roundtrip(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
}

long double parse_long_double(const std::string& s) {
    return strtold(s.c_str(), nullptr);
}

nlohmann::ordered_json enclosure_to_json(const Enclosure& e) {
    nlohmann::ordered_json j;
    j["value"] = format_long_double_roundtrip(e.value);
    j["error_bound"] = format_long_double_roundtrip(e.error_bound);
    return j;
}

Enclosure enclosure_from_json(const nlohmann::json& j) {
    return {parse_long_double(j.at("value").get<std::string>()),
            parse_long_double(j.at("error_bound").get<std::string>())};
}

std::string expr_to_text(const ZetaExpr& e) {
    if (e.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        const bool negative = t.coeff < 0;
        const BigRational mag = negative ? BigRational(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff;
        if (denominator(mag) == 1)
            coeff = numerator(mag).str();
        else
            coeff = numerator(mag).str() + "/" + denominator(mag).str();
        if (t.atoms.empty()) {
            out += coeff;
            continue;
        }
        if (coeff != "1") out += coeff + "*";
        if (t.atoms.size() == 2 && t.atoms[0] == t.atoms[1]) {
            out += atom_text(t.atoms[0]) + "^2";
        } else {
            for (std::size_t i = 0; i < t.atoms.size(); ++i) {
                if (i) out += "*";
                out += atom_text(t.atoms[i]);
            }
        }
    }
    return out;
}

std::string expr_to_latex(const ZetaExpr& e, bool pi_powers) {
    if (e.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        BigRational coeff = t.coeff;
        std::string body;
        if (t.atoms.size() == 2 && t.atoms[0] == t.atoms[1]) {
            const LatexFactor f = latex_factor(t.atoms[0], pi_powers);
            coeff *= f.scale * f.scale;
            if (f.body.size() > 1 && f.body.back() == '}' && f.body.find("\\pi") == 0) {
                // merge pi^{a} pi^{a} into pi^{2a}
                body = "\\pi^{" + std::to_string(2 * t.atoms[0].argument) + "}";
            } else {
                body = f.body + "^{2}";
            }
        } else {
            for (const auto& a : t.atoms) {
                const LatexFactor f = latex_factor(a, pi_powers);
                coeff *= f.scale;
                body += f.body;
            }
        }
        const bool negative = coeff < 0;
        const BigRational mag = negative ? BigRational(-coeff) : coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (body.empty()) {
            out += rational_latex(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += rational_latex(mag) + body;
        }
    }
    return out;
}

std::string enclosure_to_text(const Enclosure& e) {
    char buf[96];
    if (e.error_bound == 0.0L) {
        std::snprintf(buf, sizeof buf, "%.21Lg (exact)", e.value);
        return buf;
    }
    // print k decimals only when 10^-k >= 2 * bound, so every shown digit is
    // stable under the bound
    int k = static_cast<int>(floorl(-log10l(2.0L * e.error_bound)));
    k = std::max(0, std::min(k, 20));
    std::snprintf(buf, sizeof buf, "%.*Lf +- %.2Le", k, e.value, e.error_bound);
    return buf;
}

} // namespace dzeta
