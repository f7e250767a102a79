#ifndef DZETA_RATIONAL_HPP
#define DZETA_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "dzeta/errors.hpp"

namespace dzeta {

// Exact arbitrary-precision arithmetic, GMP-backed.  BigRational is always
// canonical: positive denominator, gcd(|num|, den) == 1.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// The two-argument mpq constructor misreads negative denominators, so all
// construction from a num/den pair goes through here.
inline BigRational rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("rat: zero denominator");
    return BigRational(num) / BigRational(den);
}

inline BigRational rat(long long num, long long den = 1) {
    return rat(BigInt(num), BigInt(den));
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// base^exp for integer exp of either sign; 0^negative is rejected.
inline BigRational pow_rat(const BigRational& base, long long exp) {
    if (exp == 0) return BigRational(1);
    if (base == 0 && exp < 0) throw domain_error("pow_rat: 0 to a negative power");
    const unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
    BigRational r = rat(ipow(numerator(base), e), ipow(denominator(base), e));
    if (exp < 0) r = BigRational(1) / r;
    return r;
}

inline long double to_long_double(const BigRational& q) {
    return q.convert_to<long double>();
}

// Emits "p/q" with q >= 1, denominator always present ("3/1", "-1/2").
inline std::string to_fraction_string(const BigRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p" or "p/q"; q may be signed.
inline BigRational parse_fraction(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return BigRational(BigInt(std::string(s)));
        return rat(BigInt(std::string(s.substr(0, slash))),
                   BigInt(std::string(s.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw domain_error("parse_fraction: malformed rational '" + std::string(s) + "'");
    }
}

// sigma, tau of the signed sums: exactly -1 or +1.
enum class Sign : int { minus = -1, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

// sigma^n as an int in {-1,+1}.
constexpr int sign_pow(Sign s, std::int64_t n) {
    return (s == Sign::plus || (n % 2) == 0) ? 1 : -1;
}

inline BigRational to_rational(Sign s) { return BigRational(to_int(s)); }

constexpr std::string_view to_string(Sign s) {
    return s == Sign::plus ? "+1" : "-1";
}

// Accepts +1/-1/+/-/p/m (shell-quoting friendly); canonical echo is "+1"/"-1".
inline std::optional<Sign> parse_sign(std::string_view s) {
    if (s == "+1" || s == "+" || s == "p" || s == "1") return Sign::plus;
    if (s == "-1" || s == "-" || s == "m") return Sign::minus;
    return std::nullopt;
}

} // namespace dzeta

#endif
