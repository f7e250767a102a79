#ifndef DZETA_ENCLOSURE_HPP
#define DZETA_ENCLOSURE_HPP

#include <cfloat>
#include <cmath>

#include "dzeta/rational.hpp"

namespace dzeta {

// Working precision is long double: 64-bit mantissa on x86-64.
inline constexpr long double kMachineEps = LDBL_EPSILON;

// value with a rigorous absolute error bound: the true quantity lies in
// [value - error_bound, value + error_bound].  Every arithmetic helper
// widens the bound by an explicit ulp-scale slack for its own rounding.
struct Enclosure {
    long double value = 0.0L;
    long double error_bound = 0.0L;

    bool contains(long double x) const {
        return fabsl(value - x) <= error_bound;
    }
    bool overlaps(const Enclosure& o) const {
        return fabsl(value - o.value) <= error_bound + o.error_bound;
    }
};

inline Enclosure enc_exact(long double v) { return {v, 0.0L}; }

inline long double rounding_slack(long double v, long double b) {
    return 2 * kMachineEps * (fabsl(v) + b);
}

inline Enclosure enc_add(const Enclosure& a, const Enclosure& b) {
    const long double v = a.value + b.value;
    const long double e = a.error_bound + b.error_bound;
    return {v, e + rounding_slack(v, e)};
}

inline Enclosure enc_sub(const Enclosure& a, const Enclosure& b) {
    return enc_add(a, {-b.value, b.error_bound});
}

inline Enclosure enc_mul(const Enclosure& a, const Enclosure& b) {
    const long double v = a.value * b.value;
    const long double e = fabsl(a.value) * b.error_bound + fabsl(b.value) * a.error_bound +
                          a.error_bound * b.error_bound;
    return {v, e + 4 * rounding_slack(v, e)};
}

// exact rational scale; the conversion of c itself is accurate to 1 ulp
inline Enclosure enc_scale(const BigRational& c, const Enclosure& a) {
    const long double cl = to_long_double(c);
    const long double v = cl * a.value;
    const long double e = fabsl(cl) * a.error_bound;
    return {v, e + 4 * rounding_slack(v, e)};
}

} // namespace dzeta

#endif
