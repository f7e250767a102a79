#ifndef DZETA_ERRORS_HPP
#define DZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dzeta {

// Precondition violations: bad parity, out-of-range exponents, zero weights.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A formally divergent quantity was requested without the convention that
// makes it meaningful (e.g. zeta(1;+1) outside a flagged expression).
struct divergence_error : domain_error {
    using domain_error::domain_error;
};

// An expression contains the atom zeta(1;+1) but was not flagged as using
// the zeta(1;1)=0 convention.
struct convention_error : domain_error {
    using domain_error::domain_error;
};

// A requested tolerance cannot be met within the configured summation ceiling.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dzeta

#endif
