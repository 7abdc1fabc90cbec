#pragma once

#include <stdexcept>

namespace qmf {

// Division result would leave the coefficient ring (pi-exponent shortfall
// or non-exact Gaussian quotient).
struct division_not_exact : std::domain_error {
    using std::domain_error::domain_error;
};

// Series coefficients are not all rational multiples of one monomial i^s*pi^t.
struct mixed_units : std::domain_error {
    using std::domain_error::domain_error;
};

// Linear system for a membership certificate is inconsistent, or a surplus
// coefficient fails verification.
struct not_in_space : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series precision below what the requested certificate needs.
struct insufficient_precision : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Polynomial fails a required homogeneity-in-x precondition.
struct degree_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_matrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A slot required by a covariant/invariant conversion is absent or malformed.
struct slot_shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Component vectors do not match the slot degrees of a concomitant.
struct shape_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A weight formula produced a non-integral value.
struct non_integral_weight : std::domain_error {
    using std::domain_error::domain_error;
};

// A certified identity failed to verify (propagated membership failure).
struct verification_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qmf
