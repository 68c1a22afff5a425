// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hsharp {

/// Base class of every exception thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different group contexts, or an arity mismatch.
struct dimension_error : error {
    using error::error;
};

/// A parameter is outside the domain of the operation (r <= 0, p < 1, ...).
struct domain_error : error {
    using error::error;
};

/// An integral was diagnosed divergent, or refinement failed to settle.
struct divergence_error : error {
    using error::error;
};

/// Gamma requested at a nonpositive integer.
struct pole_error : error {
    using error::error;
};

/// Kernel evaluated at its singular point.
struct singular_point_error : error {
    using error::error;
};

/// The closed-form constant is infinite for the requested exponents.
struct infinite_constant_error : error {
    using error::error;
};

/// Two computation paths disagree beyond their combined error budget.
struct internal_consistency_error : error {
    using error::error;
};

} // namespace hsharp
