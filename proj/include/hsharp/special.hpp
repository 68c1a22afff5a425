// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hsharp/errors.hpp"

namespace hsharp {

/// Euler Gamma via the Lanczos rational approximation (g = 7, 9 terms),
/// with the reflection formula below 1/2.
inline double gamma_fn(double x) {
    static const double coeffs[] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    static const double g = 7.0;
    static const double pi = 3.14159265358979323846;
    static const double sqrt_two_pi = 2.50662827463100050242;

    if (x <= 0.0 && x == std::floor(x))
        throw pole_error("gamma_fn: pole at nonpositive integer");
    if (x < 0.5)
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));

    const double z = x - 1.0;
    double a = coeffs[0];
    for (int i = 1; i < 9; ++i) a += coeffs[i] / (z + i);
    const double t = z + g + 0.5;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for positive arguments.
inline double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("beta_fn: arguments must be positive");
    return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
}

/// Parameters of the nested integral family
///   I_m(alpha, beta_1..beta_m)
///     = \int_0^inf ... \int_0^inf  t_1^{-beta_1} ... t_m^{-beta_m}
///                                  (1 + t_1 + ... + t_m)^{-alpha} dt.
/// Convergence needs beta_i < 1 for all i and alpha - m + sum beta_i > 0.
struct ImParams {
    double alpha = 0.0;
    std::vector<double> betas;

    int m() const { return static_cast<int>(betas.size()); }

    double beta_sum() const {
        double s = 0.0;
        for (double b : betas) s += b;
        return s;
    }

    bool convergent() const {
        if (betas.empty()) return false;
        for (double b : betas)
            if (!(b < 1.0)) return false;
        return alpha - m() + beta_sum() > 0.0;
    }

    void require_convergent() const {
        if (!convergent())
            throw divergence_error("I_m: parameters outside the convergence region");
    }
};

/// Closed form: prod Gamma(1 - beta_i) * Gamma(alpha - m + sum beta_i) / Gamma(alpha).
/// The second Gamma carries the SUM of the betas; the recursion in
/// i_m_recursive is the authority that fixes this form.
inline double i_m_closed(const ImParams& p) {
    p.require_convergent();
    double prod = 1.0;
    for (double b : p.betas) prod *= gamma_fn(1.0 - b);
    return prod * gamma_fn(p.alpha - p.m() + p.beta_sum()) / gamma_fn(p.alpha);
}

/// Recursive evaluation via the variable substitution that peels off the
/// last coordinate:
///   I_m(alpha, b_1..b_m) = B(1 - b_m, alpha + b_m - 1)
///                          * I_{m-1}(alpha - 1 + b_m, b_1..b_{m-1}),
/// with base case I_1(alpha, b) = B(1 - b, alpha + b - 1).
inline double i_m_recursive(const ImParams& p) {
    p.require_convergent();
    double value = 1.0;
    double alpha = p.alpha;
    for (std::size_t k = p.betas.size(); k-- > 1;) {
        const double b = p.betas[k];
        value *= beta_fn(1.0 - b, alpha + b - 1.0);
        alpha = alpha - 1.0 + b;
    }
    const double b1 = p.betas.front();
    value *= beta_fn(1.0 - b1, alpha + b1 - 1.0);
    return value;
}

} // namespace hsharp
