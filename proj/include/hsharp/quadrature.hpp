// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hsharp/errors.hpp"
#include "hsharp/heisenberg.hpp"

namespace hsharp {

struct QuadratureConfig {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int gl_points = 32;           // Gauss-Legendre order per panel
    int max_depth = 40;           // bisection depth on smooth segments
    int max_panels = 240;         // dyadic panels toward 0 or infinity
    double divergence_growth = 1.25; // sustained panel growth => divergent
    int divergence_run = 3;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    long long evals = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        evals += o.evals;
        return *this;
    }
};

namespace detail {

struct GlRule {
    std::vector<double> x; // nodes on [-1, 1]
    std::vector<double> w;
};

inline GlRule make_gauss_legendre(int n) {
    GlRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const double pi = 3.14159265358979323846;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    return rule;
}

inline const GlRule& gl_rule(int n) {
    static const GlRule r8 = make_gauss_legendre(8);
    static const GlRule r16 = make_gauss_legendre(16);
    static const GlRule r32 = make_gauss_legendre(32);
    if (n <= 8) return r8;
    if (n <= 16) return r16;
    return r32;
}

inline double gl_panel(const std::function<double(double)>& f, double a, double b,
                       const GlRule& rule, long long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t k = 0; k < rule.x.size(); ++k)
        s += rule.w[k] * f(c + h * rule.x[k]);
    evals += static_cast<long long>(rule.x.size());
    return s * h;
}

inline void adaptive_segment(const std::function<double(double)>& f, double a, double b,
                             double tol_abs, double rel_tol, int depth, const GlRule& rule,
                             QuadResult& acc) {
    const double i1 = gl_panel(f, a, b, rule, acc.evals);
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) { // interval exhausted by rounding
        acc.value += i1;
        return;
    }
    const double i2 = gl_panel(f, a, mid, rule, acc.evals) + gl_panel(f, mid, b, rule, acc.evals);
    const double err = std::abs(i2 - i1);
    if (depth <= 0 || err <= std::max(tol_abs, rel_tol * std::abs(i2))) {
        acc.value += i2;
        acc.error += err;
        return;
    }
    adaptive_segment(f, a, mid, 0.5 * tol_abs, rel_tol, depth - 1, rule, acc);
    adaptive_segment(f, mid, b, 0.5 * tol_abs, rel_tol, depth - 1, rule, acc);
}

inline QuadResult finite_segment(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureConfig& cfg) {
    QuadResult acc;
    if (!(b > a)) return acc;
    adaptive_segment(f, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_depth, gl_rule(cfg.gl_points), acc);
    return acc;
}

// Dyadic log-partitioned panels marching toward an endpoint where the
// integrand behaves like a power.  Once successive panel sums settle into a
// stable geometric ratio the remaining tail is added in closed form; a
// sustained growth of panel sums is reported as divergence.
inline QuadResult dyadic_panels(const std::function<double(double)>& f, double start,
                                bool toward_zero, const QuadratureConfig& cfg) {
    QuadResult acc;
    const double tiny = 1e-300;
    std::vector<double> sums;
    sums.reserve(64);
    int growth_run = 0;
    int negligible_run = 0;
    double edge = start;
    double last_ratio = std::numeric_limits<double>::quiet_NaN();
    for (int k = 0; k < cfg.max_panels; ++k) {
        const double next = toward_zero ? edge * 0.5 : edge * 2.0;
        const double lo = toward_zero ? next : edge;
        const double hi = toward_zero ? edge : next;
        QuadResult p = finite_segment(f, lo, hi, cfg);
        acc += p;
        sums.push_back(p.value);
        edge = next;

        const double scale = std::max({std::abs(acc.value), cfg.abs_tol, tiny});
        if (k > 0 && std::abs(p.value) > tiny) {
            if (std::abs(p.value) > cfg.divergence_growth * std::abs(sums[k - 1]))
                ++growth_run;
            else
                growth_run = 0;
            if (growth_run >= cfg.divergence_run)
                throw divergence_error("quadrature: panel sums grow under refinement");
        }

        if (std::abs(p.value) <= 0.25 * std::max(cfg.abs_tol, cfg.rel_tol * scale) + tiny) {
            if (++negligible_run >= 2) return acc;
        } else {
            negligible_run = 0;
        }

        if (k >= 2 && sums[k - 1] != 0.0 && sums[k] != 0.0 &&
            (sums[k] > 0) == (sums[k - 1] > 0)) {
            const double ratio = sums[k] / sums[k - 1];
            if (ratio > 0.0 && ratio < 0.9990) {
                if (std::isfinite(last_ratio)) {
                    const double drift = std::abs(ratio - last_ratio) / (1.0 - ratio);
                    const double tail = sums[k] * ratio / (1.0 - ratio);
                    const double tail_err = std::abs(tail) * std::min(1.0, 4.0 * drift);
                    if (tail_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc.value + tail))) {
                        acc.value += tail;
                        acc.error += tail_err + std::abs(tail) * cfg.rel_tol;
                        return acc;
                    }
                }
                last_ratio = ratio;
            } else {
                last_ratio = std::numeric_limits<double>::quiet_NaN();
            }
        }
    }
    // Panel budget exhausted with a non-negligible last panel.
    const double last = sums.empty() ? 0.0 : std::abs(sums.back());
    if (last > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc.value)))
        throw divergence_error("quadrature: panel refinement failed to settle");
    return acc;
}

} // namespace detail

/// Integrate f over (a, b).  The integrand may behave like an integrable
/// power at a == 0 and/or decay like a power toward b == +inf; interior
/// kinks must be declared via `breakpoints`.  Throws divergence_error when
/// panel refinement diagnoses a non-convergent integral.
inline QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg = {},
                            std::vector<double> breakpoints = {}) {
    const double inf = std::numeric_limits<double>::infinity();
    if (!(a >= 0.0) || !(b > a)) throw domain_error("integrate: need 0 <= a < b");

    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> pts;
    for (double t : breakpoints)
        if (t > a && t < b && (pts.empty() || t > pts.back())) pts.push_back(t);

    // An unbroken (0, inf) range needs one interior anchor for the panels.
    if (pts.empty() && a == 0.0 && b == inf) pts.push_back(1.0);

    QuadResult total;
    double lo = a;
    for (std::size_t i = 0; i <= pts.size(); ++i) {
        const double hi = (i < pts.size()) ? pts[i] : b;
        if (lo == 0.0) {
            total += detail::dyadic_panels(f, hi, /*toward_zero=*/true, cfg);
        } else if (hi == inf) {
            total += detail::dyadic_panels(f, lo, /*toward_zero=*/false, cfg);
        } else {
            total += detail::finite_segment(f, lo, hi, cfg);
        }
        lo = hi;
    }
    return total;
}

/// omega_Q * \int profile(r) r^{Q-1} dr over (r_min, r_max), computed after
/// the substitution t = r^Q which removes the r^{Q-1} factor analytically.
inline QuadResult integrate_radial(const HeisenbergContext& ctx,
                                   const std::function<double(double)>& profile,
                                   double r_min, double r_max,
                                   const QuadratureConfig& cfg = {},
                                   const std::vector<double>& radial_breakpoints = {}) {
    const double inf = std::numeric_limits<double>::infinity();
    if (!(r_min >= 0.0) || !(r_max > r_min))
        throw domain_error("integrate_radial: need 0 <= r_min < r_max");
    const double Q = static_cast<double>(ctx.Q());
    const double invQ = 1.0 / Q;
    auto g = [&](double t) { return profile(std::pow(t, invQ)); };
    const double a = (r_min == 0.0) ? 0.0 : std::pow(r_min, Q);
    const double b = (r_max == inf) ? inf : std::pow(r_max, Q);
    std::vector<double> bps;
    bps.reserve(radial_breakpoints.size());
    for (double r : radial_breakpoints)
        if (r > 0.0 && std::isfinite(r)) bps.push_back(std::pow(r, Q));
    QuadResult res = integrate(g, a, b, cfg, std::move(bps));
    const double scale = ctx.unit_sphere_measure() / Q;
    res.value *= scale;
    res.error *= scale;
    return res;
}

} // namespace hsharp
