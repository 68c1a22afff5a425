// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hsharp/errors.hpp"

namespace hsharp {

/// Dimension-dependent constants of the Heisenberg group H^n.
///
/// The group is R^{2n+1} with the twisted product; Q = 2n+2 is the
/// homogeneous dimension.  unit_ball_volume() is Omega_Q, the Haar measure
/// of the unit gauge ball, and unit_sphere_measure() = Q * Omega_Q is the
/// surface measure entering the polar decomposition
///   \int f(|x|_h) dx = unit_sphere_measure * \int_0^inf f(r) r^{Q-1} dr.
///
/// Omega_Q is fixed by the Gamma-ratio formula
///   Omega_Q = 2 pi^{n+1/2} Gamma(n/2) / ((n+1) Gamma(n) Gamma((n+1)/2)),
/// which normalizes the Haar measure used throughout; every integration
/// path in the library routes absolute measures through this constant.
class HeisenbergContext {
public:
    explicit HeisenbergContext(int n) : n_(n) {
        if (n < 1) throw domain_error("HeisenbergContext: n must be >= 1");
        Q_ = 2 * n + 2;
        const double pi = 3.14159265358979323846;
        omega_big_ = 2.0 * std::pow(pi, n + 0.5) * std::tgamma(n / 2.0) /
                     ((n + 1.0) * std::tgamma(static_cast<double>(n)) *
                      std::tgamma((n + 1) / 2.0));
        omega_small_ = Q_ * omega_big_;
    }

    int n() const { return n_; }
    int Q() const { return Q_; }
    int ambient_dim() const { return 2 * n_ + 1; }

    /// Omega_Q: measure of the unit gauge ball.
    double unit_ball_volume() const { return omega_big_; }
    /// omega_Q = Q * Omega_Q: surface measure of the unit gauge sphere.
    double unit_sphere_measure() const { return omega_small_; }

    friend bool operator==(const HeisenbergContext& a, const HeisenbergContext& b) {
        return a.n_ == b.n_;
    }

private:
    int n_;
    int Q_;
    double omega_big_;
    double omega_small_;
};

/// A point of H^n: 2n+1 real coordinates plus its dimension context.
class GroupPoint {
public:
    GroupPoint(HeisenbergContext ctx, std::vector<double> coords)
        : ctx_(ctx), coords_(std::move(coords)) {
        if (coords_.size() != static_cast<std::size_t>(ctx_.ambient_dim()))
            throw dimension_error("GroupPoint: expected 2n+1 coordinates");
        for (double c : coords_)
            if (!std::isfinite(c)) throw domain_error("GroupPoint: coordinates must be finite");
    }

    static GroupPoint origin(const HeisenbergContext& ctx) {
        return GroupPoint(ctx, std::vector<double>(ctx.ambient_dim(), 0.0));
    }

    /// e_1 = (1, 0, ..., 0).
    static GroupPoint e1(const HeisenbergContext& ctx) {
        std::vector<double> c(ctx.ambient_dim(), 0.0);
        c[0] = 1.0;
        return GroupPoint(ctx, std::move(c));
    }

    const HeisenbergContext& context() const { return ctx_; }
    std::span<const double> coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }

    bool is_origin() const {
        for (double c : coords_)
            if (c != 0.0) return false;
        return true;
    }

private:
    HeisenbergContext ctx_;
    std::vector<double> coords_;
};

inline void require_same_context(const GroupPoint& x, const GroupPoint& y) {
    if (!(x.context() == y.context()))
        throw dimension_error("group operation: mismatched Heisenberg contexts");
}

/// Group law: first 2n coordinates add, the last carries the symplectic twist
///   (x o y)_{2n+1} = x_{2n+1} + y_{2n+1} + 2 sum_j (y_j x_{n+j} - x_j y_{n+j}).
inline GroupPoint group_mul(const GroupPoint& x, const GroupPoint& y) {
    require_same_context(x, y);
    const int n = x.context().n();
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i] + y[i];
    double twist = 0.0;
    for (int j = 0; j < n; ++j)
        twist += y[j] * x[n + j] - x[j] * y[n + j];
    out[2 * n] = x[2 * n] + y[2 * n] + 2.0 * twist;
    return GroupPoint(x.context(), std::move(out));
}

/// Group inverse: componentwise negation.
inline GroupPoint group_inv(const GroupPoint& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
    return GroupPoint(x.context(), std::move(out));
}

/// Homogeneous gauge |x|_h = [(sum_{i<=2n} x_i^2)^2 + x_{2n+1}^2]^{1/4}.
inline double hnorm(const GroupPoint& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) s += x[i] * x[i];
    const double t = x[x.size() - 1];
    return std::pow(s * s + t * t, 0.25);
}

/// Anisotropic dilation: r on the first 2n coordinates, r^2 on the last.
inline GroupPoint dilate(double r, const GroupPoint& x) {
    if (!(r > 0.0)) throw domain_error("dilate: scale must be positive");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = r * x[i];
    out[x.size() - 1] = r * r * x[x.size() - 1];
    return GroupPoint(x.context(), std::move(out));
}

/// Left-invariant gauge distance d(p, q) = |q^{-1} o p|_h.
inline double distance(const GroupPoint& p, const GroupPoint& q) {
    require_same_context(p, q);
    return hnorm(group_mul(group_inv(q), p));
}

/// |B(x, r)| = Omega_Q r^Q.
inline double ball_volume(const HeisenbergContext& ctx, double r) {
    if (!(r > 0.0)) throw domain_error("ball_volume: radius must be positive");
    return ctx.unit_ball_volume() * std::pow(r, ctx.Q());
}

} // namespace hsharp
