#ifndef SMIRNOV_ROOTS_HPP
#define SMIRNOV_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace smirnov
{

inline constexpr double kResidualTolerance = 1e-8;
inline constexpr double kLocationBand = 1e-9;

class Unconverged : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RootSet
{
    std::vector<cplx> roots;
    /// |P(root)| / max coefficient modulus
    std::vector<double> residuals;
    int iterations = 0;
    bool converged = false;
};

/// leading * prod (z - r_k)
inline Polynomial from_roots(std::span<const cplx> roots, cplx leading = 1.0)
{
    if (leading == cplx{})
        throw DomainError("leading coefficient must be nonzero");
    std::vector<cplx> c{leading};
    for (const cplx r : roots) {
        std::vector<cplx> next(c.size() + 1, cplx{});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

namespace detail
{

inline void eval_with_derivative(const Polynomial& p, cplx z, cplx& value, cplx& deriv) noexcept
{
    value = cplx{};
    deriv = cplx{};
    for (int k = p.degree(); k >= 0; --k) {
        deriv = deriv * z + value;
        value = value * z + p[k];
    }
}

/// Error bound for Horner evaluation at z: sum |c_k| |z|^k.
inline double horner_scale(const Polynomial& p, double r) noexcept
{
    double acc = 0.0;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * r + std::abs(p[k]);
    return acc;
}

/// Cauchy bound: every root satisfies |z| <= 1 + max |c_k / c_n|.
inline double cauchy_bound(const Polynomial& p)
{
    const double lead = std::abs(p.leading());
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k)
        m = std::max(m, std::abs(p[k]) / lead);
    return 1.0 + m;
}

} // namespace detail

/**
 * All roots by simultaneous iteration: Aberth-Ehrlich updates, falling back
 * to Weierstrass (Durand-Kerner) corrections for an iteration whenever the
 * Aberth denominator degenerates or the update stagnates. Starting points sit on a
 * circle whose radius comes from the Cauchy bound, rotated off the axes.
 */
inline RootSet find_roots(const Polynomial& p, int max_iterations = 500, double step_tol = 1e-14)
{
    const int n = p.degree();
    if (n < 1)
        throw DomainError("root finding requires degree at least 1");

    RootSet out;
    // Initial radius: geometric mean of |c_0/c_n| clamped by the Cauchy bound.
    const double cb = detail::cauchy_bound(p);
    double radius = std::pow(std::abs(p[0] / p.leading()), 1.0 / n);
    if (!(radius > 0.0) || !std::isfinite(radius))
        radius = 0.5 * cb;
    radius = std::min(radius, cb);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }
    if (n == 1) {
        z[0] = -p[0] / p[1];
        out.iterations = 0;
    }

    std::vector<bool> done(static_cast<std::size_t>(n), n == 1);
    double prev_max_step = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int it = 0; it < max_iterations && n > 1; ++it) {
        out.iterations = it + 1;
        double max_step = 0.0;
        const bool use_weierstrass = stagnant >= 5;
        for (int i = 0; i < n; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            if (done[iu])
                continue;
            cplx value, deriv;
            detail::eval_with_derivative(p, z[iu], value, deriv);
            const double err = 4.0 * std::numeric_limits<double>::epsilon() *
                               detail::horner_scale(p, std::abs(z[iu]));
            if (std::abs(value) <= err) {
                done[iu] = true;
                continue;
            }
            cplx step;
            if (!use_weierstrass && deriv != cplx{}) {
                const cplx ratio = value / deriv;
                cplx sum{};
                for (int j = 0; j < n; ++j)
                    if (j != i)
                        sum += 1.0 / (z[iu] - z[static_cast<std::size_t>(j)]);
                const cplx denom = 1.0 - ratio * sum;
                step = (denom != cplx{}) ? ratio / denom : ratio;
            } else {
                cplx prod = p.leading();
                for (int j = 0; j < n; ++j)
                    if (j != i)
                        prod *= z[iu] - z[static_cast<std::size_t>(j)];
                step = (prod != cplx{}) ? value / prod : cplx{1e-8, 1e-8};
            }
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                step = cplx{1e-8, 1e-8};
            z[iu] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[iu])));
            if (std::abs(step) <= step_tol * std::max(1.0, std::abs(z[iu])))
                done[iu] = true;
        }
        if (std::all_of(done.begin(), done.end(), [](bool b) { return b; }) || max_step < step_tol)
            break;
        stagnant = (max_step > 0.5 * prev_max_step) ? stagnant + 1 : 0;
        if (stagnant > 10)
            stagnant = 0;
        prev_max_step = max_step;
    }

    // Newton polish on each root.
    for (auto& r : z) {
        for (int k = 0; k < 3; ++k) {
            cplx value, deriv;
            detail::eval_with_derivative(p, r, value, deriv);
            if (deriv == cplx{} || value == cplx{})
                break;
            const cplx next = r - value / deriv;
            cplx nv, nd;
            detail::eval_with_derivative(p, next, nv, nd);
            if (std::abs(nv) >= std::abs(value))
                break;
            r = next;
        }
    }

    const double scale = p.max_coeff_modulus();
    out.roots = z;
    out.residuals.reserve(z.size());
    out.converged = true;
    for (const cplx r : z) {
        // residual relative to the coefficient scale and the size of the evaluation point
        const double res = std::abs(p(r)) / (scale * std::max(1.0, std::pow(std::abs(r), n)));
        out.residuals.push_back(res);
        if (!(res <= kResidualTolerance))
            out.converged = false;
    }
    return out;
}

/**
 * Location of the zeros relative to the unit circle. Both containments can
 * hold at once (all zeros on the circle).
 */
struct ZeroLocation
{
    bool all_in_closed_disk = false;
    bool none_in_open_disk = false;
    bool boundary_flag = false;
    double max_modulus = 0.0;
    double min_modulus = 0.0;

    bool all_within(double k) const noexcept { return max_modulus <= k + kLocationBand; }
    bool mixed() const noexcept { return !all_in_closed_disk && !none_in_open_disk; }
};

inline ZeroLocation classify_roots(std::span<const cplx> roots)
{
    ZeroLocation loc;
    if (roots.empty()) {
        loc.none_in_open_disk = true;
        loc.min_modulus = std::numeric_limits<double>::infinity();
        return loc;
    }
    loc.max_modulus = 0.0;
    loc.min_modulus = std::numeric_limits<double>::infinity();
    for (const cplx r : roots) {
        const double m = std::abs(r);
        loc.max_modulus = std::max(loc.max_modulus, m);
        loc.min_modulus = std::min(loc.min_modulus, m);
        if (std::abs(m - 1.0) <= kLocationBand)
            loc.boundary_flag = true;
    }
    loc.all_in_closed_disk = loc.max_modulus <= 1.0 + kLocationBand;
    loc.none_in_open_disk = loc.min_modulus >= 1.0 - kLocationBand;
    return loc;
}

/// Throws Unconverged when the roots cannot be certified by their residuals.
inline ZeroLocation classify_zeros(const Polynomial& p)
{
    if (p.degree() < 1)
        return classify_roots({});
    const RootSet rs = find_roots(p);
    if (!rs.converged)
        throw Unconverged("root finder did not converge for a degree-" +
                          std::to_string(p.degree()) + " polynomial");
    return classify_roots(rs.roots);
}

} // namespace smirnov

#endif
