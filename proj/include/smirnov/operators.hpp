#ifndef SMIRNOV_OPERATORS_HPP
#define SMIRNOV_OPERATORS_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "polynomial.hpp"

namespace smirnov
{

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr double kBoundaryBand = 1e-9;

/**
 * Parameter a of the modified Smirnov operator together with the degree
 * class n used for the factor n in (1 + a z) P'(z) - n a P(z).
 */
class OperatorContext
{
public:
    OperatorContext(cplx a, int n) : a_(a), n_(n)
    {
        if (std::abs(a) > 1.0 + kUnitTolerance)
            throw DomainError("operator parameter must lie in the closed unit disk");
        if (n < 1)
            throw DomainError("operator degree class must be positive");
    }

    cplx a() const noexcept { return a_; }
    int n() const noexcept { return n_; }
    bool boundary() const noexcept { return std::abs(std::abs(a_) - 1.0) <= kBoundaryBand; }

private:
    cplx a_;
    int n_;
};

/// beta * (((R + 1) / 2)^n - |alpha|). Uses the modulus of alpha.
inline cplx kappa(cplx alpha, cplx beta, double R, int n)
{
    return beta * (std::pow((R + 1.0) / 2.0, n) - std::abs(alpha));
}

/// (alpha, beta, R) of the composite expressions; kappa is derived on access.
class CompositeParams
{
public:
    CompositeParams(cplx alpha, cplx beta, double R) : alpha_(alpha), beta_(beta), R_(R)
    {
        if (std::abs(alpha) > 1.0 + kUnitTolerance)
            throw DomainError("|alpha| must not exceed 1");
        if (std::abs(beta) > 1.0 + kUnitTolerance)
            throw DomainError("|beta| must not exceed 1");
        if (!(R >= 1.0))
            throw DomainError("R must be at least 1");
    }

    cplx alpha() const noexcept { return alpha_; }
    cplx beta() const noexcept { return beta_; }
    double R() const noexcept { return R_; }
    cplx kappa(int n) const { return smirnov::kappa(alpha_, beta_, R_, n); }

    /// R^n - alpha + kappa, the factor multiplying |S_a[z^n]| on the right-hand sides.
    cplx outer_factor(int n) const { return std::pow(R_, n) - alpha_ + kappa(n); }
    /// 1 - alpha + kappa, the factor multiplying n|a|.
    cplx inner_factor(int n) const { return 1.0 - alpha_ + kappa(n); }

private:
    cplx alpha_;
    cplx beta_;
    double R_;
};

/// Image of the disk {|t| < radius} under t -> t / (t + 1).
class OmegaRegion
{
public:
    explicit OmegaRegion(double radius) : radius_(radius)
    {
        if (!(radius >= 1.0 - kUnitTolerance))
            throw DomainError("Omega radius must be at least 1");
    }
    double radius() const noexcept { return radius_; }

private:
    double radius_;
};

/// (1 + a z) P'(z) - n a P(z), with n taken from the context.
inline Polynomial modified_smirnov(const Polynomial& p, const OperatorContext& ctx)
{
    const int n = ctx.n();
    const auto c = p.padded(n);
    const cplx a = ctx.a();
    // coefficient k: (k+1) c[k+1] + a (k - n) c[k]; the z^n term is identically zero
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        out[ku] = static_cast<double>(k + 1) * c[ku + 1] + a * static_cast<double>(k - n) * c[ku];
    }
    return Polynomial(std::move(out));
}

inline Polynomial modified_smirnov(const Polynomial& p, cplx a)
{
    return modified_smirnov(p, OperatorContext(a, std::max(p.degree(), 1)));
}

/// Closed form |S_a[z^n]| = n |z|^(n-1).
inline double smirnov_monomial_modulus(int n, cplx z) { return n * std::pow(std::abs(z), n - 1); }

/// z P'(z) - n alpha P(z). alpha is unrestricted here; membership in Omega is the caller's concern.
inline Polynomial smirnov_alpha(const Polynomial& p, cplx alpha, int n)
{
    const auto c = p.padded(n);
    std::vector<cplx> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        out[k] = (static_cast<double>(k) - static_cast<double>(n) * alpha) * c[k];
    return Polynomial(std::move(out));
}

/// |alpha / (1 - alpha)| <= radius. alpha = 1 maps back to infinity and is never contained.
inline bool omega_contains(const OmegaRegion& region, cplx alpha)
{
    if (alpha == cplx{1.0, 0.0})
        return false;
    return std::abs(alpha / (1.0 - alpha)) <= region.radius();
}

/// phi(t) = t / (t + 1)
inline cplx omega_map(cplx t) { return t / (t + 1.0); }

/**
 * S_a[P_R](z) - alpha S_a[P](z) + kappa S_a[P](z) with P_R(z) = P(R z).
 *
 * "S_a[P](Rz)" is read as the operator applied to the dilated polynomial;
 * both applications use the degree class of ctx.
 */
inline Polynomial composite_transform(const Polynomial& p, const OperatorContext& ctx,
                                      const CompositeParams& cp)
{
    const Polynomial sr = modified_smirnov(dilate(p, cp.R()), ctx);
    const Polynomial s = modified_smirnov(p, ctx);
    return sr + (cp.kappa(ctx.n()) - cp.alpha()) * s;
}

/// The other reading: (S_a[P])(R z) - alpha S_a[P](z) + kappa S_a[P](z), at a single point.
inline cplx composite_at_scaled_point(const Polynomial& p, const OperatorContext& ctx,
                                      const CompositeParams& cp, cplx z)
{
    const Polynomial s = modified_smirnov(p, ctx);
    return s(cp.R() * z) + (cp.kappa(ctx.n()) - cp.alpha()) * s(z);
}

/**
 * z S_a[P'](z) + (n/2) beta S_a[P](z) + P'(z), the limit of the composite
 * with alpha = 1 divided by R - 1 as R -> 1. The inner operator on P'
 * uses degree class n - 1.
 */
inline Polynomial corollary_limit_lhs(const Polynomial& p, const OperatorContext& ctx, cplx beta)
{
    const int n = ctx.n();
    if (p.degree() < 1)
        throw DomainError("limit expression requires a non-constant polynomial");
    if (p.degree() != n)
        throw DomainError("limit expression requires degree equal to the degree class");
    const Polynomial dp = derivative(p);
    Polynomial inner = (n >= 2) ? modified_smirnov(dp, OperatorContext(ctx.a(), n - 1))
                                : Polynomial{};
    return shift_up(inner) + (0.5 * n * beta) * modified_smirnov(p, ctx) + dp;
}

/// S_{-1/z}[P](z); equals n P(z) / z since the (1 + a z) factor vanishes.
inline cplx reduction_a_inv_z(const Polynomial& p, cplx z, int n)
{
    if (std::abs(z) < 1.0 - kUnitTolerance)
        throw DomainError("a = -1/z leaves the closed unit disk when |z| < 1");
    const OperatorContext ctx(-1.0 / z, n);
    return modified_smirnov(p, ctx)(z);
}

inline cplx reduction_a_inv_z(const Polynomial& p, cplx z)
{
    return reduction_a_inv_z(p, z, std::max(p.degree(), 1));
}

} // namespace smirnov

#endif
