#ifndef SMIRNOV_SHARPNESS_HPP
#define SMIRNOV_SHARPNESS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "roots.hpp"

namespace smirnov
{

/// Constants of an extremal family. Unused fields are ignored by families that do not need them.
struct FamilyParams
{
    int n = 3;
    cplx lambda{2.0, 0.0};
    double gamma = 0.7;
    std::vector<cplx> pair_roots{cplx{0.5, 0.0}, cplx{0.0, -0.3}, cplx{-0.2, 0.4}};
};

struct SharpnessResult
{
    std::string entry;
    Family family = Family::none;
    /// Smallest relative slack over the grid; near zero means equality was observed.
    double min_gap = std::numeric_limits<double>::infinity();
    /// Largest relative slack over the grid.
    double max_gap = -std::numeric_limits<double>::infinity();
    std::size_t points = 0;
    InequalityInstance best;
};

/// P (and F) of the entry's extremal family.
inline void instantiate_family(Family f, const FamilyParams& fp, InequalityInstance& in)
{
    const int n = fp.n;
    in.n = n;
    switch (f) {
    case Family::monomial:
        in.p = Polynomial::monomial(n, fp.lambda);
        break;
    case Family::zn_plus_one:
        in.p = Polynomial::monomial(n) + Polynomial::constant(1.0);
        break;
    case Family::unimodular_monomial:
        in.p = Polynomial::monomial(n, std::polar(std::abs(fp.lambda), fp.gamma));
        break;
    case Family::half_binomial:
        in.p = Polynomial::monomial(n, std::polar(0.5, fp.gamma)) + Polynomial::constant(std::polar(0.5, -1.3));
        break;
    case Family::balanced_binomial:
        in.p = Polynomial::monomial(n, std::polar(std::abs(fp.lambda), fp.gamma)) +
               Polynomial::constant(std::abs(fp.lambda));
        break;
    case Family::rotated_pair: {
        std::vector<cplx> r(fp.pair_roots.begin(), fp.pair_roots.end());
        r.resize(static_cast<std::size_t>(n), cplx{0.1, 0.1});
        in.f = from_roots(r, fp.lambda);
        in.p = std::polar(1.0, fp.gamma) * *in.f;
        break;
    }
    case Family::none:
        throw DomainError("entry has no extremal family");
    }
}

namespace detail
{

/// Angle where the two terms of a binomial family line up, if the family has one.
inline std::optional<double> alignment_angle(Family f, const FamilyParams& fp)
{
    const double two_pi = 2.0 * std::numbers::pi;
    auto wrap = [&](double t) { return std::fmod(std::fmod(t, two_pi) + two_pi, two_pi); };
    switch (f) {
    case Family::balanced_binomial: return wrap(-fp.gamma / fp.n);
    case Family::half_binomial: return wrap((-1.3 - fp.gamma) / fp.n);
    default: return std::nullopt;
    }
}

template <class T>
std::vector<T> or_default(bool used, std::vector<T> values, T fallback)
{
    return used ? values : std::vector<T>{fallback};
}

} // namespace detail

/**
 * Minimum relative slack of the entry's extremal family over a grid of
 * (a, alpha, beta, R, z) inside the entry's domain. The family bypasses
 * hypothesis classification: its zeros sit on the classification band by
 * construction.
 */
inline SharpnessResult sharpness_gap(const std::string& entry_id, const FamilyParams& fp = {},
                                     const CheckOptions& base = {})
{
    const InequalityEntry& e = find_entry(entry_id);
    SharpnessResult res;
    res.entry = e.id;
    res.family = e.family;

    InequalityInstance in;
    in.entry = e.id;
    instantiate_family(e.family, fp, in);
    if (e.params.k)
        in.k = 1e-9; // sharp as k -> 0 on the monomial

    CheckOptions opt = base;
    opt.verify_hypothesis = false;
    const ParamSchema& s = e.params;
    // P is fixed across the grid
    const CircleExtrema ex = certified_extrema(in.p, opt.circle_tol);
    const auto as = detail::or_default<cplx>(
        s.a, {0.0, 0.5, -1.0, cplx{0.0, 1.0}, std::polar(0.8, 0.7)}, cplx{});
    const auto betas = detail::or_default<cplx>(s.beta, {0.0, 1.0, -1.0, cplx{0.0, 0.5}}, cplx{});
    const auto Rs = detail::or_default<double>(s.R, {1.0, 1.5, 2.5}, 1.0);
    const std::vector<double> radii = s.z == PointDomain::unit_circle ? std::vector<double>{1.0}
                                                                      : std::vector<double>{1.0, 1.7};
    std::vector<double> thetas{0.0, 0.5 * std::numbers::pi, 1.1, std::numbers::pi, 4.0};
    if (const auto t = detail::alignment_angle(e.family, fp))
        thetas.push_back(*t);

    for (const double rad : radii) {
        for (const double th : thetas) {
            in.z = std::polar(rad, th);
            std::vector<cplx> alphas;
            if (s.alpha == AlphaDomain::disk) {
                alphas = {0.0, 1.0, -0.5, cplx{0.0, 0.6}, std::polar(1.0, 2.0)};
            } else if (s.alpha == AlphaDomain::omega) {
                for (const cplx t : {cplx{0.0}, cplx{0.5}, cplx{0.0, rad}, cplx{-0.3, 0.2}})
                    alphas.push_back(omega_map(t));
            } else {
                alphas = {cplx{}};
            }
            for (const cplx a : as)
                for (const cplx al : alphas)
                    for (const cplx be : betas)
                        for (const double R : Rs) {
                            in.a = a;
                            in.alpha = al;
                            in.beta = be;
                            in.R = R;
                            validate_params(e, in);
                            const Verdict v = evaluate(e, in, opt, &ex);
                            const double gap = v.relative_slack();
                            ++res.points;
                            res.max_gap = std::max(res.max_gap, gap);
                            if (gap < res.min_gap) {
                                res.min_gap = gap;
                                res.best = in;
                            }
                        }
        }
    }
    return res;
}

} // namespace smirnov

#endif
