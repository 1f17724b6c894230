#ifndef SMIRNOV_GENERATE_HPP
#define SMIRNOV_GENERATE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "catalog.hpp"
#include "circle.hpp"
#include "polynomial.hpp"
#include "rng.hpp"
#include "roots.hpp"

namespace smirnov
{

inline constexpr double kGeneratorMargin = 1e-3;
inline constexpr int kMaxRegenerations = 100;

class RetryExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct GeneratorSpec
{
    Hypothesis hypothesis = Hypothesis::all_zeros_in_closed_disk;
    int n_min = 1;
    int n_max = 12;
    /// Roots keep | |r| - 1 | >= margin.
    double margin = kGeneratorMargin;
    std::uint64_t seed = 0;
};

/**
 * An instance together with the data it was built from, so that search
 * and shrinking can move roots while preserving the hypothesis.
 * DominatedPair instances carry no roots for P and are only varied in
 * their parameters.
 */
struct GeneratedInstance
{
    InequalityInstance instance;
    Hypothesis hypothesis = Hypothesis::unrestricted;
    std::vector<cplx> roots;
    cplx leading{1.0, 0.0};
    double margin = kGeneratorMargin;

    bool root_based() const noexcept { return hypothesis != Hypothesis::dominated_pair; }
};

namespace detail
{

inline cplx random_leading(Rng& rng) { return std::polar(rng.uniform(0.5, 2.0), rng.angle()); }

/// Radius law for the roots of each class. Moves a root back into its class when it has left it.
inline cplx clamp_root(cplx r, Hypothesis h, double margin, double k)
{
    const double m = std::abs(r);
    switch (h) {
    case Hypothesis::all_zeros_in_closed_disk:
        return m > 1.0 - margin ? r * ((1.0 - margin) / m) : r;
    case Hypothesis::no_zeros_in_open_disk:
        if (m == 0.0)
            return cplx{1.0 / (1.0 - margin), 0.0};
        return m < 1.0 / (1.0 - margin) ? r * ((1.0 / (1.0 - margin)) / m) : r;
    case Hypothesis::all_zeros_in_radius_k:
        return m > k * (1.0 - margin) ? r * (k * (1.0 - margin) / m) : r;
    default:
        return r;
    }
}

/// Draws a, alpha, beta, R, z for the entry's schema.
inline void draw_parameters(const InequalityEntry& e, InequalityInstance& in, Rng& rng)
{
    const ParamSchema& s = e.params;
    in.z = rng.annulus(1.0, 2.0);
    if (s.z == PointDomain::unit_circle)
        in.z /= std::abs(in.z);
    in.a = s.a ? rng.disk() : cplx{};
    in.beta = s.beta ? rng.disk() : cplx{};
    in.R = s.R ? rng.uniform(1.0, 3.0) : 1.0;
    if (s.alpha == AlphaDomain::disk) {
        in.alpha = rng.disk();
    } else if (s.alpha == AlphaDomain::omega) {
        // alpha = phi(t) for t uniform in the closed disk of radius |z|, away from the pole t = -1
        cplx t;
        do {
            t = rng.disk(std::abs(in.z));
        } while (std::abs(t + 1.0) < 1e-3);
        in.alpha = omega_map(t);
    } else {
        in.alpha = cplx{};
    }
}

inline std::vector<cplx> zn_plus_c_roots(int n, cplx c)
{
    // roots of z^n + c: |c|^{1/n} e^{i (arg(-c) + 2 pi j) / n}
    std::vector<cplx> r;
    const double mod = std::pow(std::abs(c), 1.0 / n);
    const double base = std::arg(-c);
    for (int j = 0; j < n; ++j)
        r.push_back(std::polar(mod, (base + 2.0 * std::numbers::pi * j) / n));
    return r;
}

} // namespace detail

/// Rebuilds P (and n) from the stored roots.
inline void rebuild(GeneratedInstance& g)
{
    if (!g.root_based())
        return;
    g.instance.p = from_roots(g.roots, g.leading);
    g.instance.n = static_cast<int>(g.roots.size());
}

/**
 * Draws one instance of the entry honouring its hypothesis class.
 *
 * AllZerosInClosedDisk: roots sqrt(u) e^{i theta} (1 - margin).
 * NoZerosInOpenDisk: those roots inverted, r -> 1 / conj(r), or z^n + c with |c| >= 1 + margin.
 * AllZerosInRadiusK: k uniform in [0.2, 1], roots scaled by k (1 - margin).
 * DominatedPair: F with root moduli <= 0.95, an arbitrary P of degree <= n,
 * rescaled by (1 - 1e-6) / s where s bounds max |P| / |F| on the circle.
 * Unrestricted: roots uniform by area in |z| <= 2.5.
 */
inline GeneratedInstance generate(const GeneratorSpec& spec, const InequalityEntry& entry, Rng& rng)
{
    if (spec.n_min < 1 || spec.n_max < spec.n_min)
        throw DomainError("invalid degree range");
    GeneratedInstance g;
    g.hypothesis = spec.hypothesis;
    g.margin = spec.margin;
    g.instance.entry = entry.id;
    const int n = rng.integer(spec.n_min, spec.n_max);
    g.leading = detail::random_leading(rng);

    switch (spec.hypothesis) {
    case Hypothesis::all_zeros_in_closed_disk:
        for (int i = 0; i < n; ++i)
            g.roots.push_back(rng.disk() * (1.0 - spec.margin));
        break;
    case Hypothesis::no_zeros_in_open_disk:
        if (rng.uniform() < 0.2) {
            const cplx c = std::polar(rng.uniform(1.0 + spec.margin, 3.0), rng.angle());
            g.roots = detail::zn_plus_c_roots(n, c);
            g.leading = 1.0;
        } else {
            for (int i = 0; i < n; ++i) {
                cplx r = rng.disk() * (1.0 - spec.margin);
                if (std::abs(r) < 1e-3)
                    r = std::polar(1e-3, std::arg(r));
                g.roots.push_back(1.0 / std::conj(r));
            }
        }
        break;
    case Hypothesis::all_zeros_in_radius_k:
        g.instance.k = rng.uniform(0.2, 1.0);
        for (int i = 0; i < n; ++i)
            g.roots.push_back(rng.disk() * (g.instance.k * (1.0 - spec.margin)));
        break;
    case Hypothesis::unrestricted:
        for (int i = 0; i < n; ++i)
            g.roots.push_back(rng.disk(2.5));
        break;
    case Hypothesis::dominated_pair: {
        std::vector<cplx> froots;
        for (int i = 0; i < n; ++i)
            froots.push_back(rng.disk(0.95));
        const Polynomial f = from_roots(froots, g.leading);
        const int dp = rng.integer(0, n);
        std::vector<cplx> proots;
        for (int i = 0; i < dp; ++i)
            proots.push_back(rng.disk(2.5));
        Polynomial p = from_roots(proots, detail::random_leading(rng));
        const double s = certified_max_ratio(p, f);
        if (!std::isfinite(s) || !(s > 0.0))
            throw RetryExhausted("dominated pair could not be certified");
        g.instance.p = ((1.0 - 1e-6) / s) * p;
        g.instance.f = f;
        g.instance.n = n;
        g.roots = froots;
        break;
    }
    }
    if (g.root_based())
        rebuild(g);
    detail::draw_parameters(entry, g.instance, rng);
    return g;
}

inline GeneratedInstance generate(const GeneratorSpec& spec, const InequalityEntry& entry)
{
    Rng rng(spec.seed);
    return generate(spec, entry, rng);
}

} // namespace smirnov

#endif
