#ifndef SMIRNOV_CIRCLE_HPP
#define SMIRNOV_CIRCLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "polynomial.hpp"

namespace smirnov
{

enum class ExtremumKind { max, min };

/**
 * Extremum of |P| over the unit circle with a rigorous half-width:
 * the true value lies in [value - error_bound, value] for a minimum and
 * [value, value + error_bound] for a maximum. certified is false when the
 * requested tolerance could not be met within the sample budget; the
 * bound is still rigorous in that case, only wider than requested.
 */
struct CircleExtremum
{
    double value = 0.0;
    double theta = 0.0;
    double error_bound = 0.0;
    ExtremumKind kind = ExtremumKind::max;
    bool certified = true;
    std::size_t samples = 0;

    double upper() const noexcept { return kind == ExtremumKind::max ? value + error_bound : value; }
    double lower() const noexcept { return kind == ExtremumKind::min ? value - error_bound : value; }
};

struct CircleExtrema
{
    CircleExtremum max;
    CircleExtremum min;
};

inline constexpr std::size_t kMaxCircleSamples = std::size_t{1} << 22;
inline constexpr double kNearZeroMinimum = 1e-6;

namespace detail
{

inline double modulus_sq_at(const Polynomial& p, double theta) noexcept
{
    return std::norm(p(std::polar(1.0, theta)));
}

/// g = |P(e^{i theta})|^2 and its first two theta-derivatives at one point.
struct Jet
{
    double g0;
    double g1;
    double g2;

    double at(double t) const noexcept { return g0 + t * (g1 + 0.5 * t * g2); }

    /// Range of the quadratic model over [lo, hi].
    void range(double lo, double hi, double& mn, double& mx) const noexcept
    {
        const double a = at(lo), b = at(hi);
        mn = std::min(a, b);
        mx = std::max(a, b);
        if (g2 != 0.0) {
            const double t = -g1 / g2;
            if (t > lo && t < hi) {
                const double v = at(t);
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
        }
    }
};

inline Jet jet_at(const Polynomial& p, double theta) noexcept
{
    const cplx z = std::polar(1.0, theta);
    const auto& c = p.coeffs();
    cplx b0 = c.back(), b1{}, b2{};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        b2 = b2 * z + b1;
        b1 = b1 * z + b0;
        b0 = b0 * z + c[k];
    }
    // b0 = P, b1 = P', b2 = P''/2; q(theta) = P(e^{i theta})
    const cplx q0 = b0;
    const cplx q1 = cplx{0.0, 1.0} * z * b1;
    const cplx q2 = -(z * b1 + 2.0 * z * z * b2);
    return {std::norm(q0), 2.0 * std::real(std::conj(q0) * q1),
            2.0 * (std::norm(q1) + std::real(std::conj(q0) * q2))};
}

struct Cell
{
    double left;
    double width;
    Jet jl;
    Jet jr;
    double bound;
};

inline std::size_t initial_grid(int n)
{
    return std::max<std::size_t>(4096, 64 * static_cast<std::size_t>(std::max(n, 1)));
}

struct Grid
{
    double h;
    std::vector<Jet> jets;
};

inline Grid sample_grid(const Polynomial& p)
{
    const std::size_t N = initial_grid(p.degree());
    Grid grid{2.0 * std::numbers::pi / static_cast<double>(N), std::vector<Jet>(N)};
    for (std::size_t i = 0; i < N; ++i)
        grid.jets[i] = jet_at(p, grid.h * static_cast<double>(i));
    return grid;
}

/// Range of g over a cell from the quadratic models at both ends, each used on its own half.
/// The cubic remainder uses |g'''| <= n^3 max g for the degree-n trigonometric polynomial g.
inline void taylor_range(const Cell& c, double third, double& mn, double& mx) noexcept
{
    const double s = 0.5 * c.width;
    const double rem = third * s * s * s / 6.0;
    double ln, lx, rn, rx;
    c.jl.range(0.0, s, ln, lx);
    c.jr.range(-s, 0.0, rn, rx);
    mn = std::min(ln, rn) - rem;
    mx = std::max(lx, rx) + rem;
}

inline double wrap_angle(double t)
{
    const double two_pi = 2.0 * std::numbers::pi;
    return std::fmod(std::fmod(t, two_pi) + two_pi, two_pi);
}

/// Golden-section search for the extremum of g on [lo, hi]; sign = +1 maximises.
template <class F>
double golden_section(F&& g, double lo, double hi, double sign, double& best_theta, int iters = 60)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - r * (b - a), d = a + r * (b - a);
    double gc = sign * g(c), gd = sign * g(d);
    for (int i = 0; i < iters && (b - a) > 1e-15; ++i) {
        if (gc > gd) {
            b = d; d = c; gd = gc;
            c = b - r * (b - a); gc = sign * g(c);
        } else {
            a = c; c = d; gc = gd;
            d = a + r * (b - a); gd = sign * g(d);
        }
    }
    best_theta = gc > gd ? c : d;
    return sign * std::max(gc, gd);
}

inline CircleExtremum constant_extremum(const Polynomial& p, ExtremumKind kind)
{
    CircleExtremum out;
    out.kind = kind;
    out.value = std::abs(p[0]);
    out.samples = 1;
    return out;
}

/// Branch and bound over the grid cells. Larger is better for Max, smaller otherwise.
template <bool Max, class Bound, class Done>
void refine(const Polynomial& p, const Grid& grid, Bound&& bound, Done&& done, double& best_g, double& best_theta,
            std::size_t& samples, bool& certified, double& frontier)
{
    const std::size_t N = grid.jets.size();
    const double h = grid.h;
    auto cmp = [](const Cell& a, const Cell& b) { return Max ? a.bound < b.bound : a.bound > b.bound; };
    std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> queue(cmp);
    for (std::size_t i = 0; i < N; ++i) {
        Cell c{h * static_cast<double>(i), h, grid.jets[i], grid.jets[(i + 1) % N], 0.0};
        c.bound = bound(c);
        if (!done(c.bound))
            queue.push(c);
    }
    certified = true;
    while (!queue.empty() && !done(queue.top().bound)) {
        if (samples >= kMaxCircleSamples) {
            certified = false;
            break;
        }
        const Cell c = queue.top();
        queue.pop();
        const double w = 0.5 * c.width;
        const double mid = c.left + w;
        const Jet jm = jet_at(p, mid);
        ++samples;
        if (Max ? jm.g0 > best_g : jm.g0 < best_g) {
            best_g = jm.g0;
            best_theta = mid;
        }
        Cell lc{c.left, w, c.jl, jm, 0.0};
        Cell rc{mid, w, jm, c.jr, 0.0};
        lc.bound = bound(lc);
        rc.bound = bound(rc);
        if (!done(lc.bound))
            queue.push(lc);
        if (!done(rc.bound))
            queue.push(rc);
    }
    frontier = queue.empty() ? std::numeric_limits<double>::quiet_NaN() : queue.top().bound;
}

inline CircleExtremum max_from_grid(const Polynomial& p, const Grid& grid, double tol)
{
    CircleExtremum out;
    out.kind = ExtremumKind::max;
    const int n = p.degree();
    const double h = grid.h;
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.jets.size(); ++i)
        if (grid.jets[i].g0 > grid.jets[best].g0)
            best = i;
    std::size_t samples = grid.jets.size();
    double best_g = grid.jets[best].g0;
    double best_theta = h * static_cast<double>(best);

    // |d/dtheta P(e^{i theta})| <= n M gives M <= Mhat / (1 - n h / 2)
    const double m_up = std::sqrt(best_g) / (1.0 - 0.5 * n * h);
    const double curvature = static_cast<double>(n) * n * m_up * m_up;
    const double third = curvature * n;
    auto bound = [&](const Cell& c) {
        double mn, mx;
        taylor_range(c, third, mn, mx);
        return std::min(mx, std::max(c.jl.g0, c.jr.g0) + curvature * c.width * c.width / 8.0);
    };
    auto done = [&](double ub) { return std::sqrt(ub) - std::sqrt(best_g) <= tol * std::sqrt(best_g); };

    bool certified = true;
    double frontier = 0.0;
    refine<true>(p, grid, bound, done, best_g, best_theta, samples, certified, frontier);
    const double ub = std::isnan(frontier) ? best_g : std::max(best_g, frontier);

    double polished_theta = best_theta;
    const double polished = golden_section([&](double t) { return modulus_sq_at(p, t); }, best_theta - h,
                                           best_theta + h, 1.0, polished_theta);
    samples += 120;
    if (polished > best_g) {
        best_g = polished;
        best_theta = polished_theta;
    }

    out.value = std::sqrt(best_g);
    out.theta = wrap_angle(best_theta);
    out.error_bound = std::max(0.0, std::sqrt(std::max(ub, best_g)) - out.value);
    out.certified = certified;
    out.samples = samples;
    return out;
}

inline CircleExtremum min_from_grid(const Polynomial& p, const Grid& grid, const CircleExtremum& max, double tol)
{
    CircleExtremum out;
    out.kind = ExtremumKind::min;
    const int n = p.degree();
    const double h = grid.h;
    const double m_up = max.upper();
    const double curvature = static_cast<double>(n) * n * m_up * m_up;
    const double third = curvature * n;
    const double lipschitz = static_cast<double>(n) * m_up;
    auto bound = [&](const Cell& c) {
        double mn, mx;
        taylor_range(c, third, mn, mx);
        const double gmin = std::min(c.jl.g0, c.jr.g0);
        const double quad = std::max(mn, gmin - curvature * c.width * c.width / 8.0);
        const double lin = std::sqrt(gmin) - lipschitz * c.width / 2.0;
        return std::max({std::sqrt(std::max(0.0, quad)), lin, 0.0});
    };

    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.jets.size(); ++i)
        if (grid.jets[i].g0 < grid.jets[best].g0)
            best = i;
    std::size_t samples = grid.jets.size();
    double best_g = grid.jets[best].g0;
    double best_theta = h * static_cast<double>(best);

    auto done = [&](double lb) {
        const double v = std::sqrt(best_g);
        const double allowed = v < kNearZeroMinimum * m_up ? tol * m_up : tol * v;
        return v - lb <= allowed;
    };

    bool certified = true;
    double frontier = 0.0;
    refine<false>(p, grid, bound, done, best_g, best_theta, samples, certified, frontier);
    const double lb = std::isnan(frontier) ? std::sqrt(best_g) : std::min(std::sqrt(best_g), frontier);

    double polished_theta = best_theta;
    const double span = std::max(1e-12, std::min(h, 4.0 * std::sqrt(best_g) / std::max(lipschitz, 1e-300)));
    const double polished = golden_section([&](double t) { return modulus_sq_at(p, t); }, best_theta - span,
                                           best_theta + span, -1.0, polished_theta);
    samples += 120;
    if (polished < best_g) {
        best_g = polished;
        best_theta = polished_theta;
    }

    out.value = std::sqrt(best_g);
    out.theta = wrap_angle(best_theta);
    out.error_bound = std::max(0.0, out.value - std::max(0.0, lb));
    out.certified = certified;
    out.samples = samples;
    return out;
}

} // namespace detail

/**
 * Certified maximum of |P(e^{i theta})|.
 *
 * A grid of N >= max(4096, 64 n) points gives M <= Mhat / (1 - n h / 2) via
 * |d/dtheta P(e^{i theta})| <= n M. Cells are bounded through g = |P|^2, a
 * real trigonometric polynomial of degree n: by the endpoint maximum plus
 * n^2 M^2 w^2 / 8, or by quadratic Taylor models at the endpoints with an
 * n^3 M^2 cubic remainder, whichever is smaller. Cells that can still beat
 * the incumbent are bisected until the bound meets tol * value or the
 * sample budget runs out.
 */
inline CircleExtremum certified_max_modulus(const Polynomial& p, double tol = 1e-10)
{
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");
    if (p.degree() == 0)
        return detail::constant_extremum(p, ExtremumKind::max);
    return detail::max_from_grid(p, detail::sample_grid(p), tol);
}

/**
 * Certified minimum of |P(e^{i theta})|, given a certified maximum for the
 * global constants. Cell lower bounds take the best of the curvature bound,
 * the Taylor-model bound and the Lipschitz bound min - n M w / 2. When the
 * value is below 1e-6 M the tolerance becomes absolute (tol * M).
 */
inline CircleExtremum certified_min_modulus(const Polynomial& p, const CircleExtremum& max, double tol = 1e-10)
{
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");
    if (p.degree() == 0)
        return detail::constant_extremum(p, ExtremumKind::min);
    return detail::min_from_grid(p, detail::sample_grid(p), max, tol);
}

inline CircleExtremum certified_min_modulus(const Polynomial& p, double tol = 1e-10)
{
    return certified_min_modulus(p, certified_max_modulus(p, tol), tol);
}

inline CircleExtrema certified_extrema(const Polynomial& p, double tol = 1e-10)
{
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");
    CircleExtrema e;
    if (p.degree() == 0) {
        e.max = detail::constant_extremum(p, ExtremumKind::max);
        e.min = detail::constant_extremum(p, ExtremumKind::min);
        return e;
    }
    const detail::Grid grid = detail::sample_grid(p);
    e.max = detail::max_from_grid(p, grid, tol);
    e.min = detail::min_from_grid(p, grid, e.max, tol);
    return e;
}

/**
 * Rigorous upper bound on max |P| / |F| over the unit circle for F without
 * zeros on the circle. A cell is bounded by (upper bound of |P|^2) /
 * (lower bound of |F|^2), each the better of the Taylor-model and the
 * Lipschitz bound, and bisected until the bound is within tol of the best
 * sampled ratio. Returns +infinity when F cannot be separated from zero.
 */
inline double certified_max_ratio(const Polynomial& p, const Polynomial& f, double tol = 1e-7)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (f.degree() == 0)
        return std::abs(f[0]) > 0.0 ? certified_max_modulus(p, tol).upper() / std::abs(f[0]) : inf;
    const double mp = p.degree() == 0 ? std::abs(p[0]) : certified_max_modulus(p, 1e-8).upper();
    const double mf = certified_max_modulus(f, 1e-8).upper();
    const double np = std::max(p.degree(), 0);
    const double nf = f.degree();
    const double third_p = np * np * np * mp * mp;
    const double third_f = nf * nf * nf * mf * mf;

    struct RCell
    {
        double left, width;
        detail::Jet pl, pr, fl, fr;
        double bound;
    };
    auto cell_bound = [&](const RCell& c) {
        double mn, mx;
        detail::taylor_range(detail::Cell{c.left, c.width, c.pl, c.pr, 0.0}, third_p, mn, mx);
        const double lp = std::sqrt(std::max(c.pl.g0, c.pr.g0)) + np * mp * c.width / 2.0;
        const double up = std::max(0.0, std::min(mx, lp * lp));
        detail::taylor_range(detail::Cell{c.left, c.width, c.fl, c.fr, 0.0}, third_f, mn, mx);
        const double lf = std::sqrt(std::min(c.fl.g0, c.fr.g0)) - nf * mf * c.width / 2.0;
        const double low = std::max(mn, lf > 0.0 ? lf * lf : 0.0);
        return low > 0.0 ? std::sqrt(up / low) : inf;
    };

    const std::size_t N = detail::initial_grid(std::max(p.degree(), f.degree()));
    const double h = 2.0 * std::numbers::pi / static_cast<double>(N);
    std::vector<detail::Jet> jp(N), jf(N);
    double best = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double t = h * static_cast<double>(i);
        jp[i] = detail::jet_at(p, t);
        jf[i] = detail::jet_at(f, t);
        if (jf[i].g0 <= 0.0)
            return inf;
        best = std::max(best, std::sqrt(jp[i].g0 / jf[i].g0));
    }
    auto cmp = [](const RCell& a, const RCell& b) { return a.bound < b.bound; };
    std::priority_queue<RCell, std::vector<RCell>, decltype(cmp)> queue(cmp);
    auto done = [&](double ub) { return ub <= best * (1.0 + tol); };
    for (std::size_t i = 0; i < N; ++i) {
        RCell c{h * static_cast<double>(i), h, jp[i], jp[(i + 1) % N], jf[i], jf[(i + 1) % N], 0.0};
        c.bound = cell_bound(c);
        if (!done(c.bound))
            queue.push(c);
    }
    std::size_t samples = N;
    while (!queue.empty() && !done(queue.top().bound)) {
        if (samples >= kMaxCircleSamples)
            return queue.top().bound;
        const RCell c = queue.top();
        queue.pop();
        const double w = 0.5 * c.width;
        const double mid = c.left + w;
        const detail::Jet pm = detail::jet_at(p, mid);
        const detail::Jet fm = detail::jet_at(f, mid);
        ++samples;
        if (fm.g0 <= 0.0)
            return inf;
        best = std::max(best, std::sqrt(pm.g0 / fm.g0));
        RCell lc{c.left, w, c.pl, pm, c.fl, fm, 0.0};
        RCell rc{mid, w, pm, c.pr, fm, c.fr, 0.0};
        lc.bound = cell_bound(lc);
        rc.bound = cell_bound(rc);
        if (!done(lc.bound))
            queue.push(lc);
        if (!done(rc.bound))
            queue.push(rc);
    }
    return queue.empty() ? best * (1.0 + tol) : std::max(best * (1.0 + tol), queue.top().bound);
}

} // namespace smirnov

#endif
