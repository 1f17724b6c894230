#ifndef SMIRNOV_REDUCTIONS_HPP
#define SMIRNOV_REDUCTIONS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"
#include "generate.hpp"
#include "rng.hpp"

namespace smirnov
{

inline constexpr double kLinkTolerance = 1e-8;
inline constexpr double kMinLimitOrder = 0.9;

enum class LinkKind
{
    specialization, // source at specialised parameters equals target, up to a factor
    limit,          // source / (R - 1) tends to target as R -> 1
};

/**
 * A declared relation between two registry entries.
 *
 * For specialisations, `specialize` maps a generated source instance to the
 * (source, target) pair and `factor` gives c with c * source == target for
 * both sides.
 */
struct ReductionLink
{
    std::string id;
    std::string source;
    std::string target;
    LinkKind kind = LinkKind::specialization;
    std::string description;
    int n_min = 1;
    std::function<void(InequalityInstance& src, InequalityInstance& tgt)> specialize;
    std::function<double(const InequalityInstance& src)> factor;
};

struct ReductionReport
{
    std::string link;
    std::string source;
    std::string target;
    LinkKind kind = LinkKind::specialization;
    std::size_t instances = 0;
    double max_lhs_error = 0.0;
    double max_rhs_error = 0.0;
    /// Limit links: median and minimum observed order of the difference quotients.
    double observed_order = 0.0;
    double min_order = 0.0;
    /// Limit links: worst relative error of the Richardson-extrapolated quotient.
    double richardson_error = 0.0;
    bool pass = true;
    std::optional<InequalityInstance> mismatch;
};

class LinkMismatch : public std::runtime_error
{
public:
    LinkMismatch(const std::string& what, InequalityInstance instance)
        : std::runtime_error(what), instance_(std::move(instance))
    {
    }
    const InequalityInstance& instance() const noexcept { return instance_; }

private:
    InequalityInstance instance_;
};

namespace detail
{

inline cplx unit_of(cplx z) { return z / std::abs(z); }

inline std::vector<ReductionLink> build_links()
{
    std::vector<ReductionLink> v;
    const auto one = [](const InequalityInstance&) { return 1.0; };
    const auto z_over_n = [](const InequalityInstance& s) { return std::abs(s.z) / s.n; };

    auto a_zero = [](InequalityInstance& s, InequalityInstance&) { s.a = 0.0; };
    auto a_inv_z = [](InequalityInstance& s, InequalityInstance&) { s.a = -1.0 / s.z; };
    // a = -1/z with z moved onto the circle, for targets stated on |z| = 1
    auto a_inv_z_circle = [](InequalityInstance& s, InequalityInstance& t) {
        s.z = unit_of(s.z);
        t.z = s.z;
        s.a = -1.0 / s.z;
    };
    // the drawn point w splits as w = R z with R = |w|, |z| = 1; S_{-1/w}[P](w) = n P(w) / w
    auto a_inv_w = [](InequalityInstance& s, InequalityInstance& t) {
        t.R = std::abs(s.z);
        t.z = unit_of(s.z);
        s.a = -1.0 / s.z;
    };
    auto a_zero_circle = [](InequalityInstance& s, InequalityInstance& t) {
        s.z = unit_of(s.z);
        t.z = s.z;
        s.a = 0.0;
    };

    v.push_back({"thm1-a0", "thm1-2.1", "remark1-a0", LinkKind::specialization,
                 "a = 0 turns S_a into differentiation", 1, a_zero, one});
    v.push_back({"thm1-a-inv-z", "thm1-2.1", "dewan-hans-C-1.14", LinkKind::specialization,
                 "a = -1/z on |z| = 1, both sides times |z|/n", 1, a_inv_z_circle, z_over_n});
    v.push_back({"thm2-a-inv-z", "thm2-2.3", "dewan-hans-D-1.15", LinkKind::specialization,
                 "a = -1/z on |z| = 1, both sides times |z|/n", 1, a_inv_z_circle, z_over_n});
    v.push_back({"thm1-beta0", "thm1-2.1", "cor-thm1-beta0", LinkKind::specialization, "beta = 0", 1,
                 [](InequalityInstance& s, InequalityInstance&) { s.beta = 0.0; }, one});
    v.push_back({"thm1-alpha0", "thm1-2.1", "cor-thm1-alpha0", LinkKind::specialization, "alpha = 0", 1,
                 [](InequalityInstance& s, InequalityInstance&) { s.alpha = 0.0; }, one});
    v.push_back({"thm2-beta0", "thm2-2.3", "cor-thm2-beta0", LinkKind::specialization, "beta = 0", 1,
                 [](InequalityInstance& s, InequalityInstance&) { s.beta = 0.0; }, one});
    v.push_back({"thm2-alpha0", "thm2-2.3", "cor-thm2-alpha0", LinkKind::specialization, "alpha = 0", 1,
                 [](InequalityInstance& s, InequalityInstance&) { s.alpha = 0.0; }, one});
    v.push_back({"thm1-growth", "thm1-2.1", "aziz-dawood-4", LinkKind::specialization,
                 "alpha = beta = 0, a = -1/z on |z| = 1, times |z|/n", 1,
                 [a_inv_z_circle](InequalityInstance& s, InequalityInstance& t) {
                     a_inv_z_circle(s, t);
                     s.alpha = s.beta = 0.0;
                 },
                 z_over_n});
    v.push_back({"thm1-R1", "thm1-2.1", "shah-fatima-9", LinkKind::specialization, "alpha = beta = 0, R = 1", 1,
                 [](InequalityInstance& s, InequalityInstance&) {
                     s.alpha = s.beta = 0.0;
                     s.R = 1.0;
                 },
                 one});
    v.push_back({"thm2-R1", "thm2-2.3", "shah-fatima-10", LinkKind::specialization, "alpha = beta = 0, R = 1", 1,
                 [](InequalityInstance& s, InequalityInstance&) {
                     s.alpha = s.beta = 0.0;
                     s.R = 1.0;
                 },
                 one});
    v.push_back({"sf9-a0", "shah-fatima-1.9", "bernstein-1.1", LinkKind::specialization, "a = 0 on |z| = 1", 1,
                 a_zero_circle, one});
    v.push_back({"sf11-a0", "shah-fatima-1.11", "erdos-lax-1.3", LinkKind::specialization, "a = 0 on |z| = 1",
                 1, a_zero_circle, one});
    v.push_back({"sf9-a-inv-w", "shah-fatima-1.9", "maxmod-1.2", LinkKind::specialization,
                 "a = -1/w at w = R z, times |w|/n", 1, a_inv_w, z_over_n});
    v.push_back({"sf11-a-inv-w", "shah-fatima-1.11", "ankeny-rivlin-1.4", LinkKind::specialization,
                 "a = -1/w at w = R z, times |w|/n", 1, a_inv_w, z_over_n});
    v.push_back({"wl12-a-inv-z", "wani-liman-1.12", "aziz-rather-1.5", LinkKind::specialization,
                 "a = -1/z, times |z|/n", 1, a_inv_z, z_over_n});
    v.push_back({"wl13-a-inv-z", "wani-liman-1.13", "aziz-rather-1.6", LinkKind::specialization,
                 "a = -1/z, times |z|/n", 1, a_inv_z, z_over_n});
    v.push_back({"thm1-limit", "thm1-2.1", "cor-2.2", LinkKind::limit,
                 "alpha = 1, divide by R - 1, R -> 1", 2, nullptr, nullptr});
    v.push_back({"thm2-limit", "thm2-2.3", "cor-2.4", LinkKind::limit,
                 "alpha = 1, divide by R - 1, R -> 1", 2, nullptr, nullptr});
    return v;
}

/// Both sides with shared extrema; rhs terms that need no extrema skip them.
struct SideValues
{
    double lhs;
    double rhs;
};

inline SideValues side_values(const InequalityInstance& in, const CircleExtrema& ex)
{
    const InequalityEntry& e = find_entry(in.entry);
    const Sides s = e.sides(in, Mutation{});
    return {s.lhs, s.rhs_const + s.rhs_max * ex.max.value + s.rhs_min * ex.min.value};
}

inline double rel(double x, double y, double scale) { return std::abs(x - y) / scale; }

inline double median(std::vector<double> v)
{
    if (v.empty())
        return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

} // namespace detail

inline const std::vector<ReductionLink>& links()
{
    static const std::vector<ReductionLink> all = detail::build_links();
    return all;
}

inline const ReductionLink& find_link(std::string_view id)
{
    for (const auto& l : links())
        if (l.id == id)
            return l;
    throw DomainError("unknown reduction link: " + std::string(id));
}

namespace detail
{

inline GeneratedInstance link_instance(const ReductionLink& link, const InequalityEntry& src, std::uint64_t seed,
                                       std::uint64_t i, int n_max)
{
    GeneratorSpec spec;
    spec.hypothesis = src.hypothesis;
    spec.n_min = link.n_min;
    spec.n_max = std::max(n_max, link.n_min);
    for (std::uint64_t attempt = 0; attempt < kMaxRegenerations; ++attempt) {
        Rng rng = Rng::split(seed, i, attempt);
        try {
            return generate(spec, src, rng);
        } catch (const RetryExhausted&) {
        }
    }
    throw RetryExhausted("link generator exhausted its retries");
}

inline void check_specialization(const ReductionLink& link, const InequalityInstance& base, double circle_tol,
                                 ReductionReport& rep)
{
    InequalityInstance s = base;
    InequalityInstance t = base;
    t.entry = link.target;
    link.specialize(s, t);
    validate_params(find_entry(s.entry), s);
    validate_params(find_entry(t.entry), t);

    const CircleExtrema ex = certified_extrema(s.p, circle_tol);
    const double c = link.factor(s);
    const SideValues sv = side_values(s, ex);
    const SideValues tv = side_values(t, ex);
    const double scale = std::max({std::abs(tv.lhs), std::abs(tv.rhs), 1.0});
    const double el = rel(c * sv.lhs, tv.lhs, scale);
    const double er = rel(c * sv.rhs, tv.rhs, scale);
    rep.max_lhs_error = std::max(rep.max_lhs_error, el);
    rep.max_rhs_error = std::max(rep.max_rhs_error, er);
    if ((el > kLinkTolerance || er > kLinkTolerance) && !rep.mismatch) {
        rep.pass = false;
        rep.mismatch = s;
    }
}

/// Relative error of the difference quotients at h = 1e-3, 1e-4, 1e-5 and of their Richardson extrapolation.
struct LimitErrors
{
    double err[3];
    double richardson;
};

inline LimitErrors limit_errors(const InequalityInstance& base, const CircleExtrema& ex)
{
    static constexpr double hs[3] = {1e-3, 1e-4, 1e-5};
    InequalityInstance s = base;
    s.alpha = 1.0;
    InequalityInstance t = base;
    t.entry = base.entry == "thm1-2.1" ? "cor-2.2" : "cor-2.4";
    const OperatorContext ctx(s.a, s.n);
    const cplx target_lhs = corollary_limit_lhs(s.p, ctx, s.beta)(s.z);
    const double target_rhs = side_values(t, ex).rhs;
    const double scale = std::max({std::abs(target_lhs), std::abs(target_rhs), 1.0});

    LimitErrors out{};
    cplx dq[3];
    double rq[3];
    for (int i = 0; i < 3; ++i) {
        s.R = 1.0 + hs[i];
        const detail::Terms terms(s, Mutation{});
        dq[i] = terms.composite(s.p) / hs[i];
        rq[i] = side_values(s, ex).rhs / hs[i];
        out.err[i] = std::max(std::abs(dq[i] - target_lhs), std::abs(rq[i] - target_rhs)) / scale;
    }
    // first-order Richardson on the two coarser steps
    const cplx dl = (10.0 * dq[1] - dq[0]) / 9.0;
    const double dr = (10.0 * rq[1] - rq[0]) / 9.0;
    out.richardson = std::max(std::abs(dl - target_lhs), std::abs(dr - target_rhs)) / scale;
    return out;
}

} // namespace detail

/**
 * Verifies a reduction link on `trials` generated instances of the source
 * entry. Specialisations must agree on both sides to 1e-8 relative to
 * max(|lhs|, |rhs|, 1) of the target. Limit links must show observed
 * order >= 0.9 on every instance, fitted from h = 1e-3 to 1e-5; the
 * report also carries the median order.
 */
inline ReductionReport reduction_check(std::string_view link_id, std::size_t trials = 1000, std::uint64_t seed = 1,
                                       int n_max = 12, double circle_tol = 1e-10)
{
    const ReductionLink& link = find_link(link_id);
    const InequalityEntry& src = find_entry(link.source);
    ReductionReport rep;
    rep.link = link.id;
    rep.source = link.source;
    rep.target = link.target;
    rep.kind = link.kind;

    std::vector<double> orders;
    rep.min_order = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < trials; ++i) {
        const GeneratedInstance g = detail::link_instance(link, src, seed, i, n_max);
        ++rep.instances;
        if (link.kind == LinkKind::specialization) {
            detail::check_specialization(link, g.instance, circle_tol, rep);
            continue;
        }
        const CircleExtrema ex = certified_extrema(g.instance.p, circle_tol);
        const detail::LimitErrors le = detail::limit_errors(g.instance, ex);
        const double order = std::log10(le.err[0] / le.err[2]) / 2.0;
        orders.push_back(order);
        rep.min_order = std::min(rep.min_order, order);
        rep.richardson_error = std::max(rep.richardson_error, le.richardson);
        rep.max_lhs_error = std::max(rep.max_lhs_error, le.err[2]);
        if (!(order >= kMinLimitOrder) && !rep.mismatch)
            rep.mismatch = g.instance;
    }
    if (link.kind == LinkKind::limit) {
        rep.observed_order = detail::median(orders);
        if (orders.empty())
            rep.min_order = 0.0;
        rep.pass = !orders.empty() && rep.min_order >= kMinLimitOrder;
    }
    return rep;
}

/// Throws LinkMismatch carrying the offending instance when the report failed.
inline void require(const ReductionReport& rep)
{
    if (!rep.pass)
        throw LinkMismatch("reduction link " + rep.link + " failed",
                           rep.mismatch.value_or(InequalityInstance{}));
}

} // namespace smirnov

#endif
