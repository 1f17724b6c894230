#ifndef SMIRNOV_CATALOG_HPP
#define SMIRNOV_CATALOG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circle.hpp"
#include "operators.hpp"
#include "polynomial.hpp"
#include "roots.hpp"

namespace smirnov
{

inline constexpr double kSlackTolerance = 1e-8;

enum class Hypothesis
{
    all_zeros_in_closed_disk,
    no_zeros_in_open_disk,
    dominated_pair,
    unrestricted,
    all_zeros_in_radius_k,
};

enum class Direction { le, ge };
enum class PointDomain { exterior, unit_circle };
enum class AlphaDomain { unused, disk, omega };

/// Extremal polynomial families on which an entry is claimed to be sharp.
enum class Family
{
    none,
    monomial,            // lambda z^n
    zn_plus_one,         // z^n + 1
    unimodular_monomial, // m e^{i gamma} z^n, m > 0
    half_binomial,       // gamma z^n + delta, |gamma| = |delta| = 1/2
    balanced_binomial,   // alpha z^n + beta, |alpha| = |beta|
    rotated_pair,        // P = e^{i gamma} F
};

inline std::string_view to_string(Hypothesis h);
inline std::string_view to_string(Family f);

struct ParamSchema
{
    bool a = false;
    AlphaDomain alpha = AlphaDomain::unused;
    bool beta = false;
    bool R = false;
    bool k = false;
    PointDomain z = PointDomain::exterior;
};

class HypothesisViolated : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Hypothesis could not be decided because a zero sits in the classification band.
class BoundaryAmbiguous : public HypothesisViolated
{
public:
    using HypothesisViolated::HypothesisViolated;
};

class TolValueUnreachable : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Every free variable of a displayed inequality. n is the degree class
/// (degree of P, or of F for dominated pairs).
struct InequalityInstance
{
    std::string entry;
    Polynomial p;
    std::optional<Polynomial> f;
    int n = 0;
    cplx a{};
    cplx alpha{};
    cplx beta{};
    double R = 1.0;
    cplx z{1.0, 0.0};
    double k = 1.0;
};

/// lhs and rhs = rhs_const + rhs_max * M + rhs_min * m, with M, m the circle extrema of P.
struct Sides
{
    double lhs = 0.0;
    double rhs_const = 0.0;
    double rhs_max = 0.0;
    double rhs_min = 0.0;
};

struct Verdict
{
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double scale = 1.0;
    /// Contribution of the extrema certificates to the pass threshold.
    double certificate = 0.0;
    bool pass = true;

    double relative_slack() const noexcept { return slack / scale; }
};

/// Deliberate corruptions used to confirm campaigns are not vacuous.
struct Mutation
{
    bool kappa_signed_alpha = false;
    bool drop_na_term = false;

    bool any() const noexcept { return kappa_signed_alpha || drop_na_term; }
};

struct InequalityEntry
{
    std::string id;
    std::string title;
    std::string citation;
    Hypothesis hypothesis = Hypothesis::unrestricted;
    Direction direction = Direction::le;
    ParamSchema params;
    Family family = Family::none;
    std::string note;
    std::function<Sides(const InequalityInstance&, const Mutation&)> sides;
};

struct CheckOptions
{
    double circle_tol = 1e-10;
    double slack_tol = kSlackTolerance;
    bool verify_hypothesis = true;
    Mutation mutation{};
};

namespace detail
{

/// Shared quantities for one instance, honouring a mutation.
class Terms
{
public:
    Terms(const InequalityInstance& in, const Mutation& mut) : in_(in), mut_(mut) {}

    int n() const noexcept { return in_.n; }
    cplx z() const noexcept { return in_.z; }
    double S() const { return smirnov_monomial_modulus(in_.n, in_.z); }
    double na() const { return in_.n * std::abs(in_.a); }
    double Rn() const { return std::pow(in_.R, in_.n); }
    double half_power() const { return std::pow((in_.R + 1.0) / 2.0, in_.n); }

    cplx kap() const
    {
        if (mut_.kappa_signed_alpha)
            return in_.beta * (half_power() - in_.alpha);
        return kappa(in_.alpha, in_.beta, in_.R, in_.n);
    }
    /// |R^n - alpha + kappa|
    double A() const { return std::abs(Rn() - in_.alpha + kap()); }
    /// |1 - alpha + kappa|
    double B() const { return std::abs(1.0 - in_.alpha + kap()); }

    Polynomial op(const Polynomial& q) const
    {
        const OperatorContext ctx(in_.a, in_.n);
        if (!mut_.drop_na_term)
            return modified_smirnov(q, ctx);
        // (1 + a z) Q'(z) only
        const Polynomial dq = derivative(q);
        return dq + in_.a * shift_up(dq);
    }
    cplx op_at(const Polynomial& q) const { return op(q)(in_.z); }

    /// S_a[Q_R](z) - alpha S_a[Q](z) + kappa S_a[Q](z)
    cplx composite(const Polynomial& q) const
    {
        return op_at(dilate(q, in_.R)) + (kap() - in_.alpha) * op_at(q);
    }

    const InequalityInstance& in() const noexcept { return in_; }

private:
    const InequalityInstance& in_;
    Mutation mut_;
};

inline Sides le_max(double lhs, double coef) { return {lhs, 0.0, coef, 0.0}; }
inline Sides ge_min(double lhs, double coef) { return {lhs, 0.0, 0.0, coef}; }
/// (1/2)[(X + Y) M - (X - Y) m]
inline Sides refined(double lhs, double X, double Y)
{
    return {lhs, 0.0, 0.5 * (X + Y), -0.5 * (X - Y)};
}

inline std::vector<InequalityEntry> build_registry()
{
    using T = Terms;
    std::vector<InequalityEntry> r;
    auto add = [&](InequalityEntry e) { r.push_back(std::move(e)); };
    const ParamSchema circle{.z = PointDomain::unit_circle};
    const ParamSchema circle_R{.R = true, .z = PointDomain::unit_circle};
    const ParamSchema circle_alpha_R{.alpha = AlphaDomain::disk, .R = true, .z = PointDomain::unit_circle};
    const ParamSchema circle_full{.alpha = AlphaDomain::disk, .beta = true, .R = true,
                                  .z = PointDomain::unit_circle};
    const ParamSchema ext_alpha_R{.alpha = AlphaDomain::disk, .R = true};
    const ParamSchema ext_a{.a = true};
    const ParamSchema ext_a_alpha_R{.a = true, .alpha = AlphaDomain::disk, .R = true};
    const ParamSchema ext_full{.a = true, .alpha = AlphaDomain::disk, .beta = true, .R = true};
    const ParamSchema ext_a_beta_R{.a = true, .beta = true, .R = true};
    const ParamSchema ext_a_beta{.a = true, .beta = true};
    const ParamSchema ext_alpha_beta_R{.alpha = AlphaDomain::disk, .beta = true, .R = true};

    const auto U = Hypothesis::unrestricted;
    const auto IN = Hypothesis::all_zeros_in_closed_disk;
    const auto OUT = Hypothesis::no_zeros_in_open_disk;
    const auto PAIR = Hypothesis::dominated_pair;
    const auto le = Direction::le;
    const auto ge = Direction::ge;

    // Classical baselines.
    add({"bernstein-1.1", "max|P'| <= n max|P|", "S. Bernstein", U, le,
         circle, Family::monomial, "pointwise on the circle, equivalent to the max form",
         [](const InequalityInstance& in, const Mutation&) {
             return le_max(std::abs(derivative(in.p)(in.z)), in.n);
         }});
    add({"maxmod-1.2", "max|P(Rz)| <= R^n max|P|", "maximum modulus principle", U, le, circle_R,
         Family::monomial, "pointwise on the circle",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return le_max(std::abs(in.p(in.R * in.z)), t.Rn());
         }});
    add({"aziz-dawood-3", "min|P'| >= n min|P|", "Aziz and Dawood", IN, ge, circle,
         Family::monomial, "pointwise on the circle, equivalent to the min form",
         [](const InequalityInstance& in, const Mutation&) {
             return ge_min(std::abs(derivative(in.p)(in.z)), in.n);
         }});
    add({"aziz-dawood-4", "min|P(Rz)| >= R^n min|P|", "Aziz and Dawood", IN, ge, circle_R,
         Family::monomial, "pointwise on the circle",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return ge_min(std::abs(in.p(in.R * in.z)), t.Rn());
         }});
    add({"erdos-lax-1.3", "max|P'| <= (n/2) max|P|", "Erdos (conjecture), Lax (proof)", OUT, le,
         circle, Family::balanced_binomial, "pointwise on the circle",
         [](const InequalityInstance& in, const Mutation&) {
             return le_max(std::abs(derivative(in.p)(in.z)), 0.5 * in.n);
         }});
    add({"ankeny-rivlin-1.4", "max|P(Rz)| <= ((R^n+1)/2) max|P|", "Ankeny and Rivlin", OUT, le,
         circle_R, Family::balanced_binomial, "pointwise on the circle",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return le_max(std::abs(in.p(in.R * in.z)), 0.5 * (t.Rn() + 1.0));
         }});
    add({"aziz-dawood-5", "max|P'| <= (n/2)(max|P| - min|P|)", "Aziz and Dawood, refinement of the Erdos-Lax bound",
         OUT, le, circle, Family::balanced_binomial, "pointwise on the circle",
         [](const InequalityInstance& in, const Mutation&) {
             return Sides{std::abs(derivative(in.p)(in.z)), 0.0, 0.5 * in.n, -0.5 * in.n};
         }});
    add({"aziz-dawood-6", "max|P(Rz)| <= ((R^n+1)/2) max|P| - ((R^n-1)/2) min|P|",
         "Aziz and Dawood, refinement of the Ankeny-Rivlin bound", OUT, le, circle_R, Family::balanced_binomial,
         "pointwise on the circle",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return Sides{std::abs(in.p(in.R * in.z)), 0.0, 0.5 * (t.Rn() + 1.0), -0.5 * (t.Rn() - 1.0)};
         }});
    add({"aziz-rather-1.5", "|P(Rz) - alpha P(z)| <= |R^n - alpha| |z|^n max|P|",
         "Aziz and Rather, any complex alpha with |alpha| <= 1", U, le, ext_alpha_R,
         Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const double lhs = std::abs(in.p(in.R * in.z) - in.alpha * in.p(in.z));
             return le_max(lhs, std::abs(t.Rn() - in.alpha) * std::pow(std::abs(in.z), in.n));
         }});
    add({"aziz-rather-1.6", "|P(Rz) - alpha P(z)| <= (1/2){|R^n - alpha||z|^n + |1 - alpha|} max|P|",
         "Aziz and Rather, sharp for z^n + 1", OUT, le, ext_alpha_R, Family::zn_plus_one, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const double lhs = std::abs(in.p(in.R * in.z) - in.alpha * in.p(in.z));
             return le_max(lhs, 0.5 * (std::abs(t.Rn() - in.alpha) * std::pow(std::abs(in.z), in.n) +
                                       std::abs(1.0 - in.alpha)));
         }});
    add({"aziz-rather-7", "min|P(Rz) - alpha P(z)| >= |R^n - alpha| min|P|",
         "Aziz and Rather, sharp for m e^{i gamma} z^n", IN, ge, circle_alpha_R,
         Family::unimodular_monomial, "pointwise on the circle, equivalent to the min form",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const double lhs = std::abs(in.p(in.R * in.z) - in.alpha * in.p(in.z));
             return ge_min(lhs, std::abs(t.Rn() - in.alpha));
         }});
    add({"aziz-rather-8",
         "|P(Rz) - alpha P(z)| <= (1/2)[{|R^n-alpha| + |1-alpha|} max|P| - {|R^n-alpha| - |1-alpha|} min|P|]",
         "Aziz and Rather, sharp for gamma z^n + delta", OUT, le, circle_alpha_R, Family::half_binomial,
         "evaluated on the unit circle",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const double lhs = std::abs(in.p(in.R * in.z) - in.alpha * in.p(in.z));
             return refined(lhs, std::abs(t.Rn() - in.alpha), std::abs(1.0 - in.alpha));
         }});
    add({"bernstein-thmA", "|P'(z)| <= |F'(z)|", "Bernstein, dominated pair with deg P <= deg F",
         PAIR, le, ParamSchema{}, Family::rotated_pair, "",
         [](const InequalityInstance& in, const Mutation&) {
             return Sides{std::abs(derivative(in.p)(in.z)), std::abs(derivative(*in.f)(in.z)), 0.0, 0.0};
         }});
    add({"smirnov-thmB-1.7", "|S_alpha[P](z)| <= |S_alpha[F](z)|, alpha in closure of Omega_|z|",
         "Smirnov, alpha in the closure of Omega_|z|", PAIR, le,
         ParamSchema{.alpha = AlphaDomain::omega}, Family::rotated_pair, "",
         [](const InequalityInstance& in, const Mutation&) {
             const double lhs = std::abs(smirnov_alpha(in.p, in.alpha, in.n)(in.z));
             const double rhs = std::abs(smirnov_alpha(*in.f, in.alpha, in.n)(in.z));
             return Sides{lhs, rhs, 0.0, 0.0};
         }});
    add({"shah-fatima-1.9", "|S_a[P](z)| <= M |S_a[z^n]| = M n |z|^{n-1}",
         "Shah and Fatima, modified Smirnov operator", U, le, ext_a, Family::monomial,
         "operator form and its expanded n|z|^{n-1} form",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return le_max(std::abs(t.op_at(in.p)), t.S());
         }});
    add({"shah-fatima-1.11", "|S_a[P](z)| <= (1/2){n|z|^{n-1} + n|a|} max|P|",
         "Shah and Fatima, zeros outside the open disk", OUT, le, ext_a, Family::zn_plus_one,
         "operator form and its expanded form",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return le_max(std::abs(t.op_at(in.p)), 0.5 * (t.S() + t.na()));
         }});
    add({"shah-fatima-9", "|S_a[P](z)| >= |S_a[z^n]| min|P|",
         "Shah and Fatima, lower bound for zeros in the closed disk", IN, ge, ext_a, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return ge_min(std::abs(t.op_at(in.p)), t.S());
         }});
    add({"shah-fatima-10",
         "|S_a[P](z)| <= (1/2){|S_a[z^n]| + n|a|} max|P| - (1/2){|S_a[z^n]| - n|a|} min|P|",
         "Shah and Fatima, refined upper bound", OUT, le, ext_a, Family::zn_plus_one, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return refined(std::abs(t.op_at(in.p)), t.S(), t.na());
         }});
    add({"wani-liman-1.12", "|S_a[P](Rz) - alpha S_a[P](z)| <= |R^n - alpha| |S_a[z^n]| max|P|",
         "Wani and Liman, sharp for lambda z^n", U, le, ext_a_alpha_R, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx v = t.op_at(dilate(in.p, in.R)) - in.alpha * t.op_at(in.p);
             return le_max(std::abs(v), std::abs(t.Rn() - in.alpha) * t.S());
         }});
    add({"wani-liman-1.13",
         "|S_a[P](Rz) - alpha S_a[P](z)| <= (1/2){|R^n - alpha||S_a[z^n]| + n|1 - alpha||a|} max|P|",
         "Wani and Liman, zeros outside the open disk", OUT, le, ext_a_alpha_R,
         Family::zn_plus_one, "lambda z^n lies outside the hypothesis class; z^n + 1 is the extremal family",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx v = t.op_at(dilate(in.p, in.R)) - in.alpha * t.op_at(in.p);
             return le_max(std::abs(v), 0.5 * (std::abs(t.Rn() - in.alpha) * t.S() +
                                               std::abs(1.0 - in.alpha) * t.na()));
         }});
    add({"dewan-hans-C-1.14", "min|P(Rz) - alpha P(z) + kappa P(z)| >= |R^n - alpha + kappa| min|P|",
         "Dewan and Hans, sharp for m e^{i gamma} z^n, m > 0", IN, ge, circle_full,
         Family::unimodular_monomial,
         "checked as >=; the <= reading fails for P = z - 0.5, R = 2 and contradicts the equality case",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx v = in.p(in.R * in.z) + (t.kap() - in.alpha) * in.p(in.z);
             return ge_min(std::abs(v), t.A());
         }});
    add({"dewan-hans-D-1.15",
         "|P(Rz) - alpha P(z) + kappa P(z)| <= (1/2)[{A + B} max|P| - {A - B} min|P|]",
         "Dewan and Hans, P nonvanishing in the open disk", OUT, le, circle_full, Family::half_binomial,
         "evaluated on the unit circle; A = |R^n - alpha + kappa|, B = |1 - alpha + kappa|",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx v = in.p(in.R * in.z) + (t.kap() - in.alpha) * in.p(in.z);
             return refined(std::abs(v), t.A(), t.B());
         }});

    // Main results.
    add({"thm1-2.1", "|S_a[P_R] - alpha S_a[P] + kappa S_a[P]| >= |R^n - alpha + kappa| |S_a[z^n]| min|P|",
         "main lower bound, sharp for lambda z^n", IN, ge, ext_full, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return ge_min(std::abs(t.composite(in.p)), t.A() * t.S());
         }});
    add({"remark1-a0",
         "|R P'(Rz) - alpha P'(z) + kappa P'(z)| >= |R^n - alpha + kappa| n |z|^{n-1} min|P|",
         "main lower bound at a = 0", IN, ge, ext_alpha_beta_R, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const Polynomial dp = derivative(in.p);
             const cplx v = in.R * dp(in.R * in.z) - in.alpha * dp(in.z) + t.kap() * dp(in.z);
             return ge_min(std::abs(v), t.A() * in.n * std::pow(std::abs(in.z), in.n - 1));
         }});
    add({"cor-thm1-beta0", "|S_a[P_R] - alpha S_a[P]| >= |R^n - alpha| |S_a[z^n]| min|P|",
         "main lower bound at beta = 0", IN, ge, ext_a_alpha_R, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx v = t.op_at(dilate(in.p, in.R)) - in.alpha * t.op_at(in.p);
             return ge_min(std::abs(v), std::abs(t.Rn() - in.alpha) * t.S());
         }});
    add({"cor-thm1-alpha0",
         "|S_a[P_R] + beta ((R+1)/2)^n S_a[P]| >= |R^n + beta ((R+1)/2)^n| |S_a[z^n]| min|P|",
         "main lower bound at alpha = 0", IN, ge, ext_a_beta_R, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx c = in.beta * t.half_power();
             const cplx v = t.op_at(dilate(in.p, in.R)) + c * t.op_at(in.p);
             return ge_min(std::abs(v), std::abs(t.Rn() + c) * t.S());
         }});
    add({"cor-2.2", "|z S_a[P'] + (n/2) beta S_a[P] + P'| >= n |1 + beta/2| |S_a[z^n]| min|P|",
         "limit of the main lower bound at alpha = 1 as R -> 1", IN, ge, ext_a_beta, Family::monomial,
         "inner operator on P' uses degree class n - 1",
         [](const InequalityInstance& in, const Mutation&) {
             const OperatorContext ctx(in.a, in.n);
             const cplx v = corollary_limit_lhs(in.p, ctx, in.beta)(in.z);
             return ge_min(std::abs(v), in.n * std::abs(1.0 + 0.5 * in.beta) *
                                            smirnov_monomial_modulus(in.n, in.z));
         }});
    add({"thm2-2.3",
         "|S_a[P_R] - alpha S_a[P] + kappa S_a[P]| <= (1/2)[{A|S_a[z^n]| + B n|a|} max|P| - {A|S_a[z^n]| - B n|a|} min|P|]",
         "main upper bound, sharp for z^n + 1", OUT, le, ext_full, Family::zn_plus_one,
         "A = |R^n - alpha + kappa|, B = |1 - alpha + kappa|",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return refined(std::abs(t.composite(in.p)), t.A() * t.S(), t.B() * t.na());
         }});
    add({"cor-thm2-beta0",
         "|S_a[P_R] - alpha S_a[P]| <= (1/2)[{|R^n-alpha||S_a[z^n]| + |1-alpha| n|a|} M - {...} m]",
         "main upper bound at beta = 0", OUT, le, ext_a_alpha_R, Family::zn_plus_one, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx v = t.op_at(dilate(in.p, in.R)) - in.alpha * t.op_at(in.p);
             return refined(std::abs(v), std::abs(t.Rn() - in.alpha) * t.S(),
                            std::abs(1.0 - in.alpha) * t.na());
         }});
    add({"cor-thm2-alpha0",
         "|S_a[P_R] + beta c S_a[P]| <= (1/2)[{|R^n + beta c||S_a[z^n]| + |1 + beta c| n|a|} M - {...} m], c = ((R+1)/2)^n",
         "main upper bound at alpha = 0", OUT, le, ext_a_beta_R, Family::zn_plus_one,
         "min term uses |1 + beta c|, the alpha = 0 specialisation of the parent bound",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const cplx c = in.beta * t.half_power();
             const cplx v = t.op_at(dilate(in.p, in.R)) + c * t.op_at(in.p);
             return refined(std::abs(v), std::abs(t.Rn() + c) * t.S(), std::abs(1.0 + c) * t.na());
         }});
    add({"cor-2.4",
         "|z S_a[P'] + (n/2) beta S_a[P] + P'| <= (n/2)[{|1+beta/2||S_a[z^n]| + (n/2)|beta||a|} M - {...} m]",
         "limit of the main upper bound at alpha = 1 as R -> 1", OUT, le, ext_a_beta, Family::zn_plus_one,
         "R-free",
         [](const InequalityInstance& in, const Mutation&) {
             const OperatorContext ctx(in.a, in.n);
             const cplx v = corollary_limit_lhs(in.p, ctx, in.beta)(in.z);
             const double S = smirnov_monomial_modulus(in.n, in.z);
             const double X = std::abs(1.0 + 0.5 * in.beta) * S;
             const double Y = 0.5 * in.n * std::abs(in.beta) * std::abs(in.a);
             return Sides{std::abs(v), 0.0, 0.5 * in.n * (X + Y), -0.5 * in.n * (X - Y)};
         }});

    // Auxiliary bounds.
    add({"lemma1-3.1", "|P(Rz)| >= ((R+k)/(1+k))^n |P(z)| on |z| = 1", "growth lemma, zeros in |z| <= k",
         Hypothesis::all_zeros_in_radius_k, ge, ParamSchema{.R = true, .k = true, .z = PointDomain::unit_circle},
         Family::monomial, "monomial family is sharp at k = 0",
         [](const InequalityInstance& in, const Mutation&) {
             const double c = std::pow((in.R + in.k) / (1.0 + in.k), in.n);
             return Sides{std::abs(in.p(in.R * in.z)), c * std::abs(in.p(in.z)), 0.0, 0.0};
         }});
    add({"lemma3-3.2", "|composite of P| <= |composite of F| for a dominated pair",
         "dominated pair under the composite operator, deg P <= deg F", PAIR, le, ext_full, Family::rotated_pair, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             return Sides{std::abs(t.composite(in.p)), std::abs(t.composite(*in.f)), 0.0, 0.0};
         }});
    add({"lemma4-3.3", "|composite of P| + |composite of Q| <= [A |S_a[z^n]| + B n|a|] max|P|",
         "sum bound with Q(z) = z^n conj(P(1/conj z))", U, le, ext_full, Family::monomial, "",
         [](const InequalityInstance& in, const Mutation& m) {
             T t(in, m);
             const Polynomial q = conjugate_reciprocal(in.p, in.n);
             const double lhs = std::abs(t.composite(in.p)) + std::abs(t.composite(q));
             return le_max(lhs, t.A() * t.S() + t.B() * t.na());
         }});
    return r;
}

} // namespace detail

inline const std::vector<InequalityEntry>& registry()
{
    static const std::vector<InequalityEntry> entries = detail::build_registry();
    return entries;
}

inline const InequalityEntry& find_entry(std::string_view id)
{
    for (const auto& e : registry())
        if (e.id == id)
            return e;
    throw DomainError("unknown inequality id: " + std::string(id));
}

inline std::string_view to_string(Hypothesis h)
{
    switch (h) {
    case Hypothesis::all_zeros_in_closed_disk: return "AllZerosInClosedDisk";
    case Hypothesis::no_zeros_in_open_disk: return "NoZerosInOpenDisk";
    case Hypothesis::dominated_pair: return "DominatedPair";
    case Hypothesis::unrestricted: return "Unrestricted";
    case Hypothesis::all_zeros_in_radius_k: return "AllZerosInRadiusK";
    }
    return "?";
}

inline std::string_view to_string(Family f)
{
    switch (f) {
    case Family::none: return "none";
    case Family::monomial: return "lambda z^n";
    case Family::zn_plus_one: return "z^n + 1";
    case Family::unimodular_monomial: return "m e^{i gamma} z^n";
    case Family::half_binomial: return "gamma z^n + delta, |gamma| = |delta| = 1/2";
    case Family::balanced_binomial: return "alpha z^n + beta, |alpha| = |beta|";
    case Family::rotated_pair: return "P = e^{i gamma} F";
    }
    return "?";
}

/// Rejects parameters outside the entry's domain.
inline void validate_params(const InequalityEntry& e, const InequalityInstance& in)
{
    const ParamSchema& s = e.params;
    if (in.n < 1)
        throw DomainError("degree class must be at least 1");
    if (in.n < in.p.degree())
        throw DomainError("degree class below the degree of P");
    if (s.a)
        (void)OperatorContext(in.a, in.n);
    if (s.alpha == AlphaDomain::disk && std::abs(in.alpha) > 1.0 + kUnitTolerance)
        throw DomainError("|alpha| must not exceed 1");
    if (s.alpha == AlphaDomain::omega && !omega_contains(OmegaRegion(std::abs(in.z)), in.alpha))
        throw DomainError("alpha is outside the closure of Omega_|z|");
    if (s.beta && std::abs(in.beta) > 1.0 + kUnitTolerance)
        throw DomainError("|beta| must not exceed 1");
    if (s.R && !(in.R >= 1.0))
        throw DomainError("R must be at least 1");
    if (s.k && !(in.k > 0.0 && in.k <= 1.0))
        throw DomainError("k must lie in (0, 1]");
    (void)EvaluationPoint(in.z, s.z == PointDomain::unit_circle ? Region::on_unit_circle
                                                               : Region::outside_open_disk);
    if (e.hypothesis == Hypothesis::dominated_pair) {
        if (!in.f)
            throw DomainError("dominated-pair entries need F");
        if (in.f->degree() != in.n)
            throw DomainError("degree class must equal deg F");
    } else if (in.p.degree() != in.n) {
        throw DomainError("degree class must equal deg P");
    }
}

/// Verifies the entry's zero-location hypothesis for the instance.
inline void verify_hypothesis(const InequalityEntry& e, const InequalityInstance& in, double circle_tol)
{
    auto classify = [](const Polynomial& q) { return classify_zeros(q); };
    switch (e.hypothesis) {
    case Hypothesis::unrestricted:
        return;
    case Hypothesis::all_zeros_in_closed_disk: {
        const ZeroLocation loc = classify(in.p);
        if (loc.boundary_flag)
            throw BoundaryAmbiguous("a zero of P lies in the classification band");
        if (!loc.all_in_closed_disk)
            throw HypothesisViolated("P has a zero outside the closed unit disk");
        return;
    }
    case Hypothesis::no_zeros_in_open_disk: {
        const ZeroLocation loc = classify(in.p);
        if (loc.boundary_flag)
            throw BoundaryAmbiguous("a zero of P lies in the classification band");
        if (!loc.none_in_open_disk)
            throw HypothesisViolated("P has a zero in the open unit disk");
        return;
    }
    case Hypothesis::all_zeros_in_radius_k: {
        const ZeroLocation loc = classify(in.p);
        if (!loc.all_within(in.k))
            throw HypothesisViolated("P has a zero outside |z| <= k");
        return;
    }
    case Hypothesis::dominated_pair: {
        const ZeroLocation loc = classify(*in.f);
        if (loc.boundary_flag)
            throw BoundaryAmbiguous("a zero of F lies in the classification band");
        if (!loc.all_in_closed_disk)
            throw HypothesisViolated("F has a zero outside the closed unit disk");
        if (in.p.degree() > in.f->degree())
            throw HypothesisViolated("deg P exceeds deg F");
        if (certified_max_ratio(in.p, *in.f, std::max(circle_tol, 1e-9)) > 1.0 + 1e-9)
            throw HypothesisViolated("|P| exceeds |F| somewhere on the unit circle");
        return;
    }
    }
}

inline Verdict make_verdict(Direction dir, double lhs, double rhs, double certificate, double slack_tol)
{
    Verdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = dir == Direction::le ? rhs - lhs : lhs - rhs;
    v.scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    v.certificate = certificate;
    v.pass = v.slack >= -(slack_tol * v.scale + certificate);
    return v;
}

inline void require_certified(const CircleExtrema& ex)
{
    if (!ex.max.certified || !ex.min.certified)
        throw TolValueUnreachable("circle extrema did not reach the requested tolerance");
}

/// Both sides of the entry at the instance. `ex` must hold the circle extrema of P when the
/// right-hand side needs them; when null they are computed on demand.
inline Verdict evaluate(const InequalityEntry& e, const InequalityInstance& in, const CheckOptions& opt,
                        const CircleExtrema* ex)
{
    const Sides s = e.sides(in, opt.mutation);
    double rhs = s.rhs_const;
    double certificate = 0.0;
    if (s.rhs_max != 0.0 || s.rhs_min != 0.0) {
        CircleExtrema own;
        if (!ex) {
            own = certified_extrema(in.p, opt.circle_tol);
            ex = &own;
        }
        require_certified(*ex);
        rhs += s.rhs_max * ex->max.value + s.rhs_min * ex->min.value;
        certificate = std::abs(s.rhs_max) * ex->max.error_bound + std::abs(s.rhs_min) * ex->min.error_bound;
    }
    return make_verdict(e.direction, s.lhs, rhs, certificate, opt.slack_tol);
}

inline Verdict evaluate(const InequalityEntry& e, const InequalityInstance& in, const CheckOptions& opt)
{
    return evaluate(e, in, opt, nullptr);
}

/**
 * Checks one instance: validates the parameter domain, verifies the
 * hypothesis (unless disabled for extremal families), evaluates both
 * sides and returns the verdict.
 */
inline Verdict check(const InequalityInstance& in, const CheckOptions& opt = {})
{
    const InequalityEntry& e = find_entry(in.entry);
    validate_params(e, in);
    if (opt.verify_hypothesis)
        verify_hypothesis(e, in, opt.circle_tol);
    return evaluate(e, in, opt);
}

} // namespace smirnov

#endif
