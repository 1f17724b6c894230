#ifndef SMIRNOV_POLYNOMIAL_HPP
#define SMIRNOV_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smirnov
{

using cplx = std::complex<double>;

/// Relative threshold below which a leading coefficient is dropped.
inline constexpr double kTrimTolerance = 1e-12;

class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Univariate polynomial with double-precision complex coefficients,
 * stored in ascending powers (coeffs()[k] multiplies z^k).
 *
 * Every constructed value is trimmed: trailing coefficients whose modulus
 * is at most kTrimTolerance times the largest coefficient modulus are
 * removed. The zero polynomial is the single coefficient 0.
 *
 * Values are immutable; all operations return new polynomials.
 */
class Polynomial
{
public:
    Polynomial() : coeffs_{cplx{0.0, 0.0}} {}

    explicit Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    Polynomial(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(cplx c) { return Polynomial(std::vector<cplx>{c}); }

    /// lambda * z^n
    static Polynomial monomial(int n, cplx lambda = 1.0)
    {
        if (n < 0)
            throw DomainError("monomial degree must be nonnegative");
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{});
        c.back() = lambda;
        return Polynomial(std::move(c));
    }

    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == cplx{}; }
    cplx leading() const noexcept { return coeffs_.back(); }

    /// Coefficient of z^k, zero beyond the stored degree.
    cplx operator[](int k) const noexcept
    {
        return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : cplx{};
    }

    double max_coeff_modulus() const noexcept
    {
        double m = 0.0;
        for (const auto& c : coeffs_)
            m = std::max(m, std::abs(c));
        return m;
    }

    /// Horner evaluation.
    cplx operator()(cplx z) const noexcept
    {
        cplx acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    /// Coefficients padded with zeros to length n + 1 (degree class n).
    std::vector<cplx> padded(int n) const
    {
        if (n < degree())
            throw DomainError("degree class " + std::to_string(n) +
                              " is smaller than the polynomial degree " + std::to_string(degree()));
        std::vector<cplx> c(coeffs_);
        c.resize(static_cast<std::size_t>(n) + 1, cplx{});
        return c;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        if (coeffs_.empty()) {
            coeffs_.push_back(cplx{});
            return;
        }
        const double scale = max_coeff_modulus();
        while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= kTrimTolerance * scale)
            coeffs_.pop_back();
        if (coeffs_.size() == 1 && std::abs(coeffs_[0]) == 0.0)
            coeffs_[0] = cplx{};
    }

    std::vector<cplx> coeffs_;
};

inline cplx eval(const Polynomial& p, cplx z) noexcept { return p(z); }

inline Polynomial derivative(const Polynomial& p)
{
    if (p.degree() == 0)
        return Polynomial{};
    std::vector<cplx> d(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * p[k];
    return Polynomial(std::move(d));
}

/// z -> P(R z). Values of R in (0, 1) are accepted.
inline Polynomial dilate(const Polynomial& p, double R)
{
    if (!(R > 0.0))
        throw DomainError("dilation factor must be positive");
    std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
    double rk = 1.0;
    for (auto& ck : c) {
        ck *= rk;
        rk *= R;
    }
    return Polynomial(std::move(c));
}

/// Q(z) = z^n conj(P(1/conj(z))): coefficients of degree class n reversed and conjugated.
inline Polynomial conjugate_reciprocal(const Polynomial& p, int n)
{
    auto c = p.padded(n);
    std::reverse(c.begin(), c.end());
    for (auto& ck : c)
        ck = std::conj(ck);
    return Polynomial(std::move(c));
}

inline Polynomial conjugate_reciprocal(const Polynomial& p)
{
    return conjugate_reciprocal(p, p.degree());
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
    const int n = std::max(p.degree(), q.degree());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = p[k] + q[k];
    return Polynomial(std::move(c));
}

inline Polynomial operator*(cplx s, const Polynomial& p)
{
    std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& ck : c)
        ck *= s;
    return Polynomial(std::move(c));
}

inline Polynomial operator*(const Polynomial& p, cplx s) { return s * p; }
inline Polynomial operator-(const Polynomial& p) { return cplx{-1.0, 0.0} * p; }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

inline Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    std::vector<cplx> c(static_cast<std::size_t>(p.degree() + q.degree()) + 1, cplx{});
    for (int i = 0; i <= p.degree(); ++i)
        for (int j = 0; j <= q.degree(); ++j)
            c[static_cast<std::size_t>(i + j)] += p[i] * q[j];
    return Polynomial(std::move(c));
}

inline Polynomial scale(const Polynomial& p, cplx s) { return s * p; }

/// z * P(z)
inline Polynomial shift_up(const Polynomial& p)
{
    std::vector<cplx> c;
    c.reserve(p.coeffs().size() + 1);
    c.push_back(cplx{});
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(c));
}

/// Largest coefficientwise difference relative to the larger coefficient scale.
inline double relative_distance(const Polynomial& p, const Polynomial& q)
{
    const int n = std::max(p.degree(), q.degree());
    double diff = 0.0;
    for (int k = 0; k <= n; ++k)
        diff = std::max(diff, std::abs(p[k] - q[k]));
    const double s = std::max({p.max_coeff_modulus(), q.max_coeff_modulus(), 1e-300});
    return diff / s;
}

/// Region tag for a point at which an inequality is evaluated.
enum class Region { on_unit_circle, outside_open_disk, general };

class EvaluationPoint
{
public:
    static constexpr double kTolerance = 1e-12;

    EvaluationPoint(cplx z, Region region) : z_(z), region_(region)
    {
        const double r = std::abs(z);
        if (region == Region::on_unit_circle && std::abs(r - 1.0) > kTolerance)
            throw DomainError("point is not on the unit circle");
        if (region == Region::outside_open_disk && r < 1.0 - kTolerance)
            throw DomainError("point lies inside the open unit disk");
    }

    cplx z() const noexcept { return z_; }
    Region region() const noexcept { return region_; }

private:
    cplx z_;
    Region region_;
};

} // namespace smirnov

#endif
