#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <smirnov/circle.hpp>
#include <smirnov/roots.hpp>
#include <smirnov/rng.hpp>

using namespace smirnov;
using Catch::Matchers::WithinAbs;

namespace
{

struct Sweep
{
    double max = 0.0;
    double min = 1e300;
};

Sweep brute_force(const Polynomial& p, std::size_t samples)
{
    Sweep s;
    for (std::size_t i = 0; i < samples; ++i) {
        const double m = std::abs(p(std::polar(1.0, 2.0 * std::numbers::pi * i / samples)));
        s.max = std::max(s.max, m);
        s.min = std::min(s.min, m);
    }
    return s;
}

Polynomial random_poly(Rng& rng, int n)
{
    std::vector<cplx> c;
    for (int k = 0; k <= n; ++k)
        c.push_back({rng.normal(), rng.normal()});
    return Polynomial(c);
}

} // namespace

TEST_CASE("z^2 + 1 has extrema 2 and 0", "[circle]")
{
    const CircleExtrema e = certified_extrema(Polynomial{1.0, 0.0, 1.0});
    CHECK(e.max.certified);
    CHECK(e.min.certified);
    CHECK_THAT(e.max.value, WithinAbs(2.0, 1e-8));
    CHECK_THAT(e.min.value, WithinAbs(0.0, 1e-8));
}

TEST_CASE("monomials and constants are flat on the circle", "[circle]")
{
    for (int n = 0; n <= 12; ++n) {
        const CircleExtrema e = certified_extrema(Polynomial::monomial(n, cplx{0.0, 3.0}));
        CHECK_THAT(e.max.value, WithinAbs(3.0, 1e-9));
        CHECK_THAT(e.min.value, WithinAbs(3.0, 1e-9));
    }
    CHECK(certified_max_modulus(Polynomial{}).value == 0.0);
    CHECK_THROWS_AS(certified_max_modulus(Polynomial{1.0, 1.0}, 0.0), DomainError);
}

TEST_CASE("certified extrema bracket a dense sweep", "[circle]")
{
    Rng rng(41);
    constexpr std::size_t N = 100000;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.integer(1, 12);
        const Polynomial p = random_poly(rng, n);
        const CircleExtrema e = certified_extrema(p);
        REQUIRE(e.max.certified);
        REQUIRE(e.min.certified);
        const Sweep s = brute_force(p, N);
        // a sweep point undershoots the true max by at most n M h / 2
        const double grid_err = n * e.max.upper() * std::numbers::pi / N;
        CHECK(s.max <= e.max.upper() * (1.0 + 1e-12));
        CHECK(s.max >= e.max.value - grid_err);
        CHECK(s.min >= e.min.lower() - 1e-12 * e.max.value);
        CHECK(s.min <= e.min.value + grid_err);
        // reported values are attained
        CHECK_THAT(std::abs(p(std::polar(1.0, e.max.theta))), WithinAbs(e.max.value, 1e-12 * e.max.value));
        CHECK_THAT(std::abs(p(std::polar(1.0, e.min.theta))), WithinAbs(e.min.value, 1e-12 * e.max.value));
    }
}

TEST_CASE("minimum near a zero on the circle is certified in absolute terms", "[circle]")
{
    // one root exactly on the circle, the rest inside
    const Polynomial p = from_roots(std::vector<cplx>{std::polar(1.0, 0.9), 0.3, cplx{0.0, -0.5}});
    const CircleExtrema e = certified_extrema(p);
    CHECK(e.min.certified);
    CHECK(e.min.value <= 1e-8 * e.max.value);
    CHECK_THAT(e.min.theta, WithinAbs(0.9, 1e-3));
}

TEST_CASE("extrema are rotation and scale invariant", "[circle]")
{
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.integer(1, 10);
        const Polynomial p = random_poly(rng, n);
        const double s = rng.uniform(0.1, 10.0);
        const double phi = rng.angle();
        // P(e^{i phi} z) has the same extrema; so does s P up to the factor s
        std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] *= std::polar(s, phi * k);
        const CircleExtrema a = certified_extrema(p), b = certified_extrema(Polynomial(c));
        CHECK_THAT(b.max.value, WithinAbs(s * a.max.value, 1e-9 * s * a.max.value));
        CHECK_THAT(b.min.value, WithinAbs(s * a.min.value, 1e-9 * s * a.max.value));
    }
}

TEST_CASE("conjugate reciprocal shares the circle extrema", "[circle]")
{
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.integer(1, 10);
        const Polynomial p = random_poly(rng, n);
        const CircleExtrema a = certified_extrema(p), b = certified_extrema(conjugate_reciprocal(p, n));
        CHECK_THAT(b.max.value, WithinAbs(a.max.value, 1e-9 * a.max.value));
        CHECK_THAT(b.min.value, WithinAbs(a.min.value, 1e-9 * a.max.value));
    }
}

TEST_CASE("max ratio bounds the sampled ratio from above", "[circle]")
{
    Rng rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.integer(1, 8);
        std::vector<cplx> fr;
        for (int i = 0; i < n; ++i)
            fr.push_back(rng.disk(0.9));
        const Polynomial f = from_roots(fr);
        const Polynomial p = random_poly(rng, rng.integer(0, n));
        const double bound = certified_max_ratio(p, f);
        REQUIRE(std::isfinite(bound));
        double sampled = 0.0;
        for (int i = 0; i < 20000; ++i) {
            const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * i / 20000.0);
            sampled = std::max(sampled, std::abs(p(z)) / std::abs(f(z)));
        }
        CHECK(sampled <= bound);
        CHECK(bound <= sampled * (1.0 + 1e-3));
    }
    // F vanishing on the circle cannot be separated from zero
    CHECK(std::isinf(certified_max_ratio(Polynomial{1.0}, Polynomial{-1.0, 1.0})));
}

TEST_CASE("z^n + c has minimum |c| - 1", "[circle]")
{
    for (int n = 1; n <= 8; ++n) {
        const cplx c = std::polar(1.7, 0.4 * n);
        std::vector<cplx> co(static_cast<std::size_t>(n) + 1, cplx{});
        co[0] = c;
        co.back() = 1.0;
        const CircleExtrema e = certified_extrema(Polynomial(co));
        CHECK_THAT(e.min.value, WithinAbs(0.7, 1e-9 + e.min.error_bound));
        CHECK_THAT(e.max.value, WithinAbs(2.7, 1e-9 + e.max.error_bound));
    }
    const CircleExtrema e = certified_extrema(Polynomial{1.0, 0.0, 1.0});
    CHECK_THAT(std::abs(std::cos(e.max.theta)), WithinAbs(1.0, 1e-8));
    CHECK_THAT(std::abs(std::cos(e.min.theta)), WithinAbs(0.0, 1e-8));
    CHECK(e.max.error_bound <= 2e-8);
}
