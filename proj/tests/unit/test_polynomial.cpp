#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <smirnov/polynomial.hpp>
#include <smirnov/rng.hpp>

using namespace smirnov;
using Catch::Matchers::WithinAbs;

namespace
{

// Power-sum evaluation, independent of Horner.
cplx naive_eval(const Polynomial& p, cplx z)
{
    cplx s{};
    for (int k = 0; k <= p.degree(); ++k)
        s += p[k] * std::pow(z, k);
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

TEST_CASE("trimming removes negligible leading coefficients", "[polynomial]")
{
    const Polynomial p{1.0, 2.0, 1e-14};
    CHECK(p.degree() == 1);
    CHECK(Polynomial{0.0, 0.0}.is_zero());
    CHECK(Polynomial{}.degree() == 0);
    CHECK(Polynomial::monomial(5, 2.0).degree() == 5);
    CHECK_THROWS_AS(Polynomial::monomial(-1), DomainError);
}

TEST_CASE("horner agrees with power sums", "[polynomial]")
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_poly(rng, rng.integer(0, 15));
        const cplx z = rng.disk(1.5);
        const cplx a = p(z), b = naive_eval(p, z);
        CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)) * (p.degree() + 1));
    }
}

TEST_CASE("derivative matches a central difference", "[polynomial]")
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_poly(rng, rng.integer(1, 10));
        const cplx z = rng.disk();
        const double h = 1e-6;
        const cplx fd = (p(z + h) - p(z - h)) / (2.0 * h);
        const cplx d = derivative(p)(z);
        CHECK(std::abs(d - fd) <= 1e-6 * (1.0 + std::abs(d)));
    }
    CHECK(derivative(Polynomial::constant(3.0)).is_zero());
}

TEST_CASE("dilation evaluates P at R z", "[polynomial]")
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_poly(rng, rng.integer(0, 10));
        const double R = rng.uniform(1.0, 3.0);
        const cplx z = rng.unit();
        CHECK(std::abs(dilate(p, R)(z) - p(R * z)) <= 1e-10 * (1.0 + std::abs(p(R * z))));
    }
}

TEST_CASE("conjugate reciprocal has equal modulus on the circle and is an involution", "[polynomial]")
{
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 12);
        const Polynomial p = random_poly(rng, n);
        const Polynomial q = conjugate_reciprocal(p, n);
        const cplx z = rng.unit();
        CHECK_THAT(std::abs(q(z)), WithinAbs(std::abs(p(z)), 1e-10 * (1.0 + std::abs(p(z)))));
        CHECK(relative_distance(conjugate_reciprocal(q, n), p) <= 1e-15);
    }
    // degree class above the actual degree pads with zeros: z^2 conj(1 + z) at n = 2 is z^2 + z
    const Polynomial q = conjugate_reciprocal(Polynomial{1.0, 1.0}, 2);
    CHECK(q.degree() == 2);
    CHECK(q[0] == cplx{});
}

TEST_CASE("ring operations match pointwise values", "[polynomial]")
{
    Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_poly(rng, rng.integer(0, 8));
        const Polynomial q = random_poly(rng, rng.integer(0, 8));
        const cplx z = rng.disk(1.2);
        const cplx s{rng.normal(), rng.normal()};
        const double tol = 1e-11 * (1.0 + std::abs(p(z)) * (1.0 + std::abs(q(z))));
        CHECK(std::abs((p + q)(z) - (p(z) + q(z))) <= tol);
        CHECK(std::abs((p - q)(z) - (p(z) - q(z))) <= tol);
        CHECK(std::abs((p * q)(z) - p(z) * q(z)) <= tol);
        CHECK(std::abs((s * p)(z) - s * p(z)) <= tol * (1.0 + std::abs(s)));
        CHECK(std::abs(shift_up(p)(z) - z * p(z)) <= tol);
    }
}

TEST_CASE("evaluation points validate their region", "[polynomial]")
{
    CHECK_NOTHROW(EvaluationPoint({0.6, 0.8}, Region::on_unit_circle));
    CHECK_THROWS_AS(EvaluationPoint({0.6, 0.81}, Region::on_unit_circle), DomainError);
    CHECK_NOTHROW(EvaluationPoint({2.0, 0.0}, Region::outside_open_disk));
    CHECK_THROWS_AS(EvaluationPoint({0.5, 0.0}, Region::outside_open_disk), DomainError);
}

TEST_CASE("worked examples", "[polynomial]")
{
    const cplx i{0.0, 1.0};
    CHECK(std::abs(Polynomial{1.0, 2.0, 1.0}(i) - 2.0 * i) <= 1e-15);
    CHECK(Polynomial{0.0}(cplx{7.0, 3.0}) == cplx{});
    CHECK(relative_distance(derivative(Polynomial{1.0, 2.0, 1.0}), Polynomial{2.0, 2.0}) == 0.0);
    CHECK(derivative(Polynomial{5.0}).is_zero());
    CHECK(relative_distance(dilate(Polynomial{1.0, 0.0, 1.0}, 2.0), Polynomial{1.0, 0.0, 4.0}) == 0.0);
    CHECK(relative_distance(conjugate_reciprocal(Polynomial{2.0 * i, 1.0}, 1), Polynomial{1.0, -2.0 * i}) == 0.0);
    CHECK(relative_distance(conjugate_reciprocal(Polynomial{1.0, 0.0, 1.0}, 2), Polynomial{1.0, 0.0, 1.0}) == 0.0);
    CHECK((Polynomial{1.0, 1.0} + Polynomial{-1.0, -1.0}).is_zero());
    CHECK(relative_distance(Polynomial{1.0, 1.0} * Polynomial{-1.0, 1.0}, Polynomial{-1.0, 0.0, 1.0}) == 0.0);
}
