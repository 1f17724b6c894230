#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <smirnov/roots.hpp>
#include <smirnov/rng.hpp>

using namespace smirnov;

namespace
{

std::vector<cplx> separated_roots(Rng& rng, int n, double radius, double gap)
{
    std::vector<cplx> r;
    while (static_cast<int>(r.size()) < n) {
        const cplx c = rng.disk(radius);
        if (std::all_of(r.begin(), r.end(), [&](cplx s) { return std::abs(s - c) >= gap; }))
            r.push_back(c);
    }
    return r;
}

// Largest distance from a true root to its nearest unused computed root.
double matching_error(std::vector<cplx> expect, std::vector<cplx> got)
{
    double worst = 0.0;
    for (const cplx e : expect) {
        auto it = std::min_element(got.begin(), got.end(),
                                   [&](cplx x, cplx y) { return std::abs(x - e) < std::abs(y - e); });
        worst = std::max(worst, std::abs(*it - e));
        got.erase(it);
    }
    return worst;
}

} // namespace

TEST_CASE("from_roots satisfies Vieta's relations", "[roots]")
{
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 12);
        std::vector<cplx> r;
        for (int i = 0; i < n; ++i)
            r.push_back(rng.disk(2.0));
        const cplx lead = std::polar(rng.uniform(0.5, 2.0), rng.angle());
        const Polynomial p = from_roots(r, lead);
        REQUIRE(p.degree() == n);
        CHECK(p.leading() == lead);
        const cplx sum = std::accumulate(r.begin(), r.end(), cplx{});
        const cplx prod = std::accumulate(r.begin(), r.end(), cplx{1.0}, std::multiplies<>());
        CHECK(std::abs(-p[n - 1] / lead - sum) <= 1e-12 * (1.0 + std::abs(sum)));
        const cplx vieta = (n % 2 ? -1.0 : 1.0) * p[0] / lead;
        CHECK(std::abs(vieta - prod) <= 1e-12 * (1.0 + std::abs(prod)));
    }
    CHECK_THROWS_AS(from_roots(std::vector<cplx>{1.0}, 0.0), DomainError);
}

TEST_CASE("find_roots recovers well separated roots", "[roots]")
{
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.integer(1, 12);
        const auto r = separated_roots(rng, n, 2.0, 0.1);
        const RootSet rs = find_roots(from_roots(r, std::polar(1.0, rng.angle())));
        REQUIRE(rs.converged);
        REQUIRE(rs.roots.size() == r.size());
        CHECK(matching_error(r, rs.roots) <= 1e-8);
        for (const double res : rs.residuals)
            CHECK(res <= kResidualTolerance);
    }
}

TEST_CASE("find_roots handles structured inputs", "[roots]")
{
    // roots of unity
    for (int n = 1; n <= 16; ++n) {
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{});
        c[0] = -1.0;
        c.back() = 1.0;
        const RootSet rs = find_roots(Polynomial(c));
        REQUIRE(rs.converged);
        for (const cplx z : rs.roots)
            CHECK(std::abs(std::abs(z) - 1.0) <= 1e-10);
    }
    // zero root of multiplicity three
    const RootSet rs = find_roots(Polynomial::monomial(3));
    REQUIRE(rs.converged);
    for (const cplx z : rs.roots)
        CHECK(std::abs(z) <= 1e-4);
    // a double root clusters to 1e-4
    const RootSet dbl = find_roots(from_roots(std::vector<cplx>{0.5, 0.5, -1.0}));
    REQUIRE(dbl.converged);
    CHECK(matching_error({0.5, 0.5, -1.0}, dbl.roots) <= 1e-4);
    CHECK_THROWS_AS(find_roots(Polynomial::constant(2.0)), DomainError);
}

TEST_CASE("zero classification against the unit circle", "[roots]")
{
    const ZeroLocation in = classify_zeros(from_roots(std::vector<cplx>{0.5, cplx{0.0, -0.9}}));
    CHECK(in.all_in_closed_disk);
    CHECK_FALSE(in.none_in_open_disk);
    CHECK(in.all_within(0.9));
    CHECK_FALSE(in.all_within(0.8));

    const ZeroLocation out = classify_zeros(from_roots(std::vector<cplx>{2.0, cplx{0.0, 1.5}}));
    CHECK(out.none_in_open_disk);
    CHECK_FALSE(out.all_in_closed_disk);

    // z^n + 1 sits on the circle: both classes, flagged
    const ZeroLocation on = classify_zeros(Polynomial{1.0, 0.0, 0.0, 1.0});
    CHECK(on.all_in_closed_disk);
    CHECK(on.none_in_open_disk);
    CHECK(on.boundary_flag);

    const ZeroLocation mixed = classify_zeros(from_roots(std::vector<cplx>{0.3, 3.0}));
    CHECK(mixed.mixed());

    // constants have no zeros and count as zero-free in the disk
    CHECK(classify_zeros(Polynomial::constant(1.0)).none_in_open_disk);
}

TEST_CASE("worked examples", "[roots]")
{
    const cplx i{0.0, 1.0};
    CHECK(matching_error({i, -i}, find_roots(Polynomial{1.0, 0.0, 1.0}).roots) <= 1e-12);
    const std::vector<cplx> r{0.5, -0.5 * i};
    CHECK(matching_error(r, find_roots(from_roots(r)).roots) <= 1e-8);
    const RootSet dbl = find_roots(from_roots(std::vector<cplx>{1.0, 1.0, -1.0}));
    REQUIRE(dbl.converged);
    CHECK(matching_error({1.0, 1.0, -1.0}, dbl.roots) <= 1e-4);
    CHECK(relative_distance(from_roots(std::vector<cplx>{i, -i}), Polynomial{1.0, 0.0, 1.0}) == 0.0);
    CHECK(relative_distance(from_roots(std::vector<cplx>{}, 3.0), Polynomial::constant(3.0)) == 0.0);
    CHECK(classify_zeros(from_roots(std::vector<cplx>{0.3, 0.7})).all_in_closed_disk);
    CHECK(classify_zeros(from_roots(std::vector<cplx>{0.5, 2.0})).mixed());
}
