#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "gnx/functionals.hpp"
#include "gnx/lemmas.hpp"
#include "gnx/multiplier.hpp"
#include "gnx/profiles.hpp"

using namespace gnx;

TEST_CASE("smooth cutoff shape") {
    CHECK(smooth_cutoff(0.0) == 1.0);
    CHECK(smooth_cutoff(1.0) == 1.0);
    CHECK(smooth_cutoff(2.0) == 0.0);
    CHECK(smooth_cutoff(5.0) == 0.0);
    CHECK(smooth_cutoff(1.5) == doctest::Approx(0.5).epsilon(1e-14));
    double prev = 1.0;
    for (double t = 1.0; t <= 2.0; t += 0.01) {
        double v = smooth_cutoff(t);
        CHECK(v <= prev + 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("lowpass + highpass is the identity") {
    Grid g = Grid::make(2, 32, 12.0);
    Field f = random_profile(g, 9, 1.5);
    Field lo = lowpass(f), hi = highpass(f);
    double err = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        err = std::max(err,
                       std::abs(lo.values[i] + hi.values[i] - f.values[i]));
    CHECK(err < 1e-12);
}

TEST_CASE("pqr worked example and validation") {
    auto k = pqr_constants(1.0, 2.0, 3.0, 1.0, 2.0, 4.0);
    CHECK(k.eta == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(k.m_cap == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(k.c == doctest::Approx(1.0 / 64.0).epsilon(1e-15));

    CHECK_THROWS_AS(pqr_constants(2.0, 1.0, 3.0, 1.0, 1.0, 1.0),
                    std::invalid_argument);  // p < q violated
    CHECK_THROWS_AS(
        pqr_constants(1.0, 2.0, std::numeric_limits<double>::infinity(), 1.0,
                      1.0, 1.0),
        std::invalid_argument);  // r must stay finite
    CHECK_THROWS_AS(pqr_constants(1.0, 2.0, 3.0, -1.0, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("superlevel measure counts cells") {
    Grid g = Grid::make(1, 16, 8.0);
    Field f(g, Space::physical);
    for (int j = 0; j < 16; ++j) f.values[j] = j < 5 ? 2.0 : 0.1;
    CHECK(superlevel_measure(f, 1.0) == doctest::Approx(5 * 0.5).epsilon(1e-15));
    CHECK(superlevel_measure(f, 0.05) == doctest::Approx(16 * 0.5));
    CHECK_THROWS_AS(superlevel_measure(f, 0.0), std::invalid_argument);
}

TEST_CASE("pqr property sweep over step functions") {
    // For any f with ||f||_p^p <= alpha, ||f||_q^q >= beta, ||f||_r^r <= gamma
    // (its own moments qualify with equality), the superlevel set at eta has
    // measure at least c.
    Grid g = Grid::make(1, 256, 10.0);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    std::uniform_real_distribution<double> expo(1.0, 6.0);
    int done = 0;
    while (done < 1000) {
        double e1 = expo(rng), e2 = expo(rng), e3 = expo(rng);
        double p = std::min({e1, e2, e3});
        double r = std::max({e1, e2, e3});
        double q = e1 + e2 + e3 - p - r;
        if (q - p < 0.1 || r - q < 0.1) continue;
        Field f(g, Space::physical);
        long double mp = 0.0L, mq = 0.0L, mr = 0.0L;
        for (auto& v : f.values) {
            double a = amp(rng);
            v = a;
            mp += std::pow(a, p);
            mq += std::pow(a, q);
            mr += std::pow(a, r);
        }
        double h = g.spacing();
        auto k = pqr_constants(p, q, r, static_cast<double>(mp) * h,
                               static_cast<double>(mq) * h,
                               static_cast<double>(mr) * h);
        CHECK(superlevel_measure(f, k.eta) >= k.c);
        ++done;
    }
}

TEST_CASE("elementary interpolation inequality") {
    // (1 + x)^a (1 + y)^b >= 1 + x^a y^b for x, y >= 0, a, b in (0,1), a+b=1.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int violations = 0;
    for (int t = 0; t < 10000; ++t) {
        double a = 0.01 + 0.98 * u(rng);
        double b = 1.0 - a;
        double x = 50.0 * u(rng) / std::max(1e-9, u(rng));  // heavy-tailed
        double y = 50.0 * u(rng) / std::max(1e-9, u(rng));
        double lhs = std::pow(1.0 + x, a) * std::pow(1.0 + y, b);
        double rhs = 1.0 + std::pow(x, a) * std::pow(y, b);
        if (lhs < rhs * (1.0 - 1e-12)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("non-local energy splitting") {
    Grid g = Grid::make(3, 48, 32.0);
    Field f = gaussian_profile(g, 1.0);

    SUBCASE("residual decays with separation") {
        auto rep = bl_nonlocal_verify(f, f, {4.0, 6.0, 8.0}, 1.0);
        REQUIRE(rep.residuals.size() == 3);
        CHECK(rep.residuals[0] > rep.residuals[1]);
        CHECK(rep.residuals[1] > rep.residuals[2]);
        double slope = std::log(rep.residuals[2] / rep.residuals[0]) /
                       std::log(rep.separations[2] / rep.separations[0]);
        CHECK(slope > -1.5);
        CHECK(slope < -0.5);
        // Overlap cross terms fall off much faster than the residual.
        CHECK(rep.cross_terms[0] > rep.cross_terms[1]);
        CHECK(rep.cross_terms[1] > rep.cross_terms[2]);
        for (const auto& rem : rep.remainders) {
            CHECK(std::isfinite(rem[0]));
            CHECK(std::isfinite(rem[1]));
            CHECK(std::isfinite(rem[2]));
        }
    }
    SUBCASE("vanishing second bump gives zero residual") {
        Field zero(g, Space::physical);
        auto rep = bl_nonlocal_verify(f, zero, {4.0}, 1.0);
        double e = riesz_energy(f, 1.0, RieszMethod::fourier);
        CHECK(rep.residuals[0] <= 1e-12 * e);
    }
    SUBCASE("rejects off-lattice and oversized separations") {
        CHECK_THROWS_AS(bl_nonlocal_verify(f, f, {4.1}, 1.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(bl_nonlocal_verify(f, f, {20.0}, 1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("kernel Cauchy-Schwarz over seeded pairs") {
    Grid g = Grid::make(1, 64, 10.0);
    int violations = 0;
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        Field a = random_profile(g, 2 * t + 1, 1.0);
        Field b = random_profile(g, 2 * t + 2, 1.0);
        auto [lhs, rhs] = riesz_cauchy_schwarz(a, b, 0.5);
        worst = std::max(worst, lhs / rhs);
        if (lhs > rhs * (1.0 + 1e-9)) ++violations;
    }
    CHECK(violations == 0);
    CHECK(worst <= 1.0 + 1e-9);
}

TEST_CASE("besov scan and sup") {
    Grid g = Grid::make(1, 512, 80.0);
    const double s = 0.3;

    SUBCASE("domain checks") {
        Field f = gaussian_profile(g, 1.0);
        CHECK_THROWS_AS(besov_sup(f, 0.6, 1), std::invalid_argument);  // s >= d/2
        CHECK_THROWS_AS(besov_sup(f, -0.1, 1), std::invalid_argument);
        CHECK_THROWS_AS(besov_scan(f, s, 0), std::invalid_argument);
    }
    SUBCASE("dilation covariance") {
        // f(./lambda) scales the sup by lambda^(d/2 - s); gaussian widths 1, 2.
        double b1 = besov_sup(gaussian_profile(g, 1.0), s, 8);
        double b2 = besov_sup(gaussian_profile(g, 2.0), s, 8);
        double expect = std::pow(2.0, 0.5 - s);
        CHECK(std::abs(b2 / b1 - expect) / expect < 0.05);
    }
    SUBCASE("translation invariance of the sup") {
        Field f = gaussian_profile(g, 1.0);
        double shift = std::round(7.0 / g.spacing()) * g.spacing();
        double b0 = besov_sup(f, s, 4);
        double b1 = besov_sup(translate(f, shift), s, 4);
        CHECK(std::abs(b1 - b0) / b0 < 1e-10);
    }
    SUBCASE("scan localizes a displaced bump") {
        double shift = std::round(10.0 / g.spacing()) * g.spacing();
        Field f = translate(gaussian_profile(g, 0.5), shift);
        auto res = besov_scan(to_physical(f), s, 2);
        int idx[3];
        g.unflatten(res.argmax, idx);
        CHECK(std::abs(g.coordinate(idx[0]) - shift) < 1.0);
    }
}

TEST_CASE("refined Sobolev ratio") {
    Grid g = Grid::make(3, 32, 16.0);
    auto corpus = standard_corpus(g);
    REQUIRE(corpus.size() == 20);
    double ratio = refined_sobolev_ratio(corpus, 1.0);
    CHECK(std::isfinite(ratio));
    CHECK(ratio > 0.0);
    // Frozen regression value for this corpus and grid.
    CHECK(ratio == doctest::Approx(0.9720690076696806).epsilon(1e-9));

    // Scalar invariance.
    Field f = gaussian_profile(g, 1.0);
    Field f3 = f;
    for (auto& v : f3.values) v *= 3.0;
    double r1 = refined_sobolev_ratio({f}, 1.0);
    double r3 = refined_sobolev_ratio({f3}, 1.0);
    CHECK(std::abs(r1 - r3) / r1 < 1e-12);

    CHECK_THROWS_AS(refined_sobolev_ratio({}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(refined_sobolev_ratio(corpus, 2.0), std::invalid_argument);
}

TEST_CASE("intermediate interpolation ratio") {
    Grid g = Grid::make(3, 32, 16.0);
    const double s = 1.0, lambda = 1.0, p = 2.0;

    double worst = 0.0;
    for (const auto& u : standard_corpus(g))
        worst = std::max(worst, interm_gn_ratio(u, s, lambda, p));
    CHECK(std::isfinite(worst));
    // Frozen regression value for this corpus and grid.
    CHECK(worst == doctest::Approx(0.43050316014415935).epsilon(1e-9));

    Field f = gaussian_profile(g, 1.0);
    Field f2 = f;
    for (auto& v : f2.values) v *= 2.0;
    double r1 = interm_gn_ratio(f, s, lambda, p);
    double r2 = interm_gn_ratio(f2, s, lambda, p);
    CHECK(std::abs(r1 - r2) / r1 < 1e-12);

    CHECK_THROWS_AS(
        interm_gn_ratio(f, s, lambda, std::numeric_limits<double>::infinity()),
        std::invalid_argument);
    // p far outside the admissible window puts theta out of range.
    CHECK_THROWS_AS(interm_gn_ratio(f, s, lambda, 20.0), std::domain_error);
}
