#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "peaklab/fft.hpp"
#include "peaklab/series.hpp"
#include "test_rng.hpp"

using namespace peaklab;

namespace {
CoefficientSeries random_series(std::mt19937& gen, int degree, double scale = 1.0) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = testrng::complex_box(gen, scale);
    return CoefficientSeries(std::move(c));
}
}  // namespace

TEST_CASE("evaluation") {
    CHECK(evaluate(CoefficientSeries({{1, 0}, {0, 0}, {0, 0}}), {0.3, -0.4}) == Complex{1.0, 0.0});
    CHECK(evaluate(CoefficientSeries({{0.5, 0}, {0.5, 0}}), {1.0, 0.0}) == Complex{1.0, 0.0});
    CHECK(evaluate(CoefficientSeries({{0, 0}, {1, 0}}), {0.0, 1.0}) == Complex{0.0, 1.0});
    CHECK_THROWS_AS(evaluate(CoefficientSeries({{1, 0}}), {1.5, 0.0}), std::invalid_argument);
}

TEST_CASE("norm cache and the evaluation bound") {
    std::mt19937 gen(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(gen, testrng::uniform_int(gen, 0, 40));
        double l1 = 0.0;
        for (int j = 0; j <= a.degree(); ++j) l1 += std::abs(a.coefficient(j));
        CHECK(a.l1_norm() == doctest::Approx(l1).epsilon(1e-15));
        const Complex z = testrng::disk_point(gen);
        CHECK(std::abs(evaluate(a, z)) <= a.l1_norm() * (1.0 + 1e-13) + 1e-13);
    }
}

TEST_CASE("sup-norm bracket") {
    const CoefficientSeries id({{0, 0}, {1, 0}});
    const SupBracket b1 = sup_norm_estimate(id, 64);
    CHECK(b1.lower == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b1.upper >= 1.0);
    CHECK(b1.upper == doctest::Approx(1.0 + 2.0 * std::numbers::pi / 64).epsilon(1e-12));

    const CoefficientSeries half({{0.5, 0}, {0.5, 0}});
    const SupBracket b2 = sup_norm_estimate(half, 128);
    CHECK(b2.lower <= 1.0 + 1e-14);
    CHECK(b2.upper >= 1.0);
    CHECK(wiener_norm(half) >= b2.lower);

    CHECK_THROWS_AS(sup_norm_estimate(id, 4), std::invalid_argument);
}

TEST_CASE("fft path matches direct evaluation") {
    std::mt19937 gen(7);
    const auto a = random_series(gen, 37);
    const int M = 8192;  // power of two >= 8192 takes the FFT path
    const SupBracket fast = sup_norm_estimate(a, M);
    double direct = 0.0;
    for (int k = 0; k < M; ++k) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / M);
        direct = std::max(direct, std::abs(evaluate(a, z)));
    }
    CHECK(fast.lower == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("fft against a naive dft") {
    std::mt19937 gen(11);
    std::vector<Complex> x(16);
    for (auto& v : x) v = testrng::complex_box(gen);
    auto y = x;
    fft_radix2(y);
    for (std::size_t k = 0; k < x.size(); ++k) {
        Complex want{0.0, 0.0};
        for (std::size_t j = 0; j < x.size(); ++j) {
            want += x[j] * std::polar(1.0, -2.0 * std::numbers::pi *
                                               static_cast<double>(j * k) / x.size());
        }
        CHECK(std::abs(y[k] - want) < 1e-12);
    }
    std::vector<Complex> bad(12);
    CHECK_THROWS_AS(fft_radix2(bad), std::invalid_argument);
}

TEST_CASE("pairing") {
    const CoefficientSeries e0 = CoefficientSeries::unit();
    const std::vector<Complex> x{{3.0, 1.0}, {2.0, 0.0}};
    CHECK(pairing(e0, x) == Complex{3.0, 1.0});

    const CoefficientSeries half({{0.5, 0}, {0.5, 0}});
    const std::vector<Complex> ones{{1, 0}, {1, 0}};
    CHECK(pairing(half, ones) == Complex{1.0, 0.0});

    const std::vector<Complex> short_x{{1, 0}};
    CHECK_THROWS_AS(pairing(half, short_x), std::invalid_argument);
    CHECK(pairing(half, short_x, PadPolicy::zero_pad) == Complex{0.5, 0.0});

    // |<a,x>| <= ||a||_1 max|x_j|
    std::mt19937 gen(99);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_series(gen, 16);
        std::vector<Complex> xs(17);
        double mx = 0.0;
        for (auto& v : xs) {
            v = testrng::complex_box(gen);
            mx = std::max(mx, std::abs(v));
        }
        CHECK(std::abs(pairing(a, xs)) <= a.l1_norm() * mx * (1.0 + 1e-12) + 1e-12);
    }
}

TEST_CASE("power series composition") {
    const AnalyticGerm square{{{0, 0}, {0, 0}, {1, 0}}, std::numeric_limits<double>::infinity()};
    const CoefficientSeries z({{0, 0}, {1, 0}});
    const auto z2 = compose_power_series(square, z, 4);
    CHECK(z2.coefficient(0) == Complex{0.0, 0.0});
    CHECK(z2.coefficient(1) == Complex{0.0, 0.0});
    CHECK(z2.coefficient(2) == Complex{1.0, 0.0});

    // geometric germ 1/(1+w) with g = z reproduces the alternating series
    std::vector<Complex> geom(17);
    for (std::size_t k = 0; k < geom.size(); ++k) geom[k] = {(k % 2 == 0) ? 1.0 : -1.0, 0.0};
    const auto alt = compose_power_series(AnalyticGerm{geom, 1.0}, z, 16);
    for (int j = 0; j <= 16; ++j) {
        CHECK(alt.coefficient(j) == Complex{(j % 2 == 0) ? 1.0 : -1.0, 0.0});
    }

    // radius guard: g(0) outside the germ disk
    const CoefficientSeries big({{2.0, 0.0}, {0.5, 0.0}});
    CHECK_THROWS_AS(compose_power_series(AnalyticGerm{geom, 1.0}, big, 4),
                    std::invalid_argument);

    // affine germ (1+w)/2 agrees with the weak-peak transform
    std::mt19937 gen(5);
    const auto g = random_series(gen, 12, 0.3);
    const AnalyticGerm affine{{{0.5, 0}, {0.5, 0}}, std::numeric_limits<double>::infinity()};
    const auto composed = compose_power_series(affine, g, 12);
    for (int j = 0; j <= 12; ++j) {
        const Complex want = (j == 0 ? Complex{0.5, 0.0} : Complex{0.0, 0.0}) +
                             0.5 * g.coefficient(j);
        CHECK(std::abs(composed.coefficient(j) - want) < 1e-14);
    }
}

TEST_CASE("series reciprocal") {
    const auto r0 = reciprocal_one_plus(CoefficientSeries({{0, 0}}), 5);
    CHECK(r0.coefficient(0) == Complex{1.0, 0.0});
    for (int j = 1; j <= 5; ++j) CHECK(r0.coefficient(j) == Complex{0.0, 0.0});

    const auto rc = reciprocal_one_plus(CoefficientSeries({{1, 0}}), 3);
    CHECK(rc.coefficient(0) == Complex{0.5, 0.0});

    const auto ralt = reciprocal_one_plus(CoefficientSeries({{0, 0}, {1, 0}}), 8);
    for (int j = 0; j <= 8; ++j) {
        CHECK(ralt.coefficient(j) == Complex{(j % 2 == 0) ? 1.0 : -1.0, 0.0});
    }

    CHECK_THROWS_AS(reciprocal_one_plus(CoefficientSeries({{-1.0, 0.0}, {1, 0}}), 4),
                    std::invalid_argument);

    // (1 + F) * recip == 1 through the degree, random trials
    std::mt19937 gen(31337);
    for (int t = 0; t < 20; ++t) {
        auto F = random_series(gen, 64, 0.5);
        std::vector<Complex> onef(F.coefficients().begin(), F.coefficients().end());
        onef[0] += 1.0;
        if (std::abs(onef[0]) < 0.2) continue;  // keep the division well posed
        const auto rec = reciprocal_one_plus(F, 64);
        const auto prod = multiply_trunc(CoefficientSeries(onef), rec, 64);
        CHECK(std::abs(prod.coefficient(0) - Complex{1.0, 0.0}) < 1e-10);
        for (int j = 1; j <= 64; ++j) CHECK(std::abs(prod.coefficient(j)) < 1e-10);
    }
}

TEST_CASE("mobius postcomposition") {
    const CoefficientSeries half({{0.5, 0}, {0.5, 0}});
    const auto G = mobius_postcompose(half, {0.5, 0.0}, 64);
    CHECK(G.coefficient(0) == Complex{0.0, 0.0});  // exactly zero
    CHECK(std::abs(evaluate(G, {1.0, 0.0}) - Complex{1.0, 0.0}) < 1e-10);
    // closed form here is 2z/(3 - z)
    for (int j = 1; j <= 8; ++j) {
        const double want = 2.0 / 3.0 * std::pow(1.0 / 3.0, j - 1);
        CHECK(std::abs(G.coefficient(j) - Complex{want, 0.0}) < 1e-13);
    }
    // |G| stays inside the closed disk on a boundary grid
    double sup = 0.0;
    for (int k = 0; k < 512; ++k) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / 512);
        sup = std::max(sup, std::abs(evaluate(G, z)));
    }
    CHECK(sup <= 1.0 + 1e-9);

    CHECK_THROWS_AS(mobius_postcompose(half, {0.0, 0.0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(mobius_postcompose(half, {1.0, 0.0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(mobius_postcompose(half, {0.25, 0.0}, 8), std::invalid_argument);
}
