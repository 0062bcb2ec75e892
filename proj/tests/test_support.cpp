#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "peaklab/fourier.hpp"
#include "peaklab/support.hpp"
#include "test_rng.hpp"

using namespace peaklab;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("phi_lambda") {
    const auto zero = phi_lambda({0.0, 0.0}, 4);
    CHECK(zero.entries[0] == Complex{1.0, 0.0});
    for (int j = 1; j <= 4; ++j) CHECK(zero.entries[static_cast<std::size_t>(j)] == Complex{0.0, 0.0});

    const auto half = phi_lambda({0.5, 0.0}, 3);
    CHECK(half.entries == std::vector<Complex>{{1, 0}, {0.5, 0}, {0.25, 0}, {0.125, 0}});

    CHECK_THROWS_AS(phi_lambda({1.0, 0.0}, 3), std::invalid_argument);
}

TEST_CASE("pairing against dirac moments equals evaluation") {
    std::mt19937 gen(424242);
    for (int t = 0; t < 60; ++t) {
        std::vector<Complex> c(static_cast<std::size_t>(testrng::uniform_int(gen, 0, 32)) + 1);
        for (auto& v : c) v = testrng::complex_box(gen);
        const CoefficientSeries a(std::move(c));
        const Complex lam = testrng::disk_point(gen, 0.95);
        const auto mom = phi_lambda(lam, a.degree());
        CHECK(std::abs(pairing(a, mom.entries) - evaluate(a, lam)) < 1e-12 * (1.0 + a.l1_norm()));
    }
}

TEST_CASE("moment vectors") {
    const Complex lam{0.3, -0.4};
    DiskAtomSet single{{lam}, {1.0}};
    const auto m1 = moment_vector(single, 6);
    const auto m2 = phi_lambda(lam, 6);
    for (int j = 0; j <= 6; ++j) {
        CHECK(std::abs(m1.entries[static_cast<std::size_t>(j)] -
                       m2.entries[static_cast<std::size_t>(j)]) < 1e-15);
    }

    std::mt19937 gen(17);
    DiskAtomSet combo;
    double left = 1.0;
    for (int k = 0; k < 4; ++k) {
        combo.atoms.push_back(testrng::disk_point(gen, 0.9));
        const double w = (k == 3) ? left : left * testrng::uniform01(gen);
        combo.weights.push_back(w);
        left -= (k == 3) ? 0.0 : w;
    }
    const auto mv = moment_vector(combo, 12);
    CHECK(std::abs(mv.entries[0] - Complex{1.0, 0.0}) < 1e-12);
    double rmax = 0.0;
    for (const auto& z : combo.atoms) rmax = std::max(rmax, std::abs(z));
    for (int j = 0; j <= 12; ++j) {
        CHECK(std::abs(mv.entries[static_cast<std::size_t>(j)]) <=
              std::pow(rmax, j) + 1e-12);
    }

    DiskAtomSet bad{{lam}, {0.5}};
    CHECK_THROWS_AS(moment_vector(bad, 3), std::invalid_argument);
}

TEST_CASE("cantor moment vector") {
    const auto y = cantor_moment_vector(RatioParam(2, 5), 64);
    CHECK(y.entries[0] == Complex{1.0, 0.0});
    for (int j = 1; j <= 64; ++j) {
        const auto& e = y.entries[static_cast<std::size_t>(j)];
        CHECK(e.imag() == 0.0);
        CHECK(std::abs(e) <= 1.0);
        CHECK(e == fs_coeff_product(RatioParam(2, 5), -j).value);
    }
}

TEST_CASE("discretization grid geometry") {
    for (int n : {2, 4, 16, 256}) {
        const auto grid = DiscretizationGrid::make(n);
        CHECK(grid.radius == doctest::Approx(std::cos(std::numbers::pi / n)).epsilon(1e-15));
        for (int k = 1; k <= std::min(n, 8); ++k) {
            const Complex zeta = grid.atom(k);
            // farthest point of the arc from its atom
            for (const double t : {(k - 1.0) / n, static_cast<double>(k) / n}) {
                CHECK(std::abs(zeta - std::polar(1.0, kTwoPi * t)) <
                      std::numbers::pi / n);
            }
        }
    }
    CHECK_THROWS_AS(DiscretizationGrid::make(1), std::invalid_argument);
}

TEST_CASE("discretize lebesgue") {
    const auto atoms = discretize_measure(LebesgueCircle{}, 4);
    REQUIRE(atoms.atoms.size() == 4);
    for (const double w : atoms.weights) CHECK(w == 0.25);
    for (const auto& z : atoms.atoms) {
        CHECK(std::abs(z) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    }
    // lebesgue discretization has vanishing higher moments up to grid effects
    const auto mv = moment_vector(atoms, 2);
    CHECK(std::abs(mv.entries[1]) < 1e-15);
}

TEST_CASE("discretize an atomic measure reproduces arc masses") {
    AtomCircle nu;
    nu.angles = {Rational(1, 10), Rational(1, 4), Rational(9, 10)};
    nu.weights = {0.5, 0.25, 0.25};
    const auto d = discretize_measure(nu, 8);
    // arcs [0,1/8), [1/8,2/8), ..., [7/8,1)
    CHECK(d.weights[0] == 0.5);   // 1/10
    CHECK(d.weights[2] == 0.25);  // 1/4
    CHECK(d.weights[7] == 0.25);  // 9/10
    double sum = 0.0;
    for (double w : d.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("discretize cantor stage measures: lemma rate") {
    const CantorStageCircle nu{RatioParam(1, 3), 10};
    for (int npow = 4; npow <= 8; ++npow) {
        const int n = 1 << npow;
        const auto atoms = discretize_measure(nu, n);
        const auto mv = moment_vector(atoms, 8);
        for (int j = 0; j <= 8; ++j) {
            const Complex truth = fs_coeff_oracle(nu.xi, nu.stage, -j);
            const double err = std::abs(mv.entries[static_cast<std::size_t>(j)] - truth);
            CHECK(err <= j * std::numbers::pi / n + 1e-13);
        }
    }
}

TEST_CASE("sup over the moment body") {
    const auto e0 = CoefficientSeries::unit();
    const auto r0 = sup_over_s0(e0, {256, 8});
    CHECK(r0.best == doctest::Approx(1.0).epsilon(1e-15));

    const CoefficientSeries half({{0.5, 0}, {0.5, 0}});
    const auto r1 = sup_over_s0(half);
    CHECK(r1.best > 1.0 - 1e-5);
    CHECK(r1.best <= 1.0);
    CHECK(std::abs(r1.witness_atom - Complex{1.0, 0.0}) < 1e-4);
    r1.witness.validate();

    CHECK_THROWS_AS(sup_over_s0(CoefficientSeries({{0, 0}})), std::invalid_argument);

    // convex combinations never beat the bracket upper bound
    std::mt19937 gen(777);
    const SupBracket br = sup_norm_estimate(half, 1024);
    for (int t = 0; t < 50; ++t) {
        DiskAtomSet combo;
        double left = 1.0;
        const int m = testrng::uniform_int(gen, 1, 5);
        for (int k = 0; k < m; ++k) {
            combo.atoms.push_back(testrng::disk_point(gen, 0.999));
            const double w = (k == m - 1) ? left : left * testrng::uniform01(gen);
            combo.weights.push_back(w);
            left -= (k == m - 1) ? 0.0 : w;
        }
        const auto mv = moment_vector(combo, half.degree());
        CHECK(std::abs(pairing(half, mv.entries)) <= br.upper + 1e-12);
    }
}

TEST_CASE("support pair verification") {
    // lebesgue moments: orthogonality kills the pairing
    const CoefficientSeries b({{0, 0}, {1, 0}});
    MomentVector leb;
    leb.entries = {{1, 0}, {0, 0}, {0, 0}};
    leb.source = "lebesgue";
    const auto rep = verify_support_pair(b, leb);
    CHECK(rep.pairing_value == Complex{0.0, 0.0});
    CHECK(rep.ratio == 0.0);
    CHECK_FALSE(rep.supported);
    CHECK_FALSE(rep.trivial);

    // constant functional is flagged trivial but pairs to full mass
    const auto e0 = CoefficientSeries::unit();
    const auto rep2 = verify_support_pair(e0, leb);
    CHECK(rep2.trivial);
    CHECK(rep2.pairing_value == Complex{1.0, 0.0});
    CHECK(rep2.supported);
    CHECK(rep2.ratio == doctest::Approx(1.0).epsilon(1e-12));

    MomentVector tooshort;
    tooshort.entries = {{1, 0}};
    CHECK_THROWS_AS(verify_support_pair(b, tooshort), std::invalid_argument);
}

TEST_CASE("pairing crosscheck") {
    const auto e0 = CoefficientSeries::unit();
    const auto c0 = pairing_crosscheck(e0, RatioParam(1, 3), 6, 8);
    CHECK(std::abs(c0.series_side - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(c0.integral_side - Complex{1.0, 0.0}) < 1e-13);

    const CoefficientSeries z({{0, 0}, {1, 0}});
    const auto c1 = pairing_crosscheck(z, RatioParam(1, 3), 12, 1);
    CHECK(std::abs(c1.series_side - c1.integral_side) <= c1.bound);
    CHECK(std::abs(c1.series_side - fs_coeff_product(RatioParam(1, 3), -1).value) < 1e-14);

    std::mt19937 gen(2718);
    for (int t = 0; t < 5; ++t) {
        std::vector<Complex> c(65);
        for (auto& v : c) v = testrng::complex_box(gen);
        const CoefficientSeries rb(std::move(c));
        const auto cc = pairing_crosscheck(rb, RatioParam(2, 5), 12, 64);
        CHECK(std::abs(cc.series_side - cc.integral_side) <= cc.bound);
    }

    CHECK_THROWS_AS(pairing_crosscheck(z, RatioParam(1, 3), 6, 0), std::invalid_argument);
}
