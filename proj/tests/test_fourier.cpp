#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "peaklab/fourier.hpp"

using namespace peaklab;

TEST_CASE("product formula basics") {
    const RatioParam third(1, 3);
    const FsCoeff c0 = fs_coeff_product(third, 0);
    CHECK(c0.value == std::complex<double>(1.0, 0.0));
    CHECK(c0.tail_bound == 0.0);

    for (int n = 1; n <= 64; ++n) {
        const FsCoeff c = fs_coeff_product(third, n);
        CHECK(std::abs(c.value) <= 1.0 + 1e-15);
        CHECK(c.value.imag() == 0.0);
        CHECK(c.tail_bound < 1e-12);
        // real measure symmetric under conjugation: even in n here
        CHECK(fs_coeff_product(third, -n).value == c.value);
    }
    CHECK_THROWS_AS(fs_coeff_product(third, 1, 0.0), std::invalid_argument);
}

TEST_CASE("triadic telescoping subsequence") {
    // |sigma-hat(3^m)| is the fixed product prod_{j>=1} |cos(2 pi / 3^j)|,
    // because earlier angles are integer multiples of 2 pi.
    double expected = 1.0;
    double angle = 2.0 * std::numbers::pi / 3.0;
    for (int j = 0; j < 40; ++j) {
        expected *= std::abs(std::cos(angle));
        angle /= 3.0;
    }
    const RatioParam third(1, 3);
    std::int64_t n = 1;
    for (int m = 0; m <= 8; ++m) {
        const FsCoeff c = fs_coeff_product(third, n);
        CHECK(std::abs(std::abs(c.value) - expected) < 1e-12);
        n *= 3;
    }
}

TEST_CASE("oracle basics") {
    const RatioParam third(1, 3);
    CHECK(fs_coeff_oracle(third, 0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(fs_coeff_oracle(third, 7, 0) == std::complex<double>(1.0, 0.0));
    // stage 0 is Lebesgue on [0,1]: full-interval orthogonality
    for (int n : {1, 2, 5, -3}) {
        CHECK(std::abs(fs_coeff_oracle(third, 0, n)) < 1e-14);
    }
    CHECK_THROWS_AS(fs_coeff_oracle(third, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(fs_coeff_oracle(third, 27, 1), std::invalid_argument);
}

TEST_CASE("oracle agrees with the product formula") {
    for (const RatioParam xi : {RatioParam(1, 3), RatioParam(2, 5)}) {
        for (std::int64_t n : {1, 2, 3, 17, 64, 101}) {
            const int m = oracle_stage_for(xi, n, 1e-4);
            const FsCoeff p = fs_coeff_product(xi, n);
            const std::complex<double> o = fs_coeff_oracle(xi, m, n);
            const double bound = p.tail_bound + oracle_error_bound(xi, m, n);
            CHECK(std::abs(p.value - o) <= bound);
            // conjugate symmetry of the oracle
            const std::complex<double> om = fs_coeff_oracle(xi, m, -n);
            CHECK(std::abs(om - std::conj(o)) < 1e-13);
        }
    }
    // the worked instance: xi = 1/3, n = 1, stage 14
    const RatioParam third(1, 3);
    const FsCoeff p = fs_coeff_product(third, 1);
    const std::complex<double> o = fs_coeff_oracle(third, 14, 1);
    CHECK(std::abs(p.value - o) <= p.tail_bound + oracle_error_bound(third, 14, 1));
}

TEST_CASE("coefficient tables") {
    const RatioParam xi(2, 5);
    const auto t = coefficient_table(xi, -8, 8, CoeffMethod::oracle, 0.0, 6);
    for (std::int64_t n = 0; n <= 8; ++n) {
        CHECK(std::abs(t.at(-n).value - std::conj(t.at(n).value)) < 1e-13);
    }
    CHECK(t.at(0).value == std::complex<double>(1.0, 0.0));
    CHECK_THROWS_AS(t.at(9), std::out_of_range);
    CHECK_THROWS_AS(coefficient_table(xi, 3, 2, CoeffMethod::product), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_table(xi, 0, 4, CoeffMethod::oracle), std::invalid_argument);

    // determinism
    const auto a = coefficient_table(xi, 0, 32, CoeffMethod::product);
    const auto b = coefficient_table(xi, 0, 32, CoeffMethod::product);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].value == b.rows[i].value);
        CHECK(a.rows[i].tail_bound == b.rows[i].tail_bound);
    }
}

TEST_CASE("triadic table carries the constant-magnitude subsequence") {
    const RatioParam third(1, 3);
    const auto t = coefficient_table(third, 0, 2187, CoeffMethod::product);
    const double base = std::abs(t.at(1).value);
    for (std::int64_t n = 3; n <= 2187; n *= 3) {
        CHECK(std::abs(std::abs(t.at(n).value) - base) < 1e-12);
    }
}

TEST_CASE("decay profile") {
    // Dirac-like table with mu-hat == 1 everywhere: no decay
    FourierCoefficientTable flat;
    flat.ratio = RatioParam(1, 3);
    for (std::int64_t n = 0; n < 64; ++n) flat.rows.push_back({n, {1.0, 0.0}, 0.0});
    const auto blocks = decay_profile(flat, 0, 4);
    for (const auto& b : blocks) CHECK(b.max_abs == 1.0);
    CHECK_THROWS_AS(decay_profile(flat, 0, 6), std::invalid_argument);

    // xi = 2/5 decays in trend; xi = 1/3 does not
    const auto t25 = coefficient_table(RatioParam(2, 5), 0, 4096, CoeffMethod::product);
    const auto d25 = decay_profile(t25, 4, 11);
    CHECK(d25.back().max_abs < d25.front().max_abs);
    double m1 = 0.0, m2 = 0.0;
    for (std::int64_t n = 16; n < 32; ++n) m1 = std::max(m1, std::abs(t25.at(n).value));
    for (std::int64_t n = 2048; n < 4096; ++n) m2 = std::max(m2, std::abs(t25.at(n).value));
    CHECK(m2 < m1);

    const auto t13 = coefficient_table(RatioParam(1, 3), 0, 4096, CoeffMethod::product);
    const auto d13 = decay_profile(t13, 4, 11);
    const double telescope = std::abs(t13.at(2187).value);
    for (const auto& b : d13) CHECK(b.max_abs >= telescope - 1e-12);
}

TEST_CASE("stage selection meets a target transport bound") {
    const RatioParam xi(2, 5);
    const int m = oracle_stage_for(xi, 256, 2e-3);
    CHECK(oracle_error_bound(xi, m, 256) < 2e-3);
    if (m > 0) CHECK(oracle_error_bound(xi, m - 1, 256) >= 2e-3);
    CHECK_THROWS_AS(oracle_stage_for(xi, 1, 1e-30), std::invalid_argument);
}
