#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "peaklab/cantor.hpp"

namespace peaklab {

inline constexpr int kMaxOracleStage = 26;

/// One Fourier-Stieltjes coefficient of the Cantor measure with a rigorous
/// truncation tail bound (product method) or transport bound (oracle method).
struct FsCoeff {
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
    int terms = 0;
};

/// Infinite cosine-product evaluation of sigma-hat(n), truncated once the
/// quadratic tail sum drops below tol.
FsCoeff fs_coeff_product(const RatioParam& xi, std::int64_t n, double tol = 1e-12);

/// Independent oracle: integrates e^{-2 pi i n t} against the normalized
/// stage-m restriction, one closed-form average per stage interval.
/// Differs from the limit coefficient by at most 2 pi |n| xi^m.
std::complex<double> fs_coeff_oracle(const RatioParam& xi, int stage, std::int64_t n,
                                     int max_stage = kMaxOracleStage);

/// Transport bound 2 pi |n| xi^m between stage m and the limit measure.
double oracle_error_bound(const RatioParam& xi, int stage, std::int64_t n);

/// Least stage m with 2 pi |n| xi^m < target.
int oracle_stage_for(const RatioParam& xi, std::int64_t n, double target,
                     int max_stage = kMaxOracleStage);

enum class CoeffMethod { product, oracle };

struct TableRow {
    std::int64_t n = 0;
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
};

struct FourierCoefficientTable {
    RatioParam ratio;
    CoeffMethod method = CoeffMethod::product;
    int oracle_stage = -1;   // -1 when method == product
    double tol = 0.0;        // 0 when method == oracle
    std::vector<TableRow> rows;

    const TableRow& at(std::int64_t n) const;
};

/// Table over the inclusive index range [n0, n1]; deterministic row order.
FourierCoefficientTable coefficient_table(const RatioParam& xi, std::int64_t n0,
                                          std::int64_t n1, CoeffMethod method,
                                          double tol = 1e-12, int stage = -1);

struct DecayBlock {
    int k = 0;            // block [2^k, 2^{k+1})
    double max_abs = 0.0;
};

/// Dyadic block maxima of |value| for blocks k = k0..k1; the table must
/// cover [2^k0, 2^{k1+1}).
std::vector<DecayBlock> decay_profile(const FourierCoefficientTable& table, int k0, int k1);

std::string method_name(CoeffMethod m);

}  // namespace peaklab
