#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peaklab/rational.hpp"

namespace peaklab {

inline constexpr int kMaxGeneration = 40;

/// Cantor ratio xi = num/den with 0 < xi < 1/2, stored coprime.
///
/// For an irrational ratio the rational value acts as the numeric stand-in
/// and `inverse_min_poly` (integer coefficients of the minimal polynomial of
/// 1/xi, highest degree first) is authoritative for classification.
struct RatioParam {
    std::int64_t num = 1;
    std::int64_t den = 3;
    std::optional<std::vector<std::int64_t>> inverse_min_poly;

    RatioParam() = default;
    RatioParam(std::int64_t p, std::int64_t q,
               std::optional<std::vector<std::int64_t>> tag = std::nullopt);

    /// Parses "p/q"; decimals and anything else are rejected.
    static RatioParam parse(const std::string& text);

    Rational value() const { return Rational(num, den); }
    double value_d() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Stage n of the constant-ratio Cantor construction: 2^n closed intervals
/// with exact rational endpoints, each of length xi^n.
struct IntervalSet {
    int generation = 0;
    std::vector<std::pair<Rational, Rational>> intervals;
};

IntervalSet cantor_stage(const RatioParam& xi, int n, int max_generation = kMaxGeneration);

/// One generation of complementary gaps: 2^k open intervals, each of
/// exact length xi^k (1 - 2 xi).
struct GapGeneration {
    int generation = 0;
    Rational length;
    std::uint64_t multiplicity = 1;
};

/// Gap generations k = 0..K inclusive.
std::vector<GapGeneration> complementary_gaps(const RatioParam& xi, int K);

/// Numeric gap (open interval) for quadrature work.
struct Gap {
    double left = 0.0;
    double right = 0.0;
    int generation = 0;
};

/// All gaps removed during the first `steps` construction steps
/// (generations 0..steps-1), in deterministic order.
std::vector<Gap> gaps_through(const RatioParam& xi, int steps);

/// Sorted endpoints of cantor_stage(xi, n) as doubles (2^{n+1} values).
std::vector<double> stage_endpoints(const RatioParam& xi, int n);

}  // namespace peaklab
