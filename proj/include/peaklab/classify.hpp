#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "peaklab/cantor.hpp"

namespace peaklab {

enum class PisotVerdict { Pisot, NotPisot, Inconclusive };

struct PisotResult {
    PisotVerdict verdict = PisotVerdict::Inconclusive;
    std::vector<std::complex<double>> roots;  // all roots, dominant first
    double dominant = 0.0;                    // the real root > 1 when one exists, else 0
    std::string detail;
};

/// Decides whether the monic integer polynomial (coefficients highest degree
/// first) is the minimal polynomial of a Pisot number: exactly one real root
/// > 1 and all other roots of modulus < 1 - tol. Conjugate moduli within tol
/// of 1 yield Inconclusive (Salem-type configurations).
PisotResult pisot_check(const std::vector<std::int64_t>& coeffs, double tol = 1e-9);

enum class RajchmanVerdict {
    NotRajchman_IntegerReciprocal,
    NotRajchman_PisotReciprocal,
    Rajchman_RationalNonIntegerReciprocal,
    Rajchman_NotPisotReciprocal,
    Unknown,
};

struct ClassificationVerdict {
    RajchmanVerdict verdict = RajchmanVerdict::Unknown;
    std::string evidence;
    std::vector<std::complex<double>> roots;  // conjugates examined, if any
};

/// Salem/Bari classification of the Cantor measure sigma(xi): a tagged ratio
/// is classified through pisot_check on the tag; a plain rational through the
/// integer-reciprocal test.
ClassificationVerdict rajchman_classify(const RatioParam& xi, double tol = 1e-9);

std::string verdict_name(RajchmanVerdict v);
std::string verdict_name(PisotVerdict v);

}  // namespace peaklab
