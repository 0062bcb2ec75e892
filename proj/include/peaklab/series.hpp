#pragma once

#include <complex>
#include <span>
#include <vector>

namespace peaklab {

using Complex = std::complex<double>;

/// Truncated element of the Wiener algebra: Taylor coefficients a_0..a_D
/// with the l^1 norm cached at construction. Immutable after construction.
class CoefficientSeries {
public:
    CoefficientSeries() : coeffs_(1, Complex{0.0, 0.0}), l1_(0.0) {}
    explicit CoefficientSeries(std::vector<Complex> coeffs);
    CoefficientSeries(std::initializer_list<Complex> coeffs)
        : CoefficientSeries(std::vector<Complex>(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Complex& coefficient(int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
    std::span<const Complex> coefficients() const { return coeffs_; }
    double l1_norm() const { return l1_; }

    static CoefficientSeries unit(int degree = 0);           // 1, 0, 0, ...
    static CoefficientSeries monomial(int j, Complex c = {1.0, 0.0});

private:
    std::vector<Complex> coeffs_;
    double l1_;
};

/// Horner evaluation of f_a(z); rejects |z| > 1 (series only controlled on
/// the closed disk).
Complex evaluate(const CoefficientSeries& a, Complex z);

inline double wiener_norm(const CoefficientSeries& a) { return a.l1_norm(); }

struct SupBracket {
    double lower = 0.0;  // max |f_a| over the M-th roots of unity
    double upper = 0.0;  // lower + (2 pi / M) sum j |a_j|
};

/// Boundary-grid sup-norm bracket with the circle-derivative correction.
/// Power-of-two grids of size >= 8192 are evaluated via an internal FFT.
SupBracket sup_norm_estimate(const CoefficientSeries& a, int grid_size);

enum class PadPolicy { reject, zero_pad };

/// <a, x> = sum_j a_j x_j; x shorter than degree+1 is an error unless
/// zero padding was requested.
Complex pairing(const CoefficientSeries& a, std::span<const Complex> x,
                PadPolicy pad = PadPolicy::reject);

/// Degree-truncated product of two coefficient series.
CoefficientSeries multiply_trunc(const CoefficientSeries& a, const CoefficientSeries& b,
                                 int degree);

/// Analytic germ at 0: Taylor coefficients plus the radius on which the
/// expansion is declared valid (infinity for polynomials).
struct AnalyticGerm {
    std::vector<Complex> taylor;
    double radius = std::numeric_limits<double>::infinity();
};

/// Degree-D truncation of F(g(z)) by Horner recursion on series;
/// exact for polynomial F. Requires |g(0)| < F.radius.
CoefficientSeries compose_power_series(const AnalyticGerm& F, const CoefficientSeries& g,
                                       int degree);

/// Degree-D truncation of 1 / (1 + F) by long division; requires 1 + F(0) != 0.
CoefficientSeries reciprocal_one_plus(const CoefficientSeries& F, int degree);

/// Degree-D truncation of B(g(z)) for the disk automorphism
/// B(w) = e^{i gamma} (w - g0) / (1 - conj(g0) w), with the phase chosen so
/// that B(1) = 1. The output constant term is exactly zero.
CoefficientSeries mobius_postcompose(const CoefficientSeries& g, Complex g0, int degree);

}  // namespace peaklab
