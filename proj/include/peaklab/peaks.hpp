#pragma once

#include <string>
#include <vector>

#include "peaklab/cantor.hpp"
#include "peaklab/series.hpp"

namespace peaklab {

struct PeakParams {
    RatioParam xi;
    double alpha = 0.6;
    int generations = 10;  // construction steps K: gaps of generations 0..K-1
    int degree = 1 << 12;  // series truncation degree D
};

struct AdmissibilityResult {
    bool admissible = false;
    double threshold = 0.0;  // (1/2)^{1/(1-alpha)}
    std::string reason;
};

/// Lipschitz exponent in (1/2, 1) and ratio below the arc-length threshold.
AdmissibilityResult admissible_parameters(double alpha, const RatioParam& xi);

/// Closed form (1-2xi)^{1-alpha} / (1 - 2 xi^{1-alpha}); +inf when divergent.
double metric_sum_closed(const RatioParam& xi, double alpha);

/// Partial sum of the same series through gap generation K.
double metric_sum_partial(const RatioParam& xi, double alpha, int K);

/// Fourier moments c_k = int d_E(t)^{-alpha} e^{-2 pi i k t} dt over the gaps
/// of the first `generations` construction steps, k = 0..degree.
struct HerglotzWeight {
    std::vector<Complex> moments;
    double total_mass_closed = 0.0;  // W = G0 / (1 - 2 xi^{1-alpha})
    double tail_ratio = 0.0;         // 2 xi^{1-alpha}
    int generations = 0;
    std::size_t node_count = 0;
};

HerglotzWeight herglotz_weight_moments(const PeakParams& params, int quad_order = 32,
                                       double phase_cap = 25.0);

struct PeakCaps {
    double sup_slack = 1e-6;      // |G| on the probe-radius grid <= 1 + slack
    double deficiency_cap = 0.05; // max |1 - G| at stage-K endpoints
    double re_floor = -1e-6;      // min Re F on the disk grid
};

struct PeakDiagnostics {
    double sup_grid = 0.0;        // max |G| over the angular grid at sup_radius
    double sup_radius = 0.0;      // 1 - 1/D
    int sup_grid_size = 0;
    double min_re_herglotz = 0.0; // min Re F over the disk grid (quotient builds only)
    double deficiency = 0.0;      // max |1 - G| over stage endpoints at sup_radius
    int endpoint_count = 0;
    double series_l1 = 0.0;
    double division_residual = 0.0;  // max |((1+F) * recip - 1)_j|
    bool caps_ok = false;
};

struct PeakCandidate {
    PeakParams params;
    CoefficientSeries series;
    Complex beta{1.0, 0.0};
    PeakDiagnostics diagnostics;
    HerglotzWeight weight;  // moments empty for derived candidates
};

/// Herglotz pipeline: F = (c0, 2c1, 2c2, ...), G = F / (1 + F) truncated to
/// the configured degree, peak value normalized to 1, full diagnostics.
PeakCandidate build_peak_candidate(const PeakParams& params, const PeakCaps& caps = {});

/// Weak-peak to peak conversion (f/beta + 1)/2.
CoefficientSeries weak_to_peak(const CoefficientSeries& f, Complex beta);

/// Blaschke post-composition moving the origin value to exactly 0 while
/// keeping the peak value 1; diagnostics recomputed.
PeakCandidate vanish_at_origin(const PeakCandidate& g, const PeakCaps& caps = {});

}  // namespace peaklab
