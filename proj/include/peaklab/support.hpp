#pragma once

#include <string>
#include <variant>
#include <vector>

#include "peaklab/cantor.hpp"
#include "peaklab/series.hpp"

namespace peaklab {

/// Finitely supported probability measure on the closed disk.
struct DiskAtomSet {
    std::vector<Complex> atoms;
    std::vector<double> weights;

    void validate() const;  // weights >= 0 summing to 1 (1e-12), |atoms| <= 1
};

struct MomentVector {
    std::vector<Complex> entries;  // y_0..y_D
    std::string source;

    int degree() const { return static_cast<int>(entries.size()) - 1; }
};

/// phi_lambda = (lambda^j)_{j=0..D}, |lambda| < 1.
MomentVector phi_lambda(Complex lambda, int degree);

/// y_j = sum_k w_k zeta_k^j.
MomentVector moment_vector(const DiskAtomSet& atoms, int degree);

/// y_j = sigma-hat(-j) of the Cantor measure (product formula, per-index tol).
MomentVector cantor_moment_vector(const RatioParam& xi, int degree, double tol = 1e-12);

/// Equal arcs [ (k-1)/n, k/n ) with atoms at radius cos(pi/n) under the arc
/// midpoints, so every atom is within pi/n of every point of its arc.
struct DiscretizationGrid {
    int arc_count = 0;
    double radius = 0.0;

    static DiscretizationGrid make(int n);
    double atom_angle(int k) const;  // in circle parameter t in [0,1), k = 1..n
    Complex atom(int k) const;
};

/// Circle probability measures supporting exact arc masses.
struct LebesgueCircle {};
struct CantorStageCircle {
    RatioParam xi;
    int stage = 0;
};
struct AtomCircle {
    std::vector<Rational> angles;  // in [0,1)
    std::vector<double> weights;
};
using CircleMeasure = std::variant<LebesgueCircle, CantorStageCircle, AtomCircle>;

/// Mass of [t0, t1) under the measure, exact rational arithmetic throughout.
Rational arc_mass(const CircleMeasure& nu, const Rational& t0, const Rational& t1);

/// Riemann-sum style discretization of the lemma: n atoms at radius cos(pi/n)
/// weighted by the arc masses.
DiskAtomSet discretize_measure(const CircleMeasure& nu, int n);

struct SupSearchConfig {
    int angular = 4096;      // grid angles per circle
    int radial_max_k = 20;   // radii 1 - 2^{-k}, k = 0..radial_max_k
};

struct SupSearchResult {
    double best = 0.0;
    Complex witness_atom{0.0, 0.0};
    DiskAtomSet witness;
};

/// Maximizes |<a, phi_lambda>| = |f_a(lambda)| over the radial-angular grid;
/// single atoms suffice since convex combinations cannot exceed their best atom.
SupSearchResult sup_over_s0(const CoefficientSeries& a, const SupSearchConfig& cfg = {});

struct SupportConfig {
    int grid_size = 4096;  // boundary grid for the sup-norm bracket
    double tau = 0.2;      // verdict slack: supported iff |p| >= (1 - tau) L
};

struct SupportReport {
    Complex pairing_value{0.0, 0.0};
    double sup_lower = 0.0;
    double sup_upper = 0.0;
    double ratio = 0.0;  // |p| / sup_upper
    bool supported = false;
    bool trivial = false;
    int degree = 0;
    double truncation_residual = 0.0;
};

/// Checks the support-pair identity |<b, y>| = ||f_b||_inf at finite
/// truncation: pairing against the sup-norm bracket of f_b.
SupportReport verify_support_pair(const CoefficientSeries& b, const MomentVector& y,
                                  const SupportConfig& cfg = {});

struct CrosscheckResult {
    Complex series_side{0.0, 0.0};    // sum b_j sigma-hat(-j), limit measure
    Complex integral_side{0.0, 0.0};  // integral of f_b against stage measure
    double bound = 0.0;               // ||b||_1 2 pi D xi^m + coefficient tails
};

/// Two independent evaluations of <b, y>: coefficient pairing vs per-interval
/// Gauss-Legendre integration of f_b over the stage-m support.
CrosscheckResult pairing_crosscheck(const CoefficientSeries& b, const RatioParam& xi,
                                    int stage, int degree, int quad_order = 16);

}  // namespace peaklab
