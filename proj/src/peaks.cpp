#include "peaklab/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "peaklab/quadrature.hpp"

namespace peaklab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AdmissibilityResult admissible_parameters(double alpha, const RatioParam& xi) {
    AdmissibilityResult res;
    if (!(alpha > 0.5 && alpha < 1.0)) {
        res.threshold = 0.0;
        res.reason = "alpha must lie in (1/2, 1) for l^1 membership of the Lipschitz class";
        return res;
    }
    res.threshold = std::pow(0.5, 1.0 / (1.0 - alpha));
    if (!(xi.value_d() < res.threshold)) {
        std::ostringstream oss;
        oss << "xi = " << xi.str() << " is not below the threshold " << res.threshold;
        res.reason = oss.str();
        return res;
    }
    res.admissible = true;
    res.reason = "admissible";
    return res;
}

double metric_sum_closed(const RatioParam& xi, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    const double ratio = 2.0 * std::pow(xi.value_d(), 1.0 - alpha);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(1.0 - 2.0 * xi.value_d(), 1.0 - alpha) / (1.0 - ratio);
}

double metric_sum_partial(const RatioParam& xi, double alpha, int K) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    if (K < 0) throw std::invalid_argument("K must be nonnegative");
    const double ratio = 2.0 * std::pow(xi.value_d(), 1.0 - alpha);
    const double head = std::pow(1.0 - 2.0 * xi.value_d(), 1.0 - alpha);
    double acc = 0.0;
    double term = 1.0;
    for (int k = 0; k <= K; ++k) {
        acc += term;
        term *= ratio;
    }
    return head * acc;
}

HerglotzWeight herglotz_weight_moments(const PeakParams& params, int quad_order,
                                       double phase_cap) {
    const AdmissibilityResult adm = admissible_parameters(params.alpha, params.xi);
    if (!adm.admissible) throw std::invalid_argument("parameters not admissible: " + adm.reason);
    if (params.generations < 1) throw std::invalid_argument("need at least one generation");
    if (params.degree < 0) throw std::invalid_argument("degree must be nonnegative");

    const double alpha = params.alpha;
    const double beta = 1.0 - alpha;
    const GaussLegendreRule rule(quad_order);

    // Quadrature node set shared by all frequencies k <= degree. Each half-gap
    // [0, h] (s = distance to the singular endpoint) is covered by one panel
    // in the substituted variable u = s^{1-alpha} over [0, s0] plus plain
    // panels of length <= phase_cap / (2 pi D) on [s0, h].
    std::vector<double> ts;   // positions t
    std::vector<double> ws;   // weights including d^{-alpha}
    const double ell = params.degree > 0
                           ? phase_cap / (kTwoPi * static_cast<double>(params.degree))
                           : std::numeric_limits<double>::infinity();

    auto add_half_gap = [&](double endpoint, double sign, double h) {
        const double s0 = std::min(h, ell);
        // singular panel: int_0^{s0} s^{-alpha} f(s) ds = (1/beta) int_0^{U0} f(u^{1/beta}) du
        const double U0 = std::pow(s0, beta);
        for (int q = 0; q < rule.order(); ++q) {
            const double u = 0.5 * U0 * (rule.nodes()[static_cast<std::size_t>(q)] + 1.0);
            const double s = std::pow(u, 1.0 / beta);
            ts.push_back(endpoint + sign * s);
            ws.push_back(0.5 * U0 * rule.weights()[static_cast<std::size_t>(q)] / beta);
        }
        if (h > s0) {
            const int panels = static_cast<int>(std::ceil((h - s0) / ell));
            const double step = (h - s0) / panels;
            for (int p = 0; p < panels; ++p) {
                const double a = s0 + p * step;
                for (int q = 0; q < rule.order(); ++q) {
                    const double s = a + 0.5 * step * (rule.nodes()[static_cast<std::size_t>(q)] + 1.0);
                    ts.push_back(endpoint + sign * s);
                    ws.push_back(0.5 * step * rule.weights()[static_cast<std::size_t>(q)] *
                                 std::pow(s, -alpha));
                }
            }
        }
    };

    for (const Gap& gap : gaps_through(params.xi, params.generations)) {
        const double h = 0.5 * (gap.right - gap.left);
        add_half_gap(gap.left, +1.0, h);   // distance to the left endpoint
        add_half_gap(gap.right, -1.0, h);  // distance to the right endpoint
    }

    HerglotzWeight out;
    out.generations = params.generations;
    out.tail_ratio = 2.0 * std::pow(params.xi.value_d(), beta);
    const double g0 = 2.0 * std::pow(0.5 * (1.0 - 2.0 * params.xi.value_d()), beta) / beta;
    out.total_mass_closed = g0 / (1.0 - out.tail_ratio);
    out.node_count = ts.size();

    out.moments.resize(static_cast<std::size_t>(params.degree) + 1);
    std::vector<Complex> cur(ts.size());
    std::vector<Complex> base(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        cur[i] = Complex{ws[i], 0.0};
        base[i] = std::polar(1.0, -kTwoPi * ts[i]);
    }
    for (int k = 0; k <= params.degree; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < cur.size(); ++i) {
            acc += cur[i];
            cur[i] *= base[i];
        }
        out.moments[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

namespace {

/// Shared diagnostics at the probe radius 1 - 1/D.
void probe_diagnostics(const CoefficientSeries& g, const PeakParams& params,
                       PeakDiagnostics& diag, int sup_grid_size = 4096) {
    const int D = std::max(params.degree, 2);
    const double r = 1.0 - 1.0 / static_cast<double>(D);
    diag.sup_radius = r;
    diag.sup_grid_size = sup_grid_size;
    diag.sup_grid = 0.0;
    for (int j = 0; j < sup_grid_size; ++j) {
        const Complex z = std::polar(r, kTwoPi * j / sup_grid_size);
        diag.sup_grid = std::max(diag.sup_grid, std::abs(evaluate(g, z)));
    }
    const std::vector<double> endpoints = stage_endpoints(params.xi, params.generations);
    diag.endpoint_count = static_cast<int>(endpoints.size());
    diag.deficiency = 0.0;
    for (const double t : endpoints) {
        const Complex z = std::polar(r, kTwoPi * t);
        diag.deficiency = std::max(diag.deficiency, std::abs(Complex{1.0, 0.0} - evaluate(g, z)));
    }
    diag.series_l1 = g.l1_norm();
}

}  // namespace

PeakCandidate build_peak_candidate(const PeakParams& params, const PeakCaps& caps) {
    PeakCandidate cand;
    cand.params = params;
    cand.weight = herglotz_weight_moments(params);

    // Herglotz kernel expansion: F = c0 + 2 sum_{k>=1} c_k z^k has Re F > 0
    std::vector<Complex> fc(cand.weight.moments.begin(), cand.weight.moments.end());
    for (std::size_t k = 1; k < fc.size(); ++k) fc[k] *= 2.0;
    const CoefficientSeries F(std::move(fc));

    const CoefficientSeries recip = reciprocal_one_plus(F, params.degree);
    cand.series = multiply_trunc(F, recip, params.degree);
    cand.beta = Complex{1.0, 0.0};

    // division residual: (1 + F) * recip - 1 through the degree
    {
        std::vector<Complex> onef(F.coefficients().begin(), F.coefficients().end());
        onef[0] += 1.0;
        const CoefficientSeries prod =
            multiply_trunc(CoefficientSeries(std::move(onef)), recip, params.degree);
        double worst = std::abs(prod.coefficient(0) - Complex{1.0, 0.0});
        for (int j = 1; j <= prod.degree(); ++j) {
            worst = std::max(worst, std::abs(prod.coefficient(j)));
        }
        cand.diagnostics.division_residual = worst;
    }

    probe_diagnostics(cand.series, params, cand.diagnostics);

    // min Re F over the dyadic disk grid capped at the probe radius
    {
        const int angles = 512;
        double minre = std::numeric_limits<double>::infinity();
        const int kmax = static_cast<int>(std::round(std::log2(std::max(params.degree, 2))));
        for (int k = 0; k <= kmax; ++k) {
            const double r = 1.0 - std::ldexp(1.0, -k);
            for (int j = 0; j < angles; ++j) {
                const Complex z = std::polar(r, kTwoPi * j / angles);
                minre = std::min(minre, evaluate(F, z).real());
            }
        }
        cand.diagnostics.min_re_herglotz = minre;
    }

    cand.diagnostics.caps_ok = cand.diagnostics.sup_grid <= 1.0 + caps.sup_slack &&
                               cand.diagnostics.deficiency <= caps.deficiency_cap &&
                               cand.diagnostics.min_re_herglotz >= caps.re_floor;
    return cand;
}

CoefficientSeries weak_to_peak(const CoefficientSeries& f, Complex beta) {
    if (beta == Complex{0.0, 0.0}) throw std::invalid_argument("beta must be nonzero");
    std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
    for (auto& v : c) v /= 2.0 * beta;
    c[0] += 0.5;
    return CoefficientSeries(std::move(c));
}

PeakCandidate vanish_at_origin(const PeakCandidate& g, const PeakCaps& caps) {
    const Complex g0 = g.series.coefficient(0);
    PeakCandidate out;
    out.params = g.params;
    out.weight.total_mass_closed = g.weight.total_mass_closed;
    out.weight.tail_ratio = g.weight.tail_ratio;
    out.weight.generations = g.weight.generations;
    out.series = mobius_postcompose(g.series, g0, g.params.degree);
    out.beta = g.beta;
    probe_diagnostics(out.series, out.params, out.diagnostics);
    out.diagnostics.min_re_herglotz = g.diagnostics.min_re_herglotz;
    out.diagnostics.division_residual = g.diagnostics.division_residual;
    out.diagnostics.caps_ok = out.diagnostics.sup_grid <= 1.0 + caps.sup_slack &&
                              out.diagnostics.deficiency <= caps.deficiency_cap;
    return out;
}

}  // namespace peaklab
