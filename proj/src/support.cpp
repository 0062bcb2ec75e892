#include "peaklab/support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "peaklab/fourier.hpp"
#include "peaklab/quadrature.hpp"

namespace peaklab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void DiskAtomSet::validate() const {
    if (atoms.size() != weights.size()) {
        throw std::invalid_argument("atom/weight count mismatch");
    }
    double sum = 0.0;
    for (const double w : weights) {
        if (w < 0.0) throw std::invalid_argument("negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("weights must sum to 1 within 1e-12");
    }
    for (const auto& z : atoms) {
        if (std::abs(z) > 1.0 + 1e-12) {
            throw std::invalid_argument("atom outside the closed disk");
        }
    }
}

MomentVector phi_lambda(Complex lambda, int degree) {
    if (!(std::abs(lambda) < 1.0)) {
        throw std::invalid_argument("phi_lambda requires |lambda| < 1");
    }
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    MomentVector out;
    out.entries.resize(static_cast<std::size_t>(degree) + 1);
    Complex p{1.0, 0.0};
    for (auto& e : out.entries) {
        e = p;
        p *= lambda;
    }
    out.source = "dirac";
    return out;
}

MomentVector moment_vector(const DiskAtomSet& atoms, int degree) {
    atoms.validate();
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    MomentVector out;
    out.entries.assign(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    std::vector<Complex> pw(atoms.atoms.size(), Complex{1.0, 0.0});
    for (auto& e : out.entries) {
        Complex s{0.0, 0.0};
        for (std::size_t k = 0; k < pw.size(); ++k) {
            s += atoms.weights[k] * pw[k];
            pw[k] *= atoms.atoms[k];
        }
        e = s;
    }
    out.source = "atoms";
    return out;
}

MomentVector cantor_moment_vector(const RatioParam& xi, int degree, double tol) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    MomentVector out;
    out.entries.resize(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j) {
        // y_j = sigma-hat(-j); the product formula is real and even in n
        out.entries[static_cast<std::size_t>(j)] = fs_coeff_product(xi, -j, tol).value;
    }
    out.source = "cantor " + xi.str();
    return out;
}

DiscretizationGrid DiscretizationGrid::make(int n) {
    if (n < 2) throw std::invalid_argument("arc count must be >= 2");
    return {n, std::cos(std::numbers::pi / n)};
}

double DiscretizationGrid::atom_angle(int k) const {
    return (2.0 * k - 1.0) / (2.0 * arc_count);
}

Complex DiscretizationGrid::atom(int k) const {
    return std::polar(radius, kTwoPi * atom_angle(k));
}

Rational arc_mass(const CircleMeasure& nu, const Rational& t0, const Rational& t1) {
    if (t1 < t0) throw std::invalid_argument("backwards arc");
    if (std::holds_alternative<LebesgueCircle>(nu)) {
        return t1 - t0;
    }
    if (const auto* atomic = std::get_if<AtomCircle>(&nu)) {
        double acc = 0.0;
        for (std::size_t i = 0; i < atomic->angles.size(); ++i) {
            if (atomic->angles[i] >= t0 && atomic->angles[i] < t1) acc += atomic->weights[i];
        }
        return Rational(acc);
    }
    const auto& cs = std::get<CantorStageCircle>(nu);
    const IntervalSet st = cantor_stage(cs.xi, cs.stage);
    Rational overlap(0);
    for (const auto& [a, b] : st.intervals) {
        if (b <= t0) continue;
        if (a >= t1) break;
        const Rational lo = std::max(a, t0);
        const Rational hi = std::min(b, t1);
        if (hi > lo) overlap += hi - lo;
    }
    // normalized restriction: divide by |E_m| = (2 xi)^m
    const Rational total = rational_pow(2 * cs.xi.value(), static_cast<unsigned>(cs.stage));
    return overlap / total;
}

DiskAtomSet discretize_measure(const CircleMeasure& nu, int n) {
    const DiscretizationGrid grid = DiscretizationGrid::make(n);
    DiskAtomSet out;
    out.atoms.reserve(static_cast<std::size_t>(n));
    out.weights.reserve(static_cast<std::size_t>(n));

    // cache the stage intervals once for the Cantor case
    const CantorStageCircle* cs = std::get_if<CantorStageCircle>(&nu);
    IntervalSet stage_cache;
    Rational stage_total(1);
    if (cs != nullptr) {
        stage_cache = cantor_stage(cs->xi, cs->stage);
        stage_total = rational_pow(2 * cs->xi.value(), static_cast<unsigned>(cs->stage));
    }

    std::size_t cursor = 0;  // sweep over sorted stage intervals
    for (int k = 1; k <= n; ++k) {
        const Rational t0(k - 1, n);
        const Rational t1(k, n);
        Rational mass(0);
        if (cs != nullptr) {
            while (cursor < stage_cache.intervals.size() &&
                   stage_cache.intervals[cursor].second <= t0) {
                ++cursor;
            }
            for (std::size_t i = cursor; i < stage_cache.intervals.size(); ++i) {
                const auto& [a, b] = stage_cache.intervals[i];
                if (a >= t1) break;
                const Rational lo = std::max(a, t0);
                const Rational hi = std::min(b, t1);
                if (hi > lo) mass += hi - lo;
            }
            mass /= stage_total;
        } else {
            mass = arc_mass(nu, t0, t1);
        }
        out.atoms.push_back(grid.atom(k));
        out.weights.push_back(to_double(mass));
    }
    out.validate();
    return out;
}

SupSearchResult sup_over_s0(const CoefficientSeries& a, const SupSearchConfig& cfg) {
    if (a.l1_norm() == 0.0) throw std::invalid_argument("zero functional");
    if (cfg.angular < 1 || cfg.radial_max_k < 0) throw std::invalid_argument("bad grid");
    SupSearchResult res;
    res.best = -1.0;
    // angles outer, radii inner: first strict maximum wins, which realizes the
    // smallest-angle-then-smallest-radius tie break
    for (int j = 0; j < cfg.angular; ++j) {
        const double angle = kTwoPi * j / cfg.angular;
        for (int k = 0; k <= cfg.radial_max_k; ++k) {
            const double r = 1.0 - std::ldexp(1.0, -k);
            const Complex z = std::polar(r, angle);
            const double v = std::abs(evaluate(a, z));
            if (v > res.best) {
                res.best = v;
                res.witness_atom = z;
            }
        }
    }
    res.witness.atoms = {res.witness_atom};
    res.witness.weights = {1.0};
    return res;
}

SupportReport verify_support_pair(const CoefficientSeries& b, const MomentVector& y,
                                  const SupportConfig& cfg) {
    if (y.degree() < b.degree()) {
        throw std::invalid_argument("moment vector shorter than functional degree");
    }
    SupportReport rep;
    rep.degree = b.degree();
    rep.trivial = true;
    for (int j = 1; j <= b.degree(); ++j) {
        if (b.coefficient(j) != Complex{0.0, 0.0}) {
            rep.trivial = false;
            break;
        }
    }
    rep.pairing_value = pairing(b, y.entries, PadPolicy::zero_pad);
    const SupBracket br = sup_norm_estimate(b, cfg.grid_size);
    rep.sup_lower = br.lower;
    rep.sup_upper = br.upper;
    rep.ratio = br.upper > 0.0 ? std::abs(rep.pairing_value) / br.upper : 0.0;
    rep.supported = std::abs(rep.pairing_value) >= (1.0 - cfg.tau) * br.lower;
    rep.truncation_residual = br.upper - br.lower;  // bracket width at this grid
    return rep;
}

CrosscheckResult pairing_crosscheck(const CoefficientSeries& b, const RatioParam& xi,
                                    int stage, int degree, int quad_order) {
    if (b.degree() > degree) {
        throw std::invalid_argument("functional degree exceeds declared degree");
    }
    CrosscheckResult out;
    double coeff_tails = 0.0;
    {
        Complex acc{0.0, 0.0};
        for (int j = 0; j <= b.degree(); ++j) {
            const FsCoeff c = fs_coeff_product(xi, -j);
            acc += b.coefficient(j) * c.value;
            coeff_tails += std::abs(b.coefficient(j)) * c.tail_bound;
        }
        out.series_side = acc;
    }
    {
        const GaussLegendreRule rule(quad_order);
        const IntervalSet st = cantor_stage(xi, stage);
        Complex acc{0.0, 0.0};
        for (const auto& [ra, rb] : st.intervals) {
            const double a = to_double(ra);
            const double bb = to_double(rb);
            const double c = 0.5 * (a + bb);
            const double h = 0.5 * (bb - a);
            Complex iv{0.0, 0.0};
            for (int q = 0; q < rule.order(); ++q) {
                const double t = c + h * rule.nodes()[static_cast<std::size_t>(q)];
                iv += rule.weights()[static_cast<std::size_t>(q)] *
                      evaluate(b, std::polar(1.0, kTwoPi * t));
            }
            acc += 0.5 * iv;  // average over the interval: (1/2) int_{-1}^{1}
        }
        out.integral_side = acc / static_cast<double>(st.intervals.size());
    }
    out.bound = b.l1_norm() * kTwoPi * degree * std::pow(xi.value_d(), stage) + coeff_tails;
    return out;
}

}  // namespace peaklab
