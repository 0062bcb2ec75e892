#include "peaklab/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "peaklab/fft.hpp"

namespace peaklab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundarySlack = 1e-12;
}  // namespace

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Complex{0.0, 0.0});
    l1_ = 0.0;
    for (const auto& c : coeffs_) l1_ += std::abs(c);
}

CoefficientSeries CoefficientSeries::unit(int degree) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    c[0] = Complex{1.0, 0.0};
    return CoefficientSeries(std::move(c));
}

CoefficientSeries CoefficientSeries::monomial(int j, Complex c) {
    std::vector<Complex> v(static_cast<std::size_t>(j) + 1, Complex{0.0, 0.0});
    v[static_cast<std::size_t>(j)] = c;
    return CoefficientSeries(std::move(v));
}

Complex evaluate(const CoefficientSeries& a, Complex z) {
    if (std::abs(z) > 1.0 + kBoundarySlack) {
        throw std::invalid_argument("evaluation point outside the closed unit disk");
    }
    const auto c = a.coefficients();
    Complex acc = c[c.size() - 1];
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * z + c[j];
    return acc;
}

SupBracket sup_norm_estimate(const CoefficientSeries& a, int grid_size) {
    if (grid_size < 8) throw std::invalid_argument("grid size must be >= 8");
    const auto c = a.coefficients();
    double lower = 0.0;
    const bool pow2 = (grid_size & (grid_size - 1)) == 0;
    if (pow2 && grid_size >= 8192) {
        // values at the M-th roots of unity are the inverse-order DFT bins
        std::vector<Complex> buf(static_cast<std::size_t>(grid_size), Complex{0.0, 0.0});
        for (std::size_t j = 0; j < c.size(); ++j) buf[j % buf.size()] += c[j];
        fft_radix2(buf);
        for (const auto& v : buf) lower = std::max(lower, std::abs(v));
    } else {
        for (int k = 0; k < grid_size; ++k) {
            const Complex z = std::polar(1.0, kTwoPi * k / grid_size);
            lower = std::max(lower, std::abs(evaluate(a, z)));
        }
    }
    double deriv = 0.0;
    for (std::size_t j = 1; j < c.size(); ++j) deriv += static_cast<double>(j) * std::abs(c[j]);
    return {lower, lower + kTwoPi / grid_size * deriv};
}

Complex pairing(const CoefficientSeries& a, std::span<const Complex> x, PadPolicy pad) {
    const auto c = a.coefficients();
    if (x.size() < c.size() && pad == PadPolicy::reject) {
        throw std::invalid_argument("sequence shorter than series degree + 1 (no padding requested)");
    }
    const std::size_t m = std::min(c.size(), x.size());
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) acc += c[j] * x[j];
    return acc;
}

CoefficientSeries multiply_trunc(const CoefficientSeries& a, const CoefficientSeries& b,
                                 int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const auto ca = a.coefficients();
    const auto cb = b.coefficients();
    std::vector<Complex> out(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    const std::size_t na = std::min(ca.size(), out.size());
    for (std::size_t i = 0; i < na; ++i) {
        if (ca[i] == Complex{0.0, 0.0}) continue;
        const std::size_t nb = std::min(cb.size(), out.size() - i);
        for (std::size_t j = 0; j < nb; ++j) out[i + j] += ca[i] * cb[j];
    }
    return CoefficientSeries(std::move(out));
}

CoefficientSeries compose_power_series(const AnalyticGerm& F, const CoefficientSeries& g,
                                       int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (F.taylor.empty()) return CoefficientSeries(std::vector<Complex>(1, Complex{0.0, 0.0}));
    if (!(std::abs(g.coefficient(0)) < F.radius)) {
        throw std::invalid_argument("germ radius violation: |g(0)| >= radius of F");
    }
    CoefficientSeries acc(std::vector<Complex>{F.taylor.back()});
    for (std::size_t k = F.taylor.size() - 1; k-- > 0;) {
        acc = multiply_trunc(acc, g, degree);
        std::vector<Complex> c(acc.coefficients().begin(), acc.coefficients().end());
        c[0] += F.taylor[k];
        acc = CoefficientSeries(std::move(c));
    }
    return acc;
}

CoefficientSeries reciprocal_one_plus(const CoefficientSeries& F, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const Complex d0 = Complex{1.0, 0.0} + F.coefficient(0);
    if (std::abs(d0) == 0.0) {
        throw std::invalid_argument("division by zero at the constant term: 1 + F(0) = 0");
    }
    const auto cf = F.coefficients();
    std::vector<Complex> r(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    r[0] = Complex{1.0, 0.0} / d0;
    for (std::size_t j = 1; j < r.size(); ++j) {
        Complex s{0.0, 0.0};
        const std::size_t top = std::min(j, cf.size() - 1);
        for (std::size_t i = 1; i <= top; ++i) s += cf[i] * r[j - i];
        r[j] = -s / d0;
    }
    return CoefficientSeries(std::move(r));
}

CoefficientSeries mobius_postcompose(const CoefficientSeries& g, Complex g0, int degree) {
    if (std::abs(g0) == 0.0) {
        throw std::invalid_argument("g(0) = 0: nothing to move");
    }
    if (!(std::abs(g0) < 1.0)) {
        throw std::invalid_argument("|g(0)| must be < 1");
    }
    if (std::abs(g.coefficient(0) - g0) > 1e-12 * std::max(1.0, std::abs(g0))) {
        throw std::invalid_argument("supplied g0 does not match the constant coefficient of g");
    }
    const Complex phase = (Complex{1.0, 0.0} - std::conj(g0)) / (Complex{1.0, 0.0} - g0);

    std::vector<Complex> num(g.coefficients().begin(), g.coefficients().end());
    num.resize(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    num[0] -= g0;
    for (auto& c : num) c *= phase;

    std::vector<Complex> den(g.coefficients().begin(), g.coefficients().end());
    den.resize(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    for (auto& c : den) c *= -std::conj(g0);  // den = (1 - conj(g0) g) - 1

    const CoefficientSeries rec = reciprocal_one_plus(CoefficientSeries(std::move(den)), degree);
    CoefficientSeries out = multiply_trunc(CoefficientSeries(std::move(num)), rec, degree);

    std::vector<Complex> c(out.coefficients().begin(), out.coefficients().end());
    c[0] = Complex{0.0, 0.0};  // analytically zero: B(g0) = 0
    return CoefficientSeries(std::move(c));
}

}  // namespace peaklab
