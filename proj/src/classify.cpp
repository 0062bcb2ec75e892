#include "peaklab/classify.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace peaklab {

namespace {

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::int64_t>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) {
        companion(i, d - 1) = -static_cast<double>(coeffs[static_cast<std::size_t>(d - i)]);
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return roots;
}

bool is_real_root(const std::complex<double>& z, double tol) {
    return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z));
}

}  // namespace

PisotResult pisot_check(const std::vector<std::int64_t>& coeffs, double tol) {
    if (coeffs.empty() || std::all_of(coeffs.begin(), coeffs.end(),
                                      [](std::int64_t c) { return c == 0; })) {
        throw std::invalid_argument("zero polynomial");
    }
    if (coeffs.front() != 1) throw std::invalid_argument("polynomial must be monic");
    if (coeffs.size() < 2) throw std::invalid_argument("polynomial degree must be >= 1");

    PisotResult res;
    res.roots = polynomial_roots(coeffs);

    std::vector<std::complex<double>> others;
    int dominant_count = 0;
    for (const auto& z : res.roots) {
        if (is_real_root(z, tol) && z.real() > 1.0) {
            ++dominant_count;
            if (dominant_count == 1) {
                res.dominant = z.real();
                continue;
            }
        }
        others.push_back(z);
    }

    std::ostringstream oss;
    if (dominant_count != 1) {
        res.verdict = PisotVerdict::NotPisot;
        oss << dominant_count << " real roots > 1 (need exactly one)";
        res.detail = oss.str();
        return res;
    }

    bool near_circle = false;
    bool outside = false;
    double worst = 0.0;
    for (const auto& z : others) {
        const double m = std::abs(z);
        worst = std::max(worst, m);
        if (m >= 1.0 - tol && m <= 1.0 + tol) near_circle = true;
        else if (m > 1.0 + tol) outside = true;
    }
    if (outside) {
        res.verdict = PisotVerdict::NotPisot;
        oss << "conjugate of modulus " << worst << " outside the unit disk";
    } else if (near_circle) {
        res.verdict = PisotVerdict::Inconclusive;
        oss << "conjugate modulus within " << tol << " of 1; refine precision";
    } else {
        res.verdict = PisotVerdict::Pisot;
        oss << "dominant root " << res.dominant << ", max conjugate modulus " << worst;
    }
    res.detail = oss.str();
    return res;
}

ClassificationVerdict rajchman_classify(const RatioParam& xi, double tol) {
    ClassificationVerdict out;
    std::ostringstream oss;
    if (xi.inverse_min_poly) {
        PisotResult pr;
        try {
            pr = pisot_check(*xi.inverse_min_poly, tol);
        } catch (const std::exception& e) {
            out.verdict = RajchmanVerdict::Unknown;
            oss << "invalid algebraic tag: " << e.what();
            out.evidence = oss.str();
            return out;
        }
        out.roots = pr.roots;
        switch (pr.verdict) {
            case PisotVerdict::Pisot:
                out.verdict = RajchmanVerdict::NotRajchman_PisotReciprocal;
                oss << "1/xi is Pisot: " << pr.detail;
                break;
            case PisotVerdict::NotPisot:
                out.verdict = RajchmanVerdict::Rajchman_NotPisotReciprocal;
                oss << "1/xi is not Pisot: " << pr.detail;
                break;
            case PisotVerdict::Inconclusive:
                out.verdict = RajchmanVerdict::Unknown;
                oss << "Pisot check inconclusive: " << pr.detail;
                break;
        }
        out.evidence = oss.str();
        return out;
    }
    if (xi.num == 1) {
        out.verdict = RajchmanVerdict::NotRajchman_IntegerReciprocal;
        oss << "1/xi = " << xi.den << " is a positive integer";
    } else {
        out.verdict = RajchmanVerdict::Rajchman_RationalNonIntegerReciprocal;
        oss << "1/xi = " << xi.den << "/" << xi.num
            << " is rational but not an integer, hence not an algebraic integer";
    }
    out.evidence = oss.str();
    return out;
}

std::string verdict_name(RajchmanVerdict v) {
    switch (v) {
        case RajchmanVerdict::NotRajchman_IntegerReciprocal:
            return "NotRajchman_IntegerReciprocal";
        case RajchmanVerdict::NotRajchman_PisotReciprocal:
            return "NotRajchman_PisotReciprocal";
        case RajchmanVerdict::Rajchman_RationalNonIntegerReciprocal:
            return "Rajchman_RationalNonIntegerReciprocal";
        case RajchmanVerdict::Rajchman_NotPisotReciprocal:
            return "Rajchman_NotPisotReciprocal";
        case RajchmanVerdict::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

std::string verdict_name(PisotVerdict v) {
    switch (v) {
        case PisotVerdict::Pisot: return "Pisot";
        case PisotVerdict::NotPisot: return "NotPisot";
        case PisotVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

}  // namespace peaklab
