#include "peaklab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace peaklab {

GaussLegendreRule::GaussLegendreRule(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    const int n = order;
    nodes_.resize(static_cast<std::size_t>(n));
    weights_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const std::size_t lo = static_cast<std::size_t>(i);
        const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
        nodes_[lo] = -x;
        nodes_[hi] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights_[lo] = w;
        weights_[hi] = w;
    }
}

}  // namespace peaklab
