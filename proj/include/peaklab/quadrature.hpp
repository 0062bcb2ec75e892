#pragma once

#include <vector>

namespace peaklab {

/// Gauss-Legendre rule on [-1, 1], nodes ascending. Computed once by Newton
/// iteration on the Legendre recurrence.
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

}  // namespace peaklab
