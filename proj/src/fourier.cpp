#include "peaklab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace peaklab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}
}  // namespace

FsCoeff fs_coeff_product(const RatioParam& xi, std::int64_t n, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (n == 0) return {std::complex<double>(1.0, 0.0), 0.0, 0};

    const double r = xi.value_d();
    const double an = static_cast<double>(n < 0 ? -n : n);
    // theta_k = pi n xi^{k-1} (1 - xi); tail after K terms is a geometric
    // sum of theta^2/2 with ratio xi^2.
    double theta = std::numbers::pi * an * (1.0 - r);
    const double tail_factor = 1.0 / (2.0 * (1.0 - r * r));
    double prod = 1.0;
    int terms = 0;
    double tail = theta * theta * tail_factor;
    while (tail >= tol) {
        prod *= std::cos(theta);
        theta *= r;
        ++terms;
        tail = theta * theta * tail_factor;
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return {std::complex<double>(sign * prod, 0.0), tail, terms};
}

std::complex<double> fs_coeff_oracle(const RatioParam& xi, int stage, std::int64_t n,
                                     int max_stage) {
    if (stage < 0) throw std::invalid_argument("stage must be nonnegative");
    if (stage > max_stage) throw std::invalid_argument("stage above configured maximum");
    const double r = xi.value_d();
    const std::size_t count = std::size_t{1} << stage;

    // Left endpoints of the stage intervals: a + {0, (1-xi) xi^k} per step.
    std::vector<double> lefts{0.0};
    lefts.reserve(count);
    double scale = 1.0;
    for (int k = 0; k < stage; ++k) {
        const double shift = (1.0 - r) * scale;
        const std::size_t sz = lefts.size();
        for (std::size_t i = 0; i < sz; ++i) lefts.push_back(lefts[i] + shift);
        scale *= r;
    }

    if (n == 0) return {1.0, 0.0};
    const double len = scale;  // xi^stage
    const double theta = -kTwoPi * static_cast<double>(n) * len;
    // average of e^{-2 pi i n t} over [a, a+len] = e^{-2 pi i n a} e^{i theta/2} sinc(theta/2)
    const std::complex<double> arcfactor =
        std::polar(sinc(theta / 2.0), theta / 2.0);
    std::complex<double> sum{0.0, 0.0};
    for (const double a : lefts) {
        sum += std::polar(1.0, -kTwoPi * static_cast<double>(n) * a);
    }
    return sum * arcfactor / static_cast<double>(count);
}

double oracle_error_bound(const RatioParam& xi, int stage, std::int64_t n) {
    const double an = static_cast<double>(n < 0 ? -n : n);
    return kTwoPi * an * std::pow(xi.value_d(), stage);
}

int oracle_stage_for(const RatioParam& xi, std::int64_t n, double target, int max_stage) {
    if (!(target > 0.0)) throw std::invalid_argument("target bound must be positive");
    for (int m = 0; m <= max_stage; ++m) {
        if (oracle_error_bound(xi, m, n) < target) return m;
    }
    throw std::invalid_argument("no stage within configured maximum meets the target bound");
}

const TableRow& FourierCoefficientTable::at(std::int64_t n) const {
    // rows are contiguous in n by construction
    if (rows.empty() || n < rows.front().n || n > rows.back().n) {
        throw std::out_of_range("index not covered by the table");
    }
    return rows[static_cast<std::size_t>(n - rows.front().n)];
}

FourierCoefficientTable coefficient_table(const RatioParam& xi, std::int64_t n0,
                                          std::int64_t n1, CoeffMethod method, double tol,
                                          int stage) {
    if (n1 < n0) throw std::invalid_argument("empty index range");
    FourierCoefficientTable table;
    table.ratio = xi;
    table.method = method;
    table.rows.reserve(static_cast<std::size_t>(n1 - n0 + 1));
    if (method == CoeffMethod::product) {
        table.tol = tol;
        for (std::int64_t n = n0; n <= n1; ++n) {
            const FsCoeff c = fs_coeff_product(xi, n, tol);
            table.rows.push_back({n, c.value, c.tail_bound});
        }
    } else {
        if (stage < 0) throw std::invalid_argument("oracle method requires a stage");
        table.oracle_stage = stage;
        for (std::int64_t n = n0; n <= n1; ++n) {
            table.rows.push_back(
                {n, fs_coeff_oracle(xi, stage, n), oracle_error_bound(xi, stage, n)});
        }
    }
    return table;
}

std::vector<DecayBlock> decay_profile(const FourierCoefficientTable& table, int k0, int k1) {
    if (k0 < 0 || k1 < k0) throw std::invalid_argument("bad block range");
    if (table.rows.empty()) throw std::invalid_argument("empty table");
    const std::int64_t lo = table.rows.front().n;
    const std::int64_t hi = table.rows.back().n;
    if (lo > (std::int64_t{1} << k0) || hi < (std::int64_t{1} << (k1 + 1)) - 1) {
        throw std::invalid_argument("table does not cover requested blocks");
    }
    std::vector<DecayBlock> out;
    out.reserve(static_cast<std::size_t>(k1 - k0 + 1));
    for (int k = k0; k <= k1; ++k) {
        double mx = 0.0;
        for (std::int64_t n = std::int64_t{1} << k; n < (std::int64_t{1} << (k + 1)); ++n) {
            mx = std::max(mx, std::abs(table.at(n).value));
        }
        out.push_back({k, mx});
    }
    return out;
}

std::string method_name(CoeffMethod m) {
    return m == CoeffMethod::product ? "product" : "oracle";
}

}  // namespace peaklab
