#include "peaklab/cantor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace peaklab {

RatioParam::RatioParam(std::int64_t p, std::int64_t q,
                       std::optional<std::vector<std::int64_t>> tag)
    : num(p), den(q), inverse_min_poly(std::move(tag)) {
    if (den <= 0 || num <= 0) {
        throw std::invalid_argument("ratio must have positive numerator and denominator");
    }
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (2 * num >= den) {
        throw std::invalid_argument("ratio must satisfy 0 < xi < 1/2");
    }
    if (inverse_min_poly) {
        if (inverse_min_poly->size() < 2 || inverse_min_poly->front() != 1) {
            throw std::invalid_argument("algebraic tag must be a monic polynomial of degree >= 1");
        }
    }
}

RatioParam RatioParam::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("ratio must be given as \"p/q\"");
    }
    const std::string ps = text.substr(0, slash);
    const std::string qs = text.substr(slash + 1);
    if (ps.empty() || qs.empty() ||
        ps.find_first_not_of("0123456789") != std::string::npos ||
        qs.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("ratio must be given as \"p/q\" with positive integers");
    }
    std::int64_t p = 0, q = 0;
    try {
        p = std::stoll(ps);
        q = std::stoll(qs);
    } catch (const std::exception&) {
        throw std::invalid_argument("ratio components out of range");
    }
    return RatioParam(p, q);
}

IntervalSet cantor_stage(const RatioParam& xi, int n, int max_generation) {
    if (n < 0) throw std::invalid_argument("generation must be nonnegative");
    if (n > max_generation) throw std::invalid_argument("generation above configured maximum");
    const Rational r = xi.value();
    IntervalSet out;
    out.generation = n;
    out.intervals.assign(1, {Rational(0), Rational(1)});
    for (int k = 0; k < n; ++k) {
        std::vector<std::pair<Rational, Rational>> next;
        next.reserve(out.intervals.size() * 2);
        for (const auto& [a, b] : out.intervals) {
            const Rational len = b - a;
            next.emplace_back(a, a + r * len);
            next.emplace_back(b - r * len, b);
        }
        out.intervals.swap(next);
    }
    return out;
}

std::vector<GapGeneration> complementary_gaps(const RatioParam& xi, int K) {
    if (K < 0) throw std::invalid_argument("generation bound must be nonnegative");
    const Rational r = xi.value();
    const Rational central = Rational(1) - 2 * r;
    std::vector<GapGeneration> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    Rational len = central;
    std::uint64_t mult = 1;
    for (int k = 0; k <= K; ++k) {
        out.push_back({k, len, mult});
        len *= r;
        mult *= 2;
    }
    return out;
}

std::vector<Gap> gaps_through(const RatioParam& xi, int steps) {
    if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
    const double r = xi.value_d();
    std::vector<Gap> out;
    out.reserve((std::size_t{1} << steps));
    std::vector<std::pair<double, double>> iv{{0.0, 1.0}};
    for (int k = 0; k < steps; ++k) {
        std::vector<std::pair<double, double>> next;
        next.reserve(iv.size() * 2);
        for (const auto& [a, b] : iv) {
            const double len = b - a;
            out.push_back({a + r * len, b - r * len, k});
            next.emplace_back(a, a + r * len);
            next.emplace_back(b - r * len, b);
        }
        iv.swap(next);
    }
    return out;
}

std::vector<double> stage_endpoints(const RatioParam& xi, int n) {
    const IntervalSet st = cantor_stage(xi, n);
    std::vector<double> out;
    out.reserve(st.intervals.size() * 2);
    for (const auto& [a, b] : st.intervals) {
        out.push_back(to_double(a));
        out.push_back(to_double(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace peaklab
