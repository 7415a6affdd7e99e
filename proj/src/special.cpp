#include "symdyn/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "symdyn/error.hpp"

namespace symdyn {

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("digamma: argument must be positive and finite, got " +
                          std::to_string(x));
    }
    // Below this the recurrence shift is applied; above it the truncated
    // asymptotic series error is < 1e-17.
    constexpr double kAsymptoticFrom = 12.0;

    double shift = 0.0;
    while (x < kAsymptoticFrom) {
        shift -= 1.0 / x;
        x += 1.0;
    }

    // psi(x) ~ ln x - 1/(2x) - sum_n B_2n / (2n x^2n)
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv2 * (1.0 / 12 -
        inv2 * (1.0 / 120 -
        inv2 * (1.0 / 252 -
        inv2 * (1.0 / 240 -
        inv2 * (1.0 / 132 -
        inv2 * (691.0 / 32760 -
        inv2 * (1.0 / 12)))))));
    return shift + std::log(x) - 0.5 * inv - series;
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) {
        return -std::numeric_limits<double>::infinity();
    }
    const double peak = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(peak)) {
        return peak;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += std::exp(v - peak);
    }
    return peak + std::log(sum);
}

}  // namespace symdyn
