#include "symdyn/dynamics.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "symdyn/error.hpp"

namespace symdyn {

void MapSpec::validate() const {
    if (!(r > 0.0 && r <= 4.0)) {
        throw DomainError("logistic map parameter r must lie in (0, 4], got " +
                          std::to_string(r));
    }
}

void NoiseSpec::validate() const {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw DomainError("noise sigma must be finite and >= 0, got " + std::to_string(sigma));
    }
}

double map_apply(const MapSpec& spec, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("map_apply: state " + std::to_string(x) + " outside [0,1]");
    }
    return spec.r * x * (1.0 - x);
}

double map_derivative(const MapSpec& spec, double x) {
    return spec.r - 2.0 * spec.r * x;
}

double reflect_into_unit(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("reflect_into_unit: non-finite state");
    }
    while (x < 0.0 || x > 1.0) {
        x = x < 0.0 ? -x : 2.0 - x;
    }
    return x;
}

namespace {

Trajectory iterate(const MapSpec& map, const NoiseSpec& noise, double x, std::size_t n,
                   std::size_t transient, std::uint64_t seed, std::mt19937_64& rng) {
    if (n < 1) {
        throw DomainError("generate_trajectory: n must be >= 1");
    }
    map.validate();
    noise.validate();

    std::normal_distribution<double> gauss(0.0, 1.0);
    auto step = [&](double s) {
        double next = map_apply(map, s);
        if (noise.sigma > 0.0) {
            next = reflect_into_unit(next + noise.sigma * gauss(rng));
        }
        return next;
    };

    for (std::size_t t = 0; t < transient; ++t) {
        x = step(x);
    }

    Trajectory traj;
    traj.map = map;
    traj.noise = noise;
    traj.seed = seed;
    traj.transient = transient;
    traj.states.reserve(n);
    traj.states.push_back(x);
    for (std::size_t t = 1; t < n; ++t) {
        x = step(x);
        traj.states.push_back(x);
    }
    return traj;
}

}  // namespace

Trajectory generate_trajectory(const MapSpec& map, const NoiseSpec& noise, std::size_t n,
                               std::size_t transient, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double x0 = 0.0;
    while (x0 <= 0.0 || x0 >= 1.0) {
        x0 = uniform(rng);
    }
    return iterate(map, noise, x0, n, transient, seed, rng);
}

Trajectory generate_trajectory_from(const MapSpec& map, const NoiseSpec& noise, double x0,
                                    std::size_t n, std::size_t transient,
                                    std::uint64_t seed) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) {
        throw DomainError("generate_trajectory: initial condition outside [0,1]");
    }
    std::mt19937_64 rng(seed);
    return iterate(map, noise, x0, n, transient, seed, rng);
}

LyapunovEstimate lyapunov_exponent(const MapSpec& map, std::span<const double> states) {
    if (states.empty()) {
        throw DomainError("lyapunov_exponent: empty trajectory");
    }
    LyapunovEstimate est;
    double sum = 0.0;
    for (double x : states) {
        const double slope = std::abs(map_derivative(map, x));
        if (slope == 0.0) {
            ++est.zero_derivative_steps;
            continue;
        }
        sum += std::log2(slope);
    }
    est.bits_per_step = est.degenerate() ? -std::numeric_limits<double>::infinity()
                                         : sum / static_cast<double>(states.size());
    return est;
}

}  // namespace symdyn
