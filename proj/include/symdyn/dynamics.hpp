#pragma once

// One-dimensional maps with additive Gaussian noise.
//
// Iteration is x' = f(x) + xi with xi ~ N(0, sigma^2). A noisy step that
// leaves [0,1] is folded back by reflection at the violated edge until it
// lands inside, so every recorded state stays in the unit interval.

#include <cstdint>
#include <span>
#include <vector>

namespace symdyn {

enum class MapFamily { logistic };

struct MapSpec {
    MapFamily family = MapFamily::logistic;
    double r = 4.0;

    // Throws DomainError unless r is in (0, 4].
    void validate() const;
};

struct NoiseSpec {
    double sigma = 0.0;

    void validate() const;
};

struct Trajectory {
    std::vector<double> states;
    MapSpec map;
    NoiseSpec noise;
    std::uint64_t seed = 0;
    std::size_t transient = 0;
};

double map_apply(const MapSpec& spec, double x);
double map_derivative(const MapSpec& spec, double x);

// Fold a value back into [0,1]: x < 0 -> -x, x > 1 -> 2 - x, repeated.
double reflect_into_unit(double x);

// Draws x0 uniformly from the open interval (0,1), discards `transient`
// steps and records n states. Deterministic given the seed.
Trajectory generate_trajectory(const MapSpec& map, const NoiseSpec& noise, std::size_t n,
                               std::size_t transient, std::uint64_t seed);

// Same, starting from a caller-supplied x0 in [0,1]. The seed only drives
// the noise.
Trajectory generate_trajectory_from(const MapSpec& map, const NoiseSpec& noise,
                                    double x0, std::size_t n, std::size_t transient,
                                    std::uint64_t seed);

struct LyapunovEstimate {
    // Mean of log2|f'(x_t)| in bits per step; -infinity when some
    // derivative along the orbit is exactly zero.
    double bits_per_step = 0.0;
    std::size_t zero_derivative_steps = 0;

    bool degenerate() const noexcept { return zero_derivative_steps > 0; }
};

LyapunovEstimate lyapunov_exponent(const MapSpec& map, std::span<const double> states);

inline LyapunovEstimate lyapunov_exponent(const MapSpec& map, const Trajectory& traj) {
    return lyapunov_exponent(map, traj.states);
}

}  // namespace symdyn
