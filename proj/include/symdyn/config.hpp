#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "symdyn/dynamics.hpp"
#include "symdyn/order_select.hpp"

namespace symdyn {

enum class OutputFormat { csv, json };

std::string_view to_string(OutputFormat format);

// Defaults reproduce the reference experiment: logistic map at r = 4 with
// sigma = 1e-3, 10^4 recorded states after 10^3 transient steps, 200
// decision points and orders 1..8 under the size-penalty order prior.
struct SweepConfig {
    MapSpec map{MapFamily::logistic, 4.0};
    double sigma = 1e-3;
    std::size_t n = 10000;
    std::size_t transient = 1000;
    std::uint64_t seed = 1;
    std::size_t grid = 200;
    std::size_t k_min = 1;
    std::size_t k_max = 8;
    OrderPriorKind order_prior = OrderPriorKind::size_penalty;
    double alpha = 1.0;
    OutputFormat format = OutputFormat::csv;
    std::string out;     // empty: standard output
    std::string detail;  // empty: no per-(d,k) file
    // Draw a fresh trajectory for every decision point (seed + row index)
    // instead of sharing one.
    bool regenerate_per_point = false;
    // 0: one worker per hardware thread.
    std::size_t threads = 0;

    // Throws ConfigError describing the first violated constraint.
    void validate() const;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(std::string text) : std::runtime_error(std::move(text)) {}
};

// Parses command-line arguments (without the program name). A
// `--config FILE` of key=value lines supplies values that flags override.
SweepConfig parse_config(const std::vector<std::string>& args);

}  // namespace symdyn
