#pragma once

// End-to-end experiment: one trajectory, a grid of binary instruments, order
// selection and entropy estimates per instrument.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "symdyn/config.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/order_select.hpp"

namespace symdyn {

struct SweepRow {
    double d = 0.0;
    // Empty on success; otherwise the error that stopped this row.
    std::string error;
    std::size_t k_selected = 0;
    double h_expected_bits = 0.0;
    double h_rate_q_bits = 0.0;
    double kl_correction_bits = 0.0;
    // One entry per order in [k_min, k_max].
    std::vector<OrderEntry> orders;
    // Entropy estimates for every order; not carried by the summary files.
    std::vector<EntropyEstimate> per_order;

    bool ok() const noexcept { return error.empty(); }
};

struct SweepResult {
    SweepConfig config;
    double lyapunov_bits = 0.0;
    std::size_t lyapunov_zero_derivative_steps = 0;
    std::vector<SweepRow> rows;  // ascending d
};

// Everything run_sweep does for one decision point on a fixed trajectory.
SweepRow analyze_decision_point(const std::vector<double>& states, double d,
                                const SweepConfig& config);

SweepResult run_sweep(const SweepConfig& config);

void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out);
void write_detail_csv(const SweepResult& result, std::ostream& out);

// Writes the summary in config.format to `path`. Throws std::runtime_error
// naming the path on I/O failure.
void emit(const SweepResult& result, OutputFormat format, const std::filesystem::path& path);
void emit_detail(const SweepResult& result, const std::filesystem::path& path);

// Inverse of write_csv: recovers the rows (without per_order).
std::vector<SweepRow> read_csv(std::istream& in);
// Inverse of write_json: rows, lambda and the echoed config.
SweepResult read_json(std::istream& in);

}  // namespace symdyn
