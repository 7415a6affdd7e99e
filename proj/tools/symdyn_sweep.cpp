// Command-line driver for the decision-point sweep.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <iostream>
#include <string>
#include <vector>

#include "symdyn/config.hpp"
#include "symdyn/sweep.hpp"

int main(int argc, char** argv) {
    using namespace symdyn;

    SweepConfig config;
    try {
        config = parse_config(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const HelpRequested& help) {
        std::cout << help.what();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "symdyn: configuration error: " << e.what() << '\n';
        return 1;
    }

    try {
        const SweepResult result = run_sweep(config);

        std::size_t failed = 0;
        std::size_t at_limit = 0;
        for (const auto& row : result.rows) {
            if (!row.ok()) {
                ++failed;
                std::cerr << "symdyn: row d=" << row.d << " failed: " << row.error << '\n';
            } else if (row.k_selected == config.k_max && config.k_min < config.k_max) {
                ++at_limit;
            }
        }
        if (at_limit > 0) {
            std::cerr << "symdyn: warning: " << at_limit
                      << " decision point(s) selected k = k_max; the order range may be "
                         "truncating the process memory\n";
        }
        if (result.lyapunov_zero_derivative_steps > 0) {
            std::cerr << "symdyn: warning: Lyapunov estimate degenerate ("
                      << result.lyapunov_zero_derivative_steps
                      << " zero-derivative steps)\n";
        }

        if (config.out.empty()) {
            if (config.format == OutputFormat::json) {
                write_json(result, std::cout);
            } else {
                write_csv(result, std::cout);
            }
        } else {
            emit(result, config.format, config.out);
        }
        if (!config.detail.empty()) {
            emit_detail(result, config.detail);
        }
        return failed == result.rows.size() ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "symdyn: error: " << e.what() << '\n';
        return 2;
    }
}
