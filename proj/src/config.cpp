#include "symdyn/config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>

#include "symdyn/error.hpp"

namespace symdyn {

std::string_view to_string(OutputFormat format) {
    return format == OutputFormat::json ? "json" : "csv";
}

void SweepConfig::validate() const {
    if (!(map.r > 0.0 && map.r <= 4.0)) {
        throw ConfigError("--r must lie in (0, 4] for the logistic map, got " +
                          std::to_string(map.r));
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("--sigma must be finite and >= 0, got " + std::to_string(sigma));
    }
    if (k_min > k_max) {
        throw ConfigError("--k-min (" + std::to_string(k_min) + ") must not exceed --k-max (" +
                          std::to_string(k_max) + ")");
    }
    if (k_max > 40) {
        throw ConfigError("--k-max " + std::to_string(k_max) +
                          " is too large: 2^(k_max+1) transition counts must be addressable "
                          "(use at most 40)");
    }
    if (n <= k_max + 1) {
        throw ConfigError("--n (" + std::to_string(n) + ") must exceed --k-max + 1 (" +
                          std::to_string(k_max + 1) + ")");
    }
    if (grid < 2) {
        throw ConfigError("--grid must be at least 2, got " + std::to_string(grid));
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw ConfigError("--alpha must be positive and finite, got " + std::to_string(alpha));
    }
}

SweepConfig parse_config(const std::vector<std::string>& args) {
    SweepConfig cfg;
    std::string order_prior{to_string(cfg.order_prior)};
    std::string format{to_string(cfg.format)};

    CLI::App app{"Sweep binary decision points over a noisy logistic map, infer Markov "
                 "orders and estimate entropy rates",
                 "symdyn"};
    app.set_config("--config", "", "Read key=value settings from FILE; flags override");
    app.allow_config_extras(CLI::config_extras_mode::error);

    app.add_option("--r", cfg.map.r, "Logistic map parameter")->capture_default_str();
    app.add_option("--sigma", cfg.sigma, "Standard deviation of the additive noise")
        ->capture_default_str();
    app.add_option("--n", cfg.n, "Number of recorded states")->capture_default_str();
    app.add_option("--transient", cfg.transient, "Discarded transient steps")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--grid", cfg.grid, "Number of evenly spaced decision points in [0,1]")
        ->capture_default_str();
    app.add_option("--k-min", cfg.k_min, "Smallest Markov order")->capture_default_str();
    app.add_option("--k-max", cfg.k_max, "Largest Markov order")->capture_default_str();
    app.add_option("--order-prior", order_prior, "Prior over orders")
        ->check(CLI::IsMember({"uniform", "size-penalty"}))
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Uniform Dirichlet hyperparameter")
        ->capture_default_str();
    app.add_option("--format", format, "Summary output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Summary output path (default: stdout)");
    app.add_option("--detail", cfg.detail, "Write per-(d,k) estimates to this CSV path");
    app.add_flag("--regenerate-per-point", cfg.regenerate_per_point,
                 "Draw an independent trajectory for each decision point");
    app.add_option("--threads", cfg.threads, "Worker threads (0: hardware concurrency)")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    cfg.order_prior = parse_order_prior(order_prior);
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    cfg.validate();
    return cfg;
}

}  // namespace symdyn
