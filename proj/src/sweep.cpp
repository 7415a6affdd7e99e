#include "symdyn/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "symdyn/dynamics.hpp"
#include "symdyn/error.hpp"
#include "symdyn/symbolize.hpp"

namespace symdyn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw std::runtime_error("malformed number '" + text + "'");
    }
    return v;
}

std::string csv_status(const SweepRow& row) {
    if (row.ok()) {
        return "ok";
    }
    std::string msg = "error: " + row.error;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    return msg;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::size_t resolve_threads(std::size_t requested, std::size_t work) {
    std::size_t n = requested == 0 ? std::thread::hardware_concurrency() : requested;
    return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(work, 1));
}

Trajectory make_trajectory(const SweepConfig& config, std::uint64_t seed) {
    return generate_trajectory(config.map, NoiseSpec{config.sigma}, config.n, config.transient,
                               seed);
}

nlohmann::json config_to_json(const SweepConfig& c) {
    return {
        {"map", "logistic"},
        {"r", c.map.r},
        {"sigma", c.sigma},
        {"n", c.n},
        {"transient", c.transient},
        {"seed", c.seed},
        {"grid", c.grid},
        {"k_min", c.k_min},
        {"k_max", c.k_max},
        {"order_prior", std::string(to_string(c.order_prior))},
        {"alpha", c.alpha},
        {"format", std::string(to_string(c.format))},
        {"regenerate_per_point", c.regenerate_per_point},
    };
}

SweepConfig config_from_json(const nlohmann::json& j) {
    SweepConfig c;
    c.map.r = j.at("r").get<double>();
    c.sigma = j.at("sigma").get<double>();
    c.n = j.at("n").get<std::size_t>();
    c.transient = j.at("transient").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.grid = j.at("grid").get<std::size_t>();
    c.k_min = j.at("k_min").get<std::size_t>();
    c.k_max = j.at("k_max").get<std::size_t>();
    c.order_prior = parse_order_prior(j.at("order_prior").get<std::string>());
    c.alpha = j.at("alpha").get<double>();
    c.format = j.at("format").get<std::string>() == "json" ? OutputFormat::json
                                                           : OutputFormat::csv;
    c.regenerate_per_point = j.at("regenerate_per_point").get<bool>();
    return c;
}

nlohmann::json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

double number_from(const nlohmann::json& j) {
    return j.is_null() ? kNaN : j.get<double>();
}

}  // namespace

SweepRow analyze_decision_point(const std::vector<double>& states, double d,
                                const SweepConfig& config) {
    SweepRow row;
    row.d = d;
    const SymbolSequence seq = symbolize(states, PartitionSpec{d});
    const OrderRange range{config.k_min, config.k_max};
    const OrderPosterior posterior =
        order_posterior(seq, range, config.order_prior, config.alpha);

    row.orders = posterior.entries;
    row.k_selected = posterior.selected;
    for (std::size_t k = config.k_min; k <= config.k_max; ++k) {
        const auto prior = uniform_prior(k, seq.alphabet_size, config.alpha);
        row.per_order.push_back(expected_info(transition_counts(seq, k), prior));
    }
    const EntropyEstimate& chosen = row.per_order[row.k_selected - config.k_min];
    row.h_expected_bits = chosen.expected_info;
    row.h_rate_q_bits = chosen.h_rate_q;
    row.kl_correction_bits = chosen.kl_correction;
    return row;
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();

    SweepResult result;
    result.config = config;

    const Trajectory shared = make_trajectory(config, config.seed);
    const LyapunovEstimate lambda = lyapunov_exponent(config.map, shared);
    result.lyapunov_bits = lambda.bits_per_step;
    result.lyapunov_zero_derivative_steps = lambda.zero_derivative_steps;

    const std::vector<PartitionSpec> grid = decision_grid(config.grid);
    result.rows.resize(grid.size());

    auto work = [&](std::size_t i) {
        const double d = grid[i].decision_point;
        try {
            if (config.regenerate_per_point) {
                const Trajectory own = make_trajectory(config, config.seed + i);
                result.rows[i] = analyze_decision_point(own.states, d, config);
            } else {
                result.rows[i] = analyze_decision_point(shared.states, d, config);
            }
        } catch (const std::exception& e) {
            SweepRow failed;
            failed.d = d;
            failed.error = e.what();
            failed.h_expected_bits = failed.h_rate_q_bits = failed.kl_correction_bits = kNaN;
            for (std::size_t k = config.k_min; k <= config.k_max; ++k) {
                failed.orders.push_back({k, kNaN, kNaN, kNaN});
            }
            result.rows[i] = std::move(failed);
        }
    };

    const std::size_t workers = resolve_threads(config.threads, grid.size());
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            work(i);
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) {
        pool.emplace_back(drain);
    }
    drain();
    pool.clear();
    return result;
}

void write_csv(const SweepResult& result, std::ostream& out) {
    const auto& c = result.config;
    out << "d,k_selected,h_expected_bits,h_rate_q_bits,kl_correction_bits";
    for (std::size_t k = c.k_min; k <= c.k_max; ++k) {
        out << ",log_evidence_k" << k;
    }
    for (std::size_t k = c.k_min; k <= c.k_max; ++k) {
        out << ",p_order_k" << k;
    }
    out << ",status\n";
    for (const auto& row : result.rows) {
        out << format_number(row.d) << ',' << row.k_selected << ','
            << format_number(row.h_expected_bits) << ',' << format_number(row.h_rate_q_bits)
            << ',' << format_number(row.kl_correction_bits);
        for (const auto& e : row.orders) {
            out << ',' << format_number(e.log_evidence);
        }
        for (const auto& e : row.orders) {
            out << ',' << format_number(e.probability);
        }
        out << ',' << csv_status(row) << '\n';
    }
}

void write_detail_csv(const SweepResult& result, std::ostream& out) {
    out << "d,k,log_evidence,p_order,h_expected_bits,h_rate_q_bits,kl_correction_bits\n";
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.orders.size(); ++i) {
            const auto& e = row.orders[i];
            const bool have = i < row.per_order.size();
            out << format_number(row.d) << ',' << e.order << ','
                << format_number(e.log_evidence) << ',' << format_number(e.probability) << ','
                << format_number(have ? row.per_order[i].expected_info : kNaN) << ','
                << format_number(have ? row.per_order[i].h_rate_q : kNaN) << ','
                << format_number(have ? row.per_order[i].kl_correction : kNaN) << '\n';
        }
    }
}

void write_json(const SweepResult& result, std::ostream& out) {
    nlohmann::json doc;
    doc["config"] = config_to_json(result.config);
    doc["lyapunov_bits_per_step"] = number_or_null(result.lyapunov_bits);
    doc["lyapunov_zero_derivative_steps"] = result.lyapunov_zero_derivative_steps;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const auto& row : result.rows) {
        nlohmann::json j;
        j["d"] = row.d;
        j["k_selected"] = row.k_selected;
        j["h_expected_bits"] = number_or_null(row.h_expected_bits);
        j["h_rate_q_bits"] = number_or_null(row.h_rate_q_bits);
        j["kl_correction_bits"] = number_or_null(row.kl_correction_bits);
        for (const auto& e : row.orders) {
            j["log_evidence_k" + std::to_string(e.order)] = number_or_null(e.log_evidence);
        }
        for (const auto& e : row.orders) {
            j["p_order_k" + std::to_string(e.order)] = number_or_null(e.probability);
        }
        j["status"] = row.ok() ? "ok" : "error: " + row.error;
        rows.push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

void emit(const SweepResult& result, OutputFormat format, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    if (format == OutputFormat::json) {
        write_json(result, out);
    } else {
        write_csv(result, out);
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

void emit_detail(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    write_detail_csv(result, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

std::vector<SweepRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("read_csv: missing header");
    }
    const std::vector<std::string> header = split(line, ',');
    std::map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < header.size(); ++i) {
        column[header[i]] = i;
    }
    auto col = [&](const std::string& name) {
        const auto it = column.find(name);
        if (it == column.end()) {
            throw std::runtime_error("read_csv: missing column '" + name + "'");
        }
        return it->second;
    };

    std::vector<std::size_t> orders;
    for (const auto& name : header) {
        if (name.rfind("log_evidence_k", 0) == 0) {
            orders.push_back(std::stoul(name.substr(14)));
        }
    }

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != header.size()) {
            throw std::runtime_error("read_csv: row has " + std::to_string(f.size()) +
                                     " fields, header has " + std::to_string(header.size()));
        }
        SweepRow row;
        row.d = parse_number(f[col("d")]);
        row.k_selected = std::stoul(f[col("k_selected")]);
        row.h_expected_bits = parse_number(f[col("h_expected_bits")]);
        row.h_rate_q_bits = parse_number(f[col("h_rate_q_bits")]);
        row.kl_correction_bits = parse_number(f[col("kl_correction_bits")]);
        for (std::size_t k : orders) {
            OrderEntry e;
            e.order = k;
            e.log_evidence = parse_number(f[col("log_evidence_k" + std::to_string(k))]);
            e.probability = parse_number(f[col("p_order_k" + std::to_string(k))]);
            row.orders.push_back(e);
        }
        const std::string& status = f[col("status")];
        if (status != "ok") {
            row.error = status.rfind("error: ", 0) == 0 ? status.substr(7) : status;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SweepResult read_json(std::istream& in) {
    const nlohmann::json doc = nlohmann::json::parse(in);
    SweepResult result;
    result.config = config_from_json(doc.at("config"));
    result.lyapunov_bits = number_from(doc.at("lyapunov_bits_per_step"));
    result.lyapunov_zero_derivative_steps =
        doc.at("lyapunov_zero_derivative_steps").get<std::size_t>();
    for (const auto& j : doc.at("rows")) {
        SweepRow row;
        row.d = j.at("d").get<double>();
        row.k_selected = j.at("k_selected").get<std::size_t>();
        row.h_expected_bits = number_from(j.at("h_expected_bits"));
        row.h_rate_q_bits = number_from(j.at("h_rate_q_bits"));
        row.kl_correction_bits = number_from(j.at("kl_correction_bits"));
        for (std::size_t k = result.config.k_min; k <= result.config.k_max; ++k) {
            OrderEntry e;
            e.order = k;
            e.log_evidence = number_from(j.at("log_evidence_k" + std::to_string(k)));
            e.probability = number_from(j.at("p_order_k" + std::to_string(k)));
            row.orders.push_back(e);
        }
        const auto status = j.at("status").get<std::string>();
        if (status != "ok") {
            row.error = status.rfind("error: ", 0) == 0 ? status.substr(7) : status;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace symdyn
