// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symdyn/dynamics.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/order_select.hpp"
#include "symdyn/special.hpp"
#include "symdyn/sweep.hpp"

using namespace symdyn;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

// Grid index nearest to d; ties go to the lower index.
std::size_t nearest_index(const SweepResult& r, double d) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        if (std::abs(r.rows[i].d - d) < std::abs(r.rows[best].d - d)) {
            best = i;
        }
    }
    return best;
}

double grid_step(const SweepResult& r) {
    return 1.0 / static_cast<double>(r.rows.size() - 1);
}

// Interior plateaus [first, last] of k* whose neighbours on both sides are
// strictly larger. The endpoints d = 0 and d = 1 are excluded.
std::vector<std::pair<std::size_t, std::size_t>> order_minima(const SweepResult& r) {
    std::vector<std::pair<std::size_t, std::size_t>> minima;
    const std::size_t n = r.rows.size();
    std::size_t i = 1;
    while (i + 1 < n) {
        std::size_t last = i;
        while (last + 2 < n && r.rows[last + 1].k_selected == r.rows[i].k_selected) {
            ++last;
        }
        const std::size_t k = r.rows[i].k_selected;
        if (r.rows[i - 1].k_selected > k && r.rows[last + 1].k_selected > k) {
            minima.emplace_back(i, last);
        }
        i = last + 1;
    }
    return minima;
}

// Series oracle for psi: psi(x) = -gamma + (x - 1) sum_{n>=0} 1/((n+1)(n+x)),
// summed to M terms in long double with an Euler-Maclaurin tail.
double digamma_series(double xd) {
    const long double x = xd;
    const long double euler_gamma = 0.57721566490153286060651209008240243L;
    const std::size_t terms = 200000;
    auto f = [&](long double n) { return 1.0L / ((n + 1.0L) * (n + x)); };
    long double sum = 0.0L;
    for (std::size_t n = terms; n-- > 0;) {
        sum += f(static_cast<long double>(n));
    }
    const long double m = terms;
    // Tail sum_{n>=M} f(n) = int_M^inf f + f(M)/2 - f'(M)/12 + f'''(M)/720 - ...
    long double integral;
    if (std::abs(x - 1.0L) < 1e-18L) {
        integral = 1.0L / (m + 1.0L);
    } else {
        integral = std::log((m + x) / (m + 1.0L)) / (x - 1.0L);
    }
    const long double a = m + 1.0L;
    const long double b = m + x;
    const long double fm = 1.0L / (a * b);
    const long double d1 = -fm * (1.0L / a + 1.0L / b);
    const long double d3 = -6.0L * fm *
                           (1.0L / (a * a * a) + 1.0L / (a * a * b) + 1.0L / (a * b * b) +
                            1.0L / (b * b * b));
    const long double tail = integral + fm / 2.0L - d1 / 12.0L + d3 / 720.0L;
    return static_cast<double>(-euler_gamma + (x - 1.0L) * (sum + tail));
}

Outcome criterion_generating_partition(const SweepResult& r, double seconds) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        if (r.rows[i].h_expected_bits > r.rows[best].h_expected_bits) {
            best = i;
        }
    }
    const double d = r.rows[best].d;
    const double h = r.rows[best].h_expected_bits;
    const bool located = std::abs(d - 0.5) <= grid_step(r) + 1e-12;
    const bool value = std::abs(h - 1.0) <= 0.05;
    const bool fast = seconds < 60.0;
    return {located && value && fast,
            fmt("argmax d=%.6f (|d-0.5|=%.6f, step=%.6f), h=%.6f bits, runtime %.2fs", d,
                std::abs(d - 0.5), grid_step(r), h, seconds)};
}

Outcome criterion_extremes(const SweepResult& r) {
    const double h0 = r.rows.front().h_expected_bits;
    const double h1 = r.rows.back().h_expected_bits;
    return {h0 < 0.01 && h1 < 0.01, fmt("h(d=0)=%.6f, h(d=1)=%.6f bits", h0, h1)};
}

Outcome criterion_order_curve(const SweepResult& r) {
    const std::size_t k_half = r.rows[nearest_index(r, 0.5)].k_selected;
    const std::size_t k_03 = r.rows[nearest_index(r, 0.3)].k_selected;
    const std::size_t k_07 = r.rows[nearest_index(r, 0.7)].k_selected;
    const bool smaller = k_half < k_03 && k_half < k_07;

    const double lo = (2.0 - std::sqrt(2.0)) / 4.0;
    const double hi = (2.0 + std::sqrt(2.0)) / 4.0;
    const double reach = 2.0 * grid_step(r) + 1e-12;
    std::string where = "none";
    bool preimage = false;
    for (const auto& [first, last] : order_minima(r)) {
        for (std::size_t i = first; i <= last; ++i) {
            const double d = r.rows[i].d;
            if (std::abs(d - lo) <= reach || std::abs(d - hi) <= reach) {
                preimage = true;
                where = fmt("k=%zu on d in [%.4f, %.4f]", r.rows[first].k_selected,
                            r.rows[first].d, r.rows[last].d);
            }
        }
    }
    return {smaller && preimage,
            fmt("k*(0.5)=%zu, k*(0.3)=%zu, k*(0.7)=%zu; minimum near f^-1(1/2): %s", k_half,
                k_03, k_07, where.c_str())};
}

Outcome criterion_lyapunov() {
    const MapSpec map{MapFamily::logistic, 4.0};
    const auto traj = generate_trajectory(map, NoiseSpec{0.0}, 100000, 1000, 1);
    const auto est = lyapunov_exponent(map, traj);
    return {!est.degenerate() && std::abs(est.bits_per_step - 1.0) <= 0.02,
            fmt("lambda=%.6f bits/step", est.bits_per_step)};
}

Outcome criterion_evidence_oracle() {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<std::size_t> order(0, 2);
    std::size_t mc_pass = 0;
    double worst_z = 0.0;
    double worst_chain = 0.0;
    const std::size_t instances = 50;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t k = order(rng);
        std::uniform_int_distribution<std::size_t> length(k + 1, 20);
        const auto seq = oracle::random_binary(rng, length(rng));
        const auto counts = transition_counts(seq, k);
        const double log_ev = log_evidence(counts, uniform_prior(k, 2)).value;

        const auto mc = oracle::mc_evidence(seq, k, 1.0, 1000000, 7000 + i);
        const double z = std::abs(std::exp(log_ev) - mc.mean) / mc.std_error;
        worst_z = std::max(worst_z, z);
        if (z <= 3.0) {
            ++mc_pass;
        }
        worst_chain = std::max(worst_chain,
                               std::abs(log_ev - oracle::sequential_log_evidence(seq, k, 1.0)));
    }
    return {mc_pass == instances && worst_chain <= 1e-10,
            fmt("%zu/%zu within 3 SE (max |z|=%.2f); max chain-rule gap %.2e", mc_pass,
                instances, worst_z, worst_chain)};
}

Outcome criterion_estimator_oracle() {
    std::mt19937_64 rng(6160);
    std::uniform_int_distribution<std::size_t> order(0, 2);
    std::size_t pass = 0;
    double worst_z = 0.0;
    const std::size_t instances = 20;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t k = order(rng);
        std::uniform_int_distribution<std::size_t> length(k + 1, 50);
        const auto seq = oracle::random_binary(rng, length(rng));
        const auto est = expected_info(transition_counts(seq, k), uniform_prior(k, 2));
        const auto mc = oracle::mc_expected_info(seq, k, 1.0, 200000, 8000 + i);
        const double z = std::abs(est.expected_info - mc.mean) / mc.std_error;
        worst_z = std::max(worst_z, z);
        if (z <= 3.0) {
            ++pass;
        }
    }

    const auto coin = oracle::random_binary(rng, 100000);
    double worst_gap = 0.0;
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto counts = transition_counts(coin, k);
        const double gap = std::abs(expected_info(counts, uniform_prior(k, 2)).expected_info -
                                    asymptotic_info(counts, uniform_prior(k, 2)).expected_info);
        worst_gap = std::max(worst_gap, gap);
    }
    return {pass == instances && worst_gap < 1e-3,
            fmt("%zu/%zu within 3 SE (max |z|=%.2f); max |full-asymptotic| at N=1e5: %.2e bits",
                pass, instances, worst_z, worst_gap)};
}

Outcome criterion_known_source() {
    std::mt19937_64 rng(7170);
    const auto seq = oracle::golden_mean(rng, 100000);
    const auto post = order_posterior(seq, OrderRange{1, 4}, OrderPriorKind::size_penalty);
    const auto est =
        expected_info(transition_counts(seq, post.selected), uniform_prior(post.selected, 2));
    const double truth = 2.0 / 3.0;
    return {post.selected == 1 && std::abs(est.expected_info - truth) < 0.01,
            fmt("k*=%zu, h=%.6f bits (truth %.6f)", post.selected, est.expected_info, truth)};
}

Outcome criterion_digamma() {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 10.0, 1e4}) {
        worst = std::max(worst, std::abs(digamma(x) - digamma_series(x)));
    }
    std::mt19937_64 rng(9190);
    std::uniform_real_distribution<double> u(0.05, 1000.0);
    double worst_rec = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        worst_rec = std::max(worst_rec, std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x));
    }
    return {worst <= 1e-12 && worst_rec <= 1e-12,
            fmt("max |psi - series| = %.2e, max recurrence error = %.2e", worst, worst_rec)};
}

Outcome criterion_determinism(const SweepConfig& config, const SweepResult& first) {
    std::ostringstream a;
    std::ostringstream b;
    write_csv(first, a);
    SweepConfig again = config;
    again.threads = 1;
    write_csv(run_sweep(again), b);
    return {a.str() == b.str(), fmt("%zu bytes, identical=%s", a.str().size(),
                                    a.str() == b.str() ? "yes" : "no")};
}

}  // namespace

int main() {
    const SweepConfig defaults = parse_config({});

    const auto start = std::chrono::steady_clock::now();
    const SweepResult run = run_sweep(defaults);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 generating-partition recovery", [&] { return criterion_generating_partition(run, seconds); }},
        {"AC2 extremes", [&] { return criterion_extremes(run); }},
        {"AC3 order-curve structure", [&] { return criterion_order_curve(run); }},
        {"AC4 Lyapunov benchmark", criterion_lyapunov},
        {"AC5 evidence oracle", criterion_evidence_oracle},
        {"AC6 estimator oracle", criterion_estimator_oracle},
        {"AC7 known-source recovery", criterion_known_source},
        {"AC8 special functions", criterion_digamma},
        {"AC9 determinism", [&] { return criterion_determinism(defaults, run); }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome out;
        try {
            out = check();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", out.pass ? "PASS" : "FAIL", name.c_str(),
                    out.detail.c_str());
        std::fflush(stdout);
        failures += out.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
