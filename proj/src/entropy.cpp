#include "symdyn/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "symdyn/error.hpp"
#include "symdyn/special.hpp"

namespace symdyn {

namespace {

double entropy_bits(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return h / std::numbers::ln2;
}

// Fills everything except expected_info.
EntropyEstimate rate_and_correction(const PMEDistribution& q) {
    EntropyEstimate est;
    est.order = q.order;
    est.h_rate_q = joint_entropy(q) - context_entropy(q);
    est.kl_correction = static_cast<double>(q.context_weights.size()) *
                        static_cast<double>(q.alphabet_size - 1) /
                        (2.0 * q.beta * std::numbers::ln2);
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < q.context_weights.size(); ++h) {
        for (std::size_t s = 0; s < q.alphabet_size; ++s) {
            smallest = std::min(smallest,
                                q.beta * q.context_weights[h] * q.transitions[h * q.alphabet_size + s]);
        }
    }
    est.min_posterior_mass = smallest;
    return est;
}

}  // namespace

PMEDistribution pme_distribution(const CountTable& counts, const DirichletPrior& prior) {
    if (counts.order != prior.order() || counts.alphabet_size != prior.alphabet_size()) {
        throw DomainError("pme_distribution: order/alphabet mismatch between counts and prior");
    }
    const std::size_t a = prior.alphabet_size();
    const WordCode contexts = prior.num_contexts();

    PMEDistribution q;
    q.order = prior.order();
    q.alphabet_size = a;
    q.context_weights.resize(contexts);
    q.transitions.resize(contexts * a);

    // Unnormalized posterior masses (n + alpha)(s|h) first.
    std::vector<Count> empty(a, 0);
    for (WordCode h = 0; h < contexts; ++h) {
        const auto it = counts.rows.find(h);
        const std::vector<Count>& row = it == counts.rows.end() ? empty : it->second;
        double context_mass = 0.0;
        for (std::size_t s = 0; s < a; ++s) {
            const double mass =
                static_cast<double>(row[s]) + prior.alpha(h, static_cast<Symbol>(s));
            q.transitions[h * a + s] = mass;
            context_mass += mass;
        }
        for (std::size_t s = 0; s < a; ++s) {
            q.transitions[h * a + s] /= context_mass;
        }
        q.context_weights[h] = context_mass;
        q.beta += context_mass;
    }
    for (double& w : q.context_weights) {
        w /= q.beta;
    }
    return q;
}

double context_entropy(const PMEDistribution& q) {
    return entropy_bits(q.context_weights);
}

double joint_entropy(const PMEDistribution& q) {
    std::vector<double> joint(q.transitions.size());
    for (std::size_t h = 0; h < q.context_weights.size(); ++h) {
        for (std::size_t s = 0; s < q.alphabet_size; ++s) {
            joint[h * q.alphabet_size + s] =
                q.context_weights[h] * q.transitions[h * q.alphabet_size + s];
        }
    }
    return entropy_bits(joint);
}

EntropyEstimate expected_info(const CountTable& counts, const DirichletPrior& prior) {
    const PMEDistribution q = pme_distribution(counts, prior);
    EntropyEstimate est = rate_and_correction(q);

    double context_term = 0.0;
    double transition_term = 0.0;
    for (std::size_t h = 0; h < q.context_weights.size(); ++h) {
        const double qh = q.context_weights[h];
        context_term += qh * digamma(q.beta * qh);
        for (std::size_t s = 0; s < q.alphabet_size; ++s) {
            const double joint = qh * q.transitions[h * q.alphabet_size + s];
            transition_term += joint * digamma(q.beta * joint);
        }
    }
    est.expected_info = (context_term - transition_term) / std::numbers::ln2;
    return est;
}

EntropyEstimate asymptotic_info(const CountTable& counts, const DirichletPrior& prior) {
    EntropyEstimate est = rate_and_correction(pme_distribution(counts, prior));
    est.expected_info = est.h_rate_q + est.kl_correction;
    return est;
}

}  // namespace symdyn
