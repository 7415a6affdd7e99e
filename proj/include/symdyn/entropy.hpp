#pragma once

// Posterior-expected entropy rate of an inferred Markov chain.
//
// Q is the chain defined by the posterior mean: context weights
// q(h) = (n + alpha)(h) / beta and transitions q(s|h) = (n + alpha)(s|h) /
// (n + alpha)(h), where beta sums n + alpha over every (context, symbol).
// The estimator is the posterior average of D[Q||P] + h[Q] with P drawn
// from the Dirichlet posterior, which has the closed form
//
//   (1/ln 2) [ sum_h q(h) psi(beta q(h)) - sum_{h,s} q(h) q(s|h) psi(beta q(h) q(s|h)) ].
//
// Replacing psi(x) by ln x - 1/(2x) gives the large-sample form
// H_{k+1}[Q] - H_k[Q] + A^k (A-1) / (2 beta ln 2).

#include <vector>

#include "symdyn/markov.hpp"

namespace symdyn {

struct PMEDistribution {
    std::size_t order = 0;
    std::size_t alphabet_size = 2;
    double beta = 0.0;
    std::vector<double> context_weights;  // q(h), size A^k
    std::vector<double> transitions;      // q(s|h), index h * A + s

    double transition(WordCode context, Symbol next) const {
        return transitions.at(context * alphabet_size + next);
    }
};

struct EntropyEstimate {
    std::size_t order = 0;
    // Posterior expectation of D[Q||P] + h[Q] in bits per symbol. Filled
    // with the asymptotic value by asymptotic_info.
    double expected_info = 0.0;
    // H_{k+1}[Q] - H_k[Q], bits per symbol.
    double h_rate_q = 0.0;
    // A^k (A-1) / (2 beta ln 2), bits.
    double kl_correction = 0.0;
    // Smallest beta q(h) q(s|h); the asymptotic form needs this >> 1.
    double min_posterior_mass = 0.0;
};

PMEDistribution pme_distribution(const CountTable& counts, const DirichletPrior& prior);

// Entropy in bits of the context marginal q(h) and of the joint q(h) q(s|h).
double context_entropy(const PMEDistribution& q);
double joint_entropy(const PMEDistribution& q);

EntropyEstimate expected_info(const CountTable& counts, const DirichletPrior& prior);
EntropyEstimate asymptotic_info(const CountTable& counts, const DirichletPrior& prior);

}  // namespace symdyn
