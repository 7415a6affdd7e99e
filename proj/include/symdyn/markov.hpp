#pragma once

// Bayesian inference for k-th order Markov chains under a product of
// Dirichlet priors, one per context. All probabilities are natural-log.

#include <map>
#include <utility>
#include <vector>

#include "symdyn/counts.hpp"

namespace symdyn {

// Hyperparameters alpha(s | context). Every entry equals `base` unless
// overridden; all entries are strictly positive.
class DirichletPrior {
public:
    DirichletPrior(std::size_t order, std::size_t alphabet_size, double base);

    std::size_t order() const noexcept { return order_; }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    WordCode num_contexts() const { return word_space(alphabet_size_, order_); }

    double alpha(WordCode context, Symbol next) const;
    double context_alpha(WordCode context) const;
    // Sum of every alpha over all contexts and symbols.
    double total_alpha() const;

    void set_alpha(WordCode context, Symbol next, double value);

    bool is_uniform() const noexcept { return overrides_.empty(); }

private:
    std::size_t order_;
    std::size_t alphabet_size_;
    double base_;
    std::map<std::pair<WordCode, Symbol>, double> overrides_;
};

DirichletPrior uniform_prior(std::size_t order, std::size_t alphabet_size, double alpha = 1.0);

// Transition probabilities p(s | context), dense over all A^k contexts.
struct MarkovChainParams {
    std::size_t order = 0;
    std::size_t alphabet_size = 2;
    std::vector<double> probs;  // index: context * A + symbol

    double prob(WordCode context, Symbol next) const {
        return probs.at(context * alphabet_size + next);
    }
    double& prob(WordCode context, Symbol next) {
        return probs.at(context * alphabet_size + next);
    }
};

struct LogEvidence {
    double value = 0.0;
    std::size_t order = 0;
};

// sum n(s|h) ln p(s|h); throws ZeroProbabilityObserved if a positive count
// meets a zero probability.
double log_likelihood(const MarkovChainParams& params, const CountTable& counts);

// ln P(D | M_k), conditional on the first k symbols. Contexts never visited
// contribute exactly zero.
LogEvidence log_evidence(const CountTable& counts, const DirichletPrior& prior);

// p(s|h) = (n + alpha)(s|h) / (n + alpha)(h); unvisited contexts get the
// prior mean.
MarkovChainParams posterior_mean(const CountTable& counts, const DirichletPrior& prior);

}  // namespace symdyn
