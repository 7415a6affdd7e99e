#include "symdyn/markov.hpp"

#include <cmath>
#include <string>

#include "symdyn/error.hpp"
#include "symdyn/special.hpp"

namespace symdyn {

namespace {

void require_match(const CountTable& counts, std::size_t order, std::size_t alphabet_size,
                   const char* what) {
    if (counts.order != order || counts.alphabet_size != alphabet_size) {
        throw DomainError(std::string(what) + ": order/alphabet mismatch (counts k=" +
                          std::to_string(counts.order) + ", A=" +
                          std::to_string(counts.alphabet_size) + "; model k=" +
                          std::to_string(order) + ", A=" + std::to_string(alphabet_size) +
                          ")");
    }
}

}  // namespace

DirichletPrior::DirichletPrior(std::size_t order, std::size_t alphabet_size, double base)
    : order_(order), alphabet_size_(alphabet_size), base_(base) {
    if (alphabet_size < 2) {
        throw DomainError("DirichletPrior: alphabet size must be >= 2");
    }
    if (!(base > 0.0) || !std::isfinite(base)) {
        throw DomainError("DirichletPrior: alpha must be positive and finite");
    }
    // Fails early if A^(k+1) parameters are not addressable.
    word_space(alphabet_size, order + 1);
}

double DirichletPrior::alpha(WordCode context, Symbol next) const {
    const auto it = overrides_.find({context, next});
    return it == overrides_.end() ? base_ : it->second;
}

double DirichletPrior::context_alpha(WordCode context) const {
    double sum = 0.0;
    for (std::size_t s = 0; s < alphabet_size_; ++s) {
        sum += alpha(context, static_cast<Symbol>(s));
    }
    return sum;
}

double DirichletPrior::total_alpha() const {
    const double params = static_cast<double>(word_space(alphabet_size_, order_ + 1));
    double sum = base_ * params;
    for (const auto& [key, value] : overrides_) {
        sum += value - base_;
    }
    return sum;
}

void DirichletPrior::set_alpha(WordCode context, Symbol next, double value) {
    if (context >= num_contexts() || next >= alphabet_size_) {
        throw DomainError("DirichletPrior::set_alpha: index out of range");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError("DirichletPrior::set_alpha: alpha must be positive and finite");
    }
    overrides_[{context, next}] = value;
}

DirichletPrior uniform_prior(std::size_t order, std::size_t alphabet_size, double alpha) {
    return DirichletPrior(order, alphabet_size, alpha);
}

double log_likelihood(const MarkovChainParams& params, const CountTable& counts) {
    require_match(counts, params.order, params.alphabet_size, "log_likelihood");
    double total = 0.0;
    for (const auto& [context, row] : counts.rows) {
        for (std::size_t s = 0; s < row.size(); ++s) {
            if (row[s] == 0) {
                continue;
            }
            const double p = params.prob(context, static_cast<Symbol>(s));
            if (!(p > 0.0)) {
                throw ZeroProbabilityObserved(
                    "log_likelihood: observed transition " +
                    word_string(context, counts.alphabet_size, counts.order) + " -> " +
                    std::to_string(s) + " has zero probability");
            }
            total += static_cast<double>(row[s]) * std::log(p);
        }
    }
    return total;
}

LogEvidence log_evidence(const CountTable& counts, const DirichletPrior& prior) {
    require_match(counts, prior.order(), prior.alphabet_size(), "log_evidence");
    double total = 0.0;
    for (const auto& [context, row] : counts.rows) {
        double alpha_sum = 0.0;
        double posterior_sum = 0.0;
        double term = 0.0;
        for (std::size_t s = 0; s < row.size(); ++s) {
            const double a = prior.alpha(context, static_cast<Symbol>(s));
            const double post = a + static_cast<double>(row[s]);
            alpha_sum += a;
            posterior_sum += post;
            if (row[s] > 0) {
                term += log_gamma(post) - log_gamma(a);
            }
        }
        if (posterior_sum > alpha_sum) {
            term += log_gamma(alpha_sum) - log_gamma(posterior_sum);
        }
        total += term;
    }
    return {total, counts.order};
}

MarkovChainParams posterior_mean(const CountTable& counts, const DirichletPrior& prior) {
    require_match(counts, prior.order(), prior.alphabet_size(), "posterior_mean");
    const std::size_t a = prior.alphabet_size();
    const WordCode contexts = prior.num_contexts();

    MarkovChainParams params;
    params.order = prior.order();
    params.alphabet_size = a;
    params.probs.resize(contexts * a);

    std::vector<Count> empty(a, 0);
    for (WordCode h = 0; h < contexts; ++h) {
        const auto it = counts.rows.find(h);
        const std::vector<Count>& row = it == counts.rows.end() ? empty : it->second;
        double denom = 0.0;
        for (std::size_t s = 0; s < a; ++s) {
            denom += static_cast<double>(row[s]) + prior.alpha(h, static_cast<Symbol>(s));
        }
        for (std::size_t s = 0; s < a; ++s) {
            const auto sym = static_cast<Symbol>(s);
            params.prob(h, sym) = (static_cast<double>(row[s]) + prior.alpha(h, sym)) / denom;
        }
    }
    return params;
}

}  // namespace symdyn
