#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "symdyn/markov.hpp"

namespace symdyn {

struct OrderRange {
    std::size_t k_min = 1;
    std::size_t k_max = 8;

    void validate(std::size_t alphabet_size) const;
};

enum class OrderPriorKind { uniform, size_penalty };

std::string_view to_string(OrderPriorKind kind);
OrderPriorKind parse_order_prior(std::string_view text);

// Number of free parameters A^k (A - 1).
WordCode model_size(std::size_t order, std::size_t alphabet_size);

// Unnormalized ln P(M_k): 0 for uniform, -|M_k| for size_penalty.
double order_log_prior(std::size_t order, std::size_t alphabet_size, OrderPriorKind kind);

struct OrderEntry {
    std::size_t order = 0;
    double log_prior = 0.0;
    double log_evidence = 0.0;
    double probability = 0.0;
};

struct OrderPosterior {
    std::vector<OrderEntry> entries;  // ascending order
    std::size_t selected = 0;

    // True when the argmax sits at the top of the range, which may mean
    // the range truncates the process's memory.
    bool selected_at_upper_limit = false;

    const OrderEntry& entry(std::size_t order) const;
};

using PriorFactory = std::function<DirichletPrior(std::size_t order)>;

// Normalizes evidence times prior across the given orders; ties go to the
// smaller order.
OrderPosterior order_posterior(std::span<const LogEvidence> evidences,
                               std::size_t alphabet_size, OrderPriorKind kind);

OrderPosterior order_posterior(const SymbolSequence& seq, const OrderRange& range,
                               OrderPriorKind kind, const PriorFactory& dirichlet);

// Uniform Dirichlet with the given alpha for every order.
OrderPosterior order_posterior(const SymbolSequence& seq, const OrderRange& range,
                               OrderPriorKind kind, double alpha = 1.0);

}  // namespace symdyn
