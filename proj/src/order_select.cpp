#include "symdyn/order_select.hpp"

#include <cmath>
#include <string>

#include "symdyn/error.hpp"
#include "symdyn/special.hpp"

namespace symdyn {

void OrderRange::validate(std::size_t alphabet_size) const {
    if (k_min > k_max) {
        throw DomainError("order range: k_min (" + std::to_string(k_min) +
                          ") exceeds k_max (" + std::to_string(k_max) + ")");
    }
    word_space(alphabet_size, k_max + 1);
}

std::string_view to_string(OrderPriorKind kind) {
    switch (kind) {
        case OrderPriorKind::uniform:
            return "uniform";
        case OrderPriorKind::size_penalty:
            return "size-penalty";
    }
    return "unknown";
}

OrderPriorKind parse_order_prior(std::string_view text) {
    if (text == "uniform") {
        return OrderPriorKind::uniform;
    }
    if (text == "size-penalty" || text == "size_penalty") {
        return OrderPriorKind::size_penalty;
    }
    throw DomainError("unknown order prior '" + std::string(text) +
                      "' (expected uniform or size-penalty)");
}

WordCode model_size(std::size_t order, std::size_t alphabet_size) {
    if (alphabet_size < 1) {
        throw DomainError("model_size: empty alphabet");
    }
    const WordCode contexts = word_space(alphabet_size, order);
    const WordCode free_per_context = alphabet_size - 1;
    if (free_per_context != 0 && contexts > UINT64_MAX / free_per_context) {
        throw SizeOverflow("model_size: parameter count not representable");
    }
    return contexts * free_per_context;
}

double order_log_prior(std::size_t order, std::size_t alphabet_size, OrderPriorKind kind) {
    switch (kind) {
        case OrderPriorKind::uniform:
            return 0.0;
        case OrderPriorKind::size_penalty:
            return -static_cast<double>(model_size(order, alphabet_size));
    }
    throw DomainError("order_log_prior: invalid prior kind");
}

const OrderEntry& OrderPosterior::entry(std::size_t order) const {
    for (const auto& e : entries) {
        if (e.order == order) {
            return e;
        }
    }
    throw DomainError("OrderPosterior: order " + std::to_string(order) + " not in range");
}

OrderPosterior order_posterior(std::span<const LogEvidence> evidences,
                               std::size_t alphabet_size, OrderPriorKind kind) {
    if (evidences.empty()) {
        throw DomainError("order_posterior: no orders supplied");
    }
    OrderPosterior post;
    post.entries.reserve(evidences.size());
    std::vector<double> joint;
    joint.reserve(evidences.size());
    for (const auto& ev : evidences) {
        OrderEntry e;
        e.order = ev.order;
        e.log_prior = order_log_prior(ev.order, alphabet_size, kind);
        e.log_evidence = ev.value;
        joint.push_back(e.log_prior + e.log_evidence);
        post.entries.push_back(e);
    }

    const double norm = log_sum_exp(joint);
    std::size_t best = 0;
    for (std::size_t i = 0; i < post.entries.size(); ++i) {
        post.entries[i].probability = std::exp(joint[i] - norm);
        const bool better = joint[i] > joint[best] ||
                            (joint[i] == joint[best] &&
                             post.entries[i].order < post.entries[best].order);
        if (better) {
            best = i;
        }
    }
    post.selected = post.entries[best].order;

    std::size_t top = 0;
    for (const auto& e : post.entries) {
        top = std::max(top, e.order);
    }
    post.selected_at_upper_limit = post.entries.size() > 1 && post.selected == top;
    return post;
}

OrderPosterior order_posterior(const SymbolSequence& seq, const OrderRange& range,
                               OrderPriorKind kind, const PriorFactory& dirichlet) {
    range.validate(seq.alphabet_size);
    if (seq.size() <= range.k_max) {
        throw SequenceTooShort(seq.size(), range.k_max + 1);
    }
    std::vector<LogEvidence> evidences;
    for (std::size_t k = range.k_min; k <= range.k_max; ++k) {
        evidences.push_back(log_evidence(transition_counts(seq, k), dirichlet(k)));
    }
    return order_posterior(evidences, seq.alphabet_size, kind);
}

OrderPosterior order_posterior(const SymbolSequence& seq, const OrderRange& range,
                               OrderPriorKind kind, double alpha) {
    const std::size_t a = seq.alphabet_size;
    return order_posterior(seq, range, kind,
                           [a, alpha](std::size_t k) { return uniform_prior(k, a, alpha); });
}

}  // namespace symdyn
