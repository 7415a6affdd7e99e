#include "symdyn/counts.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "symdyn/error.hpp"

namespace symdyn {

WordCode word_space(std::size_t alphabet_size, std::size_t length) {
    if (alphabet_size < 1) {
        throw DomainError("word_space: empty alphabet");
    }
    WordCode n = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (n > std::numeric_limits<WordCode>::max() / alphabet_size) {
            throw SizeOverflow("word space " + std::to_string(alphabet_size) + "^" +
                               std::to_string(length) + " is not representable");
        }
        n *= alphabet_size;
    }
    return n;
}

std::string word_string(WordCode code, std::size_t alphabet_size, std::size_t length) {
    std::string out(length, '0');
    for (std::size_t i = length; i-- > 0;) {
        out[i] = static_cast<char>('0' + code % alphabet_size);
        code /= alphabet_size;
    }
    return out;
}

WordCode word_code(std::string_view digits, std::size_t alphabet_size) {
    WordCode code = 0;
    for (char c : digits) {
        const int v = c - '0';
        if (v < 0 || static_cast<std::size_t>(v) >= alphabet_size) {
            throw DomainError(std::string("word_code: invalid symbol '") + c + "'");
        }
        code = code * alphabet_size + static_cast<WordCode>(v);
    }
    return code;
}

Count WordCounts::count(std::string_view word) const {
    if (word.size() != length) {
        return 0;
    }
    const auto it = table.find(word_code(word, alphabet_size));
    return it == table.end() ? 0 : it->second;
}

Count CountTable::count(WordCode context, Symbol next) const {
    const auto it = rows.find(context);
    return it == rows.end() ? 0 : it->second.at(next);
}

Count CountTable::context_total(WordCode context) const {
    const auto it = rows.find(context);
    if (it == rows.end()) {
        return 0;
    }
    Count sum = 0;
    for (Count c : it->second) {
        sum += c;
    }
    return sum;
}

Count CountTable::count(std::string_view context, Symbol next) const {
    if (context.size() != order) {
        throw DomainError("CountTable::count: context length differs from order");
    }
    return count(word_code(context, alphabet_size), next);
}

WordCounts count_words(const SymbolSequence& seq, std::size_t length) {
    if (length < 1) {
        throw DomainError("count_words: word length must be >= 1");
    }
    if (seq.size() < length) {
        throw SequenceTooShort(seq.size(), length);
    }
    const WordCode space = word_space(seq.alphabet_size, length);
    const WordCode lead = space / seq.alphabet_size;

    WordCounts wc;
    wc.length = length;
    wc.alphabet_size = seq.alphabet_size;

    WordCode code = 0;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        if (t >= length) {
            code %= lead;
        }
        code = code * seq.alphabet_size + seq.symbols[t];
        if (t + 1 >= length) {
            ++wc.table[code];
            ++wc.total;
        }
    }
    return wc;
}

double block_entropy(const WordCounts& wc) {
    if (wc.total == 0) {
        throw DomainError("block_entropy: no words counted");
    }
    const double total = static_cast<double>(wc.total);
    double h = 0.0;
    for (const auto& [word, n] : wc.table) {
        if (n == 0) {
            continue;
        }
        const double p = static_cast<double>(n) / total;
        h -= p * std::log(p);
    }
    return h / std::numbers::ln2;
}

double entropy_rate_L(const SymbolSequence& seq, std::size_t length) {
    const double h_l = block_entropy(count_words(seq, length));
    const double h_prev = length > 1 ? block_entropy(count_words(seq, length - 1)) : 0.0;
    return h_l - h_prev;
}

CountTable transition_counts(const SymbolSequence& seq, std::size_t order) {
    if (seq.size() < order + 1) {
        throw SequenceTooShort(seq.size(), order + 1);
    }
    const std::size_t a = seq.alphabet_size;
    const WordCode contexts = word_space(a, order);

    CountTable table;
    table.order = order;
    table.alphabet_size = a;

    WordCode context = 0;
    for (std::size_t t = 0; t < order; ++t) {
        context = context * a + seq.symbols[t];
    }
    for (std::size_t t = order; t < seq.size(); ++t) {
        const Symbol next = seq.symbols[t];
        auto& row = table.rows[context];
        if (row.empty()) {
            row.assign(a, 0);
        }
        ++row[next];
        ++table.total;
        if (order > 0) {
            context = (context * a + next) % contexts;
        }
    }
    return table;
}

}  // namespace symdyn
