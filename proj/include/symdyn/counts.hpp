#pragma once

// Word statistics over symbol sequences.
//
// Words are encoded as base-A integers with the oldest symbol most
// significant, so the word "011" over {0,1} has code 3. Tables only store
// observed words.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/symbolize.hpp"

namespace symdyn {

using WordCode = std::uint64_t;
using Count = std::uint64_t;

// A^length, throwing SizeOverflow when it does not fit in a WordCode.
WordCode word_space(std::size_t alphabet_size, std::size_t length);

std::string word_string(WordCode code, std::size_t alphabet_size, std::size_t length);
WordCode word_code(std::string_view digits, std::size_t alphabet_size);

struct WordCounts {
    std::size_t length = 0;
    std::size_t alphabet_size = 2;
    std::map<WordCode, Count> table;
    Count total = 0;

    Count count(std::string_view word) const;
};

// Occurrences n(s | context) for a fixed context order k.
struct CountTable {
    std::size_t order = 0;
    std::size_t alphabet_size = 2;
    // context code -> counts indexed by next symbol
    std::map<WordCode, std::vector<Count>> rows;
    Count total = 0;

    Count count(WordCode context, Symbol next) const;
    Count context_total(WordCode context) const;
    Count count(std::string_view context, Symbol next) const;

    WordCode num_contexts() const { return word_space(alphabet_size, order); }
};

WordCounts count_words(const SymbolSequence& seq, std::size_t length);

// H_L = -sum p log2 p over observed words, in bits.
double block_entropy(const WordCounts& wc);

// H_L - H_{L-1} with H_0 = 0, in bits per symbol.
double entropy_rate_L(const SymbolSequence& seq, std::size_t length);

// Transitions (s_{t-k} .. s_{t-1}) -> s_t for t = k .. N-1; the first k
// symbols only serve as the start context.
CountTable transition_counts(const SymbolSequence& seq, std::size_t order);

}  // namespace symdyn
