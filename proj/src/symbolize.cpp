#include "symdyn/symbolize.hpp"

#include "symdyn/error.hpp"

namespace symdyn {

SymbolSequence SymbolSequence::from_string(std::string_view digits, std::size_t alphabet_size) {
    if (alphabet_size < 2 || alphabet_size > 10) {
        throw DomainError("from_string: alphabet size must be in [2, 10]");
    }
    SymbolSequence seq;
    seq.alphabet_size = alphabet_size;
    seq.symbols.reserve(digits.size());
    for (char c : digits) {
        const int v = c - '0';
        if (v < 0 || static_cast<std::size_t>(v) >= alphabet_size) {
            throw DomainError(std::string("from_string: invalid symbol '") + c + "'");
        }
        seq.symbols.push_back(static_cast<Symbol>(v));
    }
    return seq;
}

std::string SymbolSequence::to_string() const {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) {
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

SymbolSequence symbolize(const std::vector<double>& states, const PartitionSpec& part) {
    if (!(part.decision_point >= 0.0 && part.decision_point <= 1.0)) {
        throw DomainError("symbolize: decision point outside [0,1]");
    }
    SymbolSequence seq;
    seq.alphabet_size = part.alphabet_size();
    seq.symbols.reserve(states.size());
    for (double x : states) {
        seq.symbols.push_back(part.symbol_of(x));
    }
    return seq;
}

std::vector<PartitionSpec> decision_grid(std::size_t count) {
    if (count < 2) {
        throw DomainError("decision_grid: need at least 2 points");
    }
    std::vector<PartitionSpec> grid(count);
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i].decision_point = static_cast<double>(i) / last;
    }
    return grid;
}

}  // namespace symdyn
