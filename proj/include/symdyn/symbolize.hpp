#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/dynamics.hpp"

namespace symdyn {

using Symbol = std::uint8_t;

struct SymbolSequence {
    std::vector<Symbol> symbols;
    std::size_t alphabet_size = 2;

    std::size_t size() const noexcept { return symbols.size(); }

    // Build from a digit string such as "0110"; each character is one symbol.
    static SymbolSequence from_string(std::string_view digits, std::size_t alphabet_size = 2);
    std::string to_string() const;
};

// Binary threshold instrument: "0" for x in [0,d), "1" for x in [d,1].
struct PartitionSpec {
    double decision_point = 0.5;

    std::size_t alphabet_size() const noexcept { return 2; }
    Symbol symbol_of(double x) const noexcept { return x < decision_point ? 0 : 1; }
};

SymbolSequence symbolize(const std::vector<double>& states, const PartitionSpec& part);

inline SymbolSequence symbolize(const Trajectory& traj, const PartitionSpec& part) {
    return symbolize(traj.states, part);
}

// `count` evenly spaced decision points from 0 to 1 inclusive.
std::vector<PartitionSpec> decision_grid(std::size_t count);

}  // namespace symdyn
