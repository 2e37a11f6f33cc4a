#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qspectra/errors.hpp"

namespace qspectra {

inline constexpr int kMaxVars = 12;

// An n-variable Boolean function stored as 2^n signs in {+1, -1}.
// Entry index x encodes the input bits x1..xn with x1 as the most
// significant bit; x1 also maps to the first query qubit in circuits.
struct TruthTable {
    int n = 0;
    std::vector<int8_t> values;

    TruthTable() = default;
    TruthTable(int n_vars, std::vector<int8_t> vals);

    uint32_t size() const { return 1u << n; }
    int operator()(uint32_t x) const { return values[x]; }

    bool operator==(const TruthTable&) const = default;
};

// File format: a `n=<int>` header line, then 2^n characters from {0,1}
// (0 -> +1, 1 -> -1), possibly split across lines. Lines starting with
// '#' are ignored.
TruthTable parse_truth_table(std::istream& in);
TruthTable parse_truth_table(const std::string& text);
TruthTable load_truth_table(const std::string& path);
std::string serialize(const TruthTable& f);

TruthTable constant(int n, int sign);
// L_y(x) = (-1)^{x.y}; equals row y of the unnormalized Hadamard matrix.
TruthTable linear(int n, uint32_t y);
TruthTable linear(int n, const std::string& y);
// -1 exactly on the given points, +1 elsewhere.
TruthTable indicator_negated(int n, const std::vector<uint32_t>& points);
// -1 iff wt(x) <= m; requires 0 <= m < n.
TruthTable weight_threshold(int n, int m);

// Pointwise product: the xor of the underlying 0/1 functions.
TruthTable xor_tables(const TruthTable& f, const TruthTable& g);
TruthTable negate(const TruthTable& f);

bool is_balanced(const TruthTable& f);
bool is_bent(const TruthTable& f);
// The bent dual: dual(f)(w) = W_f(w) / 2^{n/2}. Throws not_bent otherwise.
TruthTable dual(const TruthTable& f);

// A list of four bent functions such that the xor of any two distinct
// members is bent and, for every ordered distinct pair (f, g),
// |sum_x g(x) dual(f)(x)| = 2^{n/2}. Both properties are verified by
// brute force during construction. Requires even n >= 4.
std::vector<TruthTable> bent_family(int n);

}  // namespace qspectra
