#pragma once

// Brute-force reference computations used only by tests. These follow the
// defining sums directly so they stay independent of the transform-based
// implementations they check.

#include <cstdint>
#include <random>
#include <vector>

#include "qspectra/bits.hpp"
#include "qspectra/boolfn.hpp"

namespace oracles {

using qspectra::TruthTable;

inline int64_t walsh_sum(const TruthTable& f, uint32_t w) {
    int64_t sum = 0;
    for (uint32_t x = 0; x < f.size(); ++x)
        sum += qspectra::parity(x & w) ? -f(x) : f(x);
    return sum;
}

inline std::vector<int64_t> walsh_by_definition(const TruthTable& f) {
    std::vector<int64_t> out(f.size());
    for (uint32_t w = 0; w < f.size(); ++w) out[w] = walsh_sum(f, w);
    return out;
}

inline int64_t correlation_sum(const TruthTable& f, const TruthTable& g, uint32_t y) {
    int64_t sum = 0;
    for (uint32_t x = 0; x < f.size(); ++x) sum += f(x) * g(x ^ y);
    return sum;
}

inline std::vector<int64_t> correlation_by_definition(const TruthTable& f, const TruthTable& g) {
    std::vector<int64_t> out(f.size());
    for (uint32_t y = 0; y < f.size(); ++y) out[y] = correlation_sum(f, g, y);
    return out;
}

// Nested double sum of the 2-fold definition.
inline double forrelation2_by_definition(const TruthTable& f, const TruthTable& g) {
    int64_t acc = 0;
    for (uint32_t x1 = 0; x1 < f.size(); ++x1)
        for (uint32_t x2 = 0; x2 < f.size(); ++x2) {
            int64_t term = f(x1) * g(x2);
            acc += qspectra::parity(x1 & x2) ? -term : term;
        }
    return static_cast<double>(acc) * std::pow(2.0, -1.5 * f.n);
}

// Nested triple sum of the 3-fold definition.
inline double forrelation3_by_definition(const TruthTable& f1, const TruthTable& f2,
                                         const TruthTable& f3) {
    int64_t acc = 0;
    for (uint32_t x1 = 0; x1 < f1.size(); ++x1)
        for (uint32_t x2 = 0; x2 < f1.size(); ++x2)
            for (uint32_t x3 = 0; x3 < f1.size(); ++x3) {
                int64_t term = f1(x1) * f2(x2) * f3(x3);
                if (qspectra::parity(x1 & x2) ^ qspectra::parity(x2 & x3)) term = -term;
                acc += term;
            }
    return static_cast<double>(acc) * std::pow(2.0, -2.0 * f1.n);
}

// Row-by-column product with the unnormalized Hadamard matrix built by
// explicit tensor expansion.
inline std::vector<std::vector<int64_t>> hadamard_matrix(int n) {
    std::vector<std::vector<int64_t>> h{{1}};
    for (int step = 0; step < n; ++step) {
        const size_t dim = h.size();
        std::vector<std::vector<int64_t>> next(2 * dim, std::vector<int64_t>(2 * dim));
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                next[i][j] = h[i][j];
                next[i][j + dim] = h[i][j];
                next[i + dim][j] = h[i][j];
                next[i + dim][j + dim] = -h[i][j];
            }
        h = std::move(next);
    }
    return h;
}

inline TruthTable random_table(int n, std::mt19937_64& rng) {
    std::vector<int8_t> values(size_t{1} << n);
    for (auto& v : values) v = (rng() & 1) ? 1 : -1;
    return TruthTable(n, std::move(values));
}

}  // namespace oracles
