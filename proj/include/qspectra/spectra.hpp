#pragma once

#include <cstdint>
#include <vector>

#include "qspectra/boolfn.hpp"
#include "qspectra/fwht.hpp"

namespace qspectra {

struct WalshSpectrum {
    int n = 0;
    std::vector<int64_t> values;  // values[w] = W_f(w)

    int64_t operator()(uint32_t w) const { return values[w]; }
};

struct CorrelationSpectrum {
    int n = 0;
    std::vector<int64_t> values;  // values[y] = C_{f,g}(y)
    bool is_auto = false;

    int64_t operator()(uint32_t y) const { return values[y]; }
};

struct ForrelationValue {
    double value = 0.0;
    int k = 0;
    int n = 0;
};

// W_f(w) = sum_x f(x) (-1)^{x.w}, via the in-place butterfly.
WalshSpectrum walsh_transform(const TruthTable& f);

// C_{f,g}(y) = sum_x f(x) g(x xor y), computed as transforms, pointwise
// product and inverse transform.
CorrelationSpectrum cross_correlation(const TruthTable& f, const TruthTable& g);
CorrelationSpectrum auto_correlation(const TruthTable& f);

ForrelationValue forrelation2(const TruthTable& f, const TruthTable& g);
ForrelationValue forrelation3(const TruthTable& f1, const TruthTable& f2, const TruthTable& f3);
// Exact brute-force nested sum over all k-tuples; requires 2 <= k <= 4 and
// k*n <= 24.
ForrelationValue forrelation_k(const std::vector<TruthTable>& fs);

// p = 2^{-2n} sum_{x in points} W_f(x)^2.
double walsh_mass(const TruthTable& f, const std::vector<uint32_t>& points);

bool is_m_resilient(const TruthTable& f, int m);
// Largest m with W_f = 0 on all weights <= m, or -1 when not even
// 0-resilient.
int resiliency_order(const TruthTable& f);
// Largest m with C_{f,g} = 0 on all weights <= m; -1 when C(0) != 0; n when
// the whole spectrum vanishes.
int uncorrelated_degree(const TruthTable& f, const TruthTable& g);

std::vector<uint32_t> points_with_weight_at_most(int n, int m);
std::vector<uint32_t> points_with_weight(int n, int m);

}  // namespace qspectra
