#include "qspectra/spectra.hpp"

#include <cmath>
#include <cstdlib>

#include "qspectra/bits.hpp"

namespace qspectra {

WalshSpectrum walsh_transform(const TruthTable& f) {
    std::vector<int64_t> w(f.values.begin(), f.values.end());
    fwht_inplace(w);
    return WalshSpectrum{f.n, std::move(w)};
}

CorrelationSpectrum cross_correlation(const TruthTable& f, const TruthTable& g) {
    if (f.n != g.n) fail(Errc::size_mismatch, "tables have different variable counts");
    WalshSpectrum wf = walsh_transform(f);
    WalshSpectrum wg = walsh_transform(g);
    std::vector<int64_t> prod(f.size());
    for (uint32_t x = 0; x < f.size(); ++x) prod[x] = wf(x) * wg(x);
    fwht_inplace(prod);
    // The butterfly is its own inverse up to 2^n; the division is exact.
    for (int64_t& v : prod) v >>= f.n;
    return CorrelationSpectrum{f.n, std::move(prod), f.values == g.values};
}

CorrelationSpectrum auto_correlation(const TruthTable& f) {
    CorrelationSpectrum c = cross_correlation(f, f);
    c.is_auto = true;
    return c;
}

ForrelationValue forrelation2(const TruthTable& f, const TruthTable& g) {
    if (f.n != g.n) fail(Errc::size_mismatch, "tables have different variable counts");
    WalshSpectrum wg = walsh_transform(g);
    int64_t sum = 0;
    for (uint32_t x = 0; x < f.size(); ++x) sum += f(x) * wg(x);
    double value = static_cast<double>(sum) * std::pow(2.0, -1.5 * f.n);
    return ForrelationValue{value, 2, f.n};
}

ForrelationValue forrelation3(const TruthTable& f1, const TruthTable& f2, const TruthTable& f3) {
    if (f1.n != f2.n || f1.n != f3.n) fail(Errc::size_mismatch, "tables have different variable counts");
    WalshSpectrum w1 = walsh_transform(f1);
    WalshSpectrum w3 = walsh_transform(f3);
    int64_t sum = 0;
    for (uint32_t x = 0; x < f1.size(); ++x) sum += f2(x) * w1(x) * w3(x);
    double value = static_cast<double>(sum) * std::pow(2.0, -2.0 * f1.n);
    return ForrelationValue{value, 3, f1.n};
}

ForrelationValue forrelation_k(const std::vector<TruthTable>& fs) {
    const int k = static_cast<int>(fs.size());
    if (k < 2 || k > 4) fail(Errc::too_large, "fold count must be in [2, 4]");
    const int n = fs[0].n;
    for (const TruthTable& f : fs)
        if (f.n != n) fail(Errc::size_mismatch, "tables have different variable counts");
    if (k * n > 24) fail(Errc::too_large, "k*n exceeds the brute-force cap of 24");

    const uint32_t size = 1u << n;
    int64_t acc = 0;
    auto rec = [&](auto&& self, int depth, uint32_t prev, int64_t sign) -> void {
        if (depth == k - 1) {
            int64_t inner = 0;
            for (uint32_t x = 0; x < size; ++x)
                inner += parity(prev & x) ? -fs[depth](x) : fs[depth](x);
            acc += sign * inner;
            return;
        }
        for (uint32_t x = 0; x < size; ++x) {
            int64_t s = sign * fs[depth](x);
            if (depth > 0 && parity(prev & x)) s = -s;
            self(self, depth + 1, x, s);
        }
    };
    rec(rec, 0, 0, 1);
    double value = static_cast<double>(acc) * std::pow(2.0, -0.5 * (k + 1) * n);
    return ForrelationValue{value, k, n};
}

double walsh_mass(const TruthTable& f, const std::vector<uint32_t>& points) {
    WalshSpectrum w = walsh_transform(f);
    std::vector<bool> seen(f.size(), false);
    int64_t sum = 0;
    for (uint32_t p : points) {
        if (p >= f.size()) fail(Errc::index_out_of_range, "point outside {0,1}^n");
        if (seen[p]) continue;
        seen[p] = true;
        sum += w(p) * w(p);
    }
    return static_cast<double>(sum) * std::pow(2.0, -2.0 * f.n);
}

bool is_m_resilient(const TruthTable& f, int m) {
    WalshSpectrum w = walsh_transform(f);
    for (uint32_t x = 0; x < f.size(); ++x)
        if (weight(x) <= m && w(x) != 0) return false;
    return true;
}

int resiliency_order(const TruthTable& f) {
    WalshSpectrum w = walsh_transform(f);
    int order = -1;
    for (int m = 0; m < f.n; ++m) {
        bool clear = true;
        for (uint32_t x = 0; x < f.size() && clear; ++x)
            if (weight(x) == m && w(x) != 0) clear = false;
        if (!clear) break;
        order = m;
    }
    return order;
}

int uncorrelated_degree(const TruthTable& f, const TruthTable& g) {
    CorrelationSpectrum c = cross_correlation(f, g);
    bool all_zero = true;
    for (int64_t v : c.values)
        if (v != 0) { all_zero = false; break; }
    if (all_zero) return f.n;
    int degree = -1;
    for (int m = 0; m < f.n; ++m) {
        bool clear = true;
        for (uint32_t y = 0; y < f.size() && clear; ++y)
            if (weight(y) == m && c(y) != 0) clear = false;
        if (!clear) break;
        degree = m;
    }
    return degree;
}

std::vector<uint32_t> points_with_weight_at_most(int n, int m) {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < (1u << n); ++x)
        if (weight(x) <= m) out.push_back(x);
    return out;
}

std::vector<uint32_t> points_with_weight(int n, int m) {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < (1u << n); ++x)
        if (weight(x) == m) out.push_back(x);
    return out;
}

}  // namespace qspectra
