#pragma once

#include <cstdint>
#include <span>

namespace qspectra {

// In-place unnormalized Walsh-Hadamard butterfly. Applying it twice yields
// 2^n times the identity. The length of v must be a power of two.
inline void fwht_inplace(std::span<int64_t> v) {
    const size_t len = v.size();
    for (size_t h = 1; h < len; h <<= 1) {
        for (size_t base = 0; base < len; base += h << 1) {
            for (size_t i = base; i < base + h; ++i) {
                int64_t a = v[i];
                int64_t b = v[i + h];
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
    }
}

}  // namespace qspectra
