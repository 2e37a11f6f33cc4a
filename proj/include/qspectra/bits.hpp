#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "qspectra/errors.hpp"

namespace qspectra {

inline int weight(uint64_t x) { return std::popcount(x); }

inline int parity(uint64_t x) { return std::popcount(x) & 1; }

// Renders the low `width` bits of `value`, most significant first, so that
// bit index 0 of a register prints as the leftmost character.
inline std::string bits_to_string(uint64_t value, int width) {
    std::string out(static_cast<size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((value >> (width - 1 - i)) & 1ull) out[static_cast<size_t>(i)] = '1';
    }
    return out;
}

inline uint64_t bits_from_string(const std::string& s) {
    uint64_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') fail(Errc::bad_character, "expected a 0/1 string, got '" + s + "'");
        v = (v << 1) | static_cast<uint64_t>(c - '0');
    }
    return v;
}

}  // namespace qspectra
