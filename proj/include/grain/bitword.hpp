#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace grain {

// Binary words of length 1..32 packed into uint32_t.  Bit k (LSB = bit 0)
// holds position k+1 of the word, so the decimal value of a word equals
// sum over set positions i of 2^(i-1).
inline constexpr int kMaxWordLength = 32;

inline std::uint32_t length_mask(int n) {
    return n >= 32 ? 0xffffffffu : ((std::uint32_t{1} << n) - 1);
}

inline void check_length(int n) {
    if (n < 1 || n > kMaxWordLength)
        throw std::invalid_argument("word length must be in [1, 32], got " + std::to_string(n));
}

inline int weight(std::uint32_t w) { return std::popcount(w); }

inline int bit_at(std::uint32_t w, int pos1) { return (w >> (pos1 - 1)) & 1u; }

// Positions i >= 2 where the word changes value, as a mask (bit i-1 set iff
// position i differs from position i-1).  These are the only positions a
// smearing error can touch.
inline std::uint32_t boundary_mask(std::uint32_t x, int n) {
    return (x ^ (x << 1)) & ~std::uint32_t{1} & length_mask(n);
}

// Pairwise difference of adjacent positions: output position i is
// x_i xor x_{i+1}, for i = 1..n-1.  Weight of the output is runs(x) - 1.
inline std::uint32_t adjacent_diff(std::uint32_t x, int n) {
    return (x ^ (x >> 1)) & length_mask(n - 1);
}

// Number of maximal constant segments of the word.
inline int run_count(std::uint32_t x, int n) {
    return std::popcount(boundary_mask(x, n)) + 1;
}

inline std::string word_to_string(std::uint32_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((x >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

// Parses a binary string whose first character is position 1.
inline std::uint32_t word_from_string(const std::string& s) {
    check_length(static_cast<int>(s.size()));
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            x |= std::uint32_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("binary string may contain only 0 and 1: \"" + s + "\"");
    }
    return x;
}

} // namespace grain
