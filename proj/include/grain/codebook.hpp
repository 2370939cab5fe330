#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grain/error_model.hpp"

namespace grain {

// A block code: fixed length, sorted unique codewords.
struct CodeBook {
    int length = 0;
    std::vector<std::uint32_t> words;

    std::size_t size() const { return words.size(); }
    bool contains(std::uint32_t w) const;
    void normalize(); // sort + dedupe
};

// Text format: one codeword per line as a binary string whose first character
// is position 1.  Blank lines and lines starting with '#' are ignored.
CodeBook read_codebook(std::istream& in);
CodeBook read_codebook_file(const std::string& path);
void write_codebook(std::ostream& out, const CodeBook& code);
void write_codebook_file(const std::string& path, const CodeBook& code);

struct VerifyResult {
    bool ok = true;
    // Populated when ok is false: the first offending codeword pair found in
    // sorted order, plus one word both balls contain.
    std::uint32_t first = 0, second = 0, common = 0;
};

// Checks every codeword pair for ball disjointness; stops at the first
// overlapping pair.  Deterministic: pairs are scanned in sorted order.
VerifyResult is_t_correcting(const CodeBook& code, const ErrorModel& model);

struct DecodeResult {
    std::optional<std::uint32_t> codeword; // set iff exactly one ball matched
    int matches = 0;
};

// Scans the codebook for codewords whose ball contains the received word.
DecodeResult brute_force_decode(const CodeBook& code, std::uint32_t received,
                                const ErrorModel& model);

// Pairwise sufficient conditions for correcting one grain error: two words
// qualify when they differ exactly in position 1, or at Hamming distance 2
// with an adjacent (0,0)/(1,1) pattern swap starting at some position in
// [2, n-1], or at Hamming distance >= 3.
bool single_grain_sufficient(const CodeBook& code);
bool single_grain_sufficient_pair(std::uint32_t x, std::uint32_t y, int n);

// Prepends a free position 1 to every codeword with both values, doubling the
// code size and increasing the length by one.
CodeBook prepend_bit_lift(const CodeBook& code);

// Drops position 1 and deduplicates.
CodeBook shorten_first_bit(const CodeBook& code);

} // namespace grain
