#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grain/caps.hpp"

namespace grain {

using GfVec = std::vector<int>;
using GfMat = std::vector<GfVec>;

// Linear code over a prime field, given by a parity-check matrix.
struct PrimeLinearCode {
    int p = 3;        // field size, prime
    int length = 0;   // number of columns
    GfMat check;      // r rows of length columns, entries in [0, p)
    int designed_t = 1;

    int rows() const { return static_cast<int>(check.size()); }
    GfVec column(int i) const;
    GfVec syndrome(const GfVec& word) const;
};

void check_prime(int p);

// Single-error-correcting code with p^r-ary syndrome space: columns are the
// projective points of GF(p)^r, normalized so the first nonzero entry is 1,
// sorted lexicographically.  Length (p^r - 1) / (p - 1).
PrimeLinearCode hamming_code(int p, int r);

// [l, 1, l] code: rows (1, -1, 0, ...), (1, 0, -1, ...), ...  Requires
// l >= 2t+1 so the designed radius t is actually reached.
PrimeLinearCode repetition_code(int p, int l, int t);

// Text format: header "p r l", then r rows of l integers.  '#' and blank
// lines are ignored.
PrimeLinearCode read_check_matrix(std::istream& in, int designed_t);
PrimeLinearCode read_check_matrix_file(const std::string& path, int designed_t);
void write_check_matrix(std::ostream& out, const PrimeLinearCode& code);

// Row-reduces m in place over GF(p); returns the rank.
int row_reduce(GfMat& m, int p);

int matrix_rank(GfMat m, int p);

// All solutions of check * x = syndrome, lexicographically ordered by the
// free-coordinate assignment.  Empty when inconsistent.
std::vector<GfVec> solve_coset(const PrimeLinearCode& code, const GfVec& syndrome,
                               std::uint64_t cap = kDefaultEnumerationCap);

// The row space of the check matrix (the dual of the code), all p^rank words.
std::vector<GfVec> dual_codewords(const PrimeLinearCode& code);

struct DistanceResult {
    int distance = 0;
    bool exact = true; // false: no nonzero codeword of weight < distance exists
};

// Exact minimum distance when the codeword count fits the cap; otherwise
// certifies distance >= 2*designed_t + 1 by scanning all lighter words.
DistanceResult min_distance(const PrimeLinearCode& code,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Syndrome ids pack coordinates little-endian: id = sum coords[i] * p^i.
long syndrome_id(const GfVec& s, int p);
GfVec syndrome_from_id(long id, int p, int r);

} // namespace grain
