#pragma once

#include <map>
#include <vector>

#include "grain/caps.hpp"
#include "grain/cyclotomic.hpp"
#include "grain/gfp.hpp"
#include "grain/rational.hpp"

namespace grain {

struct HammingWeightEnumerator {
    int length = 0;
    std::vector<BigInt> counts; // counts[w] = words of weight w, size length+1
};

// Complete weight enumerator: composition (i_0, ..., i_{p-1}) -> word count.
struct CompleteWeightEnumerator {
    int p = 3;
    int length = 0;
    std::map<std::vector<int>, BigInt> counts;
};

// Direct enumeration of the coset with the given syndrome.
HammingWeightEnumerator hwe_direct(const PrimeLinearCode& code, const GfVec& syndrome,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Direct enumeration of the code (zero syndrome).
CompleteWeightEnumerator cwe_direct(const PrimeLinearCode& code,
                                    std::uint64_t cap = kDefaultEnumerationCap);

// Complete weight enumerator through the dual sum: |dual|^-1 times the sum
// over dual words of prod_i (z_0 + z_1 w^{c_i} + ... + z_{p-1} w^{(p-1)c_i}).
// Exact; feasible whenever the dual is small.
CompleteWeightEnumerator cwe_macwilliams(const PrimeLinearCode& code);

// Number of binary words mapping onto the enumerated outer words when symbol
// 0 has two preimages and every other symbol one: sum_w A_w * 2^(l - w).
BigInt doubled_zero_count(const HammingWeightEnumerator& hwe);

// Evaluates the enumerator at z_j = size of the class mapped to symbol j.
// class_to_symbol[k] is the symbol class k receives.
BigInt count_from_partition(const CompleteWeightEnumerator& cwe,
                            const std::vector<BigInt>& class_sizes,
                            const std::vector<int>& class_to_symbol);

// Same count evaluated numerically through the dual sum, never expanding the
// enumerator; handles lengths far beyond enumeration (e.g. 57 blocks).
BigInt count_from_partition_dual(const PrimeLinearCode& outer, const GfVec& residue,
                                 const std::vector<BigInt>& size_by_symbol);

// Assignment scan: value of count_from_partition for every choice of the
// class mapped to symbol 0 (remaining classes in index order), or for every
// permutation when full is set.
struct AssignmentScan {
    std::vector<BigInt> by_zero_class;  // indexed by class put at symbol 0
    bool max_at_largest = false;        // max attained with class 0 at symbol 0
    bool zero_class_determines = false; // full scan only: value fixed by symbol-0 class
};

AssignmentScan scan_symbol_assignments(const CompleteWeightEnumerator& cwe,
                                       const std::vector<BigInt>& class_sizes, bool full);

// --- doubled ternary syndrome counts ------------------------------------

// For a ternary base with r check rows: profile[a] counts base columns h
// with a . h = 0 (a ranges over all 3^r syndrome ids).
std::vector<int> zero_column_profile(const PrimeLinearCode& ternary_base);

// Exact count of binary words of length 2*l whose doubled-matrix syndrome
// equals b, through the character sum 3^-r * sum_a w^{<b,a>} 4^{profile(a)}.
BigInt doubled_syndrome_count(const PrimeLinearCode& ternary_base, const GfVec& b);

std::vector<BigInt> doubled_syndrome_counts_all(const PrimeLinearCode& ternary_base);

// Brute-force oracle for the same counts (budgeted 2^{2l} sweep).
std::vector<BigInt> doubled_syndrome_counts_brute(const PrimeLinearCode& ternary_base,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

// Closed-form lower bound on the zero-syndrome count: 4^l/3^r + 2(4/3)^r - 8/3.
// Requires fewer check rows than base columns (r < l).
BigRat doubled_zero_lower_bound(int l, int r);

// Character pair product 1 + w^{-a.b} + w^{-2a.b} + w^{-3a.b}: equals 4 when
// a . b = 0 (mod 3) and 1 otherwise.
Cyclo character_pair_product(const GfVec& a, const GfVec& b);

// Ceiling for partition-based counts on blocks of length m with n outer
// symbols: (2^{mn} + mn * 2^{m(n-1)/(m+1)}) / (mn + 1).  The exponent must be
// integral, which holds for the code parameters this applies to.
BigRat partition_count_ceiling(int m, int n);

} // namespace grain
