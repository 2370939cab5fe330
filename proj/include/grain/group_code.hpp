#pragma once

#include "grain/abelian.hpp"
#include "grain/caps.hpp"
#include "grain/codebook.hpp"
#include "grain/rational.hpp"

namespace grain {

// Coefficient ordering for the group construction: the zero element first,
// then the self-inverse elements ascending, then the remaining elements in
// inverse pairs (g, -g) placed adjacently, pairs ascending by their smaller
// member.  Position 1 thus always carries coefficient zero.
std::vector<int> build_ordering(const FiniteAbelianGroup& g);

// The code {x in {0,1}^n : sum_k x_k * g_k = residue} with n = |group| and
// g_k the ordering above.  Corrects one grain error for every residue.
CodeBook enumerate_group_code(const FiniteAbelianGroup& g, int residue,
                              std::uint64_t cap = kDefaultEnumerationCap);

// Streaming count of the same code, one pass over the coefficients with a
// per-element tally; no enumeration.
BigInt group_code_cardinality(const FiniteAbelianGroup& g, int residue);

// Tallies for every residue at once.
std::vector<BigInt> group_code_class_sizes(const FiniteAbelianGroup& g);

struct BestGroup {
    FiniteAbelianGroup group;
    BigInt cardinality;
    std::vector<std::pair<std::string, BigInt>> candidates; // spec -> zero-residue size
};

// Scans all abelian groups of order n and keeps the largest zero-residue
// code; ties go to the earliest group in the canonical listing.
BestGroup best_group_code(int n);

} // namespace grain
