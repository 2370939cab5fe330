#pragma once

#include <cstdint>
#include <vector>

#include "grain/caps.hpp"
#include "grain/codebook.hpp"

namespace grain {

// Maximum clique in an undirected graph given as bitset adjacency rows.
// Branch and bound with a greedy-coloring bound; deterministic.
std::vector<int> max_clique(int vertex_count, const std::vector<std::uint64_t>& adjacency,
                            int words_per_row);

// Largest code of the given length correcting the model's errors, found by
// exhaustive search over all 2^n words: maximum clique in the graph whose
// edges join words with disjoint error balls.  Feasible only for tiny n.
CodeBook exhaustive_max_code(int n, const ErrorModel& model,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Exact maximum smearing-error code size of length n via the first-position
// split: position 1 never smears, so the words starting 0 and the words
// starting 1 form independent subproblems, and each tail lives on the
// anchored channel (its own position 1 smears exactly when it differs from
// the known prefix bit).  The optimum is twice the anchored optimum one
// position shorter; the witness pairs each tail with its complement.
CodeBook exact_optimum_grain(int n, int t, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace grain
