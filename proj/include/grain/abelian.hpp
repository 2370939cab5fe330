#pragma once

#include <string>
#include <vector>

namespace grain {

// Finite abelian group as a direct product of cyclic factors.  Elements are
// flat indices in [0, order); coordinates use mixed radix with the FIRST
// factor most significant, so ascending index order equals lexicographic
// order on coordinate tuples.
struct FiniteAbelianGroup {
    std::vector<int> factors; // cyclic orders, each >= 2
    long order = 1;

    explicit FiniteAbelianGroup(std::vector<int> f);

    int add(int a, int b) const;
    int neg(int a) const;
    std::vector<int> coords(int a) const;
    int from_coords(const std::vector<int>& c) const;
    std::string spec() const; // e.g. "Z2xZ9"
};

// Parses "Z<k>" factors joined by 'x', e.g. "Z3" or "Z2xZ3xZ3".
FiniteAbelianGroup parse_group(const std::string& spec);

// One representative per isomorphism class: primary decomposition with
// prime-power cyclic factors in ascending order.  Deterministic listing.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(int n);

} // namespace grain
