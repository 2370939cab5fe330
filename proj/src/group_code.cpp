#include "grain/group_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grain {

std::vector<int> build_ordering(const FiniteAbelianGroup& g) {
    std::vector<int> order;
    order.push_back(0);
    for (int e = 1; e < g.order; ++e)
        if (g.neg(e) == e) order.push_back(e);
    for (int e = 1; e < g.order; ++e) {
        int m = g.neg(e);
        if (m == e || m < e) continue; // self-inverse, or pair already placed
        order.push_back(e);
        order.push_back(m);
    }
    return order;
}

CodeBook enumerate_group_code(const FiniteAbelianGroup& g, int residue, std::uint64_t cap) {
    if (g.order > kMaxWordLength)
        throw std::invalid_argument("group order exceeds the word length limit");
    const int n = static_cast<int>(g.order);
    check_cap(std::uint64_t{1} << n, cap, "group code enumeration");
    std::vector<int> coeff = build_ordering(g);
    std::vector<int> neg(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) neg[i] = g.neg(coeff[i]);

    CodeBook code;
    code.length = n;
    // Gray-code walk: one coefficient enters or leaves the sum per step.
    int sum = 0;
    if (sum == residue) code.words.push_back(0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        int pos = std::countr_zero(k);
        std::uint64_t gray = k ^ (k >> 1);
        bool entered = (gray >> pos) & 1u;
        sum = g.add(sum, entered ? coeff[static_cast<std::size_t>(pos)]
                                 : neg[static_cast<std::size_t>(pos)]);
        if (sum == residue) code.words.push_back(static_cast<std::uint32_t>(gray));
    }
    code.normalize();
    return code;
}

std::vector<BigInt> group_code_class_sizes(const FiniteAbelianGroup& g) {
    std::vector<int> coeff = build_ordering(g);
    std::vector<BigInt> counts(static_cast<std::size_t>(g.order), BigInt(0));
    counts[0] = 1;
    for (int c : coeff) {
        std::vector<BigInt> next(static_cast<std::size_t>(g.order));
        for (int s = 0; s < g.order; ++s) {
            // either skip coefficient c or include it on top of a lighter prefix
            next[static_cast<std::size_t>(g.add(s, c))] = counts[static_cast<std::size_t>(s)];
        }
        for (int s = 0; s < g.order; ++s)
            next[static_cast<std::size_t>(s)] += counts[static_cast<std::size_t>(s)];
        counts = std::move(next);
    }
    return counts;
}

BigInt group_code_cardinality(const FiniteAbelianGroup& g, int residue) {
    if (residue < 0 || residue >= g.order) throw std::invalid_argument("residue out of range");
    return group_code_class_sizes(g)[static_cast<std::size_t>(residue)];
}

BestGroup best_group_code(int n) {
    auto groups = abelian_groups_of_order(n);
    BestGroup best{groups[0], BigInt(-1), {}};
    for (const auto& g : groups) {
        BigInt size = group_code_cardinality(g, 0);
        best.candidates.emplace_back(g.spec(), size);
        if (size > best.cardinality) {
            best.group = g;
            best.cardinality = size;
        }
    }
    return best;
}

} // namespace grain
