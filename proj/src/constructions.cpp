#include "grain/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grain {

ColoredCodeSpec make_colored_spec(Coloring coloring, PrimeLinearCode outer, GfVec residue,
                                  std::vector<int> symbol_map) {
    if (symbol_map.empty()) {
        // Default: classes ranked by size (descending, ties by smallest
        // member) receive symbols 0, 1, ... so the largest class gets 0.
        std::vector<int> rank(static_cast<std::size_t>(coloring.color_count()));
        std::iota(rank.begin(), rank.end(), 0);
        std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
            const auto& ca = coloring.classes[static_cast<std::size_t>(a)];
            const auto& cb = coloring.classes[static_cast<std::size_t>(b)];
            if (ca.size() != cb.size()) return ca.size() > cb.size();
            return ca.front() < cb.front();
        });
        symbol_map.assign(rank.size(), 0);
        for (std::size_t s = 0; s < rank.size(); ++s)
            symbol_map[static_cast<std::size_t>(rank[s])] = static_cast<int>(s);
    }
    if (static_cast<int>(symbol_map.size()) != coloring.color_count())
        throw std::invalid_argument("symbol map must cover every class");
    for (int s : symbol_map)
        if (s < 0 || s >= outer.p)
            throw std::invalid_argument("symbol map value out of field range");
    if (static_cast<int>(residue.size()) != outer.rows())
        throw std::invalid_argument("residue length must match outer check rows");
    if (coloring.color_count() > outer.p)
        throw std::invalid_argument("outer field too small for the coloring");
    // Membership works on 64-bit words; enumeration additionally needs the
    // 32-bit codebook limit and the iteration cap.
    if (coloring.m * outer.length > 64)
        throw std::invalid_argument("composed length exceeds 64 positions");
    return {std::move(coloring), std::move(symbol_map), std::move(outer), std::move(residue)};
}

ColoredCodeSpec make_pair_ternary_spec(PrimeLinearCode outer, GfVec residue) {
    if (outer.p != 3) throw std::invalid_argument("pair coloring needs a ternary outer code");
    // The pair classes are valid at any radius, so the composition corrects
    // as many errors as the outer code does.
    const int radius = outer.designed_t;
    return make_colored_spec(pair_ternary_coloring(radius), std::move(outer),
                             std::move(residue), pair_ternary_symbol_map());
}

GfVec apply_coloring(std::uint64_t x, const ColoredCodeSpec& spec) {
    const int m = spec.coloring.m;
    GfVec symbols(static_cast<std::size_t>(spec.outer.length));
    for (int k = 0; k < spec.outer.length; ++k) {
        std::uint32_t block = static_cast<std::uint32_t>(x >> (k * m)) & length_mask(m);
        symbols[static_cast<std::size_t>(k)] =
            spec.symbol_map[static_cast<std::size_t>(spec.coloring.assignment[block])];
    }
    return symbols;
}

bool colored_membership(std::uint64_t x, const ColoredCodeSpec& spec) {
    return spec.outer.syndrome(apply_coloring(x, spec)) == spec.residue;
}

CodeBook colored_enumerate(const ColoredCodeSpec& spec, std::uint64_t cap) {
    const int n = spec.length();
    if (n > kMaxWordLength)
        throw std::invalid_argument("composed length exceeds the enumerable word limit");
    check_cap(std::uint64_t{1} << n, cap, "composed code enumeration");
    CodeBook code;
    code.length = n;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (colored_membership(x, spec)) code.words.push_back(static_cast<std::uint32_t>(x));
    code.normalize();
    return code;
}

PrimeLinearCode build_lifted_matrix(const PrimeLinearCode& ternary_base) {
    if (ternary_base.p != 3)
        throw std::invalid_argument("matrix doubling is defined for ternary codes");
    PrimeLinearCode lifted;
    lifted.p = 3;
    lifted.length = 2 * ternary_base.length;
    lifted.designed_t = ternary_base.designed_t;
    lifted.check.assign(static_cast<std::size_t>(ternary_base.rows()),
                        GfVec(static_cast<std::size_t>(lifted.length), 0));
    for (int r = 0; r < ternary_base.rows(); ++r)
        for (int i = 0; i < ternary_base.length; ++i) {
            int h = ternary_base.check[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
            lifted.check[static_cast<std::size_t>(r)][static_cast<std::size_t>(2 * i)] =
                2 * h % 3;
            lifted.check[static_cast<std::size_t>(r)][static_cast<std::size_t>(2 * i + 1)] = h;
        }
    return lifted;
}

bool lifted_membership(std::uint64_t x, const PrimeLinearCode& ternary_base,
                       const GfVec& residue) {
    if (static_cast<int>(residue.size()) != ternary_base.rows())
        throw std::invalid_argument("residue length must match check rows");
    const int n = 2 * ternary_base.length;
    if (n > 64) throw std::invalid_argument("lifted length exceeds 64 positions");
    GfVec bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (x >> i) & 1u;
    PrimeLinearCode lifted = build_lifted_matrix(ternary_base);
    return lifted.syndrome(bits) == residue;
}

CodeBook lifted_enumerate(const PrimeLinearCode& ternary_base, const GfVec& residue,
                          std::uint64_t cap) {
    const int n = 2 * ternary_base.length;
    if (n > kMaxWordLength) throw std::invalid_argument("lifted length exceeds word limit");
    check_cap(std::uint64_t{1} << n, cap, "lifted code enumeration");
    PrimeLinearCode lifted = build_lifted_matrix(ternary_base);
    CodeBook code;
    code.length = n;
    GfVec bits(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (x >> i) & 1u;
        if (lifted.syndrome(bits) == residue)
            code.words.push_back(static_cast<std::uint32_t>(x));
    }
    code.normalize();
    return code;
}

} // namespace grain
