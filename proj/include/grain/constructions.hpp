#pragma once

#include "grain/caps.hpp"
#include "grain/codebook.hpp"
#include "grain/coloring.hpp"
#include "grain/gfp.hpp"

namespace grain {

// Inner coloring composed with an outer syndrome condition: a binary word of
// length coloring.m * outer.length belongs to the code when the per-block
// field symbols (class index mapped through symbol_map) form an outer word
// with the given syndrome.  Corrects t errors with position 1 unprotected
// whenever the coloring is t-valid and the outer code corrects t symbol
// errors.
struct ColoredCodeSpec {
    Coloring coloring;
    std::vector<int> symbol_map; // class index -> field symbol
    PrimeLinearCode outer;
    GfVec residue; // outer syndrome, length outer.rows()

    int length() const { return coloring.m * outer.length; }
    int correction_radius() const { return std::min(coloring.t, outer.designed_t); }
};

ColoredCodeSpec make_colored_spec(Coloring coloring, PrimeLinearCode outer, GfVec residue,
                                  std::vector<int> symbol_map = {});

// The fixed pair coloring composed with a ternary outer code.
ColoredCodeSpec make_pair_ternary_spec(PrimeLinearCode outer, GfVec residue);

// Per-block field symbols of x under the spec's coloring and symbol map.
// Membership works on words up to 64 positions; enumeration is limited to the
// 32-position codebook range.
GfVec apply_coloring(std::uint64_t x, const ColoredCodeSpec& spec);

bool colored_membership(std::uint64_t x, const ColoredCodeSpec& spec);

CodeBook colored_enumerate(const ColoredCodeSpec& spec,
                           std::uint64_t cap = kDefaultEnumerationCap);

// Doubled check matrix acting directly on bits: ternary columns h yield
// column pairs (2h, h), so the bit word and its per-pair symbols satisfy
// lifted(x) = base(symbols(x)) identically.
PrimeLinearCode build_lifted_matrix(const PrimeLinearCode& ternary_base);

// Membership under the doubled matrix, evaluated on the bits themselves.
bool lifted_membership(std::uint64_t x, const PrimeLinearCode& ternary_base,
                       const GfVec& residue);

CodeBook lifted_enumerate(const PrimeLinearCode& ternary_base, const GfVec& residue,
                          std::uint64_t cap = kDefaultEnumerationCap);

} // namespace grain
