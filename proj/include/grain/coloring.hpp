#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grain/caps.hpp"
#include "grain/error_model.hpp"

namespace grain {

// Conflict graph on all words of length m: two words are adjacent when their
// radius-t balls (position 1 flippable) intersect, i.e. when a channel output
// could have come from either word.
struct ConfusabilityGraph {
    int m = 0, t = 1;
    int vertex_count = 0;
    int words_per_row = 0;
    std::vector<std::uint64_t> rows; // bitset adjacency, vertex_count rows

    bool edge(int a, int b) const {
        return (rows[static_cast<std::size_t>(a) * words_per_row + (b >> 6)] >> (b & 63)) & 1u;
    }
};

ConfusabilityGraph build_confusability_graph(int m, int t,
                                             std::uint64_t cap = kDefaultEnumerationCap);

struct Coloring {
    int m = 0, t = 1;
    std::vector<std::vector<std::uint32_t>> classes; // partition of {0,1}^m
    std::vector<int> assignment;                     // vertex -> class index

    int color_count() const { return static_cast<int>(classes.size()); }
    std::vector<std::size_t> class_sizes() const;
};

// Builds a coloring from classes; sort_convention orders them by size
// descending with ties broken by smallest member.  Verifies the classes
// partition the full vertex set.
Coloring coloring_from_classes(int m, int t, std::vector<std::vector<std::uint32_t>> classes,
                               bool sort_convention);

// True iff no class contains two adjacent vertices of the graph.
bool coloring_valid(const Coloring& col, const ConfusabilityGraph& graph);

// The fixed 3-coloring of bit pairs used to compose with ternary outer codes.
// Class order follows the sort convention: {00,11}, {10}, {01}.  The constant
// pairs expose only their first position, so the classes stay valid at every
// radius; t records the radius the caller composes at.
Coloring pair_ternary_coloring(int t = 1);

// Published pair labels: 00 -> 0, 01 -> 1, 10 -> 2, 11 -> 0.
int pair_ternary_symbol(std::uint32_t pair);

// Class index -> field symbol restoring the published labels above.
std::vector<int> pair_ternary_symbol_map();

// Class index of x under the weighted-sum rule: sum of w_i * x_i mod (m + 1),
// where the weights w are the canonical ordering of the nonzero residues with
// each weight adjacent to its negation (the group-construction ordering less
// its leading zero).  Level sets are then cosets of a shortened group code,
// which keeps their radius-1 balls pairwise disjoint.
int weighted_sum_class(std::uint32_t x, int m);

// Coloring whose classes are the level sets of the weighted sum; always a
// valid (m+1)-coloring of the radius-1 graph.  Classes follow the sort
// convention.
Coloring weighted_sum_coloring(int m);

// Same partition, classes relabeled: x gets color relabel[weighted_sum_class(x)].
// Classes are indexed by the new labels, not re-sorted.
Coloring permuted_weighted_coloring(int m, const std::vector<int>& relabel);

// Hard-coded 7-coloring of length-6 words with class sizes (11,8,9,9,9,9,9),
// in its published class order.  Strictly better than the weighted-sum
// coloring, whose largest class has 10 words.
Coloring published_seven_coloring();

// Words of weight <= 1: pairwise adjacent in the radius-1 graph, so they
// witness that m+1 colors are necessary.
std::vector<std::uint32_t> low_weight_clique(int m);

// Randomized greedy search: per restart, shuffle the vertices and assign each
// the smallest color unused among its earlier neighbors.  Keeps the coloring
// minimizing (color count, -largest class size); deterministic in the seed.
Coloring greedy_coloring(const ConfusabilityGraph& graph, std::uint64_t seed, int restarts,
                         int threads = 1);

// Text format: header "m t k", then k lines of decimal vertex codes.
Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const Coloring& col);
void write_coloring_file(const std::string& path, const Coloring& col);

} // namespace grain
