#include "grain/coloring.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grain/group_code.hpp"
#include "grain/rational.hpp"

namespace grain {

ConfusabilityGraph build_confusability_graph(int m, int t, std::uint64_t cap) {
    check_length(m);
    if (m > 16) throw std::invalid_argument("conflict graph limited to 16-bit words");
    if (t < 1 || t > m) throw std::invalid_argument("need 1 <= t <= m");
    ConfusabilityGraph g;
    g.m = m;
    g.t = t;
    g.vertex_count = 1 << m;
    g.words_per_row = (g.vertex_count + 63) / 64;
    const ErrorModel model{ErrorKind::Mineral, t};

    std::uint64_t ball_max = 0;
    for (int j = 0; j <= t; ++j) {
        BigInt b = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j));
        ball_max += b.get_ui();
    }
    check_cap(static_cast<std::uint64_t>(g.vertex_count) * ball_max, cap,
              "conflict graph ball sweep");
    check_cap(static_cast<std::uint64_t>(g.vertex_count) * g.words_per_row, cap,
              "conflict graph adjacency storage");

    // Two balls intersect iff the centers share an output word, so collect
    // each output's owners and join them pairwise.  The quadratic work per
    // output is the budgeted quantity.
    std::vector<std::vector<std::uint32_t>> owners(static_cast<std::size_t>(g.vertex_count));
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(g.vertex_count); ++x)
        for (std::uint32_t z : error_ball(x, m, model)) owners[z].push_back(x);
    std::uint64_t work = 0;
    for (const auto& group : owners) work += group.size() * group.size();
    check_cap(work, cap, "conflict graph construction");

    g.rows.assign(static_cast<std::size_t>(g.vertex_count) * g.words_per_row, 0);
    for (const auto& group : owners)
        for (std::uint32_t a : group)
            for (std::uint32_t b : group)
                if (a != b)
                    g.rows[static_cast<std::size_t>(a) * g.words_per_row + (b >> 6)] |=
                        std::uint64_t{1} << (b & 63);
    return g;
}

std::vector<std::size_t> Coloring::class_sizes() const {
    std::vector<std::size_t> s;
    s.reserve(classes.size());
    for (const auto& c : classes) s.push_back(c.size());
    return s;
}

Coloring coloring_from_classes(int m, int t, std::vector<std::vector<std::uint32_t>> classes,
                               bool sort_convention) {
    check_length(m);
    for (auto& c : classes) std::sort(c.begin(), c.end());
    if (sort_convention)
        std::stable_sort(classes.begin(), classes.end(),
                         [](const auto& a, const auto& b) {
                             if (a.size() != b.size()) return a.size() > b.size();
                             return a.front() < b.front();
                         });
    Coloring col;
    col.m = m;
    col.t = t;
    col.assignment.assign(std::size_t{1} << m, -1);
    for (std::size_t idx = 0; idx < classes.size(); ++idx) {
        for (std::uint32_t v : classes[idx]) {
            if (v >= (std::uint32_t{1} << m))
                throw std::invalid_argument("class member " + std::to_string(v) +
                                            " out of range for length " + std::to_string(m));
            if (col.assignment[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two classes");
            col.assignment[v] = static_cast<int>(idx);
        }
    }
    for (std::size_t v = 0; v < col.assignment.size(); ++v)
        if (col.assignment[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is uncolored");
    col.classes = std::move(classes);
    return col;
}

bool coloring_valid(const Coloring& col, const ConfusabilityGraph& graph) {
    if (col.m != graph.m || col.t != graph.t) return false;
    if (static_cast<int>(col.assignment.size()) != graph.vertex_count) return false;
    for (const auto& cls : col.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (graph.edge(static_cast<int>(cls[i]), static_cast<int>(cls[j]))) return false;
    return true;
}

int pair_ternary_symbol(std::uint32_t pair) {
    // Bit 0 holds position 1.  Pairs read as (position 1, position 2):
    // (0,0) -> 0, (0,1) -> 1, (1,0) -> 2, (1,1) -> 0.
    switch (pair & 3u) {
        case 0b00: return 0;
        case 0b01: return 2; // (1,0)
        case 0b10: return 1; // (0,1)
        default: return 0;   // (1,1)
    }
}

Coloring pair_ternary_coloring(int t) {
    return coloring_from_classes(2, t, {{0b00, 0b11}, {0b01}, {0b10}}, true);
}

std::vector<int> pair_ternary_symbol_map() {
    // Sorted classes come out as {00,11}, {(1,0)}, {(0,1)}; the published
    // labels give (1,0) symbol 2 and (0,1) symbol 1.
    return {0, 2, 1};
}

int weighted_sum_class(std::uint32_t x, int m) {
    // Weights are the group-construction ordering of Z_{m+1} without its
    // leading zero; the naive weights 1..m would let classes collide (already
    // at m = 3, where 000 and 101 share an output but sum to 0 mod 4 alike).
    std::vector<int> ordering = build_ordering(FiniteAbelianGroup({m + 1}));
    long s = 0;
    for (int i = 1; i <= m; ++i)
        if ((x >> (i - 1)) & 1u) s += ordering[static_cast<std::size_t>(i)];
    return static_cast<int>(s % (m + 1));
}

Coloring weighted_sum_coloring(int m) {
    std::vector<std::vector<std::uint32_t>> classes(static_cast<std::size_t>(m + 1));
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x)
        classes[static_cast<std::size_t>(weighted_sum_class(x, m))].push_back(x);
    return coloring_from_classes(m, 1, std::move(classes), true);
}

Coloring permuted_weighted_coloring(int m, const std::vector<int>& relabel) {
    if (static_cast<int>(relabel.size()) != m + 1)
        throw std::invalid_argument("relabel must list all m+1 colors");
    std::vector<int> seen(relabel.size(), 0);
    for (int v : relabel) {
        if (v < 0 || v > m || seen[static_cast<std::size_t>(v)]++)
            throw std::invalid_argument("relabel must be a permutation of 0..m");
    }
    std::vector<std::vector<std::uint32_t>> classes(static_cast<std::size_t>(m + 1));
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x)
        classes[static_cast<std::size_t>(relabel[static_cast<std::size_t>(
                    weighted_sum_class(x, m))])]
            .push_back(x);
    return coloring_from_classes(m, 1, std::move(classes), false);
}

Coloring published_seven_coloring() {
    return coloring_from_classes(
        6, 1,
        {{0, 3, 12, 15, 21, 24, 36, 43, 49, 54, 61},
         {2, 5, 14, 27, 42, 48, 55, 60},
         {1, 6, 13, 18, 25, 30, 37, 40, 59},
         {4, 7, 9, 19, 31, 34, 46, 52, 57},
         {8, 11, 20, 23, 33, 38, 45, 50, 62},
         {10, 16, 22, 28, 35, 41, 47, 53, 58},
         {17, 26, 29, 32, 39, 44, 51, 56, 63}},
        false);
}

std::vector<std::uint32_t> low_weight_clique(int m) {
    std::vector<std::uint32_t> clique{0};
    for (int i = 0; i < m; ++i) clique.push_back(std::uint32_t{1} << i);
    return clique;
}

namespace {

std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct GreedyOutcome {
    int colors = 0;
    std::size_t largest = 0;
    int restart = 0;
    std::vector<int> assignment;

    bool better_than(const GreedyOutcome& o) const {
        if (colors != o.colors) return colors < o.colors;
        if (largest != o.largest) return largest > o.largest;
        return restart < o.restart;
    }
};

GreedyOutcome greedy_once(const ConfusabilityGraph& g, std::uint64_t seed, int restart) {
    std::mt19937_64 rng(mix_seed(seed + static_cast<std::uint64_t>(restart)));
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count));
    for (int v = 0; v < g.vertex_count; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);

    GreedyOutcome out;
    out.restart = restart;
    out.assignment.assign(static_cast<std::size_t>(g.vertex_count), -1);
    std::vector<int> used(static_cast<std::size_t>(g.vertex_count), -1);
    for (int v : order) {
        const std::uint64_t* row = &g.rows[static_cast<std::size_t>(v) * g.words_per_row];
        for (int w = 0; w < g.words_per_row; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (out.assignment[static_cast<std::size_t>(u)] >= 0)
                    used[static_cast<std::size_t>(
                        out.assignment[static_cast<std::size_t>(u)])] = v;
            }
        }
        int color = 0;
        while (used[static_cast<std::size_t>(color)] == v) ++color;
        out.assignment[static_cast<std::size_t>(v)] = color;
        out.colors = std::max(out.colors, color + 1);
    }
    std::vector<std::size_t> sizes(static_cast<std::size_t>(out.colors), 0);
    for (int c : out.assignment) ++sizes[static_cast<std::size_t>(c)];
    out.largest = *std::max_element(sizes.begin(), sizes.end());
    return out;
}

} // namespace

Coloring greedy_coloring(const ConfusabilityGraph& graph, std::uint64_t seed, int restarts,
                         int threads) {
    if (restarts < 1) throw std::invalid_argument("need at least one restart");
    threads = std::max(1, std::min(threads, restarts));
    std::vector<GreedyOutcome> results(static_cast<std::size_t>(restarts));
    if (threads == 1) {
        for (int r = 0; r < restarts; ++r)
            results[static_cast<std::size_t>(r)] = greedy_once(graph, seed, r);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid)
            pool.emplace_back([&, tid] {
                for (int r = tid; r < restarts; r += threads)
                    results[static_cast<std::size_t>(r)] = greedy_once(graph, seed, r);
            });
        for (auto& th : pool) th.join();
    }
    const GreedyOutcome* best = &results[0];
    for (const auto& r : results)
        if (r.better_than(*best)) best = &r;

    std::vector<std::vector<std::uint32_t>> classes(static_cast<std::size_t>(best->colors));
    for (int v = 0; v < graph.vertex_count; ++v)
        classes[static_cast<std::size_t>(best->assignment[static_cast<std::size_t>(v)])]
            .push_back(static_cast<std::uint32_t>(v));
    return coloring_from_classes(graph.m, graph.t, std::move(classes), true);
}

Coloring read_coloring(std::istream& in) {
    std::vector<std::vector<long>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<long> vals;
        long v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected decimal vertex codes");
        if (!vals.empty()) rows.push_back(vals);
    }
    if (rows.empty() || rows[0].size() != 3)
        throw std::invalid_argument("coloring file must start with an \"m t k\" header");
    int m = static_cast<int>(rows[0][0]);
    int t = static_cast<int>(rows[0][1]);
    int k = static_cast<int>(rows[0][2]);
    if (static_cast<int>(rows.size()) != k + 1)
        throw std::invalid_argument("coloring file must contain exactly k class lines");
    std::vector<std::vector<std::uint32_t>> classes;
    for (int c = 1; c <= k; ++c) {
        std::vector<std::uint32_t> cls;
        for (long v : rows[static_cast<std::size_t>(c)]) {
            if (v < 0) throw std::invalid_argument("negative vertex code");
            cls.push_back(static_cast<std::uint32_t>(v));
        }
        classes.push_back(std::move(cls));
    }
    return coloring_from_classes(m, t, std::move(classes), false);
}

Coloring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coloring file: " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& col) {
    out << col.m << ' ' << col.t << ' ' << col.color_count() << '\n';
    for (const auto& cls : col.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
        out << '\n';
    }
}

void write_coloring_file(const std::string& path, const Coloring& col) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_coloring(out, col);
}

} // namespace grain
