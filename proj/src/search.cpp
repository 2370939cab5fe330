#include "grain/search.hpp"

#include <algorithm>

namespace grain {

namespace {

struct CliqueSolver {
    int V, W;
    const std::vector<std::uint64_t>& adj;
    std::vector<int> best, cur;

    CliqueSolver(int v, int w, const std::vector<std::uint64_t>& a) : V(v), W(w), adj(a) {}

    bool edge(int a, int b) const {
        return (adj[static_cast<std::size_t>(a) * W + (b >> 6)] >> (b & 63)) & 1u;
    }

    // Greedy coloring of the candidate set; vertices come back ordered by
    // color ascending, so color number bounds the clique extension size.
    void color_sort(const std::vector<int>& P, std::vector<int>& order,
                    std::vector<int>& bound) {
        std::vector<std::vector<int>> classes;
        for (int v : P) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool conflict = false;
                for (int u : classes[c])
                    if (edge(u, v)) { conflict = true; break; }
                if (!conflict) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        order.clear();
        bound.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(const std::vector<int>& P) {
        if (P.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<int> order, bound;
        color_sort(P, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (cur.size() + static_cast<std::size_t>(bound[i]) <= best.size()) return;
            int v = order[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (edge(v, order[j])) next.push_back(order[j]);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

std::vector<int> max_clique(int vertex_count, const std::vector<std::uint64_t>& adjacency,
                            int words_per_row) {
    CliqueSolver solver(vertex_count, words_per_row, adjacency);
    std::vector<int> all(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) all[static_cast<std::size_t>(v)] = v;
    // Highest-degree vertices first tightens the coloring bound early.
    std::vector<int> degree(static_cast<std::size_t>(vertex_count), 0);
    for (int v = 0; v < vertex_count; ++v)
        for (int u = 0; u < vertex_count; ++u)
            if (u != v && solver.edge(v, u)) ++degree[static_cast<std::size_t>(v)];
    std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    solver.expand(all);
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

namespace {

// Bitset adjacency of the compatibility graph: edge iff error balls disjoint.
std::vector<std::uint64_t> compatibility_rows(int n, const ErrorModel& model, int& words_per_row,
                                              std::uint64_t cap) {
    check_length(n);
    const std::uint64_t V = std::uint64_t{1} << n;
    check_cap(V * V / 2, cap, "exhaustive code search");
    words_per_row = static_cast<int>((V + 63) / 64);
    std::vector<std::uint64_t> conflict(V * words_per_row, 0);
    // Two balls intersect iff their centers co-occur in some inverse ball, so
    // walk every ball once and mark clique edges among each word's owners.
    std::vector<std::vector<std::uint32_t>> owners(V);
    for (std::uint32_t x = 0; x < V; ++x)
        for (std::uint32_t z : error_ball(x, n, model)) owners[z].push_back(x);
    for (const auto& group : owners)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = 0; j < group.size(); ++j)
                if (i != j)
                    conflict[static_cast<std::size_t>(group[i]) * words_per_row +
                             (group[j] >> 6)] |= std::uint64_t{1} << (group[j] & 63);
    // Complement, clearing the diagonal and tail bits.
    std::vector<std::uint64_t> compat(conflict.size());
    for (std::uint32_t v = 0; v < V; ++v) {
        for (int w = 0; w < words_per_row; ++w) {
            std::uint64_t bits = ~conflict[static_cast<std::size_t>(v) * words_per_row + w];
            std::uint64_t base = static_cast<std::uint64_t>(w) * 64;
            if (base + 64 > V) bits &= (std::uint64_t{1} << (V - base)) - 1;
            compat[static_cast<std::size_t>(v) * words_per_row + w] = bits;
        }
        compat[static_cast<std::size_t>(v) * words_per_row + (v >> 6)] &=
            ~(std::uint64_t{1} << (v & 63));
    }
    return compat;
}

} // namespace

CodeBook exhaustive_max_code(int n, const ErrorModel& model, std::uint64_t cap) {
    int words_per_row = 0;
    auto compat = compatibility_rows(n, model, words_per_row, cap);
    auto clique = max_clique(1 << n, compat, words_per_row);
    CodeBook code;
    code.length = n;
    for (int v : clique) code.words.push_back(static_cast<std::uint32_t>(v));
    code.normalize();
    return code;
}

CodeBook exact_optimum_grain(int n, int t, std::uint64_t cap) {
    if (n < 2) throw std::invalid_argument("need length >= 2");
    // Smearing never reaches position 1, so the 0-prefixed and 1-prefixed
    // halves of a code are independent and may each be chosen optimally.  A
    // 0-prefixed word's tail sees a virtual 0 before its first position (the
    // anchored channel); the 1-prefixed optimum is the bitwise complement.
    CodeBook inner = exhaustive_max_code(n - 1, {ErrorKind::Anchored, t}, cap);
    CodeBook out;
    out.length = n;
    const std::uint32_t tail = length_mask(n - 1);
    for (std::uint32_t y : inner.words) {
        out.words.push_back(y << 1);
        out.words.push_back(((y ^ tail) << 1) | 1u);
    }
    out.normalize();
    return out;
}

} // namespace grain
