#include "grain/error_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace grain {

ErrorKind error_kind_from_string(const std::string& s) {
    if (s == "grain") return ErrorKind::Grain;
    if (s == "anchored") return ErrorKind::Anchored;
    if (s == "mineral") return ErrorKind::Mineral;
    if (s == "random") return ErrorKind::Random;
    throw std::invalid_argument("unknown error model \"" + s +
                                "\" (grain|anchored|mineral|random)");
}

std::uint32_t flippable_mask(std::uint32_t x, int n, ErrorKind kind) {
    check_length(n);
    switch (kind) {
        case ErrorKind::Grain: return boundary_mask(x, n);
        case ErrorKind::Anchored: return boundary_mask(x, n) | (x & 1u);
        case ErrorKind::Mineral: return boundary_mask(x, n) | 1u;
        default: return length_mask(n);
    }
}

bool in_ball(std::uint32_t x, std::uint32_t y, int n, const ErrorModel& model) {
    std::uint32_t e = (x ^ y) & length_mask(n);
    if (weight(e) > model.t) return false;
    return (e & ~flippable_mask(x, n, model.kind)) == 0;
}

namespace {

void collect_flips(std::uint32_t word, const std::vector<int>& positions, std::size_t from,
                   int budget, std::vector<std::uint32_t>& out) {
    out.push_back(word);
    if (budget == 0) return;
    for (std::size_t i = from; i < positions.size(); ++i)
        collect_flips(word ^ (std::uint32_t{1} << positions[i]), positions, i + 1, budget - 1, out);
}

} // namespace

std::vector<std::uint32_t> error_ball(std::uint32_t x, int n, const ErrorModel& model) {
    std::uint32_t mask = flippable_mask(x, n, model.kind);
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) positions.push_back(i);
    std::vector<std::uint32_t> out;
    collect_flips(x & length_mask(n), positions, 0, std::min<int>(model.t, n), out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt ball_size(std::uint32_t x, int n, const ErrorModel& model) {
    int f = weight(flippable_mask(x, n, model.kind));
    BigInt total = 0;
    for (int j = 0; j <= std::min(model.t, f); ++j)
        total += binomial(static_cast<unsigned long>(f), static_cast<unsigned long>(j));
    return total;
}

bool balls_disjoint(std::uint32_t x, std::uint32_t y, int n, const ErrorModel& model) {
    // Walk the smaller ball, test membership in the other via the O(1) check.
    if (ball_size(y, n, model) < ball_size(x, n, model)) std::swap(x, y);
    for (std::uint32_t z : error_ball(x, n, model))
        if (in_ball(y, z, n, model)) return false;
    return true;
}

} // namespace grain
