#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grain/bitword.hpp"
#include "grain/rational.hpp"

namespace grain {

// Four channels, ordered by strictness.  A smearing error at position i
// overwrites x_i with x_{i-1}; it changes the word only at positions where
// adjacent values differ.  Grain errors leave position 1 untouched.  Anchored
// errors treat the word as preceded by a stored 0, so position 1 may smear
// exactly when it holds a 1; this is the channel seen by the tail of a
// 0-prefixed word.  Mineral errors may flip position 1 unconditionally
// (unknown preceding cell), and random errors may flip any position.
enum class ErrorKind { Grain, Anchored, Mineral, Random };

struct ErrorModel {
    ErrorKind kind = ErrorKind::Grain;
    int t = 1; // maximum number of erroneous positions

    std::string name() const {
        switch (kind) {
            case ErrorKind::Grain: return "grain";
            case ErrorKind::Anchored: return "anchored";
            case ErrorKind::Mineral: return "mineral";
            default: return "random";
        }
    }
};

ErrorKind error_kind_from_string(const std::string& s);

// Mask of positions the model is allowed to flip in x.
std::uint32_t flippable_mask(std::uint32_t x, int n, ErrorKind kind);

// True iff y is reachable from x by at most model.t flips at allowed positions.
bool in_ball(std::uint32_t x, std::uint32_t y, int n, const ErrorModel& model);

// All words reachable from x, sorted ascending, deduplicated (flipping
// distinct position sets always yields distinct words, so no duplicates
// actually arise).  Includes x itself (the empty error).
std::vector<std::uint32_t> error_ball(std::uint32_t x, int n, const ErrorModel& model);

// Ball size without enumeration: sum over j <= min(t, f) of C(f, j) where f
// is the number of flippable positions.  Matches error_ball().size().
BigInt ball_size(std::uint32_t x, int n, const ErrorModel& model);

bool balls_disjoint(std::uint32_t x, std::uint32_t y, int n, const ErrorModel& model);

} // namespace grain
