#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grain {

// Thrown when an operation would exceed its enumeration budget.  Callers that
// surface this to a user should treat it as a refusal, not a wrong answer.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default budget for exhaustive enumerations (iterations, not bytes).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

inline void check_cap(std::uint64_t work, std::uint64_t cap, const char* what) {
    if (work > cap)
        throw cap_exceeded(std::string(what) + ": requires " + std::to_string(work) +
                           " steps, cap is " + std::to_string(cap));
}

} // namespace grain
