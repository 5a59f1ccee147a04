#pragma once

#include <cstdlib>
#include <cstdint>

namespace sfdesign {

/// Cost cap for exact-enumeration routines (star discrepancy corners,
/// minimax grids, net interval counts). Overridable through the
/// SFDESIGN_BUDGET environment variable.
inline std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("SFDESIGN_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ULL;
}

}  // namespace sfdesign
