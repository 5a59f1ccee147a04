#pragma once

#include <optional>
#include <string>

#include "sfdesign/error.hpp"

namespace sfdesign {

/// Best known lower bound on the maximum factor count of an orthogonal
/// Latin hypercube with n runs, plus the construction family that attains
/// it.
struct OLHCatalogEntry {
    int n = 0;
    int k = 0;
    std::string source;
};

namespace detail {

struct CatalogRow {
    int n;
    int k;
    const char* source;
};

// n <= 24 from exhaustive algorithmic search in the source literature,
// except n = 16 which comes from the rotation construction.
inline constexpr CatalogRow kCatalogSmall[] = {
    {4, 2, "search"},  {5, 2, "search"},  {7, 3, "search"},  {8, 4, "search"},
    {9, 5, "search"},  {11, 7, "search"}, {12, 6, "search"}, {13, 6, "search"},
    {15, 6, "search"}, {16, 12, "steinberg-rotation"}, {17, 6, "search"}, {19, 6, "search"},
    {20, 6, "search"}, {21, 6, "search"}, {23, 6, "search"}, {24, 6, "search"},
};

// 24 < n <= 256 with the attaining construction family.
inline constexpr CatalogRow kCatalogLarge[] = {
    {25, 12, "lin2009"},  {32, 16, "sun2009"},  {33, 16, "sun2009"},  {48, 12, "lin2010"},
    {49, 24, "lin2009"},  {64, 32, "sun2009"},  {65, 32, "sun2009"},  {80, 12, "lin2010"},
    {81, 50, "lin2009"},  {96, 24, "lin2010"},  {97, 24, "lin2010"},  {112, 12, "lin2010"},
    {113, 12, "lin2010"}, {121, 84, "lin2009"}, {128, 64, "sun2009"}, {129, 64, "sun2009"},
    {144, 24, "lin2010"}, {145, 12, "lin2010"}, {160, 24, "lin2010"}, {161, 24, "lin2010"},
    {169, 84, "lin2009"}, {176, 12, "lin2010"}, {177, 12, "lin2010"}, {192, 48, "lin2010"},
    {193, 48, "lin2010"}, {208, 12, "lin2010"}, {209, 12, "lin2010"}, {224, 24, "lin2010"},
    {225, 24, "lin2010"}, {240, 12, "lin2010"}, {241, 12, "lin2010"}, {256, 248, "steinberg-rotation"},
};

/// General rule for n = 16m + j; overlapping cases combine by taking the
/// largest applicable bound.
inline std::optional<int> rule_bound(int n) {
    std::optional<int> best;
    auto consider = [&best](int k) {
        if (!best || k > *best) best = k;
    };
    const int m16 = n / 16, j16 = n % 16;
    if (m16 >= 1 && j16 != 2 && j16 != 6 && j16 != 10 && j16 != 14) consider(6);
    if (n % 16 == 11) consider(7);
    if ((n % 16 == 0 || n % 16 == 1) && n / 16 >= 2) consider(12);
    if ((n % 32 == 0 || n % 32 == 1) && n / 32 >= 2) consider(24);
    if ((n % 64 == 0 || n % 64 == 1) && n / 64 >= 2) consider(48);
    return best;
}

}  // namespace detail

/// Catalog lookup: the published table verbatim for listed n <= 256,
/// otherwise the rule-based bound (source "theorem-rule"), otherwise
/// absent.
inline std::optional<OLHCatalogEntry> best_known_bound(int n) {
    for (const auto& row : detail::kCatalogSmall)
        if (row.n == n) return OLHCatalogEntry{row.n, row.k, row.source};
    for (const auto& row : detail::kCatalogLarge)
        if (row.n == n) return OLHCatalogEntry{row.n, row.k, row.source};
    if (auto k = detail::rule_bound(n)) return OLHCatalogEntry{n, *k, "theorem-rule"};
    return std::nullopt;
}

}  // namespace sfdesign
