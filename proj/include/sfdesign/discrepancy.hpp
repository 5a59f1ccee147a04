#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sfdesign/config.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/matrix.hpp"

namespace sfdesign {

enum class DiscrepancyMethod { star_exact, l2_warnock, sl2, cl2, ml2, brute_force };

/// A discrepancy value plus the convention it was computed under. The
/// closed forms of the L2 family all produce the SQUARED discrepancy; the
/// squared flag keeps that explicit because the source formulas are
/// inconsistent about it.
struct DiscrepancyResult {
    double value = 0.0;
    DiscrepancyMethod method = DiscrepancyMethod::brute_force;
    bool squared = false;

    double root() const { return squared ? std::sqrt(value) : value; }
};

namespace detail {

inline void check_unit_cube(const DesignMatrix& P, const char* who) {
    for (double v : P.a)
        if (v < 0.0 || v >= 1.0) fail(errc::invalid_dimension, std::string(who) + ": points must lie in [0,1)");
}

}  // namespace detail

/// Exact star discrepancy by critical-corner enumeration: the sup over
/// anchored boxes [0,x) is attained in the limit at corners built from
/// point coordinates and 1, evaluated with both the closed (count <=) and
/// open (count <) conventions. Cost n * prod(distinct coords + 1), capped
/// by SFDESIGN_BUDGET; intended for s <= 3, n <= 100.
inline DiscrepancyResult star_discrepancy_exact(const DesignMatrix& P) {
    detail::check_unit_cube(P, "star_discrepancy_exact");
    const int n = P.rows, s = P.cols;
    std::vector<std::vector<double>> grid(s);
    for (int d = 0; d < s; ++d) {
        std::vector<double> c(n);
        for (int i = 0; i < n; ++i) c[i] = P.at(i, d);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        c.push_back(1.0);
        grid[d] = std::move(c);
    }
    double corners = 1.0;
    for (int d = 0; d < s; ++d) corners *= static_cast<double>(grid[d].size());
    if (corners * n > static_cast<double>(enumeration_budget()))
        fail(errc::budget_exceeded, "star_discrepancy_exact: corner grid exceeds SFDESIGN_BUDGET");

    std::vector<std::size_t> idx(s, 0);
    std::vector<double> y(s);
    double best = 0.0;
    for (;;) {
        for (int d = 0; d < s; ++d) y[d] = grid[d][idx[d]];
        double vol = 1.0;
        for (int d = 0; d < s; ++d) vol *= y[d];
        int closed = 0, open = 0;
        for (int i = 0; i < n; ++i) {
            bool le = true, lt = true;
            for (int d = 0; d < s && le; ++d) {
                double v = P.at(i, d);
                if (v > y[d]) le = false;
                if (v >= y[d]) lt = false;
            }
            if (le) {
                ++closed;
                if (lt) ++open;
            }
        }
        best = std::max(best, static_cast<double>(closed) / n - vol);
        best = std::max(best, vol - static_cast<double>(open) / n);
        int d = 0;
        while (d < s && ++idx[d] == grid[d].size()) idx[d++] = 0;
        if (d == s) break;
    }
    return {best, DiscrepancyMethod::star_exact, false};
}

/// Squared L2 star discrepancy, closed form. The leading constant is
/// 3^{-s}: the published 2^{-s} fails the one-point analytic oracle
/// (integral 1/12 at x = 0.5 in one dimension), see the arbitration test.
inline DiscrepancyResult l2_discrepancy(const DesignMatrix& P) {
    detail::check_unit_cube(P, "l2_discrepancy");
    const int n = P.rows, s = P.cols;
    double term1 = std::pow(3.0, -s);
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) {
        double prod = 1.0;
        for (int l = 0; l < s; ++l) prod *= 1.0 - P.at(i, l) * P.at(i, l);
        sum1 += prod;
    }
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double prod = 1.0;
            for (int l = 0; l < s; ++l) prod *= 1.0 - std::max(P.at(i, l), P.at(j, l));
            sum2 += prod;
        }
    double v = term1 - std::pow(2.0, 1 - s) / n * sum1 + sum2 / (static_cast<double>(n) * n);
    return {v, DiscrepancyMethod::l2_warnock, true};
}

/// Squared symmetric L2 discrepancy, closed form.
inline DiscrepancyResult symmetric_l2(const DesignMatrix& P) {
    detail::check_unit_cube(P, "symmetric_l2");
    const int n = P.rows, s = P.cols;
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) {
        double prod = 1.0;
        for (int l = 0; l < s; ++l) {
            double x = P.at(i, l);
            prod *= 1.0 + 2.0 * x - 2.0 * x * x;
        }
        sum1 += prod;
    }
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double prod = 1.0;
            for (int l = 0; l < s; ++l) prod *= 1.0 - std::fabs(P.at(i, l) - P.at(j, l));
            sum2 += prod;
        }
    double v = std::pow(4.0 / 3.0, s) - 2.0 / n * sum1 +
               std::pow(2.0, s) / (static_cast<double>(n) * n) * sum2;
    return {v, DiscrepancyMethod::sl2, true};
}

/// Squared centered L2 discrepancy, closed form. Leading constant is
/// (13/12)^s; the published (13/12)^2 fails the oracle for s != 2.
inline DiscrepancyResult centered_l2(const DesignMatrix& P) {
    detail::check_unit_cube(P, "centered_l2");
    const int n = P.rows, s = P.cols;
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) {
        double prod = 1.0;
        for (int l = 0; l < s; ++l) {
            double a = std::fabs(P.at(i, l) - 0.5);
            prod *= 1.0 + 0.5 * a - 0.5 * a * a;
        }
        sum1 += prod;
    }
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double prod = 1.0;
            for (int l = 0; l < s; ++l) {
                double ai = std::fabs(P.at(i, l) - 0.5);
                double aj = std::fabs(P.at(j, l) - 0.5);
                prod *= 1.0 + 0.5 * ai + 0.5 * aj - 0.5 * std::fabs(P.at(i, l) - P.at(j, l));
            }
            sum2 += prod;
        }
    double v = std::pow(13.0 / 12.0, s) - 2.0 / n * sum1 + sum2 / (static_cast<double>(n) * n);
    return {v, DiscrepancyMethod::cl2, true};
}

/// Squared modified L2 discrepancy, closed form: the projection-summed
/// anchored-box discrepancy. The published formula's inner sum runs over
/// runs (j = 1..n) with max(x_il, x_jl); see the arbitration test.
inline DiscrepancyResult modified_l2(const DesignMatrix& P) {
    detail::check_unit_cube(P, "modified_l2");
    const int n = P.rows, s = P.cols;
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) {
        double prod = 1.0;
        for (int l = 0; l < s; ++l) prod *= 3.0 - P.at(i, l) * P.at(i, l);
        sum1 += prod;
    }
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double prod = 1.0;
            for (int l = 0; l < s; ++l) prod *= 2.0 - std::max(P.at(i, l), P.at(j, l));
            sum2 += prod;
        }
    double v = std::pow(4.0 / 3.0, s) - std::pow(2.0, 1 - s) / n * sum1 +
               sum2 / (static_cast<double>(n) * n);
    return {v, DiscrepancyMethod::ml2, true};
}

/// Sampled lower bound on the star discrepancy: sup of |N/n - Vol| over a
/// regular resolution^s grid of box corners. Always <= the exact value.
inline double star_discrepancy_grid_sup(const DesignMatrix& P, int resolution) {
    detail::check_unit_cube(P, "star_discrepancy_grid_sup");
    if (resolution < 2) fail(errc::invalid_dimension, "star_discrepancy_grid_sup: resolution >= 2");
    const int n = P.rows, s = P.cols;
    double cells = 1.0;
    for (int d = 0; d < s; ++d) cells *= resolution;
    if (cells * n > 4.0 * static_cast<double>(enumeration_budget()))
        fail(errc::budget_exceeded, "star_discrepancy_grid_sup: grid exceeds SFDESIGN_BUDGET");
    std::vector<int> idx(s, 1);
    std::vector<double> y(s);
    double best = 0.0;
    for (;;) {
        double vol = 1.0;
        for (int d = 0; d < s; ++d) {
            y[d] = static_cast<double>(idx[d]) / resolution;
            vol *= y[d];
        }
        int count = 0;
        for (int i = 0; i < n; ++i) {
            bool in = true;
            for (int d = 0; d < s && in; ++d)
                if (P.at(i, d) >= y[d]) in = false;
            if (in) ++count;
        }
        best = std::max(best, std::fabs(static_cast<double>(count) / n - vol));
        int d = 0;
        while (d < s && ++idx[d] > resolution) idx[d++] = 1;
        if (d == s) break;
    }
    return best;
}

}  // namespace sfdesign
