#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/rng.hpp"

namespace sfdesign {

// Independent integration oracles for the L2 discrepancy family. Each one
// integrates the defining |empirical - volume|^2 box-family integral
// directly, never touching the closed forms it arbitrates. The local
// discrepancy of a fixed point set is piecewise polynomial between point
// coordinates, so splitting [0,1]^s into coordinate cells makes the
// integral exact up to rounding. Kept separate from discrepancy.hpp so the
// two sides of every comparison stay independent.

namespace oracle_detail {

/// Breakpoints of one coordinate: 0, the point coordinates, optional 0.5,
/// and 1.
inline std::vector<double> breakpoints(const DesignMatrix& P, int dim, bool split_half) {
    std::vector<double> b;
    b.push_back(0.0);
    for (int i = 0; i < P.rows; ++i) b.push_back(P.at(i, dim));
    if (split_half) b.push_back(0.5);
    b.push_back(1.0);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

struct CellIter {
    std::vector<std::vector<double>> bp;  // per active dim
    std::vector<std::size_t> idx;
    bool done = false;

    explicit CellIter(std::vector<std::vector<double>> b) : bp(std::move(b)), idx(bp.size(), 0) {
        for (auto& v : bp)
            if (v.size() < 2) done = true;
    }
    double lo(std::size_t d) const { return bp[d][idx[d]]; }
    double hi(std::size_t d) const { return bp[d][idx[d] + 1]; }
    void next() {
        std::size_t d = 0;
        while (d < bp.size() && ++idx[d] == bp[d].size() - 1) idx[d++] = 0;
        if (d == bp.size()) done = true;
    }
};

}  // namespace oracle_detail

/// Exact integral of (N([0,x))/n - Vol([0,x)))^2 over the unit cube for
/// the column subset `dims` of P.
inline double l2_star_box_integral(const DesignMatrix& P, const std::vector<int>& dims) {
    const int n = P.rows;
    const int u = static_cast<int>(dims.size());
    std::vector<std::vector<double>> bp;
    for (int d : dims) bp.push_back(oracle_detail::breakpoints(P, d, false));
    double total = 0.0;
    for (oracle_detail::CellIter it(std::move(bp)); !it.done; it.next()) {
        int count = 0;
        for (int i = 0; i < n; ++i) {
            bool in = true;
            for (int d = 0; d < u && in; ++d)
                if (P.at(i, dims[d]) > it.lo(d)) in = false;  // member iff coord <= cell floor
            if (in) ++count;
        }
        double vol = 1.0, e1 = 1.0, e2 = 1.0;
        for (int d = 0; d < u; ++d) {
            const double a = it.lo(d), b = it.hi(d);
            vol *= b - a;
            e1 *= (b * b - a * a) / 2.0;
            e2 *= (b * b * b - a * a * a) / 3.0;
        }
        const double q = static_cast<double>(count) / n;
        total += q * q * vol - 2.0 * q * e1 + e2;
    }
    return total;
}

/// Brute-force squared L2 star discrepancy (full dimension only).
inline double l2_oracle(const DesignMatrix& P) {
    std::vector<int> dims(P.cols);
    for (int d = 0; d < P.cols; ++d) dims[d] = d;
    return l2_star_box_integral(P, dims);
}

/// Brute-force squared modified L2 discrepancy: the anchored-box integral
/// summed over every nonempty coordinate projection.
inline double ml2_oracle(const DesignMatrix& P) {
    const int s = P.cols;
    double total = 0.0;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        std::vector<int> dims;
        for (int d = 0; d < s; ++d)
            if (mask & (1u << d)) dims.push_back(d);
        total += l2_star_box_integral(P, dims);
    }
    return total;
}

/// Brute-force squared centered L2 discrepancy. The box at x reaches from
/// x to the nearest cube vertex: per coordinate [0, x) when x < 1/2 and
/// [x, 1) when x > 1/2, with volume factor min-side length. Summed over
/// all nonempty projections.
inline double cl2_oracle(const DesignMatrix& P) {
    const int n = P.rows, s = P.cols;
    double total = 0.0;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        std::vector<int> dims;
        for (int d = 0; d < s; ++d)
            if (mask & (1u << d)) dims.push_back(d);
        const int u = static_cast<int>(dims.size());
        std::vector<std::vector<double>> bp;
        for (int d : dims) bp.push_back(oracle_detail::breakpoints(P, d, true));
        for (oracle_detail::CellIter it(std::move(bp)); !it.done; it.next()) {
            int count = 0;
            for (int i = 0; i < n; ++i) {
                bool in = true;
                for (int d = 0; d < u && in; ++d) {
                    const double v = P.at(i, dims[d]);
                    const bool left_side = it.hi(d) <= 0.5;  // cell below the centre
                    if (left_side ? v > it.lo(d) : v < it.hi(d)) in = false;
                }
                if (in) ++count;
            }
            double vol = 1.0, e1 = 1.0, e2 = 1.0;
            for (int d = 0; d < u; ++d) {
                const double a = it.lo(d), b = it.hi(d);
                vol *= b - a;
                if (b <= 0.5) {  // factor x
                    e1 *= (b * b - a * a) / 2.0;
                    e2 *= (b * b * b - a * a * a) / 3.0;
                } else {  // factor 1 - x
                    const double A = 1.0 - b, B = 1.0 - a;
                    e1 *= (B * B - A * A) / 2.0;
                    e2 *= (B * B * B - A * A * A) / 3.0;
                }
            }
            const double q = static_cast<double>(count) / n;
            total += q * q * vol - 2.0 * q * e1 + e2;
        }
    }
    return total;
}

/// Brute-force squared symmetric L2 discrepancy through its signed-box
/// local discrepancy: with sigma(p, t) = +-1 as p sits above or below t,
/// the per-projection integrand is (avg_i prod sigma(x_i, t) -
/// prod(1 - 2t))^2, which is reflection-invariant by construction.
inline double sl2_oracle(const DesignMatrix& P) {
    const int n = P.rows, s = P.cols;
    double total = 0.0;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        std::vector<int> dims;
        for (int d = 0; d < s; ++d)
            if (mask & (1u << d)) dims.push_back(d);
        const int u = static_cast<int>(dims.size());
        std::vector<std::vector<double>> bp;
        for (int d : dims) bp.push_back(oracle_detail::breakpoints(P, d, false));
        for (oracle_detail::CellIter it(std::move(bp)); !it.done; it.next()) {
            double ssum = 0.0;
            for (int i = 0; i < n; ++i) {
                int sgn = 1;
                for (int d = 0; d < u; ++d)
                    sgn *= (P.at(i, dims[d]) >= it.hi(d)) ? 1 : -1;  // t <= p on the open cell
                ssum += sgn;
            }
            const double K = ssum / n;
            double vol = 1.0, e1 = 1.0, e2 = 1.0;
            for (int d = 0; d < u; ++d) {
                const double a = it.lo(d), b = it.hi(d);
                vol *= b - a;
                e1 *= (b - a) - (b * b - a * a);  // integral of 1-2t
                e2 *= (b - a) - 2.0 * (b * b - a * a) + 4.0 / 3.0 * (b * b * b - a * a * a);
            }
            total += K * K * vol - 2.0 * K * e1 + e2;
        }
    }
    return total;
}

/// Plain Monte Carlo estimate of the squared L2 star discrepancy, the
/// slow secondary cross-check on the cellwise oracle.
inline double l2_monte_carlo(const DesignMatrix& P, std::int64_t samples, std::uint64_t seed) {
    const int n = P.rows, s = P.cols;
    Rng rng(seed);
    double acc = 0.0;
    std::vector<double> x(s);
    for (std::int64_t m = 0; m < samples; ++m) {
        double vol = 1.0;
        for (int d = 0; d < s; ++d) {
            x[d] = rng.unit();
            vol *= x[d];
        }
        int count = 0;
        for (int i = 0; i < n; ++i) {
            bool in = true;
            for (int d = 0; d < s && in; ++d)
                if (P.at(i, d) >= x[d]) in = false;
            if (in) ++count;
        }
        const double diff = static_cast<double>(count) / n - vol;
        acc += diff * diff;
    }
    return acc / static_cast<double>(samples);
}

}  // namespace sfdesign
