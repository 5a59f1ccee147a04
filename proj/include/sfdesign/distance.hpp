#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "sfdesign/config.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"

namespace sfdesign {

/// Distance exponent: t = 1 rectangular, t = 2 Euclidean, chebyshev() for
/// the max-coordinate limit.
struct DistanceOrder {
    double t = 2.0;
    bool infinite = false;

    static DistanceOrder rectangular() { return {1.0, false}; }
    static DistanceOrder euclidean() { return {2.0, false}; }
    static DistanceOrder chebyshev() { return {0.0, true}; }
    static DistanceOrder lp(double t) {
        if (t <= 0.0) fail(errc::invalid_dimension, "distance exponent must be positive");
        return {t, false};
    }

    bool exact_on_integers() const { return infinite || t == 1.0 || t == 2.0; }
};

inline double interpoint_distance(std::span<const double> u, std::span<const double> v,
                                  const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (u.size() != v.size()) fail(errc::dimension_mismatch, "interpoint_distance: unequal dimensions");
    if (ord.infinite) {
        double m = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) m = std::max(m, std::fabs(u[j] - v[j]));
        return m;
    }
    double s = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) s += std::pow(std::fabs(u[j] - v[j]), ord.t);
    return std::pow(s, 1.0 / ord.t);
}

namespace detail {

inline std::vector<double> row_of(const DesignMatrix& D, int i) {
    std::vector<double> r(D.cols);
    for (int j = 0; j < D.cols; ++j) r[j] = D.at(i, j);
    return r;
}

/// Integer pair key on doubled levels: sum of |delta|^t for t in {1,2},
/// max|delta| for the chebyshev marker. Monotone in the true distance, so
/// grouping and ordering by key are exact.
inline std::int64_t pair_key(const LevelMatrix& L, int i1, int i2, const DistanceOrder& ord) {
    std::int64_t acc = 0;
    for (int j = 0; j < L.k; ++j) {
        std::int64_t d = L.doubled.at(i1, j) - L.doubled.at(i2, j);
        if (d < 0) d = -d;
        if (ord.infinite)
            acc = std::max(acc, d);
        else if (ord.t == 1.0)
            acc += d;
        else
            acc += d * d;
    }
    return acc;
}

/// True-level distance from an integer pair key.
inline double key_to_distance(std::int64_t key, const DistanceOrder& ord) {
    if (ord.infinite || ord.t == 1.0) return static_cast<double>(key) / 2.0;
    return std::sqrt(static_cast<double>(key)) / 2.0;
}

}  // namespace detail

inline double min_interpoint_distance(const DesignMatrix& D,
                                      const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (D.rows < 2) fail(errc::invalid_dimension, "min_interpoint_distance needs n >= 2");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < D.rows; ++i) {
        auto ri = detail::row_of(D, i);
        for (int j = i + 1; j < D.rows; ++j) best = std::min(best, interpoint_distance(ri, detail::row_of(D, j), ord));
    }
    return best;
}

inline double min_interpoint_distance(const LevelMatrix& L,
                                      const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (L.n < 2) fail(errc::invalid_dimension, "min_interpoint_distance needs n >= 2");
    if (ord.exact_on_integers()) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (int i = 0; i < L.n; ++i)
            for (int j = i + 1; j < L.n; ++j) best = std::min(best, detail::pair_key(L, i, j, ord));
        return detail::key_to_distance(best, ord);
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            double s = 0.0;
            for (int c = 0; c < L.k; ++c) s += std::pow(std::fabs(L.level(i, c) - L.level(j, c)), ord.t);
            best = std::min(best, std::pow(s, 1.0 / ord.t));
        }
    return best;
}

/// Grid approximation to the minimax cover radius: the largest distance
/// from a regular resolution^k candidate grid (endpoints included) to the
/// nearest design point. Not the exact continuous minimax.
inline double minimax_cover_radius(const DesignMatrix& D, const DistanceOrder& ord, int resolution) {
    if (resolution < 2) fail(errc::invalid_dimension, "minimax_cover_radius needs resolution >= 2");
    const int k = D.cols;
    double cells = 1.0;
    for (int j = 0; j < k; ++j) {
        cells *= resolution;
        if (cells > static_cast<double>(enumeration_budget()))
            fail(errc::budget_exceeded, "minimax_cover_radius: grid exceeds SFDESIGN_BUDGET");
    }
    std::vector<int> idx(k, 0);
    std::vector<double> x(k);
    double worst = 0.0;
    for (;;) {
        for (int j = 0; j < k; ++j) x[j] = static_cast<double>(idx[j]) / (resolution - 1);
        double nearest = std::numeric_limits<double>::infinity();
        for (int i = 0; i < D.rows; ++i)
            nearest = std::min(nearest, interpoint_distance(x, detail::row_of(D, i), ord));
        worst = std::max(worst, nearest);
        int j = 0;
        while (j < k && ++idx[j] == resolution) idx[j++] = 0;
        if (j == k) break;
    }
    return worst;
}

/// Audze-Eglais potential: sum over pairs of d^-2.
inline double audze_eglais(const DesignMatrix& D, const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (D.rows < 2) fail(errc::invalid_dimension, "audze_eglais needs n >= 2");
    double s = 0.0;
    for (int i = 0; i < D.rows; ++i) {
        auto ri = detail::row_of(D, i);
        for (int j = i + 1; j < D.rows; ++j) {
            double d = interpoint_distance(ri, detail::row_of(D, j), ord);
            if (d == 0.0) fail(errc::infinite_energy, "audze_eglais: coincident points");
            s += 1.0 / (d * d);
        }
    }
    return s;
}

inline double audze_eglais(const LevelMatrix& L, const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (L.n < 2) fail(errc::invalid_dimension, "audze_eglais needs n >= 2");
    double s = 0.0;
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            if (ord.exact_on_integers()) {
                std::int64_t key = detail::pair_key(L, i, j, ord);
                if (key == 0) fail(errc::infinite_energy, "audze_eglais: coincident points");
                double d = detail::key_to_distance(key, ord);
                s += 1.0 / (d * d);
            } else {
                double acc = 0.0;
                for (int c = 0; c < L.k; ++c) acc += std::pow(std::fabs(L.level(i, c) - L.level(j, c)), ord.t);
                double d = std::pow(acc, 1.0 / ord.t);
                if (d == 0.0) fail(errc::infinite_energy, "audze_eglais: coincident points");
                s += 1.0 / (d * d);
            }
        }
    return s;
}

/// Morris-Mitchell distance/index lists: distinct inter-point distances
/// d_1 < ... < d_m with pair multiplicities J_1..J_m. For integer level
/// input with t in {1,2,inf} the grouping is exact; real input falls back
/// to relative-tolerance grouping and clears the exact flag.
struct DistanceProfile {
    std::vector<double> dist;
    std::vector<std::int64_t> mult;
    std::vector<std::int64_t> key;  // exact integer surrogates; empty when not exact
    bool exact = false;

    std::int64_t total_pairs() const {
        std::int64_t t = 0;
        for (auto m : mult) t += m;
        return t;
    }
};

inline DistanceProfile distance_profile(const LevelMatrix& L,
                                        const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (L.n < 2) fail(errc::invalid_dimension, "distance_profile needs n >= 2");
    DistanceProfile p;
    if (ord.exact_on_integers()) {
        std::map<std::int64_t, std::int64_t> groups;
        for (int i = 0; i < L.n; ++i)
            for (int j = i + 1; j < L.n; ++j) ++groups[detail::pair_key(L, i, j, ord)];
        p.exact = true;
        for (auto& [key, count] : groups) {
            p.key.push_back(key);
            p.dist.push_back(detail::key_to_distance(key, ord));
            p.mult.push_back(count);
        }
        return p;
    }
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(L.n) * (L.n - 1) / 2);
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            double acc = 0.0;
            for (int c = 0; c < L.k; ++c) acc += std::pow(std::fabs(L.level(i, c) - L.level(j, c)), ord.t);
            d.push_back(std::pow(acc, 1.0 / ord.t));
        }
    std::sort(d.begin(), d.end());
    for (double v : d) {
        if (!p.dist.empty() && v <= p.dist.back() * (1.0 + 1e-9))
            ++p.mult.back();
        else {
            p.dist.push_back(v);
            p.mult.push_back(1);
        }
    }
    return p;
}

inline DistanceProfile distance_profile(const DesignMatrix& D,
                                        const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (D.rows < 2) fail(errc::invalid_dimension, "distance_profile needs n >= 2");
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(D.rows) * (D.rows - 1) / 2);
    for (int i = 0; i < D.rows; ++i) {
        auto ri = detail::row_of(D, i);
        for (int j = i + 1; j < D.rows; ++j) d.push_back(interpoint_distance(ri, detail::row_of(D, j), ord));
    }
    std::sort(d.begin(), d.end());
    DistanceProfile p;
    for (double v : d) {
        if (!p.dist.empty() && v <= p.dist.back() * (1.0 + 1e-9))
            ++p.mult.back();
        else {
            p.dist.push_back(v);
            p.mult.push_back(1);
        }
    }
    return p;
}

/// phi_q = (sum_i J_i / d_i^q)^(1/q), evaluated in log space so large q
/// stays finite. Guidance for q: 5 small designs, 20 moderate, 50 large.
inline double phi_q_from_profile(const DistanceProfile& p, double q) {
    if (q <= 0.0) fail(errc::invalid_dimension, "phi_q needs q > 0");
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> a(p.dist.size());
    for (std::size_t i = 0; i < p.dist.size(); ++i) {
        if (p.dist[i] <= 0.0) fail(errc::infinite_energy, "phi_q: coincident points");
        a[i] = std::log(static_cast<double>(p.mult[i])) - q * std::log(p.dist[i]);
        mx = std::max(mx, a[i]);
    }
    double s = 0.0;
    for (double v : a) s += std::exp(v - mx);
    return std::exp((mx + std::log(s)) / q);
}

constexpr double kPhiQDefault = 15.0;
constexpr double kPhiQSmall = 5.0;
constexpr double kPhiQModerate = 20.0;
constexpr double kPhiQLarge = 50.0;

inline double phi_q(const LevelMatrix& L, double q = kPhiQDefault,
                    const DistanceOrder& ord = DistanceOrder::euclidean()) {
    return phi_q_from_profile(distance_profile(L, ord), q);
}

inline double phi_q(const DesignMatrix& D, double q = kPhiQDefault,
                    const DistanceOrder& ord = DistanceOrder::euclidean()) {
    return phi_q_from_profile(distance_profile(D, ord), q);
}

/// Sequential Morris-Mitchell order on (d_1, J_1, d_2, J_2, ...): larger
/// distance first, then smaller multiplicity. Returns -1 if a is better,
/// +1 if b is better, 0 for identical profiles. Exact when both profiles
/// carry integer keys.
inline int morris_mitchell_compare(const DistanceProfile& a, const DistanceProfile& b) {
    const std::size_t m = std::min(a.dist.size(), b.dist.size());
    const bool exact = a.exact && b.exact;
    for (std::size_t i = 0; i < m; ++i) {
        if (exact) {
            if (a.key[i] != b.key[i]) return a.key[i] > b.key[i] ? -1 : 1;
        } else {
            if (a.dist[i] != b.dist[i]) return a.dist[i] > b.dist[i] ? -1 : 1;
        }
        if (a.mult[i] != b.mult[i]) return a.mult[i] < b.mult[i] ? -1 : 1;
    }
    return 0;  // equal total pair counts force equal lengths once prefixes agree
}

/// Minimum projected two-dimensional distance over all coordinate pairs.
inline double dmin2(const DesignMatrix& D, const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (D.cols < 2) fail(errc::invalid_dimension, "dmin2 needs k >= 2");
    if (D.rows < 2) fail(errc::invalid_dimension, "dmin2 needs n >= 2");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < D.rows; ++i)
        for (int j = i + 1; j < D.rows; ++j)
            for (int h = 0; h < D.cols; ++h)
                for (int l = h + 1; l < D.cols; ++l) {
                    double dh = std::fabs(D.at(i, h) - D.at(j, h));
                    double dl = std::fabs(D.at(i, l) - D.at(j, l));
                    double d = ord.infinite ? std::max(dh, dl)
                                            : std::pow(std::pow(dh, ord.t) + std::pow(dl, ord.t), 1.0 / ord.t);
                    best = std::min(best, d);
                }
    return best;
}

inline double dmin2(const LevelMatrix& L, const DistanceOrder& ord = DistanceOrder::euclidean()) {
    if (L.k < 2) fail(errc::invalid_dimension, "dmin2 needs k >= 2");
    if (L.n < 2) fail(errc::invalid_dimension, "dmin2 needs n >= 2");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j)
            for (int h = 0; h < L.k; ++h)
                for (int l = h + 1; l < L.k; ++l) {
                    double dh = std::fabs(L.level(i, h) - L.level(j, h));
                    double dl = std::fabs(L.level(i, l) - L.level(j, l));
                    double d = ord.infinite ? std::max(dh, dl)
                                            : std::pow(std::pow(dh, ord.t) + std::pow(dl, ord.t), 1.0 / ord.t);
                    best = std::min(best, d);
                }
    return best;
}

}  // namespace sfdesign
