#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sfdesign/correlation.hpp"
#include "sfdesign/discrepancy.hpp"
#include "sfdesign/distance.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/rng.hpp"

namespace sfdesign {

/// Search objective over level matrices; every entry is minimized.
struct Objective {
    enum Kind { phi_q, rho_ave_sq, rho_max, audze_eglais, neg_dmin2, cl2, sl2, ml2, l2 } kind = phi_q;
    double q = kPhiQDefault;
    DistanceOrder ord = DistanceOrder::euclidean();

    static Objective PhiQ(double q, DistanceOrder ord = DistanceOrder::euclidean()) {
        Objective o;
        o.kind = phi_q;
        o.q = q;
        o.ord = ord;
        return o;
    }
    static Objective named(const std::string& name) {
        Objective o;
        if (name == "phi_q") o.kind = phi_q;
        else if (name == "rho_ave_sq") o.kind = rho_ave_sq;
        else if (name == "rho_max") o.kind = rho_max;
        else if (name == "audze_eglais") o.kind = audze_eglais;
        else if (name == "dmin2") o.kind = neg_dmin2;
        else if (name == "cl2") o.kind = cl2;
        else if (name == "sl2") o.kind = sl2;
        else if (name == "ml2") o.kind = ml2;
        else if (name == "l2") o.kind = l2;
        else fail(errc::unknown_metric, "unknown objective: " + name);
        return o;
    }

    double eval(const LevelMatrix& L) const {
        switch (kind) {
            case phi_q: return sfdesign::phi_q(L, q, ord);
            case rho_ave_sq: return correlation_matrix(L).rho_ave_sq;
            case rho_max: return correlation_matrix(L).rho_max;
            case audze_eglais: return sfdesign::audze_eglais(L, ord);
            case neg_dmin2: return -dmin2(L, ord);
            case cl2: return centered_l2(to_unit_cube(L, JitterMode::Midpoint())).value;
            case sl2: return symmetric_l2(to_unit_cube(L, JitterMode::Midpoint())).value;
            case ml2: return modified_l2(to_unit_cube(L, JitterMode::Midpoint())).value;
            case l2: return l2_discrepancy(to_unit_cube(L, JitterMode::Midpoint())).value;
        }
        return 0.0;
    }
};

struct SearchParams {
    std::uint64_t seed = 0;
    std::int64_t max_iterations = 0;     // proposals per restart; 0 = auto (2000 * n * k)
    double initial_temperature = 0.0;    // 0 = auto from neighbor deltas
    double cooling_factor = 0.95;
    std::int64_t cooling_period = 0;     // proposals per cooling step; 0 = auto (100 * n)
    int restarts = 1;
    int ta_stages = 20;                  // threshold-accepting schedule length
};

/// Objective trace: best-ever value after the start and after each
/// improving accepted move.
struct SearchTrace {
    std::vector<double> best_values;
};

struct SearchResult {
    LevelMatrix design;
    double value = 0.0;
    SearchTrace trace;
};

namespace search_detail {

/// Incremental objective state for within-column swaps. The generic
/// fallback recomputes from scratch; the correlation and phi_q objectives
/// keep running pair statistics so a proposal costs O(nk) instead of
/// O(n^2 k). Debug builds assert the incremental value against a full
/// recompute.
class Evaluator {
public:
    Evaluator(const Objective& obj, LevelMatrix L) : obj_(obj), L_(std::move(L)) { init(); }

    const LevelMatrix& design() const { return L_; }
    double value() const { return value_; }

    /// Apply the swap of rows (r1, r2) in column c; self-inverse.
    void apply(int c, int r1, int r2) {
        const std::int64_t v1 = L_.doubled.at(r1, c), v2 = L_.doubled.at(r2, c);
        if (obj_.kind == Objective::rho_ave_sq || obj_.kind == Objective::rho_max) {
            for (int j = 0; j < L_.k; ++j) {
                if (j == c) continue;
                dots_[key(c, j)] += (v2 - v1) * L_.doubled.at(r1, j) + (v1 - v2) * L_.doubled.at(r2, j);
            }
            L_.doubled.at(r1, c) = v2;
            L_.doubled.at(r2, c) = v1;
            value_ = corr_value();
        } else if (obj_.kind == Objective::phi_q && obj_.ord.exact_on_integers()) {
            for (int o = 0; o < L_.n; ++o) {
                if (o == r1 || o == r2) continue;
                bump(detail::pair_key(L_, r1, o, obj_.ord), -1);
                bump(detail::pair_key(L_, r2, o, obj_.ord), -1);
            }
            L_.doubled.at(r1, c) = v2;
            L_.doubled.at(r2, c) = v1;
            for (int o = 0; o < L_.n; ++o) {
                if (o == r1 || o == r2) continue;
                bump(detail::pair_key(L_, r1, o, obj_.ord), +1);
                bump(detail::pair_key(L_, r2, o, obj_.ord), +1);
            }
            value_ = phi_value();
        } else {
            L_.doubled.at(r1, c) = v2;
            L_.doubled.at(r2, c) = v1;
            value_ = obj_.eval(L_);
        }
        assert(std::fabs(value_ - obj_.eval(L_)) <= 1e-9 * std::max(1.0, std::fabs(value_)));
    }

private:
    std::size_t key(int a, int b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * L_.k + b;
    }

    void bump(std::int64_t k, int delta) {
        auto it = profile_.find(k);
        if (it == profile_.end()) {
            if (delta > 0) profile_[k] = delta;
        } else {
            it->second += delta;
            if (it->second == 0) profile_.erase(it);
        }
    }

    double corr_value() const {
        // column sums are swap-invariant; so are the per-column variances
        double best = 0.0, sum = 0.0;
        int pairs = 0;
        for (int a = 0; a < L_.k; ++a)
            for (int b = a + 1; b < L_.k; ++b, ++pairs) {
                const double num =
                    static_cast<double>(L_.n) * static_cast<double>(dots_.at(key(a, b))) -
                    static_cast<double>(sums_[a]) * static_cast<double>(sums_[b]);
                const double r = num / std::sqrt(var_[a] * var_[b]);
                best = std::max(best, std::fabs(r));
                sum += r * r;
            }
        return obj_.kind == Objective::rho_max ? best : sum / pairs;
    }

    double phi_value() const {
        double mx = -std::numeric_limits<double>::infinity();
        std::vector<double> terms;
        terms.reserve(profile_.size());
        for (auto& [k, count] : profile_) {
            const double d = detail::key_to_distance(k, obj_.ord);
            const double a = std::log(static_cast<double>(count)) - obj_.q * std::log(d);
            terms.push_back(a);
            mx = std::max(mx, a);
        }
        double s = 0.0;
        for (double a : terms) s += std::exp(a - mx);
        return std::exp((mx + std::log(s)) / obj_.q);
    }

    void init() {
        if (obj_.kind == Objective::rho_ave_sq || obj_.kind == Objective::rho_max) {
            sums_.assign(L_.k, 0);
            var_.assign(L_.k, 0.0);
            for (int j = 0; j < L_.k; ++j) {
                std::int64_t s = 0, sq = 0;
                for (int i = 0; i < L_.n; ++i) {
                    s += L_.doubled.at(i, j);
                    sq += L_.doubled.at(i, j) * L_.doubled.at(i, j);
                }
                sums_[j] = s;
                var_[j] = static_cast<double>(L_.n) * static_cast<double>(sq) -
                          static_cast<double>(s) * static_cast<double>(s);
                if (var_[j] == 0.0) fail(errc::zero_variance, "search objective: constant column");
            }
            dots_.assign(static_cast<std::size_t>(L_.k) * L_.k, 0);
            for (int a = 0; a < L_.k; ++a)
                for (int b = a + 1; b < L_.k; ++b) {
                    std::int64_t d = 0;
                    for (int i = 0; i < L_.n; ++i) d += L_.doubled.at(i, a) * L_.doubled.at(i, b);
                    dots_[key(a, b)] = d;
                }
            value_ = corr_value();
        } else if (obj_.kind == Objective::phi_q && obj_.ord.exact_on_integers()) {
            for (int i = 0; i < L_.n; ++i)
                for (int j = i + 1; j < L_.n; ++j) bump(detail::pair_key(L_, i, j, obj_.ord), +1);
            value_ = phi_value();
        } else {
            value_ = obj_.eval(L_);
        }
    }

    Objective obj_;
    LevelMatrix L_;
    double value_ = 0.0;
    std::vector<std::int64_t> sums_;
    std::vector<double> var_;
    std::vector<std::int64_t> dots_;
    std::map<std::int64_t, std::int64_t> profile_;
};

}  // namespace search_detail

/// Simulated annealing over Latin hypercubes. The only move is a swap of
/// two entries within one column, which preserves the Latin property by
/// construction. Worse moves are accepted with probability
/// exp(-delta / temperature); the best design ever seen is returned.
inline SearchResult anneal_lh(int n, int k, const Objective& obj, const SearchParams& p) {
    if (n < 1 || k < 1) fail(errc::invalid_dimension, "anneal_lh: need n >= 1, k >= 1");
    const std::int64_t iters = p.max_iterations > 0 ? p.max_iterations : 2000LL * n * k;
    const std::int64_t period = p.cooling_period > 0 ? p.cooling_period : 100LL * n;
    Rng master(p.seed);

    SearchResult best_overall;
    bool have_best = false;
    for (int restart = 0; restart < std::max(1, p.restarts); ++restart) {
        Rng rng = master.split(restart);
        search_detail::Evaluator ev(obj, random_latin_hypercube(n, k, rng.next_u64()));
        SearchResult cur{ev.design(), ev.value(), {}};
        cur.trace.best_values.push_back(cur.value);

        double temp = p.initial_temperature;
        if (temp <= 0.0) {
            // scale from the spread of random neighbour deltas
            double mean = 0.0, m2 = 0.0;
            const int probes = 100;
            for (int t = 0; t < probes; ++t) {
                const int c = static_cast<int>(rng.below(k));
                int r1 = static_cast<int>(rng.below(n)), r2 = static_cast<int>(rng.below(n));
                if (r1 == r2) r2 = (r2 + 1) % n;
                const double before = ev.value();
                ev.apply(c, r1, r2);
                const double delta = ev.value() - before;
                ev.apply(c, r1, r2);  // revert
                const double d = delta - mean;
                mean += d / (t + 1);
                m2 += d * (delta - mean);
            }
            temp = std::sqrt(m2 / probes);
            if (!(temp > 0.0)) temp = 1.0;
        }

        double cur_value = ev.value();
        for (std::int64_t it = 0; it < iters; ++it) {
            if (n >= 2) {
                const int c = static_cast<int>(rng.below(k));
                int r1 = static_cast<int>(rng.below(n)), r2 = static_cast<int>(rng.below(n));
                if (r1 == r2) r2 = (r2 + 1) % n;
                ev.apply(c, r1, r2);
                const double delta = ev.value() - cur_value;
                if (delta <= 0.0 || rng.unit() < std::exp(-delta / temp)) {
                    cur_value = ev.value();
                    if (cur_value < cur.value) {
                        cur.value = cur_value;
                        cur.design = ev.design();
                        cur.trace.best_values.push_back(cur.value);
                    }
                } else {
                    ev.apply(c, r1, r2);  // reject: revert
                }
            }
            if ((it + 1) % period == 0) temp *= p.cooling_factor;
        }
        if (!have_best || cur.value < best_overall.value) {
            best_overall = std::move(cur);
            have_best = true;
        }
    }
    return best_overall;
}

/// Columnwise-pairwise descent: sweep the columns in order, try every
/// within-column pair swap, take the best improving one, and stop when a
/// full sweep over all columns finds no improvement. Deterministic.
inline SearchResult columnwise_pairwise(const LevelMatrix& L0, const Objective& obj,
                                        const SearchParams& p = {}) {
    (void)p;
    search_detail::Evaluator ev(obj, L0);
    SearchResult res{ev.design(), ev.value(), {}};
    res.trace.best_values.push_back(res.value);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int c = 0; c < L0.k; ++c) {
            int best_r1 = -1, best_r2 = -1;
            double best_delta = 0.0;
            for (int r1 = 0; r1 < L0.n; ++r1)
                for (int r2 = r1 + 1; r2 < L0.n; ++r2) {
                    ev.apply(c, r1, r2);
                    const double delta = ev.value() - res.value;
                    ev.apply(c, r1, r2);
                    if (delta < best_delta - 1e-15) {
                        best_delta = delta;
                        best_r1 = r1;
                        best_r2 = r2;
                    }
                }
            if (best_r1 >= 0) {
                ev.apply(c, best_r1, best_r2);
                res.value = ev.value();
                res.design = ev.design();
                res.trace.best_values.push_back(res.value);
                improved = true;
            }
        }
    }
    return res;
}

/// Threshold accepting over U-type designs U(n; q^s): balanced columns,
/// within-column swaps, accept any move whose objective increase stays
/// below the current threshold. Thresholds decay linearly to zero over
/// ta_stages stages from the random-neighbour delta scale.
inline SearchResult threshold_accepting_utype(int n, int q_levels, int s, const Objective& obj,
                                              const SearchParams& p) {
    if (n < 1 || q_levels < 2 || s < 1)
        fail(errc::invalid_dimension, "threshold_accepting_utype: bad shape");
    if (n % q_levels != 0)
        fail(errc::divisibility, "threshold_accepting_utype: n must be a multiple of q");
    Rng rng(p.seed);
    LevelMatrix L(n, s, q_levels);
    {
        auto ladder = doubled_level_ladder(q_levels);
        std::vector<std::int64_t> col;
        for (auto v : ladder)
            for (int r = 0; r < n / q_levels; ++r) col.push_back(v);
        for (int j = 0; j < s; ++j) {
            rng.shuffle(col);
            for (int i = 0; i < n; ++i) L.doubled.at(i, j) = col[i];
        }
    }
    search_detail::Evaluator ev(obj, L);
    SearchResult res{ev.design(), ev.value(), {}};
    res.trace.best_values.push_back(res.value);

    double scale = 0.0;
    const int probes = 100;
    for (int t = 0; t < probes; ++t) {
        const int c = static_cast<int>(rng.below(s));
        int r1 = static_cast<int>(rng.below(n)), r2 = static_cast<int>(rng.below(n));
        if (r1 == r2) r2 = (r2 + 1) % n;
        const double before = ev.value();
        ev.apply(c, r1, r2);
        scale += std::fabs(ev.value() - before);
        ev.apply(c, r1, r2);
    }
    scale /= probes;
    if (!(scale > 0.0)) scale = 1.0;

    const std::int64_t iters = p.max_iterations > 0 ? p.max_iterations : 2000LL * n * s;
    const int stages = std::max(1, p.ta_stages);
    const std::int64_t per_stage = std::max<std::int64_t>(1, iters / stages);
    double cur_value = ev.value();
    for (int stage = 0; stage < stages; ++stage) {
        const double threshold = scale * (1.0 - static_cast<double>(stage) / stages);
        for (std::int64_t it = 0; it < per_stage; ++it) {
            const int c = static_cast<int>(rng.below(s));
            int r1 = static_cast<int>(rng.below(n)), r2 = static_cast<int>(rng.below(n));
            if (r1 == r2) r2 = (r2 + 1) % n;
            ev.apply(c, r1, r2);
            const double delta = ev.value() - cur_value;
            if (delta <= threshold) {
                cur_value = ev.value();
                if (cur_value < res.value) {
                    res.value = cur_value;
                    res.design = ev.design();
                    res.trace.best_values.push_back(res.value);
                }
            } else {
                ev.apply(c, r1, r2);
            }
        }
    }
    return res;
}

/// Maximin Latin hypercube pipeline: anneal under phi_q, then polish with
/// columnwise-pairwise sweeps. Distances are evaluated on the levels;
/// midpoint scaling (u = 0.5) keeps the ranking identical in the unit
/// cube.
inline SearchResult maximin_lh(int n, int k, double q, const DistanceOrder& ord, const SearchParams& p) {
    Objective obj = Objective::PhiQ(q, ord);
    SearchResult annealed = anneal_lh(n, k, obj, p);
    SearchResult polished = columnwise_pairwise(annealed.design, obj, p);
    for (double v : polished.trace.best_values) annealed.trace.best_values.push_back(v);
    annealed.design = polished.design;
    annealed.value = polished.value;
    return annealed;
}

}  // namespace sfdesign
