#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/rng.hpp"

namespace sfdesign {

/// Exact integer representation of an n x k design on s centered, equally
/// spaced levels. Entries store DOUBLED levels (2*l), so the half-integer
/// levels that appear for even s are held exactly: the level set
/// { -(s-1)/2, ..., (s-1)/2 } is stored as { -(s-1), -(s-3), ..., s-1 }.
/// s == n is the Latin hypercube case.
struct LevelMatrix {
    int n = 0;
    int k = 0;
    int s = 0;
    IntMatrix doubled;  // n x k, doubled levels

    LevelMatrix() = default;
    LevelMatrix(int n_, int k_, int s_) : n(n_), k(k_), s(s_), doubled(n_, k_) {
        if (n_ < 1 || k_ < 1) fail(errc::invalid_dimension, "LevelMatrix needs n >= 1, k >= 1");
        if (s_ < 1 || s_ > n_) fail(errc::invalid_dimension, "LevelMatrix needs 1 <= s <= n");
    }

    double level(int i, int j) const { return static_cast<double>(doubled.at(i, j)) / 2.0; }

    /// Rank of the entry within the level ladder, in 0..s-1.
    int rank(int i, int j) const { return static_cast<int>((doubled.at(i, j) + (s - 1)) / 2); }

    friend bool operator==(const LevelMatrix& x, const LevelMatrix& y) {
        return x.n == y.n && x.k == y.k && x.s == y.s && x.doubled == y.doubled;
    }
};

/// The doubled level ladder for s levels: -(s-1), -(s-3), ..., s-1.
inline std::vector<std::int64_t> doubled_level_ladder(int s) {
    std::vector<std::int64_t> v(s);
    for (int m = 0; m < s; ++m) v[m] = 2 * m - (s - 1);
    return v;
}

struct ColumnDiagnostic {
    int column = 0;
    bool ok = true;
    std::string message;
};

struct ValidationReport {
    bool pass = true;
    std::vector<ColumnDiagnostic> columns;
};

/// Column-by-column balance check: every level must appear exactly n/s
/// times. Diagnostic only, never throws.
inline ValidationReport validate_latin_hypercube(const LevelMatrix& L) {
    ValidationReport rep;
    rep.columns.resize(L.k);
    const auto ladder = doubled_level_ladder(L.s);
    const int reps = (L.s > 0 && L.n % L.s == 0) ? L.n / L.s : -1;
    for (int j = 0; j < L.k; ++j) {
        auto& diag = rep.columns[j];
        diag.column = j;
        if (reps < 0) {
            diag.ok = false;
            diag.message = "n is not a multiple of s";
            rep.pass = false;
            continue;
        }
        std::vector<std::int64_t> col(L.n);
        for (int i = 0; i < L.n; ++i) col[i] = L.doubled.at(i, j);
        std::sort(col.begin(), col.end());
        bool ok = true;
        std::string msg;
        std::size_t pos = 0;
        for (std::int64_t lv : ladder) {
            int count = 0;
            while (pos < col.size() && col[pos] == lv) { ++pos; ++count; }
            if (count != reps) {
                ok = false;
                msg = "level " + std::to_string(static_cast<double>(lv) / 2.0) + " appears " +
                      std::to_string(count) + " times, expected " + std::to_string(reps);
                break;
            }
        }
        if (ok && pos != col.size()) {
            ok = false;
            msg = "column contains values outside the level set";
        }
        diag.ok = ok;
        diag.message = msg;
        if (!ok) rep.pass = false;
    }
    return rep;
}

/// Random Latin hypercube: each column an independent uniform permutation
/// of the n doubled levels. Reproducible from the seed.
inline LevelMatrix random_latin_hypercube(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) fail(errc::invalid_dimension, "random_latin_hypercube needs n >= 1, k >= 1");
    LevelMatrix L(n, k, n);
    Rng rng(seed);
    auto col = doubled_level_ladder(n);
    for (int j = 0; j < k; ++j) {
        rng.shuffle(col);
        for (int i = 0; i < n; ++i) L.doubled.at(i, j) = col[i];
    }
    return L;
}

/// Jitter choice for scaling a level matrix into the unit cube: random
/// u_ij ~ U[0,1) or the fixed midpoint u_ij = 0.5 ("lattice sample").
struct JitterMode {
    enum Kind { random, midpoint } kind = midpoint;
    std::uint64_t seed = 0;

    static JitterMode Midpoint() { return JitterMode{midpoint, 0}; }
    static JitterMode Random(std::uint64_t seed) { return JitterMode{random, seed}; }
};

/// d_ij = (l_ij + (s-1)/2 + u_ij) / s on true levels; every entry lands in
/// the entry's own cell [rank/s, (rank+1)/s).
inline DesignMatrix to_unit_cube(const LevelMatrix& L, const JitterMode& mode) {
    DesignMatrix D(L.n, L.k);
    Rng rng(mode.seed);
    for (int i = 0; i < L.n; ++i) {
        for (int j = 0; j < L.k; ++j) {
            const double u = (mode.kind == JitterMode::midpoint) ? 0.5 : rng.unit();
            D.at(i, j) = (static_cast<double>(L.doubled.at(i, j) + (L.s - 1)) / 2.0 + u) / L.s;
        }
    }
    return D;
}

/// Recover the level matrix from a design generated by to_unit_cube with
/// s = n (one point per cell makes the inversion exact).
inline LevelMatrix recover_levels(const DesignMatrix& D) {
    LevelMatrix L(D.rows, D.cols, D.rows);
    for (int i = 0; i < D.rows; ++i)
        for (int j = 0; j < D.cols; ++j) {
            double x = D.at(i, j);
            if (x < 0.0 || x >= 1.0) fail(errc::invalid_dimension, "design entry outside [0,1)");
            int rank = static_cast<int>(x * D.rows);
            if (rank >= D.rows) rank = D.rows - 1;
            L.doubled.at(i, j) = 2 * rank - (D.rows - 1);
        }
    return L;
}

}  // namespace sfdesign
