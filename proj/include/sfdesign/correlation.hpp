#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/rational.hpp"

namespace sfdesign {

/// Full Pearson correlation matrix plus the two near-orthogonality
/// summaries rho_M = max_{i<j} |r_ij| and rho^2_ave = avg_{i<j} r_ij^2.
/// Integer-level input keeps everything rational: r_ij^2 = N_ij^2/(V_i V_j)
/// with N_ij = n*sum(xy) - sum(x)sum(y) and V_i the centered sum of squares
/// (scaled by n), so identity and equality checks are exact.
struct CorrelationSummary {
    int k = 0;
    std::vector<double> R;  // k x k, unit diagonal
    double rho_max = 0.0;
    double rho_ave_sq = 0.0;
    bool exact = false;           // integer input path
    bool identity = false;        // R == I (exact on integer path, 1e-12 otherwise)
    Rat rho_ave_sq_exact;         // valid when exact
    Rat rho_max_exact;            // valid when exact and has_exact_rho_max
    bool has_exact_rho_max = false;

    double r(int i, int j) const { return R[static_cast<std::size_t>(i) * k + j]; }
};

namespace detail {

struct IntColumnStats {
    std::vector<std::int64_t> sum;
    std::vector<std::int64_t> variance;  // n*sum(x^2) - sum(x)^2
};

inline IntColumnStats int_column_stats(const IntMatrix& M) {
    IntColumnStats st;
    st.sum.assign(M.cols, 0);
    st.variance.assign(M.cols, 0);
    for (int j = 0; j < M.cols; ++j) {
        std::int64_t s = 0, sq = 0;
        for (int i = 0; i < M.rows; ++i) {
            std::int64_t v = M.at(i, j);
            s += v;
            sq += v * v;
        }
        st.sum[j] = s;
        st.variance[j] = static_cast<std::int64_t>(M.rows) * sq - s * s;
    }
    return st;
}

inline std::int64_t corr_numerator(const IntMatrix& M, int c1, int c2, const IntColumnStats& st) {
    std::int64_t xy = 0;
    for (int i = 0; i < M.rows; ++i) xy += M.at(i, c1) * M.at(i, c2);
    return static_cast<std::int64_t>(M.rows) * xy - st.sum[c1] * st.sum[c2];
}

inline bool int64_is_square(std::int64_t v, std::int64_t& root) {
    if (v < 0) return false;
    root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t r = root > 1 ? root - 1 : 0; r <= root + 1; ++r)
        if (r * r == v) { root = r; return true; }
    return false;
}

}  // namespace detail

/// Correlation summary of an integer matrix (doubled levels, sign matrices,
/// interaction products). Column scale cancels, so doubled storage is fine.
inline CorrelationSummary correlation_matrix(const IntMatrix& M) {
    if (M.cols < 2) fail(errc::invalid_dimension, "correlation_matrix needs k >= 2");
    auto st = detail::int_column_stats(M);
    for (int j = 0; j < M.cols; ++j)
        if (st.variance[j] == 0)
            fail(errc::zero_variance, "correlation_matrix: column " + std::to_string(j) + " is constant");

    CorrelationSummary out;
    out.k = M.cols;
    out.exact = true;
    out.identity = true;
    out.R.assign(static_cast<std::size_t>(M.cols) * M.cols, 0.0);
    for (int j = 0; j < M.cols; ++j) out.R[static_cast<std::size_t>(j) * M.cols + j] = 1.0;

    Rat sum_sq(0);
    Rat max_sq(0);
    double sum_sq_d = 0.0;
    std::int64_t max_num = 0, max_v1 = 1, max_v2 = 1;
    for (int i = 0; i < M.cols; ++i)
        for (int j = i + 1; j < M.cols; ++j) {
            std::int64_t num = detail::corr_numerator(M, i, j, st);
            if (num != 0) out.identity = false;
            double r = static_cast<double>(num) /
                       std::sqrt(static_cast<double>(st.variance[i]) * static_cast<double>(st.variance[j]));
            sum_sq_d += r * r;
            if (out.exact) {
                try {
                    Rat r_sq = (Rat(num) * Rat(num)) / (Rat(st.variance[i]) * Rat(st.variance[j]));
                    sum_sq = sum_sq + r_sq;
                    if (max_sq < r_sq) {
                        max_sq = r_sq;
                        max_num = num < 0 ? -num : num;
                        max_v1 = st.variance[i];
                        max_v2 = st.variance[j];
                    }
                } catch (const std::overflow_error&) {
                    out.exact = false;  // keep going in doubles; identity stays exact
                }
            }
            out.R[static_cast<std::size_t>(i) * M.cols + j] = r;
            out.R[static_cast<std::size_t>(j) * M.cols + i] = r;
            out.rho_max = std::max(out.rho_max, std::fabs(r));
        }
    const std::int64_t pairs = static_cast<std::int64_t>(M.cols) * (M.cols - 1) / 2;
    if (out.exact) {
        out.rho_ave_sq_exact = sum_sq / Rat(pairs);
        out.rho_ave_sq = out.rho_ave_sq_exact.to_double();
        std::int64_t root = 0;
        if (max_v1 < (std::int64_t{1} << 31) && max_v2 < (std::int64_t{1} << 31) &&
            detail::int64_is_square(max_v1 * max_v2, root) && root > 0) {
            out.rho_max_exact = Rat(max_num, root);
            out.has_exact_rho_max = true;
            out.rho_max = out.rho_max_exact.to_double();
        }
    } else {
        out.rho_ave_sq = sum_sq_d / static_cast<double>(pairs);
    }
    return out;
}

inline CorrelationSummary correlation_matrix(const LevelMatrix& L) { return correlation_matrix(L.doubled); }

inline CorrelationSummary correlation_matrix(const DesignMatrix& D) {
    if (D.cols < 2) fail(errc::invalid_dimension, "correlation_matrix needs k >= 2");
    const int n = D.rows, k = D.cols;
    std::vector<double> mean(k, 0.0), var(k, 0.0);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) mean[j] += D.at(i, j);
        mean[j] /= n;
        for (int i = 0; i < n; ++i) var[j] += (D.at(i, j) - mean[j]) * (D.at(i, j) - mean[j]);
        if (var[j] == 0.0) fail(errc::zero_variance, "correlation_matrix: column " + std::to_string(j) + " is constant");
    }
    CorrelationSummary out;
    out.k = k;
    out.R.assign(static_cast<std::size_t>(k) * k, 0.0);
    for (int j = 0; j < k; ++j) out.R[static_cast<std::size_t>(j) * k + j] = 1.0;
    out.identity = true;
    double sum_sq = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            double cov = 0.0;
            for (int m = 0; m < n; ++m) cov += (D.at(m, i) - mean[i]) * (D.at(m, j) - mean[j]);
            double r = cov / std::sqrt(var[i] * var[j]);
            out.R[static_cast<std::size_t>(i) * k + j] = r;
            out.R[static_cast<std::size_t>(j) * k + i] = r;
            out.rho_max = std::max(out.rho_max, std::fabs(r));
            sum_sq += r * r;
            if (std::fabs(r) > 1e-12) out.identity = false;
        }
    out.rho_ave_sq = sum_sq / (static_cast<double>(k) * (k - 1) / 2);
    return out;
}

struct OrthogonalityReport {
    bool orthogonal = false;
    bool balanced = false;
    bool column_orthogonal = false;
    double max_deviation = 0.0;  // max |r_ij| over i < j
};

/// Orthogonal design: balanced columns plus R = I (exact for integer
/// levels, 1e-12 for real input).
inline OrthogonalityReport is_orthogonal(const LevelMatrix& L) {
    OrthogonalityReport rep;
    rep.balanced = validate_latin_hypercube(L).pass;
    if (L.k < 2) {
        rep.column_orthogonal = true;
        rep.orthogonal = rep.balanced;
        return rep;
    }
    auto c = correlation_matrix(L);
    rep.column_orthogonal = c.identity;
    rep.max_deviation = c.rho_max;
    rep.orthogonal = rep.balanced && rep.column_orthogonal;
    return rep;
}

inline OrthogonalityReport is_orthogonal(const DesignMatrix& D) {
    OrthogonalityReport rep;
    try {
        rep.balanced = validate_latin_hypercube(recover_levels(D)).pass;
    } catch (const error&) {
        rep.balanced = false;  // entries outside [0,1) cannot be an LH sample
    }
    if (D.cols < 2) {
        rep.column_orthogonal = true;
        rep.orthogonal = rep.balanced;
        return rep;
    }
    auto c = correlation_matrix(D);
    rep.column_orthogonal = c.identity;
    rep.max_deviation = c.rho_max;
    rep.orthogonal = rep.balanced && rep.column_orthogonal;
    return rep;
}

/// All k(k+1)/2 element-wise products d_i (.) d_j, i <= j, columns in
/// lexicographic (i,j) order. Computed on doubled levels; correlation is
/// scale-invariant per column so the factor 4 is harmless downstream.
inline IntMatrix interaction_columns(const LevelMatrix& L) {
    const int k = L.k;
    IntMatrix M(L.n, k * (k + 1) / 2);
    int c = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j, ++c)
            for (int r = 0; r < L.n; ++r) M.at(r, c) = L.doubled.at(r, i) * L.doubled.at(r, j);
    return M;
}

struct SecondOrderReport {
    bool first_order = false;
    bool second_order = false;
    double max_abs_corr = 0.0;
};

/// Second-order orthogonality: R(D) = I and every column of D uncorrelated
/// with every element-wise product column. Zero-variance product columns
/// count as uncorrelated rather than erroring.
inline SecondOrderReport second_order_check(const LevelMatrix& L) {
    if (L.k < 2) fail(errc::invalid_dimension, "second_order_check needs k >= 2");
    SecondOrderReport rep;
    auto c = correlation_matrix(L);
    rep.first_order = c.identity;
    rep.max_abs_corr = c.rho_max;

    IntMatrix prod = interaction_columns(L);
    auto stats_d = detail::int_column_stats(L.doubled);
    auto stats_p = detail::int_column_stats(prod);
    bool second = true;
    for (int j = 0; j < L.k; ++j)
        for (int q = 0; q < prod.cols; ++q) {
            if (stats_p.variance[q] == 0) continue;
            std::int64_t xy = 0;
            for (int i = 0; i < L.n; ++i) xy += L.doubled.at(i, j) * prod.at(i, q);
            std::int64_t num = static_cast<std::int64_t>(L.n) * xy - stats_d.sum[j] * stats_p.sum[q];
            if (num != 0) {
                second = false;
                double r = static_cast<double>(num) /
                           std::sqrt(static_cast<double>(stats_d.variance[j]) *
                                     static_cast<double>(stats_p.variance[q]));
                rep.max_abs_corr = std::max(rep.max_abs_corr, std::fabs(r));
            }
        }
    rep.second_order = rep.first_order && second;
    return rep;
}

}  // namespace sfdesign
