#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sfdesign/correlation.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/hadamard.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/oa.hpp"
#include "sfdesign/rational.hpp"

namespace sfdesign {

/// Existence of an orthogonal Latin hypercube with more than one factor:
/// impossible exactly for n < 4, n = 3, and n = 4m + 2.
inline bool exists_olh(int n) {
    if (n < 4) return false;
    return n % 4 != 2;
}

// ---------------------------------------------------------------------------
// Coupling construction: large (nearly) orthogonal Latin hypercube from a
// small one and a strength-2 orthogonal array of index unity.
// ---------------------------------------------------------------------------

/// From an n x q Latin hypercube B and an OA(n^2, n^{2f}, 2): substitute
/// column j of B for the symbols of the array, rotate each two-column block
/// by [[1, -n], [n, 1]], and concatenate. Output is always an n^2 x 2qf
/// Latin hypercube whose correlation matrix is R(B) (x) I_{2f}.
inline LevelMatrix lin2009_construct(const LevelMatrix& B, const OrthogonalArray& A) {
    if (!A.symmetric() || A.level_count() != B.n)
        fail(errc::shape_mismatch, "lin2009_construct: array symbols must match the runs of B");
    if (A.k % 2 != 0) fail(errc::shape_mismatch, "lin2009_construct: array needs an even number of columns");
    if (A.n != B.n * B.n) fail(errc::shape_mismatch, "lin2009_construct: array needs n^2 runs");
    const int n = B.n, q = B.k, f = A.k / 2;
    const int N = A.n, K = 2 * q * f;
    LevelMatrix L(N, K, N);
    for (int j = 0; j < q; ++j) {
        for (int blk = 0; blk < f; ++blk) {
            const int ca = 2 * blk, cb = 2 * blk + 1;
            for (int i = 0; i < N; ++i) {
                // doubled levels of B substituted for symbols
                std::int64_t a = B.doubled.at(A.symbols.at(i, ca) - 1, j);
                std::int64_t b = B.doubled.at(A.symbols.at(i, cb) - 1, j);
                L.doubled.at(i, j * 2 * f + ca) = a + n * b;
                L.doubled.at(i, j * 2 * f + cb) = -n * a + b;
            }
        }
    }
    return L;
}

/// Correlation summaries the coupling construction is guaranteed to hit:
/// rho_M carries over, rho^2_ave shrinks by (q-1)/(2qf-1).
inline std::pair<Rat, Rat> lin2009_predicted_correlation(const Rat& rho_max_B, const Rat& rho_ave_sq_B,
                                                         int q, int f) {
    if (q < 1 || f < 1) fail(errc::invalid_dimension, "lin2009_predicted_correlation: q, f >= 1");
    Rat shrink(q - 1, 2 * q * f - 1);
    return {rho_max_B, shrink * rho_ave_sq_B};
}

// ---------------------------------------------------------------------------
// Recursive sign/level doubling family (second-order orthogonal designs).
// ---------------------------------------------------------------------------

namespace detail {

/// Flip the signs of the top half of a matrix with an even row count.
inline IntMatrix flip_top_half(const IntMatrix& X) {
    IntMatrix Y = X;
    for (int i = 0; i < X.rows / 2; ++i)
        for (int j = 0; j < X.cols; ++j) Y.at(i, j) = -X.at(i, j);
    return Y;
}

}  // namespace detail

struct SunPair {
    SignMatrix S;  // 2^c x 2^c signs
    IntMatrix T;   // 2^c x 2^c, column entries are +-1..+-2^c
};

/// The recursive (S_c, T_c) pair: S_1 = [[1,1],[1,-1]], T_1 = [[1,2],[2,-1]],
/// then S_c = [[S, -S*],[S, S*]] and T_c = [[T, -(T* + 2^{c-1} S*)],
/// [T + 2^{c-1} S, T*]], where * flips the top half's signs.
inline SunPair sun_recursive(int c) {
    if (c < 1) fail(errc::invalid_dimension, "sun_recursive: c >= 1");
    IntMatrix S(2, 2, 1);
    S.at(1, 1) = -1;
    IntMatrix T(2, 2);
    T.at(0, 0) = 1;
    T.at(0, 1) = 2;
    T.at(1, 0) = 2;
    T.at(1, 1) = -1;
    for (int level = 2; level <= c; ++level) {
        const int h = S.rows;
        const std::int64_t w = std::int64_t{1} << (level - 1);
        IntMatrix Sst = detail::flip_top_half(S);
        IntMatrix Tst = detail::flip_top_half(T);
        IntMatrix S2(2 * h, 2 * h), T2(2 * h, 2 * h);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) {
                S2.at(i, j) = S.at(i, j);
                S2.at(i, j + h) = -Sst.at(i, j);
                S2.at(i + h, j) = S.at(i, j);
                S2.at(i + h, j + h) = Sst.at(i, j);

                T2.at(i, j) = T.at(i, j);
                T2.at(i, j + h) = -(Tst.at(i, j) + w * Sst.at(i, j));
                T2.at(i + h, j) = T.at(i, j) + w * S.at(i, j);
                T2.at(i + h, j + h) = Tst.at(i, j);
            }
        S = std::move(S2);
        T = std::move(T2);
    }
    return {SignMatrix(std::move(S)), std::move(T)};
}

/// Second-order orthogonal Latin hypercube of 2^{c+1}+1 runs for 2^c
/// factors: stack (T_c; 0; -T_c).
inline LevelMatrix sun_olh_odd(int c) {
    SunPair p = sun_recursive(c);
    const int m = p.T.rows;
    LevelMatrix L(2 * m + 1, m, 2 * m + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            L.doubled.at(i, j) = 2 * p.T.at(i, j);
            L.doubled.at(m + 1 + i, j) = -2 * p.T.at(i, j);
        }
    for (int j = 0; j < m; ++j) L.doubled.at(m, j) = 0;
    return L;
}

/// Second-order orthogonal Latin hypercube of 2^{c+1} runs for 2^c factors:
/// H_c = T_c - S_c/2 (half-integer levels), stack (H_c; -H_c).
inline LevelMatrix sun_olh_even(int c) {
    SunPair p = sun_recursive(c);
    const int m = p.T.rows;
    LevelMatrix L(2 * m, m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::int64_t h2 = 2 * p.T.at(i, j) - p.S.at(i, j);  // doubled H
            L.doubled.at(i, j) = h2;
            L.doubled.at(m + i, j) = -h2;
        }
    return L;
}

// ---------------------------------------------------------------------------
// Kronecker construction L = A (x) B + n2 * E (x) F and friends.
// ---------------------------------------------------------------------------

/// Which of the four sufficient conditions the inputs satisfy. The first
/// three make L orthogonal; the last makes it a Latin hypercube at all.
struct KronConditions {
    bool sign_parts_orthogonal = false;   // (i) A and F column-orthogonal
    bool lh_parts_orthogonal = false;     // (ii) B and E orthogonal LHs
    bool cross_product_zero = false;      // (iii) A'E = 0 or B'F = 0
    bool sign_pairing = false;            // (iv) sign pattern makes L an LH

    bool all() const {
        return sign_parts_orthogonal && lh_parts_orthogonal && cross_product_zero && sign_pairing;
    }
};

namespace detail {

inline bool product_is_zero(const SignMatrix& A, const LevelMatrix& E) {
    for (int a = 0; a < A.cols(); ++a)
        for (int e = 0; e < E.k; ++e) {
            std::int64_t d = 0;
            for (int i = 0; i < A.rows(); ++i) d += A.at(i, a) * E.doubled.at(i, e);
            if (d != 0) return false;
        }
    return true;
}

/// Condition (iv)(a): within every column i, rows carrying opposite E
/// entries must carry equal A entries.
inline bool sign_pairing_holds(const SignMatrix& A, const LevelMatrix& E) {
    if (A.rows() != E.n || A.cols() != E.k) return false;
    for (int j = 0; j < E.k; ++j) {
        std::map<std::int64_t, std::vector<int>> by_value;
        for (int i = 0; i < E.n; ++i) by_value[E.doubled.at(i, j)].push_back(i);
        for (auto& [v, rows] : by_value) {
            auto it = by_value.find(-v);
            if (it == by_value.end()) continue;
            for (int p1 : rows)
                for (int p2 : it->second) {
                    if (v == 0 && p1 == p2) continue;
                    if (A.at(p1, j) != A.at(p2, j)) return false;
                }
        }
    }
    return true;
}

inline bool is_orthogonal_lh(const LevelMatrix& L) {
    if (L.s != L.n) return false;
    return is_orthogonal(L).orthogonal;
}

}  // namespace detail

inline KronConditions kron_check_conditions(const SignMatrix& A, const LevelMatrix& B,
                                            const LevelMatrix& E, const SignMatrix& F) {
    KronConditions c;
    c.sign_parts_orthogonal = A.column_orthogonal() && F.column_orthogonal();
    c.lh_parts_orthogonal = detail::is_orthogonal_lh(B) && detail::is_orthogonal_lh(E);
    c.cross_product_zero = detail::product_is_zero(A, E) || detail::product_is_zero(F, B);
    c.sign_pairing = detail::sign_pairing_holds(A, E) || detail::sign_pairing_holds(F, B);
    return c;
}

struct KronResult {
    LevelMatrix L;
    KronConditions conditions;
};

/// L = A (x) B + n2 * E (x) F in doubled-level arithmetic. Shapes: A and E
/// are n1 x k1, B and F are n2 x k2. The condition report says which
/// guarantees apply; failing ones downgrade the claim, they never throw.
inline KronResult kron_construct(const SignMatrix& A, const LevelMatrix& B, const LevelMatrix& E,
                                 const SignMatrix& F) {
    if (A.rows() != E.n || A.cols() != E.k)
        fail(errc::shape_mismatch, "kron_construct: A and E must have equal shape");
    if (F.rows() != B.n || F.cols() != B.k)
        fail(errc::shape_mismatch, "kron_construct: B and F must have equal shape");
    const int n1 = A.rows(), k1 = A.cols(), n2 = B.n, k2 = B.k;
    KronResult out{LevelMatrix(n1 * n2, k1 * k2, n1 * n2), kron_check_conditions(A, B, E, F)};
    for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < k1; ++j1)
            for (int i2 = 0; i2 < n2; ++i2)
                for (int j2 = 0; j2 < k2; ++j2)
                    out.L.doubled.at(i1 * n2 + i2, j1 * k2 + j2) =
                        A.at(i1, j1) * B.doubled.at(i2, j2) +
                        n2 * E.doubled.at(i1, j1) * F.at(i2, j2);
    return out;
}

/// Augmented companion U = -n1 * A (x) B + E (x) F; with n1 = n2 and the
/// full condition set, (L, U) is an orthogonal Latin hypercube with twice
/// the factors.
inline KronResult kron_augmented(const SignMatrix& A, const LevelMatrix& B, const LevelMatrix& E,
                                 const SignMatrix& F) {
    if (A.rows() != B.n) fail(errc::shape_mismatch, "kron_augmented: needs n1 == n2");
    KronResult base = kron_construct(A, B, E, F);
    const int n1 = A.rows(), k1 = A.cols(), n2 = B.n, k2 = B.k;
    KronResult out{LevelMatrix(n1 * n2, 2 * k1 * k2, n1 * n2), base.conditions};
    for (int i = 0; i < n1 * n2; ++i)
        for (int j = 0; j < k1 * k2; ++j) out.L.doubled.at(i, j) = base.L.doubled.at(i, j);
    for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < k1; ++j1)
            for (int i2 = 0; i2 < n2; ++i2)
                for (int j2 = 0; j2 < k2; ++j2)
                    out.L.doubled.at(i1 * n2 + i2, k1 * k2 + j1 * k2 + j2) =
                        -n1 * A.at(i1, j1) * B.doubled.at(i2, j2) +
                        E.doubled.at(i1, j1) * F.at(i2, j2);
    return out;
}

/// Near-orthogonality carried through the Kronecker construction when
/// conditions (i), (iii), (iv) hold: weighted combination of the input
/// summaries with n = n1*n2.
struct NearOrthPrediction {
    Rat rho_ave_sq;
    Rat rho_max;
};

inline NearOrthPrediction near_orth_prediction(const Rat& rho_ave_sq_B, const Rat& rho_max_B,
                                               const Rat& rho_ave_sq_E, const Rat& rho_max_E,
                                               int n1, int n2, int k1, int k2) {
    const std::int64_t n = static_cast<std::int64_t>(n1) * n2;
    const Rat denom_sq = Rat(n * n - 1) * Rat(n * n - 1);
    const Rat kk = Rat(static_cast<std::int64_t>(k1) * k2 - 1);
    Rat w1 = Rat(k2 - 1) * Rat(std::int64_t{n2} * n2 - 1) * Rat(std::int64_t{n2} * n2 - 1) / (kk * denom_sq);
    Rat w2 = Rat(std::int64_t{n2} * n2) * Rat(std::int64_t{n2} * n2) * Rat(k1 - 1) *
             Rat(std::int64_t{n1} * n1 - 1) * Rat(std::int64_t{n1} * n1 - 1) / (kk * denom_sq);
    Rat w3 = Rat(std::int64_t{n2} * n2 - 1, n * n - 1);
    Rat w4 = Rat(std::int64_t{n2} * n2) * Rat(std::int64_t{n1} * n1 - 1) / Rat(n * n - 1);
    NearOrthPrediction p;
    p.rho_ave_sq = w1 * rho_ave_sq_B + w2 * rho_ave_sq_E;
    Rat mb = w3 * rho_max_B, me = w4 * rho_max_E;
    p.rho_max = mb < me ? me : mb;
    return p;
}

// ---------------------------------------------------------------------------
// Orthogonal design templates of orders 2, 4, 8, 16 and the doubling
// pipeline built on them.
// ---------------------------------------------------------------------------

/// Symbolic +-x_i pattern: entry (i,j) holds sign * x_{var}. Instantiating
/// x_i = 1 gives the sign matrix whose top half S stacks into a
/// column-orthogonal (S', S')'; x_i = (2i-1)/2 gives an orthogonal Latin
/// hypercube.
struct OrthogonalDesignTemplate {
    int order = 0;
    std::vector<int> var;   // order x (order/2), 1-based variable index
    std::vector<int> sign;  // +-1

    int at_var(int i, int j) const { return var[static_cast<std::size_t>(i) * (order / 2) + j]; }
    int at_sign(int i, int j) const { return sign[static_cast<std::size_t>(i) * (order / 2) + j]; }

    SignMatrix instantiate_signs() const {
        SignMatrix S(order, order / 2);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order / 2; ++j) S.at(i, j) = at_sign(i, j);
        return S;
    }

    /// Half-integer instantiation x_i = (2i-1)/2, exact in doubled storage.
    LevelMatrix instantiate_lh() const {
        LevelMatrix E(order, order / 2, order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order / 2; ++j)
                E.doubled.at(i, j) = at_sign(i, j) * (2 * at_var(i, j) - 1);
        return E;
    }
};

inline OrthogonalDesignTemplate orthogonal_design_template(int order) {
    OrthogonalDesignTemplate t;
    t.order = order;
    auto fill = [&t](std::initializer_list<int> entries) {
        for (int e : entries) {
            t.sign.push_back(e < 0 ? -1 : 1);
            t.var.push_back(e < 0 ? -e : e);
        }
    };
    switch (order) {
        case 2:
            fill({1, -1});
            break;
        case 4:
            fill({1, 2,    //
                  2, -1,   //
                  -1, -2,  //
                  -2, 1});
            break;
        case 8:
            fill({1, -2, 4, 3,    //
                  2, 1, 3, -4,    //
                  3, -4, -2, -1,  //
                  4, 3, -1, 2,    //
                  -1, 2, -4, -3,  //
                  -2, -1, -3, 4,  //
                  -3, 4, 2, 1,    //
                  -4, -3, 1, -2});
            break;
        case 16:
            fill({1, -2, -4, -3, -8, 7, 5, 6,      //
                  2, 1, -3, 4, -7, -8, -6, 5,      //
                  3, -4, 2, 1, -6, -5, 7, -8,      //
                  4, 3, 1, -2, -5, 6, -8, -7,      //
                  5, -6, -8, 7, 4, 3, -1, -2,      //
                  6, 5, -7, -8, 3, -4, 2, -1,      //
                  7, -8, 6, -5, 2, -1, -3, 4,      //
                  8, 7, 5, 6, 1, 2, 4, 3,          //
                  -1, 2, 4, 3, 8, -7, -5, -6,      //
                  -2, -1, 3, -4, 7, 8, 6, -5,      //
                  -3, 4, -2, -1, 6, 5, -7, 8,      //
                  -4, -3, -1, 2, 5, -6, 8, 7,      //
                  -5, 6, 8, -7, -4, -3, 1, 2,      //
                  -6, -5, 7, 8, -3, 4, -2, 1,      //
                  -7, 8, -6, 5, -2, 1, 3, -4,      //
                  -8, -7, -5, -6, -1, -2, -4, -3});
            break;
        default:
            fail(errc::unsupported_order, "orthogonal_design_template: order must be 2, 4, 8 or 16");
    }
    return t;
}

struct DoublingResult {
    std::vector<LevelMatrix> designs;  // 2n x k, 4n x 2k, 8n x 4k, 16n x 8k
    std::vector<KronConditions> conditions;
};

/// Scale an OLH(n, k) up through the template orders: for each order w in
/// {2,4,8,16}, A = (S',S')' from the x=1 instantiation, E = the
/// half-integer instantiation, F = k columns of a Hadamard matrix of order
/// n, then L = A (x) B + n * E (x) F gives an OLH(wn, wk/2).
inline DoublingResult doubling_pipeline(const LevelMatrix& B) {
    if (B.n % 4 != 0) fail(errc::invalid_dimension, "doubling_pipeline: runs must be a multiple of 4");
    SignMatrix F = hadamard_columns(B.n, B.k);  // throws unsupported-order if no Hadamard
    DoublingResult out;
    for (int order : {2, 4, 8, 16}) {
        auto tpl = orthogonal_design_template(order);
        SignMatrix full = tpl.instantiate_signs();
        SignMatrix A(order, order / 2);
        for (int i = 0; i < order / 2; ++i)
            for (int j = 0; j < order / 2; ++j) {
                A.at(i, j) = full.at(i, j);          // S
                A.at(order / 2 + i, j) = full.at(i, j);  // stacked again
            }
        LevelMatrix E = tpl.instantiate_lh();
        KronResult r = kron_construct(A, B, E, F);
        out.designs.push_back(std::move(r.L));
        out.conditions.push_back(r.conditions);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Block-diagonal many-level construction D = A (x) D0 and its general form.
// ---------------------------------------------------------------------------

/// D = A (x) D0 for a +-1 matrix A and an s-level design D0; orthogonal iff
/// D0 is orthogonal when A is column-orthogonal.
inline LevelMatrix bingham_kronecker(const SignMatrix& A, const LevelMatrix& D0) {
    LevelMatrix D(A.rows() * D0.n, A.cols() * D0.k, D0.s);
    for (int i1 = 0; i1 < A.rows(); ++i1)
        for (int j1 = 0; j1 < A.cols(); ++j1)
            for (int i2 = 0; i2 < D0.n; ++i2)
                for (int j2 = 0; j2 < D0.k; ++j2)
                    D.doubled.at(i1 * D0.n + i2, j1 * D0.k + j2) = A.at(i1, j1) * D0.doubled.at(i2, j2);
    return D;
}

/// Generalization with one design per block column: entry block (i,j) is
/// a_ij * D_j. All designs must share the same shape and level count.
inline LevelMatrix bingham_general(const SignMatrix& A, const std::vector<LevelMatrix>& designs) {
    if (static_cast<int>(designs.size()) != A.cols())
        fail(errc::shape_mismatch, "bingham_general: need one design per column of A");
    const LevelMatrix& d0 = designs.front();
    for (const auto& d : designs)
        if (d.n != d0.n || d.k != d0.k || d.s != d0.s)
            fail(errc::shape_mismatch, "bingham_general: designs must share shape and level count");
    LevelMatrix D(A.rows() * d0.n, A.cols() * d0.k, d0.s);
    for (int i1 = 0; i1 < A.rows(); ++i1)
        for (int j1 = 0; j1 < A.cols(); ++j1)
            for (int i2 = 0; i2 < d0.n; ++i2)
                for (int j2 = 0; j2 < d0.k; ++j2)
                    D.doubled.at(i1 * d0.n + i2, j1 * d0.k + j2) =
                        A.at(i1, j1) * designs[j1].doubled.at(i2, j2);
    return D;
}

/// Identities the block construction satisfies when A is column-orthogonal:
/// rho_M(D) = max_j rho_M(D_j) and rho^2_ave(D) = w * sum_j rho^2_ave(D_j)
/// / k1 with w = (k2-1)/(k1k2-1).
inline std::pair<Rat, Rat> bingham_predicted_correlation(const std::vector<Rat>& rho_max_j,
                                                         const std::vector<Rat>& rho_ave_sq_j, int k2) {
    const int k1 = static_cast<int>(rho_max_j.size());
    Rat mx(0), sum(0);
    for (const Rat& r : rho_max_j) mx = mx < r ? r : mx;
    for (const Rat& r : rho_ave_sq_j) sum = sum + r;
    Rat w(k2 - 1, static_cast<std::int64_t>(k1) * k2 - 1);
    return {mx, w * sum / Rat(k1)};
}

}  // namespace sfdesign
