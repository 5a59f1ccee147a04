#pragma once

#include <cstdint>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/matrix.hpp"

namespace sfdesign {

/// Sign matrix: entries restricted to {-1, +1}.
struct SignMatrix {
    IntMatrix m;

    SignMatrix() = default;
    explicit SignMatrix(IntMatrix mat) : m(std::move(mat)) {
        for (auto v : m.a)
            if (v != 1 && v != -1) fail(errc::invalid_dimension, "SignMatrix entries must be +-1");
    }
    SignMatrix(int rows, int cols) : m(rows, cols, 1) {}

    int rows() const { return m.rows; }
    int cols() const { return m.cols; }
    std::int64_t at(int i, int j) const { return m.at(i, j); }
    std::int64_t& at(int i, int j) { return m.at(i, j); }

    /// X'X == rows * I, the inner-product sense used for +-1 matrices.
    bool column_orthogonal() const {
        for (int a = 0; a < cols(); ++a)
            for (int b = a; b < cols(); ++b) {
                std::int64_t d = 0;
                for (int i = 0; i < rows(); ++i) d += at(i, a) * at(i, b);
                if (a == b ? d != rows() : d != 0) return false;
            }
        return true;
    }
};

namespace detail {

inline bool hadamard_achievable(int order) {
    if (order == 1 || order == 2) return true;
    if (order % 4 != 0) return false;
    if (order % 2 == 0 && hadamard_achievable(order / 2)) return true;
    // Paley-I: order = q + 1 with q prime, q % 4 == 3
    const int q = order - 1;
    if (q < 3 || q % 4 != 3) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline SignMatrix paley_type1(int q) {
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>(x) * x % q] = 1;
    const int n = q + 1;
    SignMatrix H(n, n);
    for (int j = 0; j < n; ++j) H.at(0, j) = 1;
    for (int i = 1; i < n; ++i) H.at(i, 0) = -1;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (i == j)
                H.at(i, j) = 1;  // S + I on the diagonal
            else
                H.at(i, j) = chi[((i - j) % q + q) % q];
        }
    return H;
}

}  // namespace detail

/// Hadamard matrix H with H H' = order * I, built from Sylvester doubling
/// over a Paley type-I base (q prime, q = order-1 = 3 mod 4). Orders not
/// reachable this way (6, 28, ...) raise unsupported-order.
inline SignMatrix hadamard(int order) {
    if (order < 1) fail(errc::invalid_dimension, "hadamard: order must be positive");
    if (order == 1) {
        SignMatrix H(1, 1);
        return H;
    }
    if (order == 2) {
        SignMatrix H(2, 2);
        H.at(1, 1) = -1;
        return H;
    }
    if (!detail::hadamard_achievable(order))
        fail(errc::unsupported_order, "hadamard: order " + std::to_string(order) +
                                          " not reachable by Sylvester doubling + Paley-I");
    if (order % 2 == 0 && detail::hadamard_achievable(order / 2)) {
        SignMatrix h = hadamard(order / 2);
        SignMatrix H(order, order);
        const int m = order / 2;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                H.at(i, j) = h.at(i, j);
                H.at(i, j + m) = h.at(i, j);
                H.at(i + m, j) = h.at(i, j);
                H.at(i + m, j + m) = -h.at(i, j);
            }
        return H;
    }
    return detail::paley_type1(order - 1);
}

/// First k columns of a Hadamard matrix of the given order.
inline SignMatrix hadamard_columns(int order, int k) {
    if (k < 1 || k > order) fail(errc::invalid_dimension, "hadamard_columns: need 1 <= k <= order");
    SignMatrix H = hadamard(order);
    SignMatrix F(order, k);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < k; ++j) F.at(i, j) = H.at(i, j);
    return F;
}

}  // namespace sfdesign
