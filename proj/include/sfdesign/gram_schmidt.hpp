#pragma once

#include <cmath>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"

namespace sfdesign {

/// Exactly uncorrelated design from a Latin hypercube: center each column,
/// orthogonalize by classical Gram-Schmidt, then rescale each column
/// affinely into [range_low, range_high].
///
/// Linear dependence (residual norm below 1e-12 of the column norm) is a
/// degenerate-input error.
inline DesignMatrix gram_schmidt_design(const LevelMatrix& L, double range_low = 0.0,
                                        double range_high = 1.0) {
    const int n = L.n, k = L.k;
    if (n < 2) fail(errc::invalid_dimension, "gram_schmidt_design needs n >= 2");
    std::vector<std::vector<double>> u(k, std::vector<double>(n));

    // Step 1: center columns to mean zero.
    for (int j = 0; j < k; ++j) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += L.level(i, j);
        mean /= n;
        for (int i = 0; i < n; ++i) u[j][i] = L.level(i, j) - mean;
    }

    auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a[i] * b[i];
        return s;
    };

    // Step 2: orthogonalize.
    for (int j = 0; j < k; ++j) {
        const double input_norm2 = dot(u[j], u[j]);
        for (int p = 0; p < j; ++p) {
            const double c = dot(u[p], u[j]) / dot(u[p], u[p]);
            for (int i = 0; i < n; ++i) u[j][i] -= c * u[p][i];
        }
        const double res_norm2 = dot(u[j], u[j]);
        if (res_norm2 <= 1e-24 * (input_norm2 > 0 ? input_norm2 : 1.0))
            fail(errc::degenerate_input, "gram_schmidt_design: column " + std::to_string(j) +
                                             " is linearly dependent on earlier columns");
    }

    // Step 3: rescale into [range_low, range_high].
    DesignMatrix X(n, k);
    for (int j = 0; j < k; ++j) {
        double lo = u[j][0], hi = u[j][0];
        for (int i = 1; i < n; ++i) {
            lo = std::min(lo, u[j][i]);
            hi = std::max(hi, u[j][i]);
        }
        const double span = hi - lo;
        for (int i = 0; i < n; ++i)
            X.at(i, j) = range_low + (u[j][i] - lo) / span * (range_high - range_low);
    }
    return X;
}

}  // namespace sfdesign
