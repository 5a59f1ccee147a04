#pragma once

#include <cstdint>
#include <vector>

#include "sfdesign/error.hpp"

namespace sfdesign {

/// Dense row-major integer matrix, the workhorse behind level matrices,
/// sign matrices and orthogonal arrays.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c, std::int64_t fill = 0) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {
        if (r < 0 || c < 0) fail(errc::invalid_dimension, "negative matrix dimension");
    }

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

/// n x k points in the half-open unit cube [0,1)^k.
struct DesignMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    DesignMatrix() = default;
    DesignMatrix(int r, int c, double fill = 0.0) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {
        if (r < 0 || c < 0) fail(errc::invalid_dimension, "negative matrix dimension");
    }

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

}  // namespace sfdesign
