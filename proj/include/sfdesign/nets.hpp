#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sfdesign/config.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/matrix.hpp"

namespace sfdesign {

/// One elementary interval in base b: prod_i [a_i/b^{d_i}, (a_i+1)/b^{d_i}).
struct ElementaryIntervalShape {
    int base = 2;
    std::vector<int> exponents;  // d_i >= 0
    std::vector<std::int64_t> anchors;  // 0 <= a_i < b^{d_i}

    std::string describe() const {
        std::ostringstream os;
        os << "base " << base << " exponents (";
        for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
        os << ") anchors (";
        for (std::size_t i = 0; i < anchors.size(); ++i) os << (i ? "," : "") << anchors[i];
        os << ")";
        return os.str();
    }
};

struct NetCheckResult {
    bool ok = true;
    ElementaryIntervalShape violation;
    std::int64_t count = 0;
    std::int64_t expected = 0;

    std::string describe() const {
        if (ok) return "net verified";
        return violation.describe() + " holds " + std::to_string(count) + " points, expected " +
               std::to_string(expected);
    }
};

namespace net_detail {

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace net_detail

/// (t,m,s)-net verification: the b^m points must put exactly b^t points in
/// every elementary interval of volume b^{t-m}. Exponent compositions are
/// scanned in colex order and anchors in row-major order, so the first
/// violation is deterministic.
inline NetCheckResult is_net(const DesignMatrix& P, int b, int t, int m, int s) {
    if (b < 2) fail(errc::invalid_dimension, "is_net: base must be >= 2");
    if (t < 0 || t > m) fail(errc::invalid_dimension, "is_net: need 0 <= t <= m");
    if (P.cols != s) fail(errc::dimension_mismatch, "is_net: point dimension != s");
    if (P.rows != net_detail::ipow(b, m))
        fail(errc::invalid_dimension, "is_net: need exactly b^m points");
    for (double v : P.a)
        if (v < 0.0 || v >= 1.0) fail(errc::invalid_dimension, "is_net: points must lie in [0,1)");

    const std::int64_t expected = net_detail::ipow(b, t);
    const int dsum = m - t;

    // colex enumeration of all compositions of dsum into s parts
    std::vector<int> d(s, 0);
    d[0] = dsum;
    NetCheckResult res;
    for (;;) {
        // bucket points by anchor tuple under this shape
        std::map<std::vector<std::int64_t>, std::int64_t> buckets;
        std::vector<std::int64_t> scale(s);
        for (int i = 0; i < s; ++i) scale[i] = net_detail::ipow(b, d[i]);
        for (int r = 0; r < P.rows; ++r) {
            std::vector<std::int64_t> key(s);
            for (int i = 0; i < s; ++i) {
                auto a = static_cast<std::int64_t>(std::floor(P.at(r, i) * static_cast<double>(scale[i])));
                if (a >= scale[i]) a = scale[i] - 1;
                key[i] = a;
            }
            ++buckets[key];
        }
        // row-major scan over all anchors (absent bucket = 0 points)
        std::vector<std::int64_t> anchor(s, 0);
        for (;;) {
            auto it = buckets.find(anchor);
            const std::int64_t c = it == buckets.end() ? 0 : it->second;
            if (c != expected) {
                res.ok = false;
                res.violation.base = b;
                res.violation.exponents = d;
                res.violation.anchors = anchor;
                res.count = c;
                res.expected = expected;
                return res;
            }
            int i = s - 1;
            while (i >= 0 && ++anchor[i] == scale[i]) anchor[i--] = 0;
            if (i < 0) break;
        }
        // next composition in colex order
        int i = 0;
        while (i < s && d[i] == 0) ++i;
        if (i >= s - 1) break;
        const int v = d[i];
        d[i] = 0;
        ++d[i + 1];
        d[0] = v - 1;
    }
    return res;
}

struct SequenceSliceVerdict {
    int m = 0;
    std::int64_t k = 0;
    bool ok = false;
};

struct SequencePrefixReport {
    bool all_ok = true;
    std::vector<SequenceSliceVerdict> slices;
};

/// (t,s)-sequence prefix check: for every m in (t, m_max] and every k with
/// (k+1) b^m <= N, the slice x_{k b^m + 1 .. (k+1) b^m} must be a
/// (t,m,s)-net in base b.
inline SequencePrefixReport is_sequence_prefix(const DesignMatrix& points, int b, int t, int s, int m_max) {
    if (points.rows < net_detail::ipow(b, t + 1))
        fail(errc::invalid_dimension, "is_sequence_prefix: need at least b^{t+1} points");
    SequencePrefixReport rep;
    for (int m = t + 1; m <= m_max; ++m) {
        const std::int64_t block = net_detail::ipow(b, m);
        for (std::int64_t k = 0; (k + 1) * block <= points.rows; ++k) {
            DesignMatrix slice(static_cast<int>(block), s);
            for (std::int64_t i = 0; i < block; ++i)
                for (int j = 0; j < s; ++j) slice.at(static_cast<int>(i), j) = points.at(static_cast<int>(k * block + i), j);
            SequenceSliceVerdict v{m, k, is_net(slice, b, t, m, s).ok};
            if (!v.ok) rep.all_ok = false;
            rep.slices.push_back(v);
        }
    }
    return rep;
}

/// Radical inverse of an index: digits of i in the base, mirrored around
/// the radix point.
inline double radical_inverse(std::uint64_t index, int base) {
    double inv = 1.0 / base, scale = inv, x = 0.0;
    while (index > 0) {
        x += static_cast<double>(index % base) * scale;
        index /= base;
        scale *= inv;
    }
    return x;
}

/// Halton-style point set: column j holds the radical inverse of the row
/// index in bases[j]. Bases should be pairwise coprime for the joint set
/// to be sensible; single columns are plain van der Corput.
inline DesignMatrix radical_inverse_points(int n, const std::vector<int>& bases) {
    if (n < 1 || bases.empty()) fail(errc::invalid_dimension, "radical_inverse_points: need n >= 1 and bases");
    DesignMatrix D(n, static_cast<int>(bases.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < bases.size(); ++j)
            D.at(i, static_cast<int>(j)) = radical_inverse(static_cast<std::uint64_t>(i), bases[j]);
    return D;
}

/// Hammersley set: first coordinate i/n, remaining columns radical
/// inverses.
inline DesignMatrix hammersley_points(int n, const std::vector<int>& bases) {
    DesignMatrix R = radical_inverse_points(n, bases);
    DesignMatrix D(n, R.cols + 1);
    for (int i = 0; i < n; ++i) {
        D.at(i, 0) = static_cast<double>(i) / n;
        for (int j = 0; j < R.cols; ++j) D.at(i, j + 1) = R.at(i, j);
    }
    return D;
}

/// Two-dimensional digital (0,2)-sequence in a prime base: first
/// coordinate is the radical inverse, second applies the Pascal-matrix
/// digit transform y_r = sum_j C(j,r) a_j mod b before mirroring. Feeds
/// the sequence-prefix checker and the demos.
inline DesignMatrix pascal_sequence_points(int n, int base = 2) {
    if (base < 2) fail(errc::invalid_dimension, "pascal_sequence_points: base >= 2");
    if (n < 1) fail(errc::invalid_dimension, "pascal_sequence_points: n >= 1");
    int maxdigits = 1;
    {
        std::int64_t p = base;
        while (p < n) { p *= base; ++maxdigits; }
    }
    // binomials mod base
    std::vector<std::vector<int>> C(maxdigits, std::vector<int>(maxdigits, 0));
    for (int i = 0; i < maxdigits; ++i) {
        C[i][0] = 1;
        for (int j = 1; j <= i; ++j) C[i][j] = (C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0)) % base;
    }
    DesignMatrix D(n, 2);
    for (int i = 0; i < n; ++i) {
        std::vector<int> digits(maxdigits, 0);
        {
            int v = i;
            for (int r = 0; r < maxdigits && v > 0; ++r) { digits[r] = v % base; v /= base; }
        }
        D.at(i, 0) = radical_inverse(static_cast<std::uint64_t>(i), base);
        double x = 0.0, scale = 1.0 / base;
        for (int r = 0; r < maxdigits; ++r) {
            int y = 0;
            for (int j = r; j < maxdigits; ++j) y = (y + C[j][r] * digits[j]) % base;
            x += y * scale;
            scale /= base;
        }
        D.at(i, 1) = x;
    }
    return D;
}

}  // namespace sfdesign
