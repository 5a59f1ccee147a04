#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sfdesign/csv.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/galois.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/rng.hpp"

namespace sfdesign {

/// Orthogonal array: n runs, k factors with symbols 1..s_j per factor and a
/// declared strength r. The symmetric case has all s_j equal.
struct OrthogonalArray {
    int n = 0;
    int k = 0;
    std::vector<int> levels;  // s_j per column
    int strength = 0;
    IntMatrix symbols;  // 1-based

    bool symmetric() const {
        for (int s : levels)
            if (s != levels[0]) return false;
        return true;
    }
    int level_count() const { return levels.empty() ? 0 : levels[0]; }
};

struct StrengthWitness {
    bool ok = true;
    std::vector<int> columns;     // offending column subset (0-based)
    std::vector<int> tuple;       // offending level combination (1-based)
    std::int64_t count = 0;       // observed occurrences
    std::int64_t expected = 0;    // lambda

    std::string describe() const {
        if (ok) return "strength verified";
        std::ostringstream os;
        os << "columns {";
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i] + 1;
        os << "} tuple (";
        for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
        os << ") appears " << count << " times, expected " << expected;
        return os.str();
    }
};

/// Exhaustive strength check: every r-column subarray must contain each
/// level combination exactly lambda = n / prod(s_j) times.
inline StrengthWitness verify_strength(const OrthogonalArray& A, int r) {
    StrengthWitness w;
    if (r < 1 || r > A.k) fail(errc::invalid_dimension, "verify_strength: need 1 <= r <= k");
    std::vector<int> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
        std::int64_t combos = 1;
        for (int c : cols) combos *= A.levels[c];
        if (A.n % combos != 0) {
            w.ok = false;
            w.columns = cols;
            w.tuple.assign(r, 1);
            w.count = 0;
            w.expected = 0;
            return w;
        }
        const std::int64_t lambda = A.n / combos;
        std::map<std::vector<int>, std::int64_t> counts;
        for (int i = 0; i < A.n; ++i) {
            std::vector<int> t(r);
            for (int j = 0; j < r; ++j) t[j] = static_cast<int>(A.symbols.at(i, cols[j]));
            ++counts[t];
        }
        // Every tuple must appear; enumerate the full grid.
        std::vector<int> tuple(r, 1);
        for (;;) {
            auto it = counts.find(tuple);
            std::int64_t c = it == counts.end() ? 0 : it->second;
            if (c != lambda) {
                w.ok = false;
                w.columns = cols;
                w.tuple = tuple;
                w.count = c;
                w.expected = lambda;
                return w;
            }
            int j = 0;
            while (j < r && ++tuple[j] > A.levels[cols[j]]) tuple[j++] = 1;
            if (j == r) break;
        }
        // next column subset (lexicographic)
        int j = r - 1;
        while (j >= 0 && cols[j] == A.k - r + j) --j;
        if (j < 0) break;
        ++cols[j];
        for (int m = j + 1; m < r; ++m) cols[m] = cols[m - 1] + 1;
    }
    return w;
}

/// Parse a whitespace-separated OA file. Optional first line `n k s r` or
/// `n k s1..sk r`; without it, levels are inferred and strength defaults
/// to 2. The declared strength is verified before the array is accepted.
inline OrthogonalArray load_oa_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::vector<std::vector<int>> rows;
    std::string line;
    std::vector<int> header;
    bool first_data = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> vals;
        int v;
        while (ls >> v) vals.push_back(v);
        std::string rest;
        ls.clear();
        if (ls >> rest && !rest.empty()) fail(errc::parse_error, origin + ": non-integer token");
        if (vals.empty()) continue;
        if (first_data) {
            first_data = false;
            // A header is recognizable: first value equals the row count to come,
            // which data rows (symbols >= 1, small) can't know; we defer the
            // decision by keeping the candidate separately.
            header = vals;
            continue;
        }
        rows.push_back(vals);
    }
    if (header.empty()) fail(errc::parse_error, origin + ": empty file");

    OrthogonalArray A;
    auto looks_like_header = [&]() {
        if (rows.empty()) return false;
        const int k = static_cast<int>(rows.front().size());
        if (static_cast<int>(header.size()) == k) return false;  // same width: part of data
        // `n k s r` or `n k s1..sk r`
        if (static_cast<int>(header.size()) == 4 || static_cast<int>(header.size()) == 3 + k)
            return header[0] == static_cast<int>(rows.size()) && header[1] == k;
        return false;
    };

    if (looks_like_header()) {
        A.n = header[0];
        A.k = header[1];
        if (static_cast<int>(header.size()) == 4)
            A.levels.assign(A.k, header[2]);
        else
            A.levels.assign(header.begin() + 2, header.end() - 1);
        A.strength = header.back();
    } else {
        rows.insert(rows.begin(), header);
        A.n = static_cast<int>(rows.size());
        A.k = static_cast<int>(rows.front().size());
        A.strength = 2;
    }
    if (A.n < 1 || A.k < 1) fail(errc::parse_error, origin + ": bad dimensions");
    A.symbols = IntMatrix(A.n, A.k);
    for (int i = 0; i < A.n; ++i) {
        if (static_cast<int>(rows[i].size()) != A.k) fail(errc::parse_error, origin + ": ragged row");
        for (int j = 0; j < A.k; ++j) {
            if (rows[i][j] < 1) fail(errc::parse_error, origin + ": symbols are 1-based");
            A.symbols.at(i, j) = rows[i][j];
        }
    }
    if (A.levels.empty()) {
        A.levels.assign(A.k, 0);
        for (int j = 0; j < A.k; ++j)
            for (int i = 0; i < A.n; ++i)
                A.levels[j] = std::max(A.levels[j], static_cast<int>(A.symbols.at(i, j)));
    }
    for (int j = 0; j < A.k; ++j)
        for (int i = 0; i < A.n; ++i)
            if (A.symbols.at(i, j) > A.levels[j])
                fail(errc::parse_error, origin + ": symbol exceeds declared level count");
    auto w = verify_strength(A, A.strength);
    if (!w.ok) fail(errc::strength_violation, origin + ": " + w.describe());
    return A;
}

inline OrthogonalArray load_oa(const std::string& path) { return load_oa_text(read_file(path), path); }

inline std::string to_oa_text(const OrthogonalArray& A, bool with_header = true) {
    std::ostringstream os;
    if (with_header) {
        os << A.n << ' ' << A.k << ' ';
        if (A.symmetric())
            os << A.level_count() << ' ';
        else
            for (int s : A.levels) os << s << ' ';
        os << A.strength << '\n';
    }
    for (int i = 0; i < A.n; ++i) {
        for (int j = 0; j < A.k; ++j) os << (j ? " " : "") << A.symbols.at(i, j);
        os << '\n';
    }
    return os.str();
}

namespace detail {

inline void expand_column(const OrthogonalArray& A, int j, Rng& rng, LevelMatrix& L) {
    const int s = A.levels[j];
    if (A.n % s != 0) fail(errc::divisibility, "oa_based_lh: n not divisible by level count");
    const int reps = A.n / s;
    std::vector<std::vector<int>> positions(s);
    for (int i = 0; i < A.n; ++i) positions[static_cast<std::size_t>(A.symbols.at(i, j)) - 1].push_back(i);
    for (int m = 0; m < s; ++m) {
        if (static_cast<int>(positions[m].size()) != reps)
            fail(errc::divisibility, "oa_based_lh: column " + std::to_string(j) + " is not balanced");
        std::vector<std::int64_t> ranks(reps);
        for (int t = 0; t < reps; ++t) ranks[t] = static_cast<std::int64_t>(m) * reps + t + 1;
        rng.shuffle(ranks);
        for (int t = 0; t < reps; ++t) {
            // L = A' - (n+1)/2 on true levels; doubled: 2*rank - (n+1)
            L.doubled.at(positions[m][t], j) = 2 * ranks[t] - (A.n + 1);
        }
    }
}

}  // namespace detail

/// OA-based Latin hypercube: per column, the n/s slots holding symbol m
/// become a random permutation of ranks (m-1)n/s+1 .. mn/s, then the whole
/// matrix is centered. Works column-by-column, so asymmetric arrays are
/// covered by the same rule with their own s_j.
inline LevelMatrix oa_based_lh(const OrthogonalArray& A, std::uint64_t seed) {
    LevelMatrix L(A.n, A.k, A.n);
    Rng rng(seed);
    for (int j = 0; j < A.k; ++j) detail::expand_column(A, j, rng, L);
    return L;
}

/// r-dimensional projection property of an OA-based Latin hypercube: with
/// midpoint scaling, every r-subset of columns puts exactly lambda = n/s^r
/// points in each cell of the s^r grid. Cell indices are computed in
/// integer arithmetic: cell = floor((2*rank+1)*s / (2n)).
inline bool verify_projection_property(const LevelMatrix& L, int s, int r) {
    if (r < 1 || r > L.k) fail(errc::invalid_dimension, "verify_projection_property: need 1 <= r <= k");
    std::int64_t cells = 1;
    for (int i = 0; i < r; ++i) cells *= s;
    if (L.n % cells != 0) fail(errc::divisibility, "verify_projection_property: lambda = n/s^r is not integral");
    const std::int64_t lambda = L.n / cells;

    IntMatrix cell_idx(L.n, L.k);
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.k; ++j) {
            std::int64_t rank = (L.doubled.at(i, j) + (L.n - 1)) / 2;
            cell_idx.at(i, j) = (2 * rank + 1) * s / (2 * L.n);
        }

    std::vector<int> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
        std::map<std::vector<std::int64_t>, std::int64_t> counts;
        for (int i = 0; i < L.n; ++i) {
            std::vector<std::int64_t> key(r);
            for (int j = 0; j < r; ++j) key[j] = cell_idx.at(i, cols[j]);
            ++counts[key];
        }
        if (static_cast<std::int64_t>(counts.size()) != cells) return false;
        for (auto& [key, c] : counts)
            if (c != lambda) return false;
        int j = r - 1;
        while (j >= 0 && cols[j] == L.k - r + j) --j;
        if (j < 0) break;
        ++cols[j];
        for (int m = j + 1; m < r; ++m) cols[m] = cols[m - 1] + 1;
    }
    return true;
}

/// OA(q^2, q^{q+1}, 2) of index unity from the affine plane over GF(q):
/// rows are pairs (a,b), columns are a itself and a*c + b for each c.
inline OrthogonalArray galois_plane_oa(int q) {
    if (!GaloisField::is_prime_power(q))
        fail(errc::unsupported_order, "galois_plane_oa: " + std::to_string(q) + " is not a prime power");
    GaloisField F(q);
    OrthogonalArray A;
    A.n = q * q;
    A.k = q + 1;
    A.levels.assign(A.k, q);
    A.strength = 2;
    A.symbols = IntMatrix(A.n, A.k);
    int row = 0;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b, ++row) {
            A.symbols.at(row, 0) = a + 1;
            for (int c = 0; c < q; ++c) A.symbols.at(row, 1 + c) = F.add(F.mul(a, c), b) + 1;
        }
    return A;
}

/// Full factorial s^k as an orthogonal array of strength k.
inline OrthogonalArray full_factorial_oa(int s, int k) {
    if (s < 2 || k < 1) fail(errc::invalid_dimension, "full_factorial_oa: need s >= 2, k >= 1");
    std::int64_t n = 1;
    for (int i = 0; i < k; ++i) n *= s;
    OrthogonalArray A;
    A.n = static_cast<int>(n);
    A.k = k;
    A.levels.assign(k, s);
    A.strength = k;
    A.symbols = IntMatrix(A.n, A.k);
    for (int i = 0; i < A.n; ++i) {
        int v = i;
        for (int j = k - 1; j >= 0; --j) {
            A.symbols.at(i, j) = v % s + 1;
            v /= s;
        }
    }
    return A;
}

}  // namespace sfdesign
