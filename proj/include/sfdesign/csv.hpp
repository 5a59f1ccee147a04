#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"

namespace sfdesign {

// CSV layout shared by both matrix kinds: header row "col1,...,colk", one
// data row per run. Level matrices are written as true levels (integers or
// exact halves), never as the doubled storage.

inline std::string csv_header(int k) {
    std::string h;
    for (int j = 0; j < k; ++j) {
        if (j) h += ',';
        h += "col" + std::to_string(j + 1);
    }
    h += '\n';
    return h;
}

inline std::string format_level(std::int64_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    std::int64_t a = doubled < 0 ? -doubled : doubled;
    return std::string(doubled < 0 ? "-" : "") + std::to_string(a / 2) + ".5";
}

inline std::string to_csv(const LevelMatrix& L) {
    std::string out = csv_header(L.k);
    for (int i = 0; i < L.n; ++i) {
        for (int j = 0; j < L.k; ++j) {
            if (j) out += ',';
            out += format_level(L.doubled.at(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::string to_csv(const DesignMatrix& D) {
    std::string out = csv_header(D.cols);
    char buf[64];
    for (int i = 0; i < D.rows; ++i) {
        for (int j = 0; j < D.cols; ++j) {
            if (j) out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", D.at(i, j));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

/// Raw numeric CSV body (optional "col..." header tolerated and skipped).
inline std::vector<std::vector<double>> parse_csv(const std::string& text, const std::string& origin) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("col", 0) == 0) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
                if (used != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                fail(errc::parse_error, origin + ": bad numeric cell '" + cell + "' at line " +
                                            std::to_string(lineno));
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            fail(errc::parse_error, origin + ": ragged row at line " + std::to_string(lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(errc::parse_error, origin + ": no data rows");
    return rows;
}

inline DesignMatrix design_from_rows(const std::vector<std::vector<double>>& rows, const std::string& origin) {
    DesignMatrix D(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < D.rows; ++i)
        for (int j = 0; j < D.cols; ++j) {
            double v = rows[i][j];
            if (v < 0.0 || v >= 1.0)
                fail(errc::parse_error, origin + ": design entry " + std::to_string(v) + " outside [0,1)");
            D.at(i, j) = v;
        }
    return D;
}

/// Interpret numeric rows as true levels. s is inferred from the level
/// range; every value must sit exactly on the centered ladder.
inline LevelMatrix levels_from_rows(const std::vector<std::vector<double>>& rows, const std::string& origin) {
    const int n = static_cast<int>(rows.size());
    const int k = static_cast<int>(rows.front().size());
    std::int64_t max_doubled = 0;
    IntMatrix M(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            double d2 = rows[i][j] * 2.0;
            std::int64_t v = static_cast<std::int64_t>(std::llround(d2));
            if (std::fabs(d2 - static_cast<double>(v)) > 1e-9)
                fail(errc::parse_error, origin + ": value " + std::to_string(rows[i][j]) +
                                            " is not an integer or half-integer level");
            M.at(i, j) = v;
            max_doubled = std::max(max_doubled, v < 0 ? -v : v);
        }
    const int s = static_cast<int>(max_doubled) + 1;
    if (s < 1 || s > n) fail(errc::parse_error, origin + ": level range implies s outside 1..n");
    LevelMatrix L(n, k, s);
    L.doubled = std::move(M);
    return L;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write " + path);
    out << content;
}

inline DesignMatrix load_design_csv(const std::string& path) {
    return design_from_rows(parse_csv(read_file(path), path), path);
}

inline LevelMatrix load_level_csv(const std::string& path) {
    return levels_from_rows(parse_csv(read_file(path), path), path);
}

}  // namespace sfdesign
