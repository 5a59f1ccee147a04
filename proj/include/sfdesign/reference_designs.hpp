#pragma once

#include <string>
#include <vector>

#include "sfdesign/csv.hpp"
#include "sfdesign/error.hpp"
#include "sfdesign/hadamard.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/oa.hpp"

namespace sfdesign {

// Published reference designs used as construction inputs and regression
// fixtures. Level matrices are stored as doubled levels (2*l), so the
// half-integer designs are exact.

namespace detail {

inline LevelMatrix make_lh(int n, int k, int s, std::initializer_list<int> doubled) {
    LevelMatrix L(n, k, s);
    auto it = doubled.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) L.doubled.at(i, j) = *it++;
    return L;
}

inline LevelMatrix scale2(int n, int k, std::initializer_list<int> levels) {
    LevelMatrix L(n, k, n);
    auto it = levels.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) L.doubled.at(i, j) = 2 * *it++;
    return L;
}

}  // namespace detail

/// 5x3 Latin hypercube used as the running example for scaling and
/// correlation checks.
inline LevelMatrix reference_lh_5_3() {
    return detail::scale2(5, 3,
                          {2, 0, -2,   //
                           1, -2, -1,  //
                           -2, 2, 0,   //
                           0, -1, 2,   //
                           -1, 1, 1});
}

/// The published unit-cube design generated from reference_lh_5_3 with one
/// particular random jitter draw.
inline DesignMatrix reference_lhd_5_3() {
    DesignMatrix D(5, 3);
    const double v[5][3] = {{0.9253, 0.5117, 0.1610},
                            {0.7621, 0.1117, 0.3081},
                            {0.1241, 0.9878, 0.4473},
                            {0.5744, 0.3719, 0.8270},
                            {0.3181, 0.7514, 0.6916}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j) D.at(i, j) = v[i][j];
    return D;
}

/// OA(9, 3^4, 2) of index unity.
inline OrthogonalArray reference_oa_9_3_4() {
    OrthogonalArray A;
    A.n = 9;
    A.k = 4;
    A.levels.assign(4, 3);
    A.strength = 2;
    A.symbols = IntMatrix(9, 4);
    const int v[9][4] = {{1, 1, 1, 1}, {1, 2, 2, 3}, {1, 3, 3, 2}, {2, 1, 2, 2}, {2, 2, 3, 1},
                         {2, 3, 1, 3}, {3, 1, 3, 3}, {3, 2, 1, 2}, {3, 3, 2, 1}};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 4; ++j) A.symbols.at(i, j) = v[i][j];
    return A;
}

/// The published OA-based Latin hypercube expanded from reference_oa_9_3_4
/// (one particular draw of the block permutations).
inline LevelMatrix reference_oalh_9_4() {
    return detail::scale2(9, 4,
                          {-2, -2, -4, -2,  //
                           -4, 0, 1, 2,     //
                           -3, 4, 2, 1,     //
                           -1, -4, -1, -1,  //
                           1, -1, 4, -3,    //
                           0, 2, -3, 4,     //
                           3, -3, 3, 3,     //
                           2, 1, -2, 0,     //
                           4, 3, 0, -4});
}

inline LevelMatrix reference_olh_5_2() {
    return detail::scale2(5, 2, {1, -2, 2, 1, 0, 0, -1, 2, -2, -1});
}

inline LevelMatrix reference_olh_7_3() {
    return detail::scale2(7, 3,
                          {-3, 3, 2,   //
                           -2, 0, -3,  //
                           -1, -2, -1, //
                           0, -3, 1,   //
                           1, -1, 3,   //
                           2, 1, -2,   //
                           3, 2, 0});
}

/// OLH(8,4) on half-integer levels; doubled entries are the odd integers.
inline LevelMatrix reference_olh_8_4() {
    return detail::make_lh(8, 4, 8,
                           {1, -3, 7, 5,    //
                            3, 1, 5, -7,    //
                            5, -7, -3, -1,  //
                            7, 5, -1, 3,    //
                            -7, -5, 1, -3,  //
                            -5, 7, 3, 1,    //
                            -3, -1, -5, 7,  //
                            -1, 3, -7, -5});
}

inline LevelMatrix reference_olh_9_5() {
    return detail::scale2(9, 5,
                          {-4, -2, 0, -3, 3,   //
                           -3, 4, 2, 1, -2,    //
                           -2, -3, -4, -1, -3, //
                           -1, 3, -2, 3, 4,    //
                           0, -4, 4, 4, 0,     //
                           1, 2, -1, 0, -4,    //
                           2, 0, 3, -2, -1,    //
                           3, 1, 1, -4, 2,     //
                           4, -1, -3, 2, 1});
}

inline LevelMatrix reference_olh_11_7() {
    return detail::scale2(11, 7,
                          {-5, -4, -5, -5, -3, 0, 0,  //
                           -4, 2, -1, 3, 4, 5, 4,     //
                           -3, -2, 4, 5, -4, -2, -1,  //
                           -2, 3, -3, 4, 1, -4, -2,   //
                           -1, 4, 2, -4, 3, 2, -4,    //
                           0, -5, 5, -2, 5, -3, 2,    //
                           1, 5, 3, -3, -5, -1, 5,    //
                           2, -1, 1, 1, -2, 3, -5,    //
                           3, 0, 0, -1, 0, 1, -3,     //
                           4, 1, -4, 0, 2, -5, 1,     //
                           5, -3, -2, 2, -1, 4, 3});
}

/// Second-order orthogonal Latin hypercube of 17 runs for 8 factors.
inline LevelMatrix reference_solh_17_8() {
    return detail::scale2(17, 8,
                          {1, 2, 3, 4, 5, 6, 7, 8,          //
                           2, -1, -4, 3, 6, -5, -8, 7,      //
                           3, 4, -1, -2, -7, -8, 5, 6,      //
                           4, -3, 2, -1, -8, 7, -6, 5,      //
                           5, 6, 7, 8, -1, -2, -3, -4,      //
                           6, -5, -8, 7, -2, 1, 4, -3,      //
                           7, 8, -5, -6, 3, 4, -1, -2,      //
                           8, -7, 6, -5, 4, -3, 2, -1,      //
                           0, 0, 0, 0, 0, 0, 0, 0,          //
                           -1, -2, -3, -4, -5, -6, -7, -8,  //
                           -2, 1, 4, -3, -6, 5, 8, -7,      //
                           -3, -4, 1, 2, 7, 8, -5, -6,      //
                           -4, 3, -2, 1, 8, -7, 6, -5,      //
                           -5, -6, -7, -8, 1, 2, 3, 4,      //
                           -6, 5, 8, -7, 2, -1, -4, 3,      //
                           -7, -8, 5, 6, -3, -4, 1, 2,      //
                           -8, 7, -6, 5, -4, 3, -2, 1});
}

/// Nearly orthogonal 13x12 Latin hypercube (rho_M = 9/182, found by
/// computer search in the source literature).
inline LevelMatrix reference_nolh_13_12() {
    return detail::scale2(13, 12,
                          {-6, -6, -5, -4, -5, -2, 2, 1, -3, -2, -1, -2,  //
                           -5, 5, 3, -5, 3, 4, -6, 0, -4, 1, -3, -1,     //
                           -4, 2, -4, 1, 2, 6, 5, -5, 6, 0, 1, 1,        //
                           -3, 1, 2, 4, -6, 1, -2, 6, 2, 3, 2, 6,        //
                           -2, -2, 6, -3, 6, -5, 3, 4, 4, -3, 3, 0,      //
                           -1, -5, 4, 6, 1, -1, 0, -4, 0, 6, -5, -3,     //
                           0, 6, 0, 3, -4, -6, -3, -3, 3, -5, 0, -4,     //
                           1, 0, -3, 5, 5, 0, 1, 2, -5, -6, -4, 5,       //
                           2, -1, -6, 0, 4, -4, -5, -2, -1, 5, 6, 2,     //
                           3, 4, 1, 2, -1, 2, 6, 3, -6, 2, 5, -6,        //
                           4, -4, 5, -2, -3, 3, -1, -6, -2, -4, 4, 3,    //
                           5, 3, -1, -6, -2, -3, 4, -1, 1, 4, -6, 4,     //
                           6, -3, -2, -1, 0, 5, -4, 5, 5, -1, -2, -5});
}

/// 16x12 orthogonal Latin hypercube on half-integer levels (rotation
/// construction); doubled entries are the odd integers below.
inline LevelMatrix reference_olh_16_12() {
    return detail::make_lh(16, 12, 16,
                           {-15, 5, 9, -3, 7, 11, -11, 7, -9, 3, -15, 5,        //
                            -13, 1, 1, 13, -7, -11, 11, -7, -1, -13, -13, 1,    //
                            -11, 7, -7, -11, 13, -1, -1, -13, 9, -3, 15, -5,    //
                            -9, 3, -15, 5, -13, 1, 1, 13, 1, 13, 13, -1,        //
                            -7, -11, 11, -7, 11, -7, 7, 11, 5, 15, -3, -9,      //
                            -5, -15, 3, 9, -11, 7, -7, -11, 13, -1, -1, -13,    //
                            -3, -9, -5, -15, 1, 13, 13, -1, -5, -15, 3, 9,      //
                            -1, -13, -13, 1, -1, -13, -13, 1, -13, 1, 1, 13,    //
                            1, 13, 13, -1, -9, 3, -15, 5, 11, -7, 7, 11,        //
                            3, 9, 5, 15, 9, -3, 15, -5, 3, 9, 5, 15,            //
                            5, 15, -3, -9, -3, -9, -5, -15, -11, 7, -7, -11,    //
                            7, 11, -11, 7, 3, 9, 5, 15, -3, -9, -5, -15,        //
                            9, -3, 15, -5, -5, -15, 3, 9, -7, -11, 11, -7,      //
                            11, -7, 7, 11, 5, 15, -3, -9, -15, 5, 9, -3,        //
                            13, -1, -1, -13, -15, 5, 9, -3, 7, 11, -11, 7,      //
                            15, -5, -9, 3, 15, -5, -9, 3, 15, -5, -9, 3});
}

/// Nearly orthogonal 16x15 Latin hypercube on half-integer levels
/// (rho_M = 13/170); doubled entries are the odd integers below.
inline LevelMatrix reference_nolh_16_15() {
    return detail::make_lh(
        16, 15, 16,
        {-15, 15, -13, 13, -5, -13, 5, 3, -1, 5, -7, 5, -9, -9, 5,          //
         -13, -15, -3, 3, 7, 3, 15, -11, 13, -5, 7, -13, -7, -3, -3,        //
         -11, -9, -5, -11, -15, 13, -5, 11, -9, 9, 9, 3, -5, -1, -11,       //
         -9, -1, 9, -15, -11, 1, -1, -13, 5, -1, -15, 7, 1, 3, 15,          //
         -7, 1, -7, 7, 15, 15, -13, 9, -5, -13, -3, -1, -1, 7, 13,          //
         -5, 13, 11, -5, 9, -7, -3, -9, -13, 11, 13, -9, -3, 13, 1,         //
         -3, -5, 13, 15, -9, -9, -11, 1, 7, -9, 15, 11, 9, 1, -1,           //
         -1, -11, 3, -7, 11, -15, 13, 15, -7, -3, -9, 9, 7, 9, -5,          //
         1, 3, -9, -3, -1, -5, -15, -1, 11, 3, -11, -15, 15, 5, -15,        //
         3, -3, 15, 11, 3, 9, 1, -7, -15, 1, -13, -3, 3, -15, -9,           //
         5, 9, 7, -1, 5, 11, 9, 13, 15, 15, 5, 1, 11, -7, 9,                //
         7, 7, -1, -13, 13, -1, -7, -5, 9, -7, 3, 15, -13, -11, -13,        //
         9, 5, -11, -9, -7, -3, 7, -3, -11, -15, 11, -7, 13, -13, 7,        //
         11, 11, 5, 5, -13, 7, 11, 5, 3, -11, -5, -5, -11, 15, -7,          //
         13, -7, -15, 9, 1, 5, 3, -15, -3, 13, 1, 13, 5, 11, 3,             //
         15, -13, 1, 1, -3, -11, -9, 7, 1, 7, -1, -11, -15, -5, 11});
}

/// The 8x4 +-1 matrix paired with reference_kron_lh_8_4 in the published
/// 64-run augmented construction.
inline SignMatrix reference_kron_sign_8_4() {
    SignMatrix A(8, 4);
    const int v[8][4] = {{1, 1, 1, 1},   {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1},
                         {1, 1, 1, 1},   {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) A.at(i, j) = v[i][j];
    return A;
}

/// The 8x4 half-integer OLH paired with reference_kron_sign_8_4; doubled
/// entries are the odd integers below.
inline LevelMatrix reference_kron_lh_8_4() {
    return detail::make_lh(8, 4, 8,
                           {1, -3, 7, 5,    //
                            3, 1, 5, -7,    //
                            5, -7, -3, -1,  //
                            7, 5, -1, 3,    //
                            -1, 3, -7, -5,  //
                            -3, -1, -5, 7,  //
                            -5, 7, 3, 1,    //
                            -7, -5, 1, -3});
}

/// OLH(12,6) on half-integer levels, found with this library's own
/// column-by-column orthogonalizing search and frozen here because the
/// doubling pipeline needs a 12-run orthogonal seed. Verified exactly
/// orthogonal by the test suite before every use.
inline LevelMatrix reference_olh_12_6() {
    return detail::make_lh(12, 6, 12,
                           {-11, 3, 3, 9, 7, -5,     //
                            -9, -1, 11, -7, -3, -1,  //
                            -7, 9, -11, -1, -7, 3,   //
                            -5, -9, -7, -9, -1, -11, //
                            -3, -5, -9, 11, -5, 7,   //
                            -1, -3, 7, 7, 11, 5,     //
                            1, -7, 1, -11, 3, 11,    //
                            3, 7, -1, -5, 5, 1,      //
                            5, 5, 9, 3, -11, -9,     //
                            7, 1, 5, 1, -9, 9,       //
                            9, 11, -5, -3, 9, -3,    //
                            11, -11, -3, 5, 1, -7});
}

/// Ids accepted by lookup and the CLI dump-table command.
inline std::vector<std::string> reference_design_ids() {
    return {"lh_5_3",     "lhd_5_3",    "oa_9_3_4",   "oalh_9_4",   "olh_5_2",  "olh_7_3",
            "olh_8_4",    "olh_9_5",    "olh_11_7",   "olh_12_6",   "solh_17_8", "nolh_13_12",
            "olh_16_12",  "nolh_16_15", "kron_sign_8_4", "kron_lh_8_4"};
}

inline LevelMatrix reference_lh(const std::string& id) {
    if (id == "lh_5_3") return reference_lh_5_3();
    if (id == "oalh_9_4") return reference_oalh_9_4();
    if (id == "olh_5_2") return reference_olh_5_2();
    if (id == "olh_7_3") return reference_olh_7_3();
    if (id == "olh_8_4") return reference_olh_8_4();
    if (id == "olh_9_5") return reference_olh_9_5();
    if (id == "olh_11_7") return reference_olh_11_7();
    if (id == "olh_12_6") return reference_olh_12_6();
    if (id == "solh_17_8") return reference_solh_17_8();
    if (id == "nolh_13_12") return reference_nolh_13_12();
    if (id == "olh_16_12") return reference_olh_16_12();
    if (id == "nolh_16_15") return reference_nolh_16_15();
    if (id == "kron_lh_8_4") return reference_kron_lh_8_4();
    fail(errc::unknown_metric, "unknown level-matrix table id: " + id);
}

/// CSV rendering of any reference table (level matrices as true levels,
/// the design as reals, the OA and the sign matrix as integer CSV).
inline std::string reference_table_csv(const std::string& id) {
    if (id == "lhd_5_3") return to_csv(reference_lhd_5_3());
    if (id == "oa_9_3_4") return to_oa_text(reference_oa_9_3_4());
    if (id == "kron_sign_8_4") {
        SignMatrix A = reference_kron_sign_8_4();
        std::string out = csv_header(A.cols());
        for (int i = 0; i < A.rows(); ++i) {
            for (int j = 0; j < A.cols(); ++j) {
                if (j) out += ',';
                out += std::to_string(A.at(i, j));
            }
            out += '\n';
        }
        return out;
    }
    return to_csv(reference_lh(id));
}

}  // namespace sfdesign
