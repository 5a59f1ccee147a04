#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sfdesign/error.hpp"

namespace sfdesign {

/// Finite field GF(p^e) for small prime powers, elements encoded 0..p^e-1
/// as base-p digit strings of polynomial coefficients. Add/mul tables are
/// built once from a fixed irreducible polynomial per (p, e).
class GaloisField {
public:
    explicit GaloisField(int order) : q_(order) {
        int p = smallest_prime_factor(order);
        int e = 0;
        int v = order;
        while (v > 1) {
            if (v % p != 0) fail(errc::invalid_dimension, "GaloisField: order must be a prime power");
            v /= p;
            ++e;
        }
        p_ = p;
        e_ = e;
        build_tables();
    }

    int order() const { return q_; }
    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }

    static bool is_prime_power(int v) {
        if (v < 2) return false;
        int p = smallest_prime_factor(v);
        while (v % p == 0) v /= p;
        return v == 1;
    }

private:
    static int smallest_prime_factor(int v) {
        for (int d = 2; d * d <= v; ++d)
            if (v % d == 0) return d;
        return v;
    }

    // Monic irreducible polynomials (coefficients of x^0..x^{e-1}) for the
    // orders this library builds orthogonal arrays for.
    std::vector<int> irreducible() const {
        if (e_ == 1) return {};
        struct Entry { int p, e; std::array<int, 4> c; };
        static const Entry table[] = {
            {2, 2, {1, 1, 0, 0}},   // x^2 + x + 1
            {2, 3, {1, 1, 0, 0}},   // x^3 + x + 1
            {2, 4, {1, 1, 0, 0}},   // x^4 + x + 1
            {3, 2, {1, 0, 0, 0}},   // x^2 + 1
            {3, 3, {1, 2, 0, 0}},   // x^3 + 2x + 1
            {5, 2, {2, 0, 0, 0}},   // x^2 + 2
            {7, 2, {1, 0, 0, 0}},   // x^2 + 1
        };
        for (const auto& ent : table)
            if (ent.p == p_ && ent.e == e_) return std::vector<int>(ent.c.begin(), ent.c.begin() + e_);
        fail(errc::unsupported_order, "GaloisField: no irreducible polynomial stored for GF(" +
                                          std::to_string(q_) + ")");
    }

    std::vector<int> digits(int v) const {
        std::vector<int> d(e_);
        for (int i = 0; i < e_; ++i) { d[i] = v % p_; v /= p_; }
        return d;
    }

    int undigits(const std::vector<int>& d) const {
        int v = 0;
        for (int i = e_ - 1; i >= 0; --i) v = v * p_ + d[i];
        return v;
    }

    void build_tables() {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        mul_.resize(static_cast<std::size_t>(q_) * q_);
        const std::vector<int> red = irreducible();
        for (int a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (int b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<int> s(e_);
                for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[static_cast<std::size_t>(a) * q_ + b] = undigits(s);

                std::vector<int> prod(2 * e_ - 1, 0);
                for (int i = 0; i < e_; ++i)
                    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int d = 2 * e_ - 2; d >= e_; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    // x^e == -red(x): subtract c * red shifted by d-e
                    for (int i = 0; i < e_; ++i)
                        prod[d - e_ + i] = ((prod[d - e_ + i] - c * red[i]) % p_ + p_) % p_;
                }
                prod.resize(e_);
                mul_[static_cast<std::size_t>(a) * q_ + b] = undigits(prod);
            }
        }
    }

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    std::vector<int> add_;
    std::vector<int> mul_;
};

}  // namespace sfdesign
