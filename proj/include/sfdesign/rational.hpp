#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sfdesign {

/// Exact rational on 64-bit numerator/denominator. Intermediate products go
/// through 128-bit and overflow past that throws; the matrices in this
/// library (n <= 256, levels |2l| <= 511) stay far inside the range.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t v) : num_(v), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const { return num_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rat from128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: 64-bit overflow after reduction");
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace sfdesign
