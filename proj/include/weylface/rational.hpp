#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylface {

/// Thrown when an exact computation would exceed the 128-bit capacity of
/// the rational kernel. Results are never rounded or wrapped.
class rational_overflow : public std::overflow_error {
public:
    rational_overflow() : std::overflow_error("exact rational arithmetic exceeded 128-bit capacity") {}
};

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw rational_overflow();
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw rational_overflow();
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw rational_overflow();
    return r;
}

inline uint128 uabs(int128 a) {
    return a < 0 ? uint128(0) - uint128(a) : uint128(a);
}

inline uint128 gcd_u128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string int128_to_string(int128 v);
int128 int128_from_string(std::string_view s);

} // namespace detail

/// Exact rational number with 128-bit numerator and denominator.
///
/// Always stored fully reduced with a positive denominator, so equality is
/// plain member comparison. Every operation is overflow-checked and throws
/// rational_overflow rather than producing an inexact or wrapped value.
class Rat {
public:
    using int128 = detail::int128;

    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}          // NOLINT: implicit by design
    Rat(long n) : num_(n), den_(1) {}               // NOLINT
    Rat(int n) : num_(n), den_(1) {}                // NOLINT
    Rat(int128 n, int128 d) { assign(n, d); }

    static Rat of(long long n, long long d) { return Rat(int128(n), int128(d)); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonneg_integer() const { return den_ == 1 && num_ >= 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const {
        Rat r;
        r.num_ = detail::checked_sub(0, num_);
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        using namespace detail;
        int128 n = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
        return Rat(n, checked_mul(a.den_, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        using namespace detail;
        int128 n = checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
        return Rat(n, checked_mul(a.den_, b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(detail::checked_mul(a.num_, b.num_), detail::checked_mul(a.den_, b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rat(detail::checked_mul(a.num_, b.den_), detail::checked_mul(a.den_, b.num_));
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        using namespace detail;
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical "p/q" text (just "p" when the value is an integer).
    std::string str() const;

    /// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
    /// on anything else; only rational input is representable by construction.
    static Rat parse(std::string_view s);

private:
    void assign(int128 n, int128 d) {
        using namespace detail;
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = checked_sub(0, n);
            d = checked_sub(0, d);
        }
        uint128 g = gcd_u128(uabs(n), uint128(d));
        if (g > 1) {
            n = (n < 0) ? -int128(uabs(n) / g) : int128(uint128(n) / g);
            d = int128(uint128(d) / g);
        }
        num_ = n;
        den_ = d;
    }

    int128 num_;
    int128 den_;
};

} // namespace weylface
