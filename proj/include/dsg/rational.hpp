// rational.hpp — exact rational arithmetic for utilities and diversity measures
#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dsg {

// Small exact rational on int64. All quantities in this project are counts or
// ratios of counts; arithmetic goes through __int128 and reduces, throwing
// std::overflow_error if a reduced value no longer fits.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // fixed six decimal places, the project-wide CSV convention
    std::string str6() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", to_double());
        return buf;
    }
};

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Rat reduce128(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 g = gcd128(num, den);
    if (g > 1) { num /= g; den /= g; }
    constexpr __int128 lo = -static_cast<__int128>(INT64_MAX);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational out of int64 range");
    Rat r;
    r.num = static_cast<long long>(num);
    r.den = static_cast<long long>(den);
    if (r.num == 0) r.den = 1;
    return r;
}

} // namespace detail

inline Rat operator+(const Rat& a, const Rat& b) {
    return detail::reduce128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                             static_cast<__int128>(a.den) * b.den);
}
inline Rat operator-(const Rat& a, const Rat& b) {
    return detail::reduce128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                             static_cast<__int128>(a.den) * b.den);
}
inline Rat operator*(const Rat& a, const Rat& b) {
    return detail::reduce128(static_cast<__int128>(a.num) * b.num,
                             static_cast<__int128>(a.den) * b.den);
}
inline Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return detail::reduce128(static_cast<__int128>(a.num) * b.den,
                             static_cast<__int128>(a.den) * b.num);
}

inline int rat_cmp(const Rat& a, const Rat& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

inline bool operator==(const Rat& a, const Rat& b) { return rat_cmp(a, b) == 0; }
inline bool operator!=(const Rat& a, const Rat& b) { return rat_cmp(a, b) != 0; }
inline bool operator<(const Rat& a, const Rat& b) { return rat_cmp(a, b) < 0; }
inline bool operator<=(const Rat& a, const Rat& b) { return rat_cmp(a, b) <= 0; }
inline bool operator>(const Rat& a, const Rat& b) { return rat_cmp(a, b) > 0; }
inline bool operator>=(const Rat& a, const Rat& b) { return rat_cmp(a, b) >= 0; }

} // namespace dsg
