#pragma once

#include <numeric>
#include <stdexcept>

namespace sturan {

// Reduced fraction on 64-bit integers with overflow-checked arithmetic.
// Clique-order sums keep denominators tiny, so this never gets stressed.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Fraction checked(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr __int128 lo = -__int128(0x7fffffffffffffffll) - 1;
        constexpr __int128 hi = __int128(0x7fffffffffffffffll);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("fraction overflow");
        return Fraction(static_cast<long long>(n), static_cast<long long>(d));
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return checked(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return checked(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return checked(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return a < b || a == b; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace sturan
