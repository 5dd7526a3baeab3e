#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>

namespace starideal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int rat_num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Remainder in [0, m) for m > 0.
inline Int floor_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Floor of a/m for m > 0.
inline Int floor_div(const Int& a, const Int& m) {
    Int q = a / m;
    if (a % m != 0 && ((a < 0) != (m < 0))) --q;
    return q;
}

/// Floor of the square root of n >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

/// Exact square root, if n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 and (x, y) with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) { x = -1; y = 0; return -a; }
        x = 1; y = 0;
        return a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, Int(a % b), x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline bool is_squarefree(long long n) {
    if (n == 0) return false;
    unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    for (unsigned long long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
        while (m % p == 0) m /= p;
    }
    return true;
}

}  // namespace starideal
