#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ngon/error.hpp"

namespace ngon {

using Int = std::int64_t;
using Wide = __int128;

inline Int narrow(Wide v) {
    if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
        throw OverflowError("integer overflow");
    return static_cast<Int>(v);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow");
    return r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// Mathematical modulus, result in [0, m) for m > 0.
inline Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct ExtGcd {
    Int g;
    Int x;
    Int y;
};

/// x*a + y*b == g == gcd(a, b) >= 0.
ExtGcd ext_gcd(Int a, Int b);

/// Inverse of a modulo m (m >= 1); throws DomainError when gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

Int euler_phi(Int n);

/// Positive divisors in increasing order.
std::vector<Int> divisors(Int n);

} // namespace ngon
