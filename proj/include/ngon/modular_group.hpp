#pragma once

// Integer 2x2 matrices, Gamma_0(N) and its cusps.
//
// Matrices act on column vectors (chi, rk) and hence on slopes chi/rk by
// Moebius transformations. A cusp p/q (gcd 1, q >= 0) has the Gamma_0(N)
// invariant (c, p*(q/c) mod gcd(c, N/c)) with c = gcd(q, N); the canonical
// representative is a/c with a the least non-negative integer in that residue
// class coprime to c.

#include <compare>
#include <string>
#include <vector>

#include "ngon/charge_lattice.hpp"
#include "ngon/int_math.hpp"

namespace ngon {

struct IntMat2 {
    Int a = 1, b = 0, c = 0, d = 1;

    static IntMat2 identity() { return {}; }
    Int det() const;
    IntMat2 operator-() const { return {-a, -b, -c, -d}; }
    friend IntMat2 operator*(const IntMat2& l, const IntMat2& r);
    /// Column-vector action.
    std::pair<Int, Int> apply(Int x, Int y) const;
    ChargeVec apply(ChargeVec v) const {
        auto [x, y] = apply(v.re, v.im);
        return {x, y};
    }
    friend bool operator==(const IntMat2&, const IntMat2&) = default;
    friend auto operator<=>(const IntMat2&, const IntMat2&) = default;
};

/// Element of SL(2, Z); the determinant is validated on construction.
class SL2Mat {
public:
    SL2Mat() = default;
    SL2Mat(Int a, Int b, Int c, Int d);
    explicit SL2Mat(const IntMat2& m) : SL2Mat(m.a, m.b, m.c, m.d) {}

    static SL2Mat identity() { return {}; }
    static SL2Mat translation(Int k) { return SL2Mat(1, k, 0, 1); }

    Int a() const { return m_.a; }
    Int b() const { return m_.b; }
    Int c() const { return m_.c; }
    Int d() const { return m_.d; }
    const IntMat2& mat() const { return m_; }

    SL2Mat inverse() const { return SL2Mat(m_.d, -m_.b, -m_.c, m_.a); }
    SL2Mat operator-() const { return SL2Mat(-m_); }
    friend SL2Mat operator*(const SL2Mat& l, const SL2Mat& r) { return SL2Mat(l.m_ * r.m_); }

    /// Moebius action on P^1(Q).
    Slope act(const Slope& s) const;

    friend bool operator==(const SL2Mat&, const SL2Mat&) = default;
    friend auto operator<=>(const SL2Mat&, const SL2Mat&) = default;

private:
    IntMat2 m_;
};

bool in_gamma0(const SL2Mat& m, Int level);

/// Sum over positive divisors d of N of phi(gcd(d, N/d)).
Int class_count(Int level);

struct CuspClass {
    Int level = 1;
    Int c = 1; ///< positive divisor of level
    Int a = 0; ///< representative numerator, gcd(a, c) == 1

    /// Gamma_0 invariant: a mod gcd(c, level/c).
    Int residue() const;
    Int width_gcd() const { return gcd(c, level / c); }
    Slope representative() const { return Slope(a, c); }

    friend bool operator==(const CuspClass&, const CuspClass&) = default;
    friend auto operator<=>(const CuspClass&, const CuspClass&) = default;
};

struct CuspReduction {
    CuspClass cusp;
    SL2Mat witness; ///< in Gamma_0(level); maps the input column exactly onto (a, c)
};

/// The canonical class alone, without a witness.
CuspClass cusp_class_of(Int level, const Slope& s);
CuspReduction cusp_canonicalize(Int level, const Slope& s);
bool cusp_equivalent(Int level, const Slope& s1, const Slope& s2);

/// Every cusp class of Gamma_0(level), ordered by (c, a).
std::vector<CuspClass> enumerate_cusps(Int level);

/// [[r, *], [s, *]] with determinant 1, the starred column chosen with the
/// least positive lower-right entry. Requires gcd(r, s) == 1 and s | level.
SL2Mat complete_to_gamma0(Int level, Int r, Int s);

/// Random element of Gamma_0(level) with |lower-left| <= level*spread.
template <class Rng>
SL2Mat random_gamma0(Int level, Int spread, Rng& rng);

} // namespace ngon

#include <random>

namespace ngon {

template <class Rng>
SL2Mat random_gamma0(Int level, Int spread, Rng& rng) {
    std::uniform_int_distribution<Int> kd(-spread, spread);
    for (;;) {
        Int c = level * kd(rng);
        Int d = kd(rng) * 3 + (c == 0 ? 1 : kd(rng));
        if (c == 0) {
            d = (d >= 0) ? 1 : -1;
            return SL2Mat(d, kd(rng), 0, d);
        }
        if (d == 0 || gcd(c, d) != 1) continue;
        // a*d - b*c == 1
        auto e = ext_gcd(d, c); // e.x*d + e.y*c == 1
        Int shift = kd(rng);
        Int a = e.x + shift * c;
        Int b = -(e.y - shift * d);
        return SL2Mat(a, b, c, d);
    }
}

} // namespace ngon
