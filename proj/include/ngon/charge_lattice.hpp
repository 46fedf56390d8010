#pragma once

// K-group of the n-gon, the classical central charge, and exact phase/slope
// arithmetic.
//
// K(E_n) is modelled as Z^{n+1} in the basis e_0 = [k(p)], e_i = [O_{P^1_i}(-1)]
// pushed forward from the i-th component. The classical charge is
// Z(F) = -chi(F) + i * rk_tot(F). Phases live in the window (0, 2] with the
// log-branch cut on the positive real axis; they are never stored as floats.

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ngon/int_math.hpp"

namespace ngon {

struct KClass {
    int n = 1;
    Int chi = 0;
    std::vector<Int> ranks; // indexed by Z/nZ

    KClass() : ranks(1, 0) {}
    KClass(int n_, Int chi_, std::vector<Int> ranks_);

    static KClass zero(int n);
    /// Basis vector e_i, i in [0, n].
    static KClass basis(int n, int i);

    Int rk_tot() const;

    KClass& operator+=(const KClass& other);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(const KClass& a, const KClass& b);
    friend bool operator==(const KClass&, const KClass&) = default;
};

struct ChargeVec {
    Int re = 0;
    Int im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    /// In H' = {im > 0} u {im = 0, re < 0}.
    bool in_upper() const { return im > 0 || (im == 0 && re < 0); }
    ChargeVec primitive() const;

    friend ChargeVec operator+(ChargeVec a, ChargeVec b) {
        return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
    }
    friend ChargeVec operator-(ChargeVec a) { return {checked_sub(0, a.re), checked_sub(0, a.im)}; }
    friend ChargeVec operator*(Int k, ChargeVec a) {
        return {checked_mul(k, a.re), checked_mul(k, a.im)};
    }
    friend bool operator==(const ChargeVec&, const ChargeVec&) = default;
    friend auto operator<=>(const ChargeVec&, const ChargeVec&) = default;
};

/// re1*im2 - re2*im1, computed without overflow.
inline Wide cross(ChargeVec a, ChargeVec b) {
    return static_cast<Wide>(a.re) * b.im - static_cast<Wide>(b.re) * a.im;
}

ChargeVec charge(const KClass& k);
bool in_kernel(const KClass& k);

/// The real number phi0(dir) + 2 * two_shift, with phi0 in (0, 2].
class PhasePoint {
public:
    PhasePoint() = default;
    PhasePoint(Int two_shift, ChargeVec dir);

    /// The phase 0, i.e. the positive real ray one period down.
    static PhasePoint zero() { return PhasePoint(-1, {1, 0}); }

    Int two_shift() const { return two_shift_; }
    ChargeVec dir() const { return dir_; }

    /// 0: im > 0, 1: negative real ray, 2: im < 0, 3: positive real ray.
    int quadrant() const;

    /// phase + 1 (the shift functor [1] negates the charge).
    PhasePoint shifted_by_one() const;
    PhasePoint shifted_by_two(Int times = 1) const { return PhasePoint(two_shift_ + times, dir_); }
    /// Representative of phase mod 1 in (0, 1]: the ray of dir or -dir lying in H'.
    ChargeVec upper_dir() const { return dir_.in_upper() ? dir_ : -dir_; }

    std::string str() const;

    friend std::strong_ordering operator<=>(const PhasePoint& a, const PhasePoint& b);
    friend bool operator==(const PhasePoint& a, const PhasePoint& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    Int two_shift_ = 0;
    ChargeVec dir_{0, 1};
};

/// Throws DomainError("charge in kernel") for c == 0.
PhasePoint phase_of_charge(ChargeVec c);

inline std::strong_ordering compare_phase(const PhasePoint& a, const PhasePoint& b) { return a <=> b; }

/// Reduced slope num/den with den >= 0; (1, 0) is infinity.
struct Slope {
    Int num = 0;
    Int den = 1;

    Slope() = default;
    Slope(Int num_, Int den_);

    static Slope infinity() { return Slope(1, 0); }
    /// "p/q", "p", "inf" or "oo".
    static Slope parse(const std::string& text);

    bool is_infinite() const { return den == 0; }
    std::string str() const;

    friend bool operator==(const Slope&, const Slope&) = default;
};

/// -cot(pi * phi) of the phase reduced mod 1 into (0, 1].
Slope slope_phase_convert(const PhasePoint& p);
/// Phase in (0, 1] of the direction (-num, den).
PhasePoint slope_to_phase(const Slope& s);

using Rational = boost::multiprecision::cpp_rational;

struct RationalVec2 {
    Rational x;
    Rational y;
    friend bool operator==(const RationalVec2&, const RationalVec2&) = default;
};

struct RationalMat2 {
    Rational a{1}, b{0}, c{0}, d{1};

    static RationalMat2 identity() { return {}; }
    Rational det() const { return a * d - b * c; }
    RationalMat2 inverse() const;
    RationalVec2 apply(const RationalVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    friend RationalMat2 operator*(const RationalMat2& l, const RationalMat2& r);
    friend bool operator==(const RationalMat2&, const RationalMat2&) = default;
};

/// sigma_cl(n) together with the linear part T of a GL~+(2,R) relabelling,
/// acting on the right: (Z, P) . T has charge T^{-1} o Z.
struct StabilityDatum {
    int n = 1;
    RationalMat2 relabel;

    StabilityDatum() = default;
    StabilityDatum(int n_, RationalMat2 relabel_ = {});

    StabilityDatum acted(const RationalMat2& t) const;
    RationalVec2 charge_of(ChargeVec c) const;
};

/// Charge of c in the relabelled condition d . T, i.e. (relabel * T)^{-1} c.
RationalVec2 act_relabel(const StabilityDatum& d, const RationalMat2& t, ChargeVec c);

} // namespace ngon
