#include "ngon/modular_group.hpp"

#include <stdexcept>

namespace ngon {

Int IntMat2::det() const { return narrow(static_cast<Wide>(a) * d - static_cast<Wide>(b) * c); }

IntMat2 operator*(const IntMat2& l, const IntMat2& r) {
    return {narrow(static_cast<Wide>(l.a) * r.a + static_cast<Wide>(l.b) * r.c),
            narrow(static_cast<Wide>(l.a) * r.b + static_cast<Wide>(l.b) * r.d),
            narrow(static_cast<Wide>(l.c) * r.a + static_cast<Wide>(l.d) * r.c),
            narrow(static_cast<Wide>(l.c) * r.b + static_cast<Wide>(l.d) * r.d)};
}

std::pair<Int, Int> IntMat2::apply(Int x, Int y) const {
    return {narrow(static_cast<Wide>(a) * x + static_cast<Wide>(b) * y),
            narrow(static_cast<Wide>(c) * x + static_cast<Wide>(d) * y)};
}

SL2Mat::SL2Mat(Int a, Int b, Int c, Int d) : m_{a, b, c, d} {
    if (m_.det() != 1) throw DomainError("matrix does not have determinant 1");
}

Slope SL2Mat::act(const Slope& s) const {
    auto [x, y] = m_.apply(s.num, s.den);
    return Slope(x, y);
}

bool in_gamma0(const SL2Mat& m, Int level) { return level > 0 && m.c() % level == 0; }

Int class_count(Int level) {
    if (level < 1) throw DomainError("level must be positive");
    Int total = 0;
    for (Int d : divisors(level)) total += euler_phi(gcd(d, level / d));
    return total;
}

Int CuspClass::residue() const { return mod(a, width_gcd()); }

namespace {

Int least_coprime_in_class(Int residue, Int modulus, Int c) {
    for (Int a = residue;; a += modulus)
        if (gcd(a, c) == 1) return a;
}

// [[p, x], [q, y]] with p*y - q*x == 1, i.e. a matrix sending infinity to p/q.
SL2Mat column_completion(Int p, Int q) {
    auto e = ext_gcd(p, q); // e.x*p + e.y*q == 1
    return SL2Mat(p, -e.y, q, e.x);
}

} // namespace

CuspClass cusp_class_of(Int level, const Slope& s) {
    if (level < 1) throw DomainError("level must be positive");
    const Int c = gcd(s.den, level);
    const Int g = gcd(c, level / c);
    const Int residue = mod(narrow(static_cast<Wide>(mod(s.num, g)) * mod(s.den / c, g)), g);
    return {level, c, least_coprime_in_class(residue, g, c)};
}

CuspReduction cusp_canonicalize(Int level, const Slope& s) {
    const CuspClass cusp = cusp_class_of(level, s);
    const Int p = s.num;
    const Int q = s.den;
    const Int c = cusp.c;

    if (p == cusp.a && q == cusp.c) return {cusp, SL2Mat::identity()};

    // Every gamma sending the column (p, q) to (a, c) has the form
    // g2 * T^k * g1^{-1}; membership in Gamma_0(N) is a linear congruence in k.
    SL2Mat g1 = column_completion(p, q);
    SL2Mat g2 = column_completion(cusp.a, c);
    const Int y = g1.d();
    const Int y2 = g2.d();
    Wide lhs = static_cast<Wide>(q) * c;
    Wide rhs = static_cast<Wide>(c) * y - static_cast<Wide>(q) * y2;
    Int lhs_m = narrow(lhs % level);
    Int rhs_m = narrow(rhs % level);
    if (lhs_m < 0) lhs_m += level;
    if (rhs_m < 0) rhs_m += level;
    Int gg = gcd(lhs_m, level);
    if (rhs_m % gg != 0) throw std::logic_error("cusp_canonicalize: invariant mismatch");
    Int reduced = level / gg;
    Int k = reduced == 1 ? 0 : mod(narrow(static_cast<Wide>(rhs_m / gg) * mod_inverse(lhs_m / gg, reduced)), reduced);

    SL2Mat gamma = g2 * SL2Mat::translation(k) * g1.inverse();
    auto [x_out, y_out] = gamma.mat().apply(p, q);
    if (!in_gamma0(gamma, level) || x_out != cusp.a || y_out != c)
        throw std::logic_error("cusp_canonicalize: witness failed verification");
    return {cusp, gamma};
}

bool cusp_equivalent(Int level, const Slope& s1, const Slope& s2) {
    return cusp_class_of(level, s1) == cusp_class_of(level, s2);
}

std::vector<CuspClass> enumerate_cusps(Int level) {
    std::vector<CuspClass> out;
    for (Int c : divisors(level)) {
        Int g = gcd(c, level / c);
        for (Int r = 0; r < g; ++r) {
            if (gcd(r, g) != 1) continue;
            out.push_back({level, c, least_coprime_in_class(r, g, c)});
        }
    }
    return out;
}

SL2Mat complete_to_gamma0(Int level, Int r, Int s) {
    if (s <= 0) throw DomainError("complete_to_gamma0: s must be positive");
    if (level % s != 0) throw DomainError("complete_to_gamma0: s must divide the level");
    if (gcd(r, s) != 1) throw DomainError("complete_to_gamma0: r and s must be coprime");
    // r*d - b*s == 1 with d the least positive solution of r*d == 1 (mod s).
    Int d = s == 1 ? 1 : mod_inverse(r, s);
    if (d == 0) d = s;
    Int b = narrow((static_cast<Wide>(r) * d - 1) / s);
    return SL2Mat(r, b, s, d);
}

} // namespace ngon
