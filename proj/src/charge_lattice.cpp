#include "ngon/charge_lattice.hpp"

#include <charconv>
#include <cstdlib>

namespace ngon {

KClass::KClass(int n_, Int chi_, std::vector<Int> ranks_) : n(n_), chi(chi_), ranks(std::move(ranks_)) {
    if (n < 1) throw DomainError("KClass: n must be positive");
    if (ranks.size() != static_cast<std::size_t>(n))
        throw DomainError("KClass: ranks must have length n");
}

KClass KClass::zero(int n) { return KClass(n, 0, std::vector<Int>(static_cast<std::size_t>(n), 0)); }

KClass KClass::basis(int n, int i) {
    KClass k = zero(n);
    if (i < 0 || i > n) throw DomainError("KClass::basis: index out of range");
    if (i == 0)
        k.chi = 1;
    else
        k.ranks[static_cast<std::size_t>(i - 1)] = 1;
    return k;
}

Int KClass::rk_tot() const {
    Int s = 0;
    for (Int r : ranks) s = checked_add(s, r);
    return s;
}

KClass& KClass::operator+=(const KClass& other) {
    if (other.n != n) throw DomainError("KClass: mismatched n");
    chi = checked_add(chi, other.chi);
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = checked_add(ranks[i], other.ranks[i]);
    return *this;
}

KClass operator-(const KClass& a, const KClass& b) {
    if (a.n != b.n) throw DomainError("KClass: mismatched n");
    KClass r = a;
    r.chi = checked_sub(a.chi, b.chi);
    for (std::size_t i = 0; i < r.ranks.size(); ++i) r.ranks[i] = checked_sub(a.ranks[i], b.ranks[i]);
    return r;
}

ChargeVec ChargeVec::primitive() const {
    Int g = gcd(re, im);
    if (g == 0) return *this;
    return {re / g, im / g};
}

ChargeVec charge(const KClass& k) { return {checked_sub(0, k.chi), k.rk_tot()}; }

bool in_kernel(const KClass& k) { return k.chi == 0 && k.rk_tot() == 0; }

PhasePoint::PhasePoint(Int two_shift, ChargeVec dir) : two_shift_(two_shift), dir_(dir.primitive()) {
    if (dir.is_zero()) throw DomainError("charge in kernel");
}

int PhasePoint::quadrant() const {
    if (dir_.im > 0) return 0;
    if (dir_.im == 0 && dir_.re < 0) return 1;
    if (dir_.im < 0) return 2;
    return 3;
}

PhasePoint PhasePoint::shifted_by_one() const {
    // phi0 in (0,1] moves to (1,2] in the same period; (1,2] wraps to (2,3].
    if (dir_.in_upper()) return PhasePoint(two_shift_, -dir_);
    return PhasePoint(two_shift_ + 1, -dir_);
}

std::string PhasePoint::str() const {
    std::string s = "dir(" + std::to_string(dir_.re) + "," + std::to_string(dir_.im) + ")";
    if (two_shift_ != 0) s += (two_shift_ > 0 ? "+" : "") + std::to_string(2 * two_shift_);
    return s;
}

std::strong_ordering operator<=>(const PhasePoint& a, const PhasePoint& b) {
    if (auto c = a.two_shift_ <=> b.two_shift_; c != 0) return c;
    if (auto c = a.quadrant() <=> b.quadrant(); c != 0) return c;
    // Same open half-plane (or same ray): counter-clockwise means larger phase.
    Wide x = cross(a.dir_, b.dir_);
    if (x > 0) return std::strong_ordering::less;
    if (x < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

PhasePoint phase_of_charge(ChargeVec c) {
    if (c.is_zero()) throw DomainError("charge in kernel");
    return PhasePoint(0, c);
}

Slope::Slope(Int num_, Int den_) {
    if (num_ == 0 && den_ == 0) throw DomainError("slope 0/0 is undefined");
    if (den_ == 0) {
        num = 1;
        den = 0;
        return;
    }
    Int g = gcd(num_, den_);
    num = num_ / g;
    den = den_ / g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
}

namespace {

Int parse_int(const std::string& s) {
    Int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw ParseError("malformed integer '" + s + "'");
    return v;
}

} // namespace

Slope Slope::parse(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity") return infinity();
    auto slash = text.find('/');
    if (slash == std::string::npos) return Slope(parse_int(text), 1);
    Int p = parse_int(text.substr(0, slash));
    Int q = parse_int(text.substr(slash + 1));
    if (p == 0 && q == 0) throw ParseError("slope 0/0 is undefined");
    return Slope(p, q);
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    return std::to_string(num) + "/" + std::to_string(den);
}

Slope slope_phase_convert(const PhasePoint& p) {
    ChargeVec d = p.upper_dir();
    if (d.im == 0) return Slope::infinity();
    return Slope(-d.re, d.im);
}

PhasePoint slope_to_phase(const Slope& s) {
    if (s.is_infinite()) return PhasePoint(0, {-1, 0});
    return PhasePoint(0, {checked_sub(0, s.num), s.den});
}

RationalMat2 RationalMat2::inverse() const {
    Rational det_ = det();
    if (det_ == 0) throw DomainError("singular relabelling matrix");
    return {d / det_, -b / det_, -c / det_, a / det_};
}

RationalMat2 operator*(const RationalMat2& l, const RationalMat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

StabilityDatum::StabilityDatum(int n_, RationalMat2 relabel_) : n(n_), relabel(std::move(relabel_)) {
    if (n < 1) throw DomainError("StabilityDatum: n must be positive");
    if (relabel.det() <= 0) throw DomainError("relabelling matrix must have positive determinant");
}

StabilityDatum StabilityDatum::acted(const RationalMat2& t) const {
    if (t.det() <= 0) throw DomainError("relabelling matrix must have positive determinant");
    return StabilityDatum(n, relabel * t);
}

RationalVec2 StabilityDatum::charge_of(ChargeVec c) const {
    return relabel.inverse().apply({Rational(c.re), Rational(c.im)});
}

RationalVec2 act_relabel(const StabilityDatum& d, const RationalMat2& t, ChargeVec c) {
    return d.acted(t).charge_of(c);
}

} // namespace ngon
