#include "ngon/moduli_classifier.hpp"

namespace ngon {

std::string to_string(ModuliBranch b) {
    switch (b) {
    case ModuliBranch::Generic: return "generic";
    case ModuliBranch::Torsion: return "torsion";
    case ModuliBranch::SingleClass: return "single-class";
    }
    return "?";
}

CuspReduction phase_representative(int n, const PhasePoint& a) {
    return cusp_canonicalize(n, slope_phase_convert(a));
}

std::vector<Int> rigid_multidegree(Int r, Int s) {
    if (s < 1) throw DomainError("rigid chain length must be positive");
    if (gcd(r, s) != 1) throw DomainError("r and s must be coprime");
    std::vector<Int> d(static_cast<std::size_t>(s));
    for (Int v = 1; v < s; ++v)
        d[static_cast<std::size_t>(v - 1)] = narrow(floor_div(narrow(static_cast<Wide>(v) * r), s) - floor_div(narrow(static_cast<Wide>(v - 1) * r), s));
    d[static_cast<std::size_t>(s - 1)] = r - 1 - floor_div(narrow(static_cast<Wide>(s - 1) * r), s);
    return d;
}

std::vector<Chain> enumerate_rigid(int n, Int r, Int s) {
    if (s < 1 || n % s != 0) throw DomainError("enumerate_rigid: s must divide n");
    auto d = rigid_multidegree(r, s);
    Chain base(n, s, 0, d);
    if (is_semistable(base) != Stability::Stable) throw std::logic_error("no stable balanced chain found");
    std::vector<Chain> out;
    for (Int j = 0; j < n; ++j) out.emplace_back(n, s, j, d);
    return out;
}

Band stable_vb_construct(int n, Int r, Int s, const std::vector<Int>& line_data, const Label& label) {
    if (s < 1 || n % s != 0) throw DomainError("stable_vb_construct: s must divide n");
    if (static_cast<Int>(line_data.size()) != s) throw DomainError("stable_vb_construct: line data must have length s");
    Int sum = 0;
    for (Int d : line_data) sum = checked_add(sum, d);
    if (sum != r) throw DomainError("stable_vb_construct: multidegree sums to " + std::to_string(sum) + ", expected " + std::to_string(r));
    SheafObject line(Band(static_cast<int>(s), 1, line_data, label, 1));
    SheafObject up = pullback(line, n);
    return std::get<Band>(up.summands.at(0));
}

std::string sym_power_note(Int s, Int r) {
    if (r < 0) throw DomainError("symmetric power must be nonnegative");
    std::string e = "E_" + std::to_string(s);
    if (r == 0) return "point";
    if (r == 1) return e;
    return "Sym^" + std::to_string(r) + "(" + e + ")";
}

ModuliDescription classify(int n, const PhasePoint& a) {
    if (n < 1) throw DomainError("classify: n must be positive");
    ModuliDescription out;
    out.n = n;
    out.phase = a;
    out.slope = slope_phase_convert(a);
    auto red = cusp_canonicalize(n, out.slope);
    out.representative = red.cusp;
    out.witness = red.witness;
    out.r = red.cusp.a;
    out.s = red.cusp.c;

    // Charges at the representative, carried back to the input slope.
    SL2Mat back = red.witness.inverse();
    auto [rc, rr] = back.mat().apply(out.r, out.s);
    out.rigid_charge = {checked_sub(0, rc), rr};
    out.vb_charge = (n / out.s) * out.rigid_charge;

    if (n == 1) {
        out.branch = ModuliBranch::SingleClass;
        out.positive_component = "E_1";
        out.galois_note = "single phase class; the stable moduli space is the nodal cubic E_1 itself";
        return out;
    }
    out.positive_component = "E_" + std::to_string(out.s);
    out.rigid_count = n;
    if (out.slope.is_infinite()) {
        out.branch = ModuliBranch::Torsion;
        for (Int i = 0; i < n; ++i) out.rigid_points.emplace_back(Torsion(n, NodePoint{i}, 1));
        out.galois_note = "Z/nZ acts transitively on the node skyscrapers; smooth points form the components of E_n";
    } else {
        for (auto& c : enumerate_rigid(n, out.r, out.s)) out.rigid_points.emplace_back(std::move(c));
        out.galois_note = "Z/nZ acts transitively on rigid points; factors through Gal(E_s -> E_1) on E_s";
    }
    return out;
}

} // namespace ngon
