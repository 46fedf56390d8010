#pragma once

// Classification of stable objects of a given phase on the n-gon: the phase
// class under Gamma_0(n), the divisor s, the positive-dimensional component
// E_s and the n rigid chain sheaves.

#include <string>
#include <vector>

#include "ngon/modular_group.hpp"
#include "ngon/ngon_sheaves.hpp"

namespace ngon {

enum class ModuliBranch {
    Generic,     // E_s plus n rigid chains
    Torsion,     // slope infinity: points of E_n, rigid objects at the nodes
    SingleClass, // n == 1: the nodal cubic itself
};

std::string to_string(ModuliBranch b);

struct ModuliDescription {
    int n = 1;
    PhasePoint phase;
    Slope slope;
    ModuliBranch branch = ModuliBranch::Generic;
    CuspClass representative;
    SL2Mat witness;
    Int r = 0;
    Int s = 1;
    std::string positive_component;
    Int rigid_count = 0;
    std::vector<Summand> rigid_points;
    ChargeVec vb_charge;
    ChargeVec rigid_charge;
    std::string galois_note;
};

CuspReduction phase_representative(int n, const PhasePoint& a);

ModuliDescription classify(int n, const PhasePoint& a);

/// Multidegree of the unique stable chain on s lines with chi == r
/// (the balanced word of r - 1 over s letters). Requires gcd(r, s) == 1.
std::vector<Int> rigid_multidegree(Int r, Int s);

/// n chain sheaves of length s, one starting at each component.
std::vector<Chain> enumerate_rigid(int n, Int r, Int s);

/// Pullback to E_n of the line bundle on E_s with the given multidegree.
Band stable_vb_construct(int n, Int r, Int s, const std::vector<Int>& line_data, const Label& label = {});

/// "point", "E_s" or "Sym^r(E_s)".
std::string sym_power_note(Int s, Int r);

} // namespace ngon
