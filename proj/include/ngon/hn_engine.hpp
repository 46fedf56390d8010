#pragma once

// Harder-Narasimhan slices of direct sums of semistable summands, and the HN
// polygon of a list of charges.

#include <vector>

#include "ngon/ngon_sheaves.hpp"

namespace ngon {

struct HNSlice {
    PhasePoint phase;
    ChargeVec total_charge;
    std::vector<std::size_t> members; // indices into SheafObject::summands
};

struct HNResult {
    std::vector<HNSlice> slices; // strictly decreasing phase
};

/// Throws DomainError when some summand is unstable; the model does not refine
/// indecomposables.
HNResult hn_of_object(const SheafObject& s);

struct HNPolygon {
    std::vector<ChargeVec> vertices; // from 0 to the total charge
};

/// Boundary of the hull of all partial sums, walked from 0 with decreasing
/// edge phase. Every charge must lie in H'. The input order does not matter.
HNPolygon hn_polygon(const std::vector<ChargeVec>& charges);

/// Every HN phase lies in (lo, hi].
bool slice_membership(const SheafObject& s, const PhasePoint& lo, const PhasePoint& hi);

} // namespace ngon
