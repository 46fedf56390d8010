#pragma once

// Brute-force reference computations. Used by tests and by `ngon --oracle`;
// the library proper never calls into this.

#include <map>
#include <optional>
#include <vector>

#include "ngon/compat_checker.hpp"
#include "ngon/hn_engine.hpp"
#include "ngon/modular_group.hpp"
#include "ngon/ngon_sheaves.hpp"

namespace ngon::oracle {

/// Gamma_0(N)-orbits on cusps computed as orbits of the double coset graph
/// Gamma_0(N) \ SL2(Z) / <T, -I>, i.e. of P^1(Z/N) under (c, d) -> (c, d + c).
class CuspOrbits {
public:
    explicit CuspOrbits(Int level);
    Int level() const { return level_; }
    std::size_t orbit_count() const { return orbit_count_; }
    /// Orbit id of the slope; equal ids iff Gamma_0(N)-equivalent.
    std::size_t orbit_of(const Slope& s) const;

private:
    std::size_t point_index(Int c, Int d) const;
    Int level_;
    std::vector<std::size_t> root_; // indexed by c*N + d
    std::size_t orbit_count_ = 0;
};

/// Breadth-first search over words in T^{+-1}, [[1,0],[N,1]]^{+-1} and -I
/// acting on slopes; returns a word product g with g(from) == to. These
/// generators only generate Gamma_0(N) for N <= 4.
std::optional<SL2Mat> word_bfs_witness(Int level, const Slope& from, const Slope& to, int max_depth = 12);

/// Pairwise order preservation on primitive eff and comp points of [-B, B]^2.
bool order_preserved_brute(const IntMat2& charge_matrix, Int box);

/// Largest fake phase over primitive eff and comp points of [-B, B]^2.
std::optional<PhasePoint> box_supremum(const IntMat2& charge_matrix, Int box);

/// Verdict from every torsion-free subsheaf of a chain sheaf with multidegree
/// d' <= d (each component may drop by one more), any support and any gluing.
Stability chain_stability_brute(const Chain& c);

/// Verdict of a band through the subsheaves of the line bundles making up its
/// pullback to E_{nr}, plus a duplicate test among those line bundles.
Stability band_stability_brute(const Band& b);

/// Decreasing-phase boundary of the hull of all subset sums.
HNPolygon hull_brute(const std::vector<ChargeVec>& charges);

/// Lexicographically least multidegree with |d_i| <= |r| + 1 giving a stable
/// chain of length s with chi == r, and the number of such multidegrees.
std::pair<std::optional<std::vector<Int>>, std::size_t> rigid_search(Int r, Int s);

} // namespace ngon::oracle
