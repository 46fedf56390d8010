#pragma once

// Combinatorial model of coherent sheaves on the n-gon E_n.
//
// Indecomposables come in three families:
//   Band    pushforward along E_{nr} -> E_n of L (x) F_m, L a line bundle with
//           multidegree d (length nr) and gluing parameter lambda;
//   Chain   pushforward of a line bundle on a chain I_k of k lines mapped to
//           consecutive components start, start+1, ...;
//   Torsion a skyscraper of some length at a smooth point or a node.
// Components are indexed by Z/nZ and the node "i" joins components i and i+1.

#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ngon/charge_lattice.hpp"

namespace ngon {

/// Element of the free abelian group on named generators, written
/// multiplicatively ("1", "a", "a*b^-2"). Stands in for a point of Pic^0.
class Label {
public:
    Label() = default;
    static Label identity() { return {}; }
    static Label symbol(const std::string& name);
    static Label parse(const std::string& text);

    bool is_identity() const { return exps_.empty(); }
    std::string str() const;
    Label inverse() const;
    Label pow(Int k) const;

    friend Label operator*(const Label& a, const Label& b);
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;

private:
    std::map<std::string, Int> exps_;
};

struct Band {
    int n = 1;
    Int r = 1;
    std::vector<Int> multideg; // length n*r, indexed by Z/nrZ
    Label lambda;
    Int m = 1;

    Band() = default;
    Band(int n_, Int r_, std::vector<Int> multideg_, Label lambda_ = {}, Int m_ = 1);

    /// Not fixed by any nontrivial deck rotation (shift by a multiple of n).
    bool indecomposable() const;
    friend bool operator==(const Band&, const Band&) = default;
    friend auto operator<=>(const Band&, const Band&) = default;
};

struct Chain {
    int n = 1;
    Int k = 1;
    Int start = 0;
    std::vector<Int> multideg; // length k

    Chain() = default;
    Chain(int n_, Int k_, Int start_, std::vector<Int> multideg_);

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain&, const Chain&) = default;
};

struct SmoothPoint {
    Int component = 0;
    Label label;
    friend bool operator==(const SmoothPoint&, const SmoothPoint&) = default;
    friend auto operator<=>(const SmoothPoint&, const SmoothPoint&) = default;
};

struct NodePoint {
    Int index = 0; // between components index and index+1
    friend bool operator==(const NodePoint&, const NodePoint&) = default;
    friend auto operator<=>(const NodePoint&, const NodePoint&) = default;
};

struct Torsion {
    int n = 1;
    std::variant<SmoothPoint, NodePoint> position;
    Int length = 1;

    Torsion() = default;
    Torsion(int n_, std::variant<SmoothPoint, NodePoint> position_, Int length_ = 1);

    friend bool operator==(const Torsion&, const Torsion&) = default;
    friend auto operator<=>(const Torsion&, const Torsion&) = default;
};

using Summand = std::variant<Band, Chain, Torsion>;

int summand_n(const Summand& s);

struct SheafObject {
    int n = 1;
    std::vector<Summand> summands;

    SheafObject() = default;
    SheafObject(int n_, std::vector<Summand> summands_);
    explicit SheafObject(Summand s);

    friend bool operator==(const SheafObject&, const SheafObject&) = default;
};

KClass k_class(const Summand& s);
KClass k_class(const SheafObject& s);

SheafObject pullback(const SheafObject& s, int m);
SheafObject pushforward(const SheafObject& s, int n);
Summand galois_translate(const Summand& s, Int power);
SheafObject galois_translate(const SheafObject& s, Int power);
/// Tensor with the pullback of a line bundle of multidegree deg (length n) and
/// gluing mu. With triv_only any nonzero degree is rejected.
Summand tensor_line(const Summand& s, const std::vector<Int>& deg, const Label& mu, bool triv_only = false);
SheafObject tensor_line(const SheafObject& s, const std::vector<Int>& deg, const Label& mu, bool triv_only = false);

/// Rotations of the band's multidegree by multiples of n give isomorphic
/// sheaves; this picks the lexicographically least one.
Band canonical(const Band& b);
Summand canonical(const Summand& s);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string to_string(Stability s);

Stability is_semistable(const Summand& s);

PhasePoint phase(const Summand& s);
PhasePoint phase(const SheafObject& s);

/// Random chains and bands with n <= max_n, chain length <= max_k, |d_i| <= max_deg.
std::vector<Summand> generate_corpus(std::size_t count, std::uint64_t seed, int max_n = 6, Int max_k = 8,
                                     Int max_deg = 3);

} // namespace ngon
