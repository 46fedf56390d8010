#pragma once

// K-level compatibility test of an autoequivalence with the classical
// stability condition on the n-gon.
//
// A KAuto is an integer (n+1)x(n+1) matrix in the basis (e_0, ..., e_n) whose
// j-th column is the image of e_j. The descended matrix acts on (chi, rk)
// coordinates, i.e. it is written in the basis (Z(e_0), Z(e_1)) = (-1, i).
// Functions taking a "charge matrix" expect the same map written in the
// (re, im) coordinates of the charge plane; to_charge_plane converts.

#include <optional>
#include <string>
#include <vector>

#include "ngon/charge_lattice.hpp"
#include "ngon/modular_group.hpp"

namespace ngon {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(std::size_t size);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant (fraction-free elimination in arbitrary precision).
boost::multiprecision::cpp_int determinant(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct KAuto {
    int n = 1;
    IntMatrix matrix;
    /// Asserted M with Phi(heart) in D^{<=M} and D^{>=M-1}; not derivable from K-data.
    std::optional<Int> amplitude;

    KAuto() : matrix(identity_matrix(2)) {}
    KAuto(int n_, IntMatrix matrix_, std::optional<Int> amplitude_ = std::nullopt);

    static KAuto identity(int n, std::optional<Int> amplitude = 0);
    /// The shift [k]: (-1)^k on K, amplitude -k.
    static KAuto shift(int n, Int k);

    KClass apply(const KClass& k) const;
    friend bool operator==(const KAuto&, const KAuto&) = default;
};

/// Deck rotation e_0 -> e_0, e_i -> e_{i+1} (indices mod n), certified with M = 0.
KAuto iota_kauto(int n);

/// Matrix of the deck rotation on ker Z in the basis b_j = e_j - e_{j+1}.
IntMatrix iota_kernel_action(int n);

/// Matrix product A*B (apply B first); certificates add when both are present.
KAuto compose(const KAuto& a, const KAuto& b);
/// Certificate M becomes 1 - M.
KAuto inverse(const KAuto& a);

bool check_kernel(const KAuto& a);

/// Induced map on im(Z) in (chi, rk) coordinates. Throws DomainError if the
/// kernel is not preserved. The determinant is +-1 but not checked here.
IntMat2 descend(const KAuto& a);

/// Restriction to ker Z in the basis b_j; requires check_kernel.
IntMatrix kernel_action(const KAuto& a);

/// The (chi, rk) matrix conjugated by diag(-1, 1).
IntMat2 to_charge_plane(const IntMat2& m);

struct EffCompSet {
    IntMat2 charge_matrix;
};

/// v in H', or -v in H' with charge_matrix * (-v) in H'.
bool eff_comp_member(const EffCompSet& set, ChargeVec v);

/// Order preservation on eff and comp for a charge matrix of determinant +1:
/// holds exactly when the lower-left entry is >= 0, i.e. the image of the
/// negative real ray stays off the branch cut side.
bool check_order(const IntMat2& charge_matrix);

/// m with sup of phi_f over eff and comp equal to m + 1. Requires det +1.
PhasePoint compute_m(const IntMat2& charge_matrix);

enum class Verdict { Compatible, FailsKernel, FailsOrientation, FailsOrder, MissingAmplitude };

std::string to_string(Verdict v);

struct CompatReport {
    bool kernel_preserved = false;
    std::optional<IntMat2> descended;
    bool det_plus_one = false;
    /// Composed with [1] to move the branch cut; the order test then runs on -C.
    bool shift_composed = false;
    std::optional<IntMat2> charge_matrix;
    bool order_preserved = false;
    std::optional<PhasePoint> m_value;
    Verdict verdict = Verdict::FailsKernel;
};

CompatReport check_compatibility(const KAuto& a);

/// K-matrix with descend == M (M must lie in Gamma_0(n)) acting on ker Z by
/// kernel_action (identity by default), carrying the given certificate.
KAuto lift_k_matrix(int n, const SL2Mat& m, const std::optional<IntMatrix>& kernel_action = std::nullopt,
                    std::optional<Int> amplitude = 0);

} // namespace ngon
