#include "ngon/compat_checker.hpp"

#include <utility>

namespace ngon {

using boost::multiprecision::cpp_int;

IntMatrix identity_matrix(std::size_t size) {
    IntMatrix m(size, std::vector<Int>(size, 0));
    for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    IntMatrix out(rows, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner) throw DomainError("matrix dimensions do not match");
        for (std::size_t j = 0; j < cols; ++j) {
            Wide s = 0;
            for (std::size_t k = 0; k < inner; ++k) s += static_cast<Wide>(a[i][k]) * b[k][j];
            out[i][j] = narrow(s);
        }
    }
    return out;
}

cpp_int determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<cpp_int>> w(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DomainError("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) w[i][j] = m[i][j];
    }
    // Bareiss elimination: every division below is exact.
    cpp_int sign = 1;
    cpp_int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && w[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        prev = w[k][k];
    }
    return sign * w[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    const std::size_t n = m.size();
    cpp_int det = determinant(m);
    if (det != 1 && det != -1) throw DomainError("matrix is not unimodular");
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = m[i][j];
        w[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (w[p][k] == 0) ++p;
        std::swap(w[k], w[p]);
        Rational pivot = w[k][k];
        for (auto& x : w[k]) x /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w[i][k] == 0) continue;
            Rational f = w[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    IntMatrix out(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = w[i][n + j];
            if (denominator(x) != 1) throw std::logic_error("unimodular_inverse: non-integral entry");
            cpp_int v = numerator(x);
            if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("integer overflow");
            out[i][j] = static_cast<Int>(v);
        }
    return out;
}

KAuto::KAuto(int n_, IntMatrix matrix_, std::optional<Int> amplitude_)
    : n(n_), matrix(std::move(matrix_)), amplitude(amplitude_) {
    if (n < 1) throw DomainError("KAuto: n must be positive");
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    if (matrix.size() != size) throw DomainError("KAuto: matrix must be (n+1)x(n+1)");
    for (const auto& row : matrix)
        if (row.size() != size) throw DomainError("KAuto: matrix must be (n+1)x(n+1)");
    cpp_int det = determinant(matrix);
    if (det != 1 && det != -1) throw DomainError("KAuto: matrix is not unimodular");
}

KAuto KAuto::identity(int n, std::optional<Int> amplitude) {
    return KAuto(n, identity_matrix(static_cast<std::size_t>(n) + 1), amplitude);
}

KAuto KAuto::shift(int n, Int k) {
    IntMatrix m = identity_matrix(static_cast<std::size_t>(n) + 1);
    if (k % 2 != 0)
        for (auto& row : m)
            for (auto& x : row) x = -x;
    return KAuto(n, std::move(m), checked_sub(0, k));
}

KClass KAuto::apply(const KClass& k) const {
    if (k.n != n) throw DomainError("KAuto: mismatched n");
    std::vector<Int> v(static_cast<std::size_t>(n) + 1);
    v[0] = k.chi;
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) + 1] = k.ranks[static_cast<std::size_t>(i)];
    KClass out = KClass::zero(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Wide s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<Wide>(matrix[i][j]) * v[j];
        if (i == 0)
            out.chi = narrow(s);
        else
            out.ranks[i - 1] = narrow(s);
    }
    return out;
}

KAuto iota_kauto(int n) {
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    IntMatrix m(size, std::vector<Int>(size, 0));
    m[0][0] = 1;
    for (int i = 1; i <= n; ++i) m[static_cast<std::size_t>(i % n + 1)][static_cast<std::size_t>(i)] = 1;
    return KAuto(n, std::move(m), 0);
}

IntMatrix iota_kernel_action(int n) {
    const std::size_t dim = static_cast<std::size_t>(n) - 1;
    IntMatrix k(dim, std::vector<Int>(dim, 0));
    for (std::size_t j = 0; j + 1 < dim; ++j) k[j + 1][j] = 1;
    if (dim > 0)
        for (std::size_t i = 0; i < dim; ++i) k[i][dim - 1] = -1;
    return k;
}

KAuto compose(const KAuto& a, const KAuto& b) {
    if (a.n != b.n) throw DomainError("KAuto: mismatched n");
    std::optional<Int> amp;
    if (a.amplitude && b.amplitude) amp = checked_add(*a.amplitude, *b.amplitude);
    return KAuto(a.n, multiply(a.matrix, b.matrix), amp);
}

KAuto inverse(const KAuto& a) {
    std::optional<Int> amp;
    if (a.amplitude) amp = checked_sub(1, *a.amplitude);
    return KAuto(a.n, unimodular_inverse(a.matrix), amp);
}

namespace {

// Column j of the matrix, i.e. the image of e_j, as a KClass.
KClass image_of_basis(const KAuto& a, std::size_t j) {
    KClass k = KClass::zero(a.n);
    k.chi = a.matrix[0][j];
    for (int i = 0; i < a.n; ++i) k.ranks[static_cast<std::size_t>(i)] = a.matrix[static_cast<std::size_t>(i) + 1][j];
    return k;
}

// Coordinates of a kernel class in the basis b_j = e_j - e_{j+1}: partial sums of ranks.
std::vector<Int> kernel_coords(const KClass& k) {
    std::vector<Int> c(static_cast<std::size_t>(k.n) - 1);
    Int s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        s = checked_add(s, k.ranks[j]);
        c[j] = s;
    }
    return c;
}

KClass from_kernel_coords(int n, const std::vector<Int>& c) {
    KClass k = KClass::zero(n);
    for (std::size_t j = 0; j < c.size(); ++j) {
        k.ranks[j] = checked_add(k.ranks[j], c[j]);
        k.ranks[j + 1] = checked_sub(k.ranks[j + 1], c[j]);
    }
    return k;
}

} // namespace

bool check_kernel(const KAuto& a) {
    for (int i = 1; i < a.n; ++i) {
        KClass img = image_of_basis(a, static_cast<std::size_t>(i)) - image_of_basis(a, static_cast<std::size_t>(i) + 1);
        if (!in_kernel(img)) return false;
    }
    return true;
}

IntMat2 descend(const KAuto& a) {
    if (!check_kernel(a)) throw DomainError("descend: kernel of the charge is not preserved");
    KClass i0 = image_of_basis(a, 0);
    KClass i1 = image_of_basis(a, 1);
    return {i0.chi, i1.chi, i0.rk_tot(), i1.rk_tot()};
}

IntMatrix kernel_action(const KAuto& a) {
    if (!check_kernel(a)) throw DomainError("kernel_action: kernel of the charge is not preserved");
    const std::size_t dim = static_cast<std::size_t>(a.n) - 1;
    IntMatrix k(dim, std::vector<Int>(dim, 0));
    for (std::size_t j = 0; j < dim; ++j) {
        KClass img = image_of_basis(a, j + 1) - image_of_basis(a, j + 2);
        auto c = kernel_coords(img);
        for (std::size_t i = 0; i < dim; ++i) k[i][j] = c[i];
    }
    return k;
}

IntMat2 to_charge_plane(const IntMat2& m) { return {m.a, -m.b, -m.c, m.d}; }

bool eff_comp_member(const EffCompSet& set, ChargeVec v) {
    if (v.is_zero()) throw DomainError("charge in kernel");
    if (v.in_upper()) return true;
    return set.charge_matrix.apply(-v).in_upper();
}

bool check_order(const IntMat2& charge_matrix) { return charge_matrix.det() == 1 && charge_matrix.c >= 0; }

PhasePoint compute_m(const IntMat2& charge_matrix) {
    if (charge_matrix.det() != 1) throw DomainError("compute_m: determinant must be +1");
    // Preimage of the positive real axis under the charge matrix.
    ChargeVec u{charge_matrix.d, checked_sub(0, charge_matrix.c)};
    if (!u.in_upper()) return PhasePoint(0, -u);
    if (u.im > 0) return PhasePoint(0, {-1, 0});
    return PhasePoint::zero();
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Compatible: return "Compatible-by-criterion";
    case Verdict::FailsKernel: return "FailsKernel";
    case Verdict::FailsOrientation: return "FailsOrientation";
    case Verdict::FailsOrder: return "FailsOrder";
    case Verdict::MissingAmplitude: return "MissingAmplitude";
    }
    return "?";
}

CompatReport check_compatibility(const KAuto& a) {
    CompatReport r;
    r.kernel_preserved = check_kernel(a);
    if (!r.kernel_preserved) {
        r.verdict = Verdict::FailsKernel;
        return r;
    }
    IntMat2 m = descend(a);
    r.descended = m;
    r.det_plus_one = m.det() == 1;
    if (!r.det_plus_one) {
        r.verdict = Verdict::FailsOrientation;
        return r;
    }
    IntMat2 c = to_charge_plane(m);
    if (c.c < 0) {
        c = -c;
        r.shift_composed = true;
    }
    r.charge_matrix = c;
    r.order_preserved = check_order(c);
    if (!r.order_preserved) {
        r.verdict = Verdict::FailsOrder;
        return r;
    }
    if (!a.amplitude) {
        r.verdict = Verdict::MissingAmplitude;
        return r;
    }
    r.m_value = compute_m(c);
    r.verdict = Verdict::Compatible;
    return r;
}

KAuto lift_k_matrix(int n, const SL2Mat& m, const std::optional<IntMatrix>& kernel_act, std::optional<Int> amplitude) {
    if (n < 1) throw DomainError("lift: n must be positive");
    if (!in_gamma0(m, n)) throw DomainError("lift: matrix is not in Gamma_0(" + std::to_string(n) + ")");
    const std::size_t dim = static_cast<std::size_t>(n) - 1;
    IntMatrix k = kernel_act ? *kernel_act : identity_matrix(dim);
    if (k.size() != dim) throw DomainError("lift: kernel action must be (n-1)x(n-1)");
    for (const auto& row : k)
        if (row.size() != dim) throw DomainError("lift: kernel action must be (n-1)x(n-1)");
    if (dim > 0) {
        cpp_int det = determinant(k);
        if (det != 1 && det != -1) throw DomainError("lift: kernel action is not unimodular");
    }

    // M = [[d, a], [r, b]] in (chi, rk) coordinates; all rank is placed on e_1.
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    IntMatrix out(size, std::vector<Int>(size, 0));
    out[0][0] = m.a();
    out[1][0] = m.c();
    out[0][1] = m.b();
    out[1][1] = m.d();
    for (std::size_t i = 2; i < size; ++i) {
        // e_i - e_1 = -(b_1 + ... + b_{i-1})
        std::vector<Int> coords(dim, 0);
        for (std::size_t j = 0; j + 1 < i; ++j) coords[j] = -1;
        std::vector<Int> image(dim, 0);
        for (std::size_t r = 0; r < dim; ++r) {
            Wide s = 0;
            for (std::size_t c = 0; c < dim; ++c) s += static_cast<Wide>(k[r][c]) * coords[c];
            image[r] = narrow(s);
        }
        KClass delta = from_kernel_coords(n, image);
        out[0][i] = out[0][1];
        for (int t = 0; t < n; ++t)
            out[static_cast<std::size_t>(t) + 1][i] = checked_add(out[static_cast<std::size_t>(t) + 1][1], delta.ranks[static_cast<std::size_t>(t)]);
    }
    KAuto a(n, std::move(out), amplitude);
    if (descend(a) != m.mat() || kernel_action(a) != k) throw std::logic_error("lift: construction failed verification");
    return a;
}

} // namespace ngon
