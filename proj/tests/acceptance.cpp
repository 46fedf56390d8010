// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "ngon/compat_checker.hpp"
#include "ngon/hn_engine.hpp"
#include "ngon/moduli_classifier.hpp"
#include "ngon/oracle.hpp"

using namespace ngon;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

Int brute_phi(Int n) {
    Int c = 0;
    for (Int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

Outcome criterion_phase_classes() {
    Outcome o;
    for (Int n = 1; n <= 300; ++n) {
        Int formula = 0;
        for (Int d = 1; d <= n; ++d)
            if (n % d == 0) formula += brute_phi(std::gcd(d, n / d));
        if (class_count(n) != formula) fail(o, "class_count differs from the divisor sum at n=" + std::to_string(n));
        std::set<CuspClass> classes{cusp_class_of(n, Slope::infinity())};
        for (Int c = 1; c <= n; ++c)
            for (Int a = 0; a < c; ++a)
                if (std::gcd(a, c) == 1) classes.insert(cusp_class_of(n, Slope(a, c)));
        if (static_cast<Int>(classes.size()) != formula) fail(o, "Farey sweep count differs at n=" + std::to_string(n));
    }
    for (Int n = 1; n <= 60; ++n) {
        oracle::CuspOrbits orbits(n);
        std::map<std::size_t, CuspClass> orbit_to_class;
        std::map<CuspClass, std::size_t> class_to_orbit;
        auto visit = [&](const Slope& s) {
            auto cls = cusp_class_of(n, s);
            auto orb = orbits.orbit_of(s);
            if (orbit_to_class.emplace(orb, cls).first->second != cls ||
                class_to_orbit.emplace(cls, orb).first->second != orb)
                fail(o, "equivalence disagrees with the orbit oracle at n=" + std::to_string(n));
        };
        visit(Slope::infinity());
        for (Int c = 1; c <= n; ++c)
            for (Int a = 0; a < c; ++a)
                if (std::gcd(a, c) == 1) visit(Slope(a, c));
        if (static_cast<Int>(orbit_to_class.size()) != class_count(n))
            fail(o, "orbit partition size differs at n=" + std::to_string(n));
    }
    if (class_count(1) != 1 || class_count(4) != 3 || class_count(6) != 4) fail(o, "spot values");
    if (oracle::CuspOrbits(4).orbit_count() != 3 || oracle::CuspOrbits(6).orbit_count() != 4) fail(o, "oracle spot values");
    return o;
}

Outcome criterion_known_compatibles() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::size_t checked = 0;
    for (int n : {2, 3, 4, 6, 8, 12}) {
        std::vector<KAuto> set{iota_kauto(n), KAuto::identity(n), KAuto::shift(n, 2)};
        for (int i = 0; i < 20; ++i) {
            SL2Mat g = random_gamma0(n, 5, rng);
            set.push_back(i % 2 == 0 ? lift_k_matrix(n, g) : lift_k_matrix(n, g, iota_kernel_action(n)));
        }
        for (const auto& a : set) {
            ++checked;
            if (check_compatibility(a).verdict != Verdict::Compatible) fail(o, "a known compatible failed at n=" + std::to_string(n));
            KAuto inv = inverse(a);
            if (check_compatibility(inv).verdict != Verdict::Compatible) fail(o, "inverse not compatible at n=" + std::to_string(n));
            if (descend(inv) * descend(a) != IntMat2::identity()) fail(o, "inverse does not descend to the inverse");
            for (const auto& b : set) {
                KAuto ab = compose(a, b);
                if (check_compatibility(ab).verdict != Verdict::Compatible) fail(o, "composite not compatible at n=" + std::to_string(n));
                if (descend(ab) != descend(a) * descend(b)) fail(o, "descent is not multiplicative");
            }
        }
    }
    o.detail = std::to_string(checked) + " automorphisms, all pairwise composites and inverses";
    return o;
}

Outcome criterion_order_equivalence() {
    Outcome o;
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<Int> u(-10, 10);
    int tested = 0, lower_left_negative = 0;
    while (tested < 500) {
        IntMat2 m{u(rng), u(rng), u(rng), u(rng)};
        if (m.det() != 1) continue;
        ++tested;
        if (m.c < 0) ++lower_left_negative;
        if (check_order(m) != oracle::order_preserved_brute(m, 25))
            fail(o, "disagreement at [[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
                        std::to_string(m.d) + "]]");
    }
    if (o.pass)
        o.detail = "500 matrices agree; " + std::to_string(lower_left_negative) +
                   " of them move the cut and fail both tests unless composed with [1]";
    return o;
}

Outcome criterion_compute_m() {
    Outcome o;
    IntMat2 rot{0, -1, 1, 0};
    PhasePoint m = compute_m(rot);
    if (m != phase_of_charge({0, 1})) fail(o, "m is not 1/2");
    PhasePoint bound = m.shifted_by_one();
    std::optional<PhasePoint> prev;
    for (Int box : {10, 25, 50}) {
        auto sup = oracle::box_supremum(rot, box);
        if (!sup) {
            fail(o, "empty box");
            continue;
        }
        if (bound < *sup) fail(o, "box supremum exceeds m+1");
        if (prev && *sup < *prev) fail(o, "box suprema decrease");
        if (box == 50 && *sup != bound) fail(o, "m+1 not attained at B=50");
        prev = sup;
    }
    return o;
}

Outcome criterion_moduli() {
    Outcome o;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<Int> num(-60, 60), den(0, 40);
    int equivalent_pairs = 0;
    for (int i = 0; i < 10000; ++i) {
        int n = static_cast<int>(1 + rng() % 24);
        Int p = num(rng), q = den(rng);
        if (p == 0 && q == 0) q = 1;
        Slope s1(p, q);
        Slope s2 = (i % 2 == 0) ? random_gamma0(n, 4, rng).act(s1) : Slope(num(rng), den(rng) + 1);
        bool eq = cusp_equivalent(n, s1, s2);
        oracle::CuspOrbits orbits(n);
        if (eq != (orbits.orbit_of(s1) == orbits.orbit_of(s2))) fail(o, "cusp_equivalent disagrees with the orbit oracle");
        if (!eq) continue;
        ++equivalent_pairs;
        auto d1 = classify(n, slope_to_phase(s1)), d2 = classify(n, slope_to_phase(s2));
        if (d1.s != d2.s || !(d1.representative == d2.representative) || d1.positive_component != d2.positive_component)
            fail(o, "classify differs on equivalent slopes at n=" + std::to_string(n));
        if (!s1.is_infinite() && !s2.is_infinite() && d1.rigid_points != d2.rigid_points)
            fail(o, "rigid points differ on equivalent slopes");
    }
    for (int n = 1; n <= 24; ++n) {
        for (const auto& cusp : enumerate_cusps(n)) {
            const Int r = cusp.a, s = cusp.c;
            auto rigid = enumerate_rigid(n, r, s);
            if (static_cast<int>(rigid.size()) != n) fail(o, "rigid count is not n");
            std::set<Chain> distinct(rigid.begin(), rigid.end());
            if (static_cast<int>(distinct.size()) != n) fail(o, "rigid points are not distinct");
            std::set<Chain> pushed;
            for (int j = 0; j < n; ++j) {
                const Chain& c = rigid[static_cast<std::size_t>(j)];
                if (is_semistable(c) != Stability::Stable) fail(o, "rigid point not stable");
                if (s <= 6 && oracle::chain_stability_brute(c) != Stability::Stable) fail(o, "rigid point fails the subsheaf oracle");
                if (galois_translate(Summand(rigid[0]), j) != Summand(c)) fail(o, "rigid points are not one translation orbit");
                if (charge(k_class(c)) != ChargeVec{-r, s}) fail(o, "rigid charge mismatch");
                auto down = pushforward(SheafObject(Summand(c)), static_cast<int>(s));
                pushed.insert(std::get<Chain>(down.summands[0]));
            }
            if (static_cast<Int>(pushed.size()) != s) fail(o, "pushforwards to E_s are not exactly s objects");
        }
    }
    auto two = classify(2, slope_to_phase(Slope(0, 1)));
    if (two.s != 1 || two.positive_component != "E_1" || two.rigid_count != 2 || two.rigid_points.size() != 2)
        fail(o, "n=2 slope 0 is not E_1 plus Z/2Z");
    if (o.pass) o.detail = std::to_string(equivalent_pairs) + " equivalent pairs among 10000";
    return o;
}

Outcome criterion_chain_oracle() {
    Outcome o;
    std::size_t cases = 0;
    for (int n = 1; n <= 4; ++n)
        for (Int k = 1; k <= 6; ++k) {
            std::vector<Int> d(static_cast<std::size_t>(k), -2);
            for (;;) {
                Chain c(n, k, 0, d);
                ++cases;
                if (is_semistable(c) != oracle::chain_stability_brute(c)) fail(o, "interval test disagrees with brute force");
                std::size_t p = d.size();
                while (p > 0 && d[p - 1] == 2) d[--p] = -2;
                if (p == 0) break;
                ++d[p - 1];
            }
        }
    if (o.pass) o.detail = std::to_string(cases) + " chains";
    return o;
}

Outcome criterion_aut_triv() {
    Outcome o;
    auto corpus = generate_corpus(500, 99);
    std::mt19937_64 rng(7);
    const Label mus[] = {Label::symbol("mu"), Label::symbol("nu").pow(-1), Label::parse("mu*nu^2")};
    for (const auto& x : corpus) {
        const int n = summand_n(x);
        const Stability v = is_semistable(x);
        const PhasePoint ph = phase(x);
        const Int power = static_cast<Int>(rng() % static_cast<std::uint64_t>(n));
        Summand t = galois_translate(x, power);
        if (is_semistable(t) != v || phase(t) != ph) fail(o, "translation changed a verdict or phase");
        KAuto rot = iota_kauto(n);
        KClass expected = k_class(x);
        for (Int j = 0; j < power; ++j) expected = rot.apply(expected);
        if (k_class(t) != expected) fail(o, "translation does not act through the deck matrix on K");
        Summand u = tensor_line(x, std::vector<Int>(static_cast<std::size_t>(n), 0), mus[rng() % 3], true);
        if (is_semistable(u) != v || phase(u) != ph) fail(o, "Pic^0 tensor changed a verdict or phase");
        // [2] acts on K as the identity and moves phases by exactly 2.
        KAuto two = KAuto::shift(n, 2);
        PhasePoint shifted = phase_of_charge(charge(two.apply(k_class(x)))).shifted_by_two();
        if (shifted != ph.shifted_by_two() || check_compatibility(two).verdict != Verdict::Compatible)
            fail(o, "double shift changed a phase");
    }
    if (o.pass) o.detail = "500 objects";
    return o;
}

Outcome criterion_hn() {
    Outcome o;
    std::mt19937_64 rng(31337);
    std::map<int, std::vector<Summand>> by_n;
    for (const auto& x : generate_corpus(2000, 5))
        if (is_semistable(x) != Stability::Unstable) by_n[summand_n(x)].push_back(x);
    int objects = 0;
    for (auto& [n, pool] : by_n) {
        for (int i = 0; i < 100 && !pool.empty(); ++i) {
            std::vector<Summand> parts;
            std::size_t k = 1 + rng() % 5;
            for (std::size_t j = 0; j < k; ++j) parts.push_back(pool[rng() % pool.size()]);
            if (rng() % 2) parts.emplace_back(Torsion(n, SmoothPoint{}, 1));
            SheafObject obj(n, parts);
            auto h = hn_of_object(obj);
            ++objects;
            ChargeVec total{0, 0};
            std::vector<ChargeVec> slice_charges;
            for (std::size_t j = 0; j < h.slices.size(); ++j) {
                if (j > 0 && !(h.slices[j].phase < h.slices[j - 1].phase)) fail(o, "slice phases do not strictly decrease");
                total = total + h.slices[j].total_charge;
                slice_charges.push_back(h.slices[j].total_charge);
            }
            if (total != charge(k_class(obj))) fail(o, "slice charges do not sum to the object charge");
            auto poly = hn_polygon(slice_charges);
            ChargeVec acc{0, 0};
            for (std::size_t j = 0; j < slice_charges.size(); ++j) {
                acc = acc + slice_charges[j];
                if (poly.vertices.size() != slice_charges.size() + 1 || poly.vertices[j + 1] != acc)
                    fail(o, "polygon vertices differ from cumulative slice charges");
            }
        }
    }
    std::uniform_int_distribution<Int> u(-5, 5), v(0, 5);
    for (int i = 0; i < 1000; ++i) {
        std::vector<ChargeVec> cs;
        std::size_t k = rng() % 6;
        while (cs.size() < k) {
            ChargeVec c{u(rng), v(rng)};
            if (c.in_upper()) cs.push_back(c);
        }
        if (hn_polygon(cs).vertices != oracle::hull_brute(cs).vertices) fail(o, "incremental hull differs from subset hull");
    }
    if (o.pass) o.detail = std::to_string(objects) + " objects, 1000 charge lists";
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"phase-class counts", criterion_phase_classes},
        {"known compatibles pass the checker", criterion_known_compatibles},
        {"order check closed form equals brute force", criterion_order_equivalence},
        {"critical phase m for the quarter rotation", criterion_compute_m},
        {"moduli classification", criterion_moduli},
        {"chain stability against subsheaf brute force", criterion_chain_oracle},
        {"Aut^triv preserves verdicts and phases", criterion_aut_triv},
        {"HN slices and hull", criterion_hn},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d %s: %s (%.2fs)%s%s\n", index, name, o.pass ? "PASS" : "FAIL", secs,
                    o.detail.empty() ? "" : " ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
