#include "ngon/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace ngon::oracle {

// ---- cusps ----

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

std::size_t CuspOrbits::point_index(Int c, Int d) const {
    // Normalize under multiplication by units.
    Int bc = level_, bd = level_;
    for (Int u = 1; u <= level_; ++u) {
        if (gcd(u, level_) != 1) continue;
        Int uc = mod(c * u, level_), ud = mod(d * u, level_);
        if (uc < bc || (uc == bc && ud < bd)) {
            bc = uc;
            bd = ud;
        }
    }
    return static_cast<std::size_t>(bc * level_ + bd);
}

CuspOrbits::CuspOrbits(Int level) : level_(level) {
    if (level < 1) throw DomainError("level must be positive");
    const std::size_t size = static_cast<std::size_t>(level * level);
    std::vector<std::size_t> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> valid(size, false);
    for (Int c = 0; c < level; ++c)
        for (Int d = 0; d < level; ++d) {
            if (gcd(gcd(c, d), level) != 1) continue;
            std::size_t p = point_index(c, d);
            valid[p] = true;
            std::size_t q = point_index(c, d + c);
            parent[find_root(parent, p)] = find_root(parent, q);
        }
    root_.assign(size, 0);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < size; ++i) {
        root_[i] = find_root(parent, i);
        if (valid[i]) roots.insert(root_[i]);
    }
    orbit_count_ = roots.size();
}

std::size_t CuspOrbits::orbit_of(const Slope& s) const {
    // [[p, x], [q, y]] in SL2(Z) sends infinity to p/q; its bottom row is the P^1(Z/N) point.
    auto e = ext_gcd(s.num, s.den);
    Int y = e.x; // e.x*p + e.y*q == 1, so p*y - q*(-e.y) == 1
    return root_[point_index(mod(s.den, level_), mod(y, level_))];
}

std::optional<SL2Mat> word_bfs_witness(Int level, const Slope& from, const Slope& to, int max_depth) {
    const std::vector<SL2Mat> gens = {SL2Mat(1, 1, 0, 1), SL2Mat(1, -1, 0, 1), SL2Mat(1, 0, level, 1),
                                      SL2Mat(1, 0, -level, 1), SL2Mat(-1, 0, 0, -1)};
    std::deque<std::pair<SL2Mat, int>> queue;
    std::set<std::pair<Int, Int>> seen;
    queue.push_back({SL2Mat::identity(), 0});
    seen.insert({from.num, from.den});
    while (!queue.empty()) {
        auto [g, depth] = queue.front();
        queue.pop_front();
        Slope cur = g.act(from);
        if (cur == to) return g;
        if (depth == max_depth) continue;
        for (const auto& h : gens) {
            SL2Mat next = h * g;
            Slope s = next.act(from);
            if (seen.insert({s.num, s.den}).second) queue.push_back({next, depth + 1});
        }
    }
    return std::nullopt;
}

// ---- order ----

namespace {

std::vector<ChargeVec> comp_points(const IntMat2& c, Int box) {
    EffCompSet set{c};
    std::vector<ChargeVec> pts;
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y) {
            if ((x == 0 && y == 0) || gcd(x, y) != 1) continue;
            ChargeVec v{x, y};
            if (eff_comp_member(set, v)) pts.push_back(v);
        }
    return pts;
}

} // namespace

bool order_preserved_brute(const IntMat2& charge_matrix, Int box) {
    auto pts = comp_points(charge_matrix, box);
    std::vector<std::pair<PhasePoint, PhasePoint>> pairs;
    pairs.reserve(pts.size());
    for (auto v : pts) pairs.emplace_back(phase_of_charge(v), phase_of_charge(charge_matrix.apply(v)));
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Sorted by source phase: images must strictly increase, ties only where sources tie.
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        bool src_equal = pairs[i].first == pairs[i + 1].first;
        bool img_equal = pairs[i].second == pairs[i + 1].second;
        if (src_equal != img_equal) return false;
        if (!src_equal && !(pairs[i].second < pairs[i + 1].second)) return false;
    }
    return true;
}

std::optional<PhasePoint> box_supremum(const IntMat2& charge_matrix, Int box) {
    std::optional<PhasePoint> best;
    for (auto v : comp_points(charge_matrix, box)) {
        PhasePoint p = phase_of_charge(v);
        if (!best || *best < p) best = p;
    }
    return best;
}

// ---- sheaf stability ----

namespace {

struct SubsheafScan {
    bool exceeds = false;
    bool equals = false;
};

// Enumerates subsheaves of a rank-one sheaf on a chain (cyclic == false) or a
// cycle of lines. Every component is either dropped or kept with degree
// d_i - a_i, a_i in {0, 1}; a node between two kept components is glued
// (chi - 1) or split into the maximal ideal (chi - 2); a node between a kept
// and a dropped component costs one on the kept side.
SubsheafScan scan_subsheaves(const std::vector<Int>& d, bool cyclic, Int chi_total) {
    const Int len = static_cast<Int>(d.size());
    SubsheafScan out;
    std::vector<int> in(d.size(), 0);
    std::vector<int> glue(d.size(), 0);
    std::vector<int> drop(d.size(), 0);

    auto evaluate = [&]() {
        Int chi = 0, rank = 0;
        bool whole = true;
        for (Int i = 0; i < len; ++i) {
            if (!in[i]) {
                whole = false;
                continue;
            }
            ++rank;
            chi += d[i] - drop[i] + 1;
            if (drop[i]) whole = false;
        }
        if (rank == 0) return;
        const Int nodes = cyclic ? len : len - 1;
        for (Int t = 0; t < nodes; ++t) {
            Int l = t, r = (t + 1) % len;
            if (in[l] && in[r]) {
                chi -= glue[t] ? 1 : 2;
                if (!glue[t]) whole = false;
            } else if (in[l] || in[r]) {
                chi -= 1;
            }
        }
        if (whole) return;
        Wide lhs = static_cast<Wide>(chi) * len;
        Wide rhs = static_cast<Wide>(chi_total) * rank;
        if (lhs > rhs) out.exceeds = true;
        if (lhs == rhs && rank < len) out.equals = true;
    };

    std::function<void(Int)> rec_glue;
    std::function<void(Int)> rec_comp = [&](Int i) {
        if (out.exceeds) return;
        if (i == len) {
            rec_glue(0);
            return;
        }
        in[i] = 0;
        drop[i] = 0;
        rec_comp(i + 1);
        in[i] = 1;
        for (int a = 0; a <= 1; ++a) {
            drop[i] = a;
            rec_comp(i + 1);
        }
        in[i] = 0;
        drop[i] = 0;
    };
    const Int nodes = cyclic ? len : len - 1;
    rec_glue = [&](Int t) {
        if (out.exceeds) return;
        if (t == nodes) {
            evaluate();
            return;
        }
        Int l = t, r = (t + 1) % len;
        if (in[l] && in[r]) {
            for (int g = 0; g <= 1; ++g) {
                glue[t] = g;
                rec_glue(t + 1);
            }
            glue[t] = 0;
        } else {
            rec_glue(t + 1);
        }
    };
    rec_comp(0);
    return out;
}

} // namespace

Stability chain_stability_brute(const Chain& c) {
    Int chi = 1;
    for (Int x : c.multideg) chi += x;
    auto scan = scan_subsheaves(c.multideg, false, chi);
    if (scan.exceeds) return Stability::Unstable;
    return scan.equals ? Stability::StrictlySemistable : Stability::Stable;
}

Stability band_stability_brute(const Band& b) {
    const int cover = static_cast<int>(b.n * b.r);
    SheafObject up = pullback(SheafObject(Band(b.n, b.r, b.multideg, b.lambda, 1)), cover);
    bool equals = false;
    std::set<std::pair<std::vector<Int>, Label>> seen;
    bool duplicate = false;
    for (const auto& s : up.summands) {
        const Band& line = std::get<Band>(s);
        Int chi = 0;
        for (Int x : line.multideg) chi += x;
        auto scan = scan_subsheaves(line.multideg, true, chi);
        if (scan.exceeds) return Stability::Unstable;
        equals = equals || scan.equals;
        if (!seen.insert({line.multideg, line.lambda}).second) duplicate = true;
    }
    if (b.m >= 2 || equals || duplicate) return Stability::StrictlySemistable;
    return Stability::Stable;
}

// ---- hull ----

HNPolygon hull_brute(const std::vector<ChargeVec>& charges) {
    const std::size_t k = charges.size();
    ChargeVec total{0, 0};
    for (auto c : charges) total = total + c;
    HNPolygon out;
    if (k == 0) {
        out.vertices.push_back({0, 0});
        return out;
    }
    std::vector<ChargeVec> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        ChargeVec s{0, 0};
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) s = s + charges[i];
        pts.push_back(s);
    }
    std::sort(pts.begin(), pts.end(), [](ChargeVec a, ChargeVec b) { return a.re != b.re ? a.re < b.re : a.im < b.im; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) {
        out.vertices = {pts[0]};
        return out;
    }
    // Andrew's monotone chain, counter-clockwise, collinear points dropped.
    auto turn = [](ChargeVec o, ChargeVec a, ChargeVec b) {
        return static_cast<Wide>(a.re - o.re) * (b.im - o.im) - static_cast<Wide>(a.im - o.im) * (b.re - o.re);
    };
    std::vector<ChargeVec> hull(2 * pts.size());
    std::size_t h = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (h >= 2 && turn(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = h + 1; i-- > 0;) {
        while (h >= lower && turn(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    // Walk clockwise from 0 to the total charge.
    const std::size_t m = hull.size();
    auto start = std::find(hull.begin(), hull.end(), ChargeVec{0, 0});
    if (start == hull.end()) throw std::logic_error("hull_brute: origin is not a hull vertex");
    std::size_t i = static_cast<std::size_t>(start - hull.begin());
    out.vertices.push_back(hull[i]);
    while (!(hull[i] == total)) {
        i = (i + m - 1) % m;
        out.vertices.push_back(hull[i]);
        if (out.vertices.size() > m + 1) throw std::logic_error("hull_brute: total charge is not a hull vertex");
    }
    return out;
}

// ---- rigid chains ----

std::pair<std::optional<std::vector<Int>>, std::size_t> rigid_search(Int r, Int s) {
    const Int bound = (r < 0 ? -r : r) + 1;
    std::optional<std::vector<Int>> first;
    std::size_t count = 0;
    std::vector<Int> d(static_cast<std::size_t>(s), -bound);
    for (;;) {
        Int sum = 1;
        for (Int x : d) sum += x;
        if (sum == r && is_semistable(Chain(1, s, 0, d)) == Stability::Stable) {
            if (!first) first = d;
            ++count;
        }
        std::size_t pos = d.size();
        while (pos > 0 && d[pos - 1] == bound) d[--pos] = -bound;
        if (pos == 0) break;
        ++d[pos - 1];
    }
    return {first, count};
}

} // namespace ngon::oracle
