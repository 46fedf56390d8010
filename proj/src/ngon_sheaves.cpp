#include "ngon/ngon_sheaves.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ngon {

// ---- Label ----

Label Label::symbol(const std::string& name) {
    if (name.empty() || name == "1") return {};
    for (char ch : name)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            throw ParseError("label symbol '" + name + "' must be alphanumeric");
    if (std::isdigit(static_cast<unsigned char>(name[0]))) throw ParseError("label symbol '" + name + "' starts with a digit");
    Label l;
    l.exps_[name] = 1;
    return l;
}

Label Label::parse(const std::string& text) {
    if (text.empty() || text == "1") return {};
    Label out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        std::string factor = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        Int e = 1;
        std::string name = factor;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string es = factor.substr(caret + 1);
            const char* first = es.data();
            const char* last = es.data() + es.size();
            auto [ptr, ec] = std::from_chars(first, last, e);
            if (ec != std::errc() || ptr != last || es.empty()) throw ParseError("malformed label exponent in '" + text + "'");
        }
        if (name == "1" && e == 1) {
            // allow explicit identity factors
        } else {
            out = out * symbol(name).pow(e);
        }
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return out;
}

std::string Label::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [name, e] : exps_) {
        if (!s.empty()) s += '*';
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Label Label::inverse() const { return pow(-1); }

Label Label::pow(Int k) const {
    Label out;
    if (k == 0) return out;
    for (const auto& [name, e] : exps_) out.exps_[name] = checked_mul(e, k);
    return out;
}

Label operator*(const Label& a, const Label& b) {
    Label out = a;
    for (const auto& [name, e] : b.exps_) {
        Int v = checked_add(out.exps_[name], e);
        if (v == 0)
            out.exps_.erase(name);
        else
            out.exps_[name] = v;
    }
    return out;
}

// ---- constructors ----

Band::Band(int n_, Int r_, std::vector<Int> multideg_, Label lambda_, Int m_)
    : n(n_), r(r_), multideg(std::move(multideg_)), lambda(std::move(lambda_)), m(m_) {
    if (n < 1) throw DomainError("band: n must be positive");
    if (r < 1) throw DomainError("band: r must be positive");
    if (m < 1) throw DomainError("band: m must be positive");
    if (static_cast<Int>(multideg.size()) != checked_mul(n, r)) throw DomainError("band: multidegree must have length n*r");
}

namespace {

std::vector<Int> rotated(const std::vector<Int>& d, Int shift) {
    const Int len = static_cast<Int>(d.size());
    std::vector<Int> out(d.size());
    for (Int t = 0; t < len; ++t) out[static_cast<std::size_t>(mod(t + shift, len))] = d[static_cast<std::size_t>(t)];
    return out;
}

} // namespace

bool Band::indecomposable() const {
    for (Int j = 1; j < r; ++j)
        if (r % j == 0 && rotated(multideg, j * n) == multideg) return false;
    return true;
}

Chain::Chain(int n_, Int k_, Int start_, std::vector<Int> multideg_)
    : n(n_), k(k_), start(start_), multideg(std::move(multideg_)) {
    if (n < 1) throw DomainError("chain: n must be positive");
    if (k < 1) throw DomainError("chain: k must be positive");
    if (static_cast<Int>(multideg.size()) != k) throw DomainError("chain: multidegree must have length k");
    start = mod(start, n);
}

Torsion::Torsion(int n_, std::variant<SmoothPoint, NodePoint> position_, Int length_)
    : n(n_), position(std::move(position_)), length(length_) {
    if (n < 1) throw DomainError("torsion: n must be positive");
    if (length < 1) throw DomainError("torsion: length must be positive");
    std::visit([&](auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SmoothPoint>)
            p.component = mod(p.component, n);
        else
            p.index = mod(p.index, n);
    }, position);
}

int summand_n(const Summand& s) {
    return std::visit([](const auto& x) { return x.n; }, s);
}

SheafObject::SheafObject(int n_, std::vector<Summand> summands_) : n(n_), summands(std::move(summands_)) {
    if (n < 1) throw DomainError("sheaf object: n must be positive");
    for (const auto& s : summands)
        if (summand_n(s) != n) throw DomainError("sheaf object: summands must share n");
}

SheafObject::SheafObject(Summand s) : SheafObject(summand_n(s), std::vector<Summand>{std::move(s)}) {}

// ---- K-classes ----

KClass k_class(const Summand& s) {
    return std::visit([](const auto& x) -> KClass {
        using T = std::decay_t<decltype(x)>;
        KClass k = KClass::zero(x.n);
        if constexpr (std::is_same_v<T, Band>) {
            Int sum = 0;
            for (Int d : x.multideg) sum = checked_add(sum, d);
            k.chi = checked_mul(x.m, sum);
            for (auto& rk : k.ranks) rk = checked_mul(x.r, x.m);
        } else if constexpr (std::is_same_v<T, Chain>) {
            Int sum = 1;
            for (Int d : x.multideg) sum = checked_add(sum, d);
            k.chi = sum;
            for (Int t = 0; t < x.k; ++t) ++k.ranks[static_cast<std::size_t>(mod(x.start + t, x.n))];
        } else {
            k.chi = x.length;
        }
        return k;
    }, s);
}

KClass k_class(const SheafObject& s) {
    KClass k = KClass::zero(s.n);
    for (const auto& x : s.summands) k += k_class(x);
    return k;
}

// ---- covers ----

SheafObject pullback(const SheafObject& s, int m) {
    if (m < 1 || m % s.n != 0) throw DomainError("pullback: " + std::to_string(s.n) + " does not divide " + std::to_string(m));
    const int n = s.n;
    const Int sheets = m / n;
    std::vector<Summand> out;
    for (const auto& x : s.summands) {
        std::visit([&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Band>) {
                // E_{nr} x_{E_n} E_m is g copies of E_L.
                const Int nr = checked_mul(n, v.r);
                const Int big = std::lcm(nr, static_cast<Int>(m));
                const Int g = gcd(v.r, sheets);
                const Label lam = v.lambda.pow(big / nr);
                for (Int j = 0; j < g; ++j) {
                    std::vector<Int> d(static_cast<std::size_t>(big));
                    for (Int t = 0; t < big; ++t) d[static_cast<std::size_t>(t)] = v.multideg[static_cast<std::size_t>(mod(n * j + t, nr))];
                    out.emplace_back(Band(m, big / m, std::move(d), lam, v.m));
                }
            } else if constexpr (std::is_same_v<T, Chain>) {
                for (Int j = 0; j < sheets; ++j) out.emplace_back(Chain(m, v.k, v.start + n * j, v.multideg));
            } else {
                for (Int j = 0; j < sheets; ++j) {
                    auto pos = v.position;
                    std::visit([&](auto& p) {
                        using P = std::decay_t<decltype(p)>;
                        if constexpr (std::is_same_v<P, SmoothPoint>)
                            p.component += n * j;
                        else
                            p.index += n * j;
                    }, pos);
                    out.emplace_back(Torsion(m, pos, v.length));
                }
            }
        }, x);
    }
    return SheafObject(m, std::move(out));
}

SheafObject pushforward(const SheafObject& s, int n) {
    if (n < 1 || s.n % n != 0) throw DomainError("pushforward: " + std::to_string(n) + " does not divide " + std::to_string(s.n));
    const Int ratio = s.n / n;
    std::vector<Summand> out;
    for (const auto& x : s.summands) {
        std::visit([&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Band>) {
                out.emplace_back(Band(n, checked_mul(v.r, ratio), v.multideg, v.lambda, v.m));
            } else if constexpr (std::is_same_v<T, Chain>) {
                out.emplace_back(Chain(n, v.k, v.start, v.multideg));
            } else {
                out.emplace_back(Torsion(n, v.position, v.length));
            }
        }, x);
    }
    return SheafObject(n, std::move(out));
}

Summand galois_translate(const Summand& s, Int power) {
    return std::visit([&](const auto& v) -> Summand {
        using T = std::decay_t<decltype(v)>;
        const Int p = mod(power, v.n);
        if constexpr (std::is_same_v<T, Band>) {
            return Band(v.n, v.r, rotated(v.multideg, p), v.lambda, v.m);
        } else if constexpr (std::is_same_v<T, Chain>) {
            return Chain(v.n, v.k, v.start + p, v.multideg);
        } else {
            auto pos = v.position;
            std::visit([&](auto& q) {
                using P = std::decay_t<decltype(q)>;
                if constexpr (std::is_same_v<P, SmoothPoint>)
                    q.component += p;
                else
                    q.index += p;
            }, pos);
            return Torsion(v.n, pos, v.length);
        }
    }, s);
}

SheafObject galois_translate(const SheafObject& s, Int power) {
    std::vector<Summand> out;
    for (const auto& x : s.summands) out.push_back(galois_translate(x, power));
    return SheafObject(s.n, std::move(out));
}

Summand tensor_line(const Summand& s, const std::vector<Int>& deg, const Label& mu, bool triv_only) {
    const int n = summand_n(s);
    if (static_cast<int>(deg.size()) != n) throw DomainError("tensor_line: degree vector must have length n");
    if (triv_only)
        for (Int d : deg)
            if (d != 0) throw DomainError("tensor_line: line bundle is not in the pullback of Pic^0");
    return std::visit([&](const auto& v) -> Summand {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Band>) {
            std::vector<Int> d = v.multideg;
            for (std::size_t t = 0; t < d.size(); ++t) d[t] = checked_add(d[t], deg[t % deg.size()]);
            return Band(v.n, v.r, std::move(d), v.lambda * mu.pow(v.r), v.m);
        } else if constexpr (std::is_same_v<T, Chain>) {
            std::vector<Int> d = v.multideg;
            for (Int t = 0; t < v.k; ++t)
                d[static_cast<std::size_t>(t)] = checked_add(d[static_cast<std::size_t>(t)], deg[static_cast<std::size_t>(mod(v.start + t, n))]);
            return Chain(v.n, v.k, v.start, std::move(d));
        } else {
            return v;
        }
    }, s);
}

SheafObject tensor_line(const SheafObject& s, const std::vector<Int>& deg, const Label& mu, bool triv_only) {
    std::vector<Summand> out;
    for (const auto& x : s.summands) out.push_back(tensor_line(x, deg, mu, triv_only));
    return SheafObject(s.n, std::move(out));
}

Band canonical(const Band& b) {
    Band best = b;
    for (Int j = 1; j < b.r; ++j) {
        auto d = rotated(b.multideg, j * b.n);
        if (d < best.multideg) best.multideg = std::move(d);
    }
    return best;
}

Summand canonical(const Summand& s) {
    if (const auto* b = std::get_if<Band>(&s)) return canonical(*b);
    return s;
}

// ---- stability ----

std::string to_string(Stability s) {
    switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
    }
    return "?";
}

namespace {

// Compare chi_sub/len_sub with chi/len without division.
int slope_cmp(Int chi_sub, Int len_sub, Int chi, Int len) {
    Wide l = static_cast<Wide>(chi_sub) * len;
    Wide r = static_cast<Wide>(chi) * len_sub;
    return l < r ? -1 : (l > r ? 1 : 0);
}

Stability chain_stability(const Chain& c) {
    Int total = 1;
    for (Int d : c.multideg) total = checked_add(total, d);
    bool equal = false;
    const Int k = c.k;
    for (Int u = 0; u < k; ++u) {
        Int sum = 0;
        for (Int v = u; v < k; ++v) {
            sum = checked_add(sum, c.multideg[static_cast<std::size_t>(v)]);
            if (u == 0 && v == k - 1) continue;
            Int chi = 1 + sum - (u > 0 ? 1 : 0) - (v < k - 1 ? 1 : 0);
            int cmp = slope_cmp(chi, v - u + 1, total, k);
            if (cmp > 0) return Stability::Unstable;
            if (cmp == 0) equal = true;
        }
    }
    return equal ? Stability::StrictlySemistable : Stability::Stable;
}

// Line bundle on the cycle of length d.size(): proper arcs lose one node on each side.
Stability cycle_line_stability(const std::vector<Int>& d) {
    const Int len = static_cast<Int>(d.size());
    Int total = 0;
    for (Int x : d) total = checked_add(total, x);
    bool equal = false;
    for (Int u = 0; u < len; ++u) {
        Int sum = 0;
        for (Int l = 1; l < len; ++l) {
            sum = checked_add(sum, d[static_cast<std::size_t>((u + l - 1) % len)]);
            int cmp = slope_cmp(sum - 1, l, total, len);
            if (cmp > 0) return Stability::Unstable;
            if (cmp == 0) equal = true;
        }
    }
    return equal ? Stability::StrictlySemistable : Stability::Stable;
}

Stability band_stability(const Band& b) {
    Stability core = cycle_line_stability(b.multideg);
    if (core == Stability::Unstable) return core;
    if (b.m >= 2 || !b.indecomposable()) return Stability::StrictlySemistable;
    return core;
}

} // namespace

Stability is_semistable(const Summand& s) {
    return std::visit([](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Band>)
            return band_stability(v);
        else if constexpr (std::is_same_v<T, Chain>)
            return chain_stability(v);
        else
            return v.length == 1 ? Stability::Stable : Stability::StrictlySemistable;
    }, s);
}

PhasePoint phase(const Summand& s) { return phase_of_charge(charge(k_class(s))); }
PhasePoint phase(const SheafObject& s) { return phase_of_charge(charge(k_class(s))); }

std::vector<Summand> generate_corpus(std::size_t count, std::uint64_t seed, int max_n, Int max_k, Int max_deg) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<Summand> out;
    out.reserve(count);
    const char* names[] = {"a", "b", "c"};
    while (out.size() < count) {
        const int n = static_cast<int>(uniform(1, max_n));
        if (uniform(0, 1) == 0) {
            const Int k = uniform(1, max_k);
            std::vector<Int> d(static_cast<std::size_t>(k));
            for (auto& x : d) x = uniform(-max_deg, max_deg);
            out.emplace_back(Chain(n, k, uniform(0, n - 1), std::move(d)));
        } else {
            const Int r = uniform(1, std::max<Int>(1, 6 / n));
            std::vector<Int> d(static_cast<std::size_t>(n * r));
            for (auto& x : d) x = uniform(-max_deg, max_deg);
            Label lam = Label::symbol(names[uniform(0, 2)]).pow(uniform(-1, 1));
            out.emplace_back(Band(n, r, std::move(d), lam, uniform(1, 2)));
        }
    }
    return out;
}

} // namespace ngon
