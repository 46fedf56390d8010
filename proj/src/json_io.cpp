#include "ngon/json_io.hpp"

#include <algorithm>

namespace ngon::io {

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
        throw ParseError("line " + std::to_string(line) + ": malformed JSON");
    }
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

Int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        throw ParseError(std::string(what) + " is out of range");
    return j.get<Int>();
}

int as_n(const Json& j) {
    Int n = as_int(j, "n");
    if (n < 1 || n > 1'000'000) throw ParseError("n must be a positive integer");
    return static_cast<int>(n);
}

std::vector<Int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<Int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Json charges_list(const std::vector<Summand>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

} // namespace

Json to_json(const KClass& k) {
    Json j;
    j["n"] = k.n;
    j["chi"] = k.chi;
    j["ranks"] = k.ranks;
    return j;
}

Json to_json(ChargeVec c) { return Json::array({c.re, c.im}); }

Json to_json(const PhasePoint& p) {
    Json j;
    j["two_shift"] = p.two_shift();
    j["dir"] = to_json(p.dir());
    return j;
}

Json to_json(const Slope& s) { return s.str(); }

Json to_json(const IntMat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json to_json(const SL2Mat& m) { return to_json(m.mat()); }

Json to_json(const CuspClass& c) {
    Json j;
    j["level"] = c.level;
    j["c"] = c.c;
    j["a"] = c.a;
    j["representative"] = c.representative().str();
    return j;
}

Json to_json(const IntMatrix& m) {
    Json j = Json::array();
    for (const auto& row : m) j.push_back(row);
    return j;
}

Json to_json(const KAuto& a) {
    Json j;
    j["n"] = a.n;
    j["matrix"] = to_json(a.matrix);
    j["amplitude_M"] = a.amplitude ? Json(*a.amplitude) : Json(nullptr);
    return j;
}

Json to_json(const CompatReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["kernel_preserved"] = r.kernel_preserved;
    j["descended"] = r.descended ? to_json(*r.descended) : Json(nullptr);
    j["det_plus_one"] = r.det_plus_one;
    j["shift_composed"] = r.shift_composed;
    j["charge_matrix"] = r.charge_matrix ? to_json(*r.charge_matrix) : Json(nullptr);
    j["order_preserved"] = r.order_preserved;
    j["m_value"] = r.m_value ? to_json(*r.m_value) : Json(nullptr);
    return j;
}

Json to_json(const Label& l) { return l.str(); }

Json to_json(const Summand& s) {
    return std::visit([](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        Json j;
        if constexpr (std::is_same_v<T, Band>) {
            j["type"] = "band";
            j["r"] = v.r;
            j["multideg"] = v.multideg;
            j["lambda"] = v.lambda.str();
            j["m"] = v.m;
        } else if constexpr (std::is_same_v<T, Chain>) {
            j["type"] = "chain";
            j["k"] = v.k;
            j["start"] = v.start;
            j["multideg"] = v.multideg;
        } else {
            j["type"] = "torsion";
            Json pos;
            if (const auto* sp = std::get_if<SmoothPoint>(&v.position)) {
                pos["smooth"] = sp->component;
                pos["label"] = sp->label.str();
            } else {
                pos["node"] = std::get<NodePoint>(v.position).index;
            }
            j["position"] = pos;
            j["length"] = v.length;
        }
        return j;
    }, s);
}

Json to_json(const SheafObject& s) {
    Json j;
    j["n"] = s.n;
    j["summands"] = charges_list(s.summands);
    return j;
}

Json to_json(const HNResult& h) {
    Json slices = Json::array();
    for (const auto& s : h.slices) {
        Json j;
        j["phase"] = to_json(s.phase);
        j["slope"] = slope_phase_convert(s.phase).str();
        j["charge"] = to_json(s.total_charge);
        j["members"] = s.members;
        slices.push_back(j);
    }
    Json j;
    j["slices"] = slices;
    return j;
}

Json to_json(const HNPolygon& p) {
    Json v = Json::array();
    for (auto c : p.vertices) v.push_back(to_json(c));
    Json j;
    j["vertices"] = v;
    return j;
}

Json to_json(const ModuliDescription& d) {
    Json j;
    j["n"] = d.n;
    j["phase"] = to_json(d.phase);
    j["slope"] = d.slope.str();
    j["branch"] = to_string(d.branch);
    j["representative"] = to_json(d.representative);
    j["witness"] = to_json(d.witness);
    j["r"] = d.r;
    j["s"] = d.s;
    j["positive_component"] = d.positive_component;
    j["rigid_count"] = d.rigid_count;
    j["rigid_points"] = charges_list(d.rigid_points);
    Json sc;
    sc["vb_charge"] = to_json(d.vb_charge);
    sc["rigid_charge"] = to_json(d.rigid_charge);
    j["stable_charges"] = sc;
    j["galois_note"] = d.galois_note;
    return j;
}

KClass kclass_from_json(const Json& j) {
    try {
        return KClass(as_n(field(j, "n")), as_int(field(j, "chi"), "chi"), int_list(field(j, "ranks"), "ranks"));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

ChargeVec charge_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("charge must be [re, im]");
    return {as_int(j[0], "re"), as_int(j[1], "im")};
}

PhasePoint phase_from_json(const Json& j) {
    Int k = as_int(field(j, "two_shift"), "two_shift");
    ChargeVec d = charge_from_json(field(j, "dir"));
    if (d.is_zero()) throw ParseError("phase direction must be nonzero");
    return PhasePoint(k, d);
}

Slope slope_from_json(const Json& j) {
    if (j.is_number_integer()) return Slope(as_int(j, "slope"), 1);
    return Slope::parse(as_string(j, "slope"));
}

SL2Mat sl2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
        throw ParseError("matrix must be [[a, b], [c, d]]");
    IntMat2 m{as_int(j[0][0], "a"), as_int(j[0][1], "b"), as_int(j[1][0], "c"), as_int(j[1][1], "d")};
    if (m.det() != 1) throw DomainError("matrix does not have determinant 1");
    return SL2Mat(m);
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    IntMatrix m;
    for (const auto& row : j) m.push_back(int_list(row, "matrix entry"));
    for (const auto& row : m)
        if (row.size() != m.size()) throw ParseError("matrix must be square");
    return m;
}

KAuto kauto_from_json(const Json& j) {
    int n = as_n(field(j, "n"));
    IntMatrix m = matrix_from_json(field(j, "matrix"));
    if (m.size() != static_cast<std::size_t>(n) + 1) throw ParseError("matrix must be (n+1)x(n+1)");
    std::optional<Int> amp;
    if (auto it = j.find("amplitude_M"); it != j.end() && !it->is_null()) amp = as_int(*it, "amplitude_M");
    return KAuto(n, std::move(m), amp);
}

Summand summand_from_json(const Json& j, int n) {
    std::string type = as_string(field(j, "type"), "type");
    try {
        if (type == "band") {
            Int r = j.contains("r") ? as_int(j["r"], "r") : 1;
            Int m = j.contains("m") ? as_int(j["m"], "m") : 1;
            Label lam = j.contains("lambda") ? Label::parse(as_string(j["lambda"], "lambda")) : Label{};
            return Band(n, r, int_list(field(j, "multideg"), "multideg"), lam, m);
        }
        if (type == "chain") {
            auto d = int_list(field(j, "multideg"), "multideg");
            Int k = j.contains("k") ? as_int(j["k"], "k") : static_cast<Int>(d.size());
            Int start = j.contains("start") ? as_int(j["start"], "start") : 0;
            return Chain(n, k, start, std::move(d));
        }
        if (type == "torsion") {
            Int length = j.contains("length") ? as_int(j["length"], "length") : 1;
            std::variant<SmoothPoint, NodePoint> pos = SmoothPoint{};
            if (j.contains("position")) {
                const Json& p = j["position"];
                if (p.contains("node"))
                    pos = NodePoint{as_int(p["node"], "node")};
                else if (p.contains("smooth"))
                    pos = SmoothPoint{as_int(p["smooth"], "smooth"),
                                      p.contains("label") ? Label::parse(as_string(p["label"], "label")) : Label{}};
                else
                    throw ParseError("torsion position needs 'smooth' or 'node'");
            }
            return Torsion(n, pos, length);
        }
    } catch (const OverflowError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown summand type '" + type + "'");
}

SheafObject sheaf_from_json(const Json& j) {
    int n = as_n(field(j, "n"));
    const Json& list = field(j, "summands");
    if (!list.is_array()) throw ParseError("summands must be an array");
    std::vector<Summand> out;
    for (const auto& s : list) out.push_back(summand_from_json(s, n));
    return SheafObject(n, std::move(out));
}

} // namespace ngon::io
