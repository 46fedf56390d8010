// ngon: command-line front end. Every verb prints one JSON document (or a
// flattened table) on stdout. Exit 0 ok, 1 domain error, 2 malformed input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "ngon/json_io.hpp"
#include "ngon/oracle.hpp"

using namespace ngon;
using io::Json;

namespace {

struct Options {
    std::string format = "json";
    Int box = 25;
    std::uint64_t seed = 0;
    bool oracle = false;
};

// Arguments naming an existing file are read from disk, anything else is inline JSON.
Json load(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return io::parse_text(ss.str());
    }
    return io::parse_text(arg);
}

Int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(std::string(what) + " must be an integer, got '" + text + "'");
    }
}

Int parse_level(const std::string& text) {
    Int n = parse_int(text, "level");
    if (n < 1) throw DomainError("level must be positive");
    return n;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array()) && !(j.size() == 2 && j[0].is_number())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << (prefix.empty() ? "value" : prefix) << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const Options& opt) {
    if (opt.format == "table")
        flatten(j, "", std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

Json verb_phase_classes(const std::string& level, const Options& opt) {
    Int n = parse_level(level);
    if (!opt.oracle) return class_count(n);
    Json j;
    j["formula"] = class_count(n);
    j["oracle"] = oracle::CuspOrbits(n).orbit_count();
    return j;
}

Json verb_cusps(const std::string& level, const Options& opt) {
    Int n = parse_level(level);
    Json list = Json::array();
    for (const auto& c : enumerate_cusps(n)) list.push_back(io::to_json(c));
    if (!opt.oracle) return list;
    Json j;
    j["cusps"] = list;
    j["oracle_orbit_count"] = oracle::CuspOrbits(n).orbit_count();
    return j;
}

Json verb_reduce(const std::string& level, const std::string& slope, const Options& opt) {
    Int n = parse_level(level);
    Slope s = Slope::parse(slope);
    auto red = cusp_canonicalize(n, s);
    Json j;
    j["level"] = n;
    j["slope"] = s.str();
    j["class"] = io::to_json(red.cusp);
    j["witness"] = io::to_json(red.witness);
    if (opt.oracle) {
        oracle::CuspOrbits orbits(n);
        Json o;
        o["orbit_agrees"] = orbits.orbit_of(s) == orbits.orbit_of(red.cusp.representative());
        // Random Gamma_0 images of the input must land in the same class.
        std::mt19937_64 rng(opt.seed);
        bool stable = true;
        for (int i = 0; i < 32; ++i)
            stable = stable && cusp_class_of(n, random_gamma0(n, 4, rng).act(s)) == red.cusp;
        o["random_images_agree"] = stable;
        if (n <= 4) {
            auto w = oracle::word_bfs_witness(n, s, red.cusp.representative());
            o["word_witness"] = w ? io::to_json(*w) : Json(nullptr);
        }
        j["oracle"] = o;
    }
    return j;
}

Json verb_classify(const std::string& level, const std::string& slope, const std::string& phase, const Options&) {
    Int n = parse_level(level);
    if (slope.empty() == phase.empty()) throw ParseError("classify needs exactly one of --slope or --phase");
    PhasePoint p = slope.empty() ? io::phase_from_json(load(phase)) : slope_to_phase(Slope::parse(slope));
    return io::to_json(classify(static_cast<int>(n), p));
}

Json verb_check_compat(const std::string& input, const Options& opt) {
    KAuto a = io::kauto_from_json(load(input));
    auto report = check_compatibility(a);
    Json j = io::to_json(report);
    if (opt.oracle && report.charge_matrix) {
        const IntMat2 c = *report.charge_matrix; // already composed with [1] when needed
        Json o;
        o["box"] = opt.box;
        o["closed_form"] = check_order(c);
        o["brute_force"] = oracle::order_preserved_brute(c, opt.box);
        auto sup = oracle::box_supremum(c, opt.box);
        o["box_supremum"] = sup ? io::to_json(*sup) : Json(nullptr);
        j["oracle"] = o;
    }
    return j;
}

Json verb_lift(const std::string& level, const std::string& matrix, const std::string& kernel, const std::string& amplitude,
               const Options&) {
    Int n = parse_level(level);
    SL2Mat m = io::sl2_from_json(load(matrix));
    std::optional<IntMatrix> ka;
    if (!kernel.empty()) ka = io::matrix_from_json(load(kernel));
    std::optional<Int> amp = 0;
    if (amplitude == "none")
        amp.reset();
    else if (!amplitude.empty())
        amp = parse_int(amplitude, "amplitude");
    return io::to_json(lift_k_matrix(static_cast<int>(n), m, ka, amp));
}

Json verb_hn(const std::string& input, const Options& opt) {
    SheafObject s = io::sheaf_from_json(load(input));
    HNResult h = hn_of_object(s);
    std::vector<ChargeVec> charges;
    for (const auto& slice : h.slices) charges.push_back(slice.total_charge);
    Json j = io::to_json(h);
    j["polygon"] = io::to_json(hn_polygon(charges));
    if (opt.oracle) {
        std::vector<ChargeVec> all;
        for (const auto& x : s.summands) all.push_back(charge(k_class(x)));
        j["oracle"]["hull_brute"] = io::to_json(oracle::hull_brute(all));
    }
    return j;
}

Json verb_charge(const std::string& input, const Options&) {
    Json in = load(input);
    KClass k = in.is_object() && in.contains("summands") ? k_class(io::sheaf_from_json(in)) : io::kclass_from_json(in);
    Json j;
    j["k_class"] = io::to_json(k);
    ChargeVec z = charge(k);
    j["charge"] = io::to_json(z);
    j["phase"] = z.is_zero() ? Json(nullptr) : io::to_json(phase_of_charge(z));
    j["slope"] = z.is_zero() ? Json(nullptr) : Json(slope_phase_convert(phase_of_charge(z)).str());
    return j;
}

Json verb_semistable(const std::string& input, const Options& opt) {
    SheafObject s = io::sheaf_from_json(load(input));
    Json list = Json::array();
    for (const auto& x : s.summands) {
        Json j;
        j["summand"] = io::to_json(x);
        j["verdict"] = to_string(is_semistable(x));
        j["phase"] = io::to_json(phase(x));
        if (opt.oracle) {
            if (const auto* c = std::get_if<Chain>(&x))
                j["oracle"] = to_string(oracle::chain_stability_brute(*c));
            else if (const auto* b = std::get_if<Band>(&x))
                j["oracle"] = to_string(oracle::band_stability_brute(*b));
        }
        list.push_back(j);
    }
    Json j;
    j["n"] = s.n;
    j["summands"] = list;
    return j;
}

Json verb_rigid(const std::string& level, const std::string& r_text, const std::string& s_text, const Options& opt) {
    Int n = parse_level(level);
    Int r = parse_int(r_text, "r"), s = parse_int(s_text, "s");
    auto chains = enumerate_rigid(static_cast<int>(n), r, s);
    Json list = Json::array();
    for (const auto& c : chains) list.push_back(io::to_json(Summand(c)));
    Json j;
    j["n"] = n;
    j["r"] = r;
    j["s"] = s;
    j["multideg"] = rigid_multidegree(r, s);
    j["chains"] = list;
    if (opt.oracle) {
        auto [least, count] = oracle::rigid_search(r, s);
        j["oracle"]["least"] = least ? Json(*least) : Json(nullptr);
        j["oracle"]["count"] = count;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ngon: stability and phase-class computations on n-gon curves"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--box", opt.box, "Brute-force box radius")->check(CLI::Range(1, 200));
    app.add_option("--seed", opt.seed, "Seed for randomized oracle sampling");
    app.add_flag("--oracle", opt.oracle, "Also run the brute-force cross-check");

    std::function<Json()> action;
    std::string level, a1, a2, a3, a4;

    auto* pc = app.add_subcommand("phase-classes", "Number of phase classes for Gamma_0(N)");
    pc->add_option("N", level)->required();
    pc->callback([&] { action = [&] { return verb_phase_classes(level, opt); }; });

    auto* cu = app.add_subcommand("cusps", "Canonical representatives of the phase classes");
    cu->add_option("N", level)->required();
    cu->callback([&] { action = [&] { return verb_cusps(level, opt); }; });

    auto* re = app.add_subcommand("reduce", "Canonical class of a slope with a Gamma_0(N) witness");
    re->add_option("N", level)->required();
    re->add_option("slope", a1, "p/q or inf")->required();
    re->callback([&] { action = [&] { return verb_reduce(level, a1, opt); }; });

    auto* cl = app.add_subcommand("classify", "Stable moduli at a phase");
    cl->add_option("N", level)->required();
    cl->add_option("--slope", a1, "p/q or inf");
    cl->add_option("--phase", a2, "PhasePoint JSON");
    cl->callback([&] { action = [&] { return verb_classify(level, a1, a2, opt); }; });

    auto* cc = app.add_subcommand("check-compat", "Run the compatibility criterion on a K-automorphism");
    cc->add_option("kauto", a1, "file or inline JSON")->required();
    cc->callback([&] { action = [&] { return verb_check_compat(a1, opt); }; });

    auto* li = app.add_subcommand("lift", "Lift a Gamma_0(N) matrix to a K-automorphism");
    li->add_option("N", level)->required();
    li->add_option("matrix", a1, "[[a,b],[c,d]]")->required();
    li->add_option("--kernel-action", a2, "(N-1)x(N-1) action on the kernel");
    li->add_option("--amplitude", a3, "certificate M, or 'none'");
    li->callback([&] { action = [&] { return verb_lift(level, a1, a2, a3, opt); }; });

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan slices of a sheaf");
    hn->add_option("sheaf", a1, "file or inline JSON")->required();
    hn->callback([&] { action = [&] { return verb_hn(a1, opt); }; });

    auto* ch = app.add_subcommand("charge", "K-class, charge and phase of a sheaf or K-class");
    ch->add_option("input", a1, "file or inline JSON")->required();
    ch->callback([&] { action = [&] { return verb_charge(a1, opt); }; });

    auto* ss = app.add_subcommand("semistable", "Stability verdict of every summand");
    ss->add_option("sheaf", a1, "file or inline JSON")->required();
    ss->callback([&] { action = [&] { return verb_semistable(a1, opt); }; });

    auto* ri = app.add_subcommand("rigid", "Rigid chains of charge (-r, s) on E_N");
    ri->add_option("N", level)->required();
    ri->add_option("r", a1)->required();
    ri->add_option("s", a4)->required();
    ri->callback([&] { action = [&] { return verb_rigid(level, a1, a4, opt); }; });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        emit(action(), opt);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
