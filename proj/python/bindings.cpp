#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ngon/json_io.hpp"

namespace py = pybind11;
using namespace ngon;
using io::Json;

// Values cross the boundary as JSON text; the Python package wraps these with json.loads/dumps.

namespace {

std::string dump(const Json& j) { return j.dump(); }

std::string cusps(Int n) {
    Json list = Json::array();
    for (const auto& c : enumerate_cusps(n)) list.push_back(io::to_json(c));
    return dump(list);
}

std::string reduce(Int n, const std::string& slope) {
    auto red = cusp_canonicalize(n, Slope::parse(slope));
    Json j;
    j["class"] = io::to_json(red.cusp);
    j["witness"] = io::to_json(red.witness);
    return dump(j);
}

std::string classify_slope(int n, const std::string& slope) {
    return dump(io::to_json(classify(n, slope_to_phase(Slope::parse(slope)))));
}

std::string classify_phase(int n, const std::string& phase) {
    return dump(io::to_json(classify(n, io::phase_from_json(io::parse_text(phase)))));
}

std::string check_compat(const std::string& kauto) {
    return dump(io::to_json(check_compatibility(io::kauto_from_json(io::parse_text(kauto)))));
}

std::string lift(int n, const std::string& matrix, const std::optional<std::string>& kernel, std::optional<Int> amplitude) {
    std::optional<IntMatrix> ka;
    if (kernel) ka = io::matrix_from_json(io::parse_text(*kernel));
    return dump(io::to_json(lift_k_matrix(n, io::sl2_from_json(io::parse_text(matrix)), ka, amplitude)));
}

std::string hn(const std::string& sheaf) { return dump(io::to_json(hn_of_object(io::sheaf_from_json(io::parse_text(sheaf))))); }

std::string charge_of(const std::string& sheaf) {
    KClass k = k_class(io::sheaf_from_json(io::parse_text(sheaf)));
    Json j;
    j["k_class"] = io::to_json(k);
    j["charge"] = io::to_json(charge(k));
    return dump(j);
}

std::string semistable(const std::string& sheaf) {
    SheafObject s = io::sheaf_from_json(io::parse_text(sheaf));
    Json list = Json::array();
    for (const auto& x : s.summands) list.push_back(to_string(is_semistable(x)));
    return dump(list);
}

std::string rigid(int n, Int r, Int s) {
    Json list = Json::array();
    for (const auto& c : enumerate_rigid(n, r, s)) list.push_back(io::to_json(Summand(c)));
    return dump(list);
}

std::vector<std::pair<Int, Int>> polygon(const std::vector<std::pair<Int, Int>>& charges) {
    std::vector<ChargeVec> cs;
    for (auto [re, im] : charges) cs.push_back({re, im});
    std::vector<std::pair<Int, Int>> out;
    for (auto v : hn_polygon(cs).vertices) out.emplace_back(v.re, v.im);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stability and phase-class computations on n-gon curves";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("class_count", &class_count, py::arg("n"));
    m.def("cusps", &cusps, py::arg("n"));
    m.def("reduce", &reduce, py::arg("n"), py::arg("slope"));
    m.def("classify_slope", &classify_slope, py::arg("n"), py::arg("slope"));
    m.def("classify_phase", &classify_phase, py::arg("n"), py::arg("phase"));
    m.def("check_compat", &check_compat, py::arg("kauto"));
    m.def("lift", &lift, py::arg("n"), py::arg("matrix"), py::arg("kernel_action") = py::none(), py::arg("amplitude") = 0);
    m.def("hn", &hn, py::arg("sheaf"));
    m.def("charge", &charge_of, py::arg("sheaf"));
    m.def("semistable", &semistable, py::arg("sheaf"));
    m.def("rigid", &rigid, py::arg("n"), py::arg("r"), py::arg("s"));
    m.def("hn_polygon", &polygon, py::arg("charges"));
}
