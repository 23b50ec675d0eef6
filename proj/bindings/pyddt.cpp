#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ddt/cli.hpp"
#include "ddt/json_io.hpp"
#include "ddt/linfinity.hpp"
#include "ddt/mc.hpp"
#include "ddt/minimal.hpp"
#include "ddt/nerve.hpp"

namespace py = pybind11;
using namespace ddt;

namespace {

// JSON-string front door: every structured argument and result is a JSON
// document in the formats printed by `ddt schema`.
std::string jdump(const Json& j) { return j.dump(); }

std::string tangent_cohomology(const std::string& dgla_json) {
    DGLA l = dgla_from_json(Json::parse(dgla_json));
    return jdump(graded_space_to_json(cohomology(l.tangent_complex()).groups));
}

std::string complex_cohomology(const std::string& complex_json) {
    GradedComplex c = complex_from_json(Json::parse(complex_json));
    return jdump(graded_space_to_json(cohomology(c).groups));
}

std::string mc_enumerate_json(const std::string& dgla_json, const std::string& ring_json) {
    DGLA l = dgla_from_json(Json::parse(dgla_json));
    ArtinianDGAlgebra a = artinian_from_json(Json::parse(ring_json));
    MCSystem sys = build_mc_system(l, a);
    OrbitPartition p = deformation_classes(sys);
    Json out;
    Json sols = Json::array();
    for (auto& s : p.solutions) {
        Json v = Json::array();
        for (auto& x : s) v.push_back(scalar_to_json(x));
        sols.push_back(v);
    }
    out["solutions"] = sols;
    Json orbs = Json::array();
    for (auto& o : p.orbits) orbs.push_back(o);
    out["orbits"] = orbs;
    return jdump(out);
}

long mc_cohomology_py(const std::string& dgla_json, int n) {
    DGLA l = dgla_from_json(Json::parse(dgla_json));
    return mc_cohomology(l, n);
}

std::string minimal_model_py(const std::string& bicomplex_json) {
    Bicomplex b = bicomplex_from_json(Json::parse(bicomplex_json));
    MinimalDecomposition d = minimal_decomposition(b);
    Json out;
    out["homology"] = graded_space_to_json(d.homology);
    out["acyclic_dim"] = d.acyclic_part.total_dim();
    out["minimal_dim"] = d.minimal_part.total_dim();
    return jdump(out);
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    Json j;
    j["exit_code"] = code;
    j["stdout"] = out.str();
    j["stderr"] = err.str();
    return jdump(j);
}

}  // namespace

PYBIND11_MODULE(pyddt, m) {
    m.doc() = "exact derived deformation theory: DGLAs, Maurer-Cartan loci, Dold-Kan, minimal models";

    m.def("tangent_cohomology", &tangent_cohomology, py::arg("dgla_json"),
          "cohomology dimensions of a DGLA's tangent complex, as JSON");
    m.def("complex_cohomology", &complex_cohomology, py::arg("complex_json"));
    m.def("mc_enumerate", &mc_enumerate_json, py::arg("dgla_json"), py::arg("ring_json"),
          "MC solutions and gauge orbits over F_p, as JSON");
    m.def("mc_cohomology", &mc_cohomology_py, py::arg("dgla_json"), py::arg("n"));
    m.def("minimal_model", &minimal_model_py, py::arg("bicomplex_json"));
    m.def("run_cli", &run_cli, py::arg("args"), "run a ddt subcommand in-process");

    py::register_exception<validation_error>(m, "ValidationError");
}
