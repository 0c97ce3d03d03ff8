#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hinv/corpus.hpp"
#include "hinv/json_io.hpp"
#include "hinv/twist.hpp"

namespace py = pybind11;
using namespace hinv;

namespace {

LieAlgebra lie_arg(const std::string& text) { return lie_from_json(parse_json_text(text)); }

std::string dump(const Json& j) { return j.dump(2); }

Json wedge_list(const std::vector<WedgeElement>& basis, const LieAlgebra& g) {
  Json arr = Json::array();
  for (const auto& r : basis) {
    Json j = wedge_to_json(r);
    j["text"] = format_wedge(r, g);
    arr.push_back(j);
  }
  return arr;
}

void require_valid(const LieAlgebra& g) {
  ValidationReport v = validate(g);
  if (!v.valid()) throw PreconditionError("invalid Lie algebra: " + v.violations.front().message);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-in, JSON-out bindings of the hinv C++ library";
  m.attr("SCHEMA_VERSION") = kReportSchemaVersion;

  // Translators run newest first, so the base class is registered first.
  auto& base = py::register_exception<Error>(m, "HinvError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  m.def(
      "validate",
      [](const std::string& lie) {
        std::vector<std::string> out;
        for (const auto& v : validate(lie_arg(lie)).violations) out.push_back(v.message);
        return out;
      },
      py::arg("lie"), "Violation messages; empty when the algebra is valid.");

  m.def(
      "invariants",
      [](const std::string& lie) {
        LieAlgebra g = lie_arg(lie);
        require_valid(g);
        return dump(wedge_list(invariant_wedge2(g), g));
      },
      py::arg("lie"));

  m.def(
      "central_z",
      [](const std::string& lie, const std::string& r, const std::string& s) {
        LieAlgebra g = lie_arg(lie);
        require_valid(g);
        auto engine = std::make_shared<const pbw::Engine>(g);
        CentralElement ce =
            central_element_z(engine, parse_wedge_argument(r, g.dim()), parse_wedge_argument(s, g.dim()));
        Json j;
        j["bracket_rs"] = tensor_to_json(ce.bracket_rs);
        j["bracket_rs_text"] = format_tensor(ce.bracket_rs);
        j["z"] = tensor_to_json(ce.z);
        j["z_text"] = format_tensor(ce.z);
        j["identity_holds"] = ce.identity_holds;
        j["z_central"] = ce.z_central;
        return dump(j);
      },
      py::arg("lie"), py::arg("r"), py::arg("s"), "r and s as \"i,j\" or wedge JSON.");

  m.def(
      "verify_twist",
      [](const std::string& lie, const std::string& r, int trunc) {
        if (trunc < 3) throw PreconditionError("trunc must be at least 3");
        LieAlgebra g = lie_arg(lie);
        require_valid(g);
        auto engine = std::make_shared<const pbw::Engine>(g);
        WedgeElement w = parse_wedge_argument(r, g.dim());
        if (!is_invariant(g, w)) throw PreconditionError("r is not ad-invariant");
        pbw::Tensor j = pbw::twist_from_wedge(engine, w, pbw::degree_window(*engine, trunc, 2, 2));
        bool invariance = true;
        for (const auto& d : pbw::invariance_defect(j, trunc)) invariance = invariance && d.is_zero();
        Json out;
        out["twist_defect_zero"] = pbw::twist_defect(j, trunc).is_zero();
        out["invariance_defect_zero"] = invariance;
        return dump(out);
      },
      py::arg("lie"), py::arg("r"), py::arg("trunc") = 6);

  m.def(
      "classify",
      [](const std::string& group) {
        GroupInput in = group_from_json(parse_json_text(group));
        return dump(report_to_json(classify_connected(in), in.lie));
      },
      py::arg("group"));

  m.def(
      "check_algebra",
      [](const std::string& lie, int trunc, bool pairs) {
        CorpusOptions opt;
        opt.trunc = trunc;
        opt.pairs = pairs;
        AlgebraCheckReport rep;
        {
          py::gil_scoped_release release;
          rep = check_algebra(lie_arg(lie), opt);
        }
        return dump(check_report_to_json(rep));
      },
      py::arg("lie"), py::arg("trunc") = 6, py::arg("pairs") = true);
}
