#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multimult/cli.hpp"
#include "multimult/ideal_mult.hpp"
#include "multimult/mixed_multiplicity.hpp"

namespace py = pybind11;
using namespace multimult;

namespace {

MultiDegree to_degree(const std::vector<int>& v) { return MultiDegree(v); }

py::dict terms_dict(const NumericalPolynomial& p) {
  py::dict out;
  for (const auto& [k, c] : p.terms()) out[py::tuple(py::cast(k.entries()))] = c;
  return out;
}

// Thin handle on a parsed input document.
class Document {
 public:
  explicit Document(const std::string& text) : doc_(parse_document(text)) {}

  std::size_t grading() const { return doc_.grading; }
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < doc_.ring->variable_count(); ++v) out.push_back(doc_.ring->name(v));
    return out;
  }
  bool has_module() const { return doc_.module.has_value(); }
  bool has_system() const { return doc_.system.has_value(); }

  py::dict hilbert() const {
    const HilbertDatum h = doc_.build_module().hilbert();
    py::dict out;
    out["terms"] = terms_dict(h.polynomial);
    out["degree"] = h.polynomial.degree().is_minus_infinity() ? py::object(py::str("-inf"))
                                                             : py::object(py::int_(h.polynomial.degree().value()));
    out["threshold"] = h.threshold.entries();
    out["certified"] = h.certified;
    return out;
  }

  Integer dimension(const std::vector<int>& n) const { return doc_.build_module().dimension(to_degree(n)); }

  Integer mixed(const std::vector<int>& k) const {
    return mixed_multiplicity(doc_.build_module(), to_degree(k)).value;
  }

  Integer ideal_mixed(int k0, const std::vector<int>& k) const {
    if (!doc_.system) throw Error(ErrorCode::InvalidArgument, "the input has no system block");
    return ideal_mixed_multiplicity(*doc_.system, k0, to_degree(k)).value;
  }

  std::pair<int, std::string> run(const std::string& command, const py::kwargs& kw) const {
    CommandFlags flags;
    if (kw.contains("type")) flags.type = to_degree(kw["type"].cast<std::vector<int>>());
    if (kw.contains("method")) flags.method = kw["method"].cast<std::string>();
    if (kw.contains("sequence")) flags.sequence = kw["sequence"].cast<std::string>();
    if (kw.contains("degree")) flags.degree = to_degree(kw["degree"].cast<std::vector<int>>());
    if (kw.contains("stabilize")) flags.stabilize = kw["stabilize"].cast<bool>();
    if (kw.contains("k0")) flags.k0 = kw["k0"].cast<int>();
    if (kw.contains("verify")) flags.verify = kw["verify"].cast<bool>();
    if (kw.contains("seed")) flags.seed = kw["seed"].cast<std::uint64_t>();
    const CommandOutcome out = run_command(command, doc_, flags);
    return {out.exit_code, out.report.dump()};
  }

 private:
  InputDocument doc_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mixed multiplicities of multigraded modules and of ideals";

  static py::exception<Error> error_type(m, "MultimultError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Document>(m, "Document")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def_property_readonly("grading", &Document::grading)
      .def_property_readonly("variables", &Document::variables)
      .def_property_readonly("has_module", &Document::has_module)
      .def_property_readonly("has_system", &Document::has_system)
      .def("hilbert", &Document::hilbert)
      .def("dimension", &Document::dimension, py::arg("n"))
      .def("mixed_multiplicity", &Document::mixed, py::arg("k"))
      .def("ideal_mixed_multiplicity", &Document::ideal_mixed, py::arg("k0"), py::arg("k"))
      .def("run", &Document::run, py::arg("command"));
}
