#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "tlkl/tables.hpp"
#include "tlkl/verify.hpp"

namespace py = pybind11;
using namespace tlkl;

namespace {

// One graph's engine. Text in, text out: words like "1 2 1" or "e",
// polynomials in the "q^(-1/2) + 2q" grammar.
class Session {
 public:
  explicit Session(const std::string& graph, bool largest_descent)
      : engine_(std::make_unique<Engine>(graph, largest_descent ? DescentPolicy::Largest : DescentPolicy::Smallest)) {}

  std::string graph() const { return engine_->group.graph().spec(); }
  std::string classification() const { return engine_->group.graph().classification().name; }
  bool gate_holds() const { return engine_->tl.cw0_holds(); }

  std::string canonical(const std::string& w) { return g().format(g().parse(w)); }
  int length(const std::string& w) { return g().length(g().parse(w)); }
  bool is_fc(const std::string& w) { return g().is_fully_commutative(g().parse(w)); }
  bool bruhat_leq(const std::string& x, const std::string& w) { return g().bruhat_leq(g().parse(x), g().parse(w)); }

  std::vector<py::dict> enumerate(int max_length) {
    std::vector<py::dict> out;
    for (Element w : g().enumerate_up_to(max_length)) {
      py::dict d;
      d["w"] = g().format(w);
      d["length"] = g().length(w);
      d["fc"] = g().is_fully_commutative(w);
      out.push_back(std::move(d));
    }
    return out;
  }

  std::pair<std::size_t, std::size_t> counts(int max_length) {
    const auto els = g().enumerate_up_to(max_length);
    std::size_t fc = 0;
    for (Element w : els) fc += g().is_fully_commutative(w);
    return {els.size(), fc};
  }

  std::pair<std::string, std::string> poly(const std::string& family, const std::string& x, const std::string& w,
                                           const std::string& route) {
    PolyResult r = compute_poly(*engine_, parse_family(family), g().parse(x), g().parse(w), route);
    return {r.poly.to_string(), route_name(r.route)};
  }

 private:
  CoxeterGroup& g() { return engine_->group; }
  std::unique_ptr<Engine> engine_;
};

std::vector<py::dict> table(const std::string& graph, const std::vector<std::string>& families, int max_length,
                            const std::string& route, unsigned threads, const std::string& cache) {
  TableOptions opt;
  opt.max_length = max_length;
  for (const auto& f : families) opt.families.push_back(parse_family(f));
  opt.routes = parse_route_mode(route);
  opt.threads = threads;
  opt.cache_dir = cache;
  TableResult res;
  {
    py::gil_scoped_release nogil;
    res = compute_table(graph, opt);
  }
  if (!res.mismatches.empty()) throw std::logic_error("route mismatch: " + res.mismatches.front());
  std::vector<py::dict> out;
  for (const auto& r : res.rows) {
    py::dict d;
    d["family"] = family_name(r.family);
    d["graph"] = r.graph;
    d["x"] = r.x;
    d["w"] = r.w;
    d["poly"] = r.poly;
    d["route"] = r.route;
    out.push_back(std::move(d));
  }
  return out;
}

py::dict verify(const std::string& graph, const std::string& suite, int max_length, unsigned threads,
                std::uint64_t seed) {
  VerifyOptions opt;
  opt.max_length = max_length;
  opt.threads = threads;
  opt.seed = seed;
  SuiteReport rep;
  {
    py::gil_scoped_release nogil;
    rep = run_suite(graph, parse_suite(suite), opt);
  }
  py::dict out;
  out["exit_code"] = rep.exit_code();
  out["passed"] = rep.passed();
  out["checked"] = rep.checked();
  out["report"] = format_report(rep);
  py::dict per;
  for (const auto& r : rep.results) {
    py::dict d;
    d["skipped"] = r.skipped;
    d["checked"] = r.checked;
    d["failed"] = r.failed;
    per[py::str(r.name)] = std::move(d);
  }
  out["identities"] = std::move(per);
  return out;
}

}  // namespace

PYBIND11_MODULE(_tlkl, m) {
  m.doc() = "Kazhdan-Lusztig style polynomials of Hecke and generalized Temperley-Lieb algebras";

  py::register_exception<GateError>(m, "GateError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, bool>(), py::arg("graph"), py::arg("largest_descent") = false)
      .def_property_readonly("graph", &Session::graph)
      .def_property_readonly("classification", &Session::classification)
      .def_property_readonly("gate_holds", &Session::gate_holds,
                             "True when the closed-formula routes are available")
      .def("canonical", &Session::canonical, py::arg("w"))
      .def("length", &Session::length, py::arg("w"))
      .def("is_fully_commutative", &Session::is_fc, py::arg("w"))
      .def("bruhat_leq", &Session::bruhat_leq, py::arg("x"), py::arg("w"))
      .def("enumerate", &Session::enumerate, py::arg("max_length") = -1)
      .def("counts", &Session::counts, py::arg("max_length") = -1, "(elements, fully commutative)")
      .def("poly", &Session::poly, py::arg("family"), py::arg("x"), py::arg("w"), py::arg("route") = "main",
           "(polynomial, route) for family R, P, D, a or L");

  m.def("table", &table, py::arg("graph"), py::arg("families"), py::arg("max_length") = -1,
        py::arg("route") = "main", py::arg("threads") = 1, py::arg("cache") = "");
  m.def("verify", &verify, py::arg("graph"), py::arg("suite") = "all", py::arg("max_length") = -1,
        py::arg("threads") = 1, py::arg("seed") = 0);
}
