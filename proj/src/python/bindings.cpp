#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grpcalc/betti_bounds.hpp"
#include "grpcalc/chains.hpp"
#include "grpcalc/cli.hpp"
#include "grpcalc/cohomology.hpp"
#include "grpcalc/coset_enum.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/girth.hpp"
#include "grpcalc/groupring.hpp"
#include "grpcalc/report.hpp"
#include "grpcalc/words.hpp"

namespace py = pybind11;
using namespace grpcalc;

namespace {

std::string str(const Rational& q) { return q.get_den() == 1 ? q.get_num().get_str() : q.get_str(); }

Order order_of(const py::object& o) {
  if (o.is_none()) return Order::infinite();
  if (py::isinstance<py::str>(o)) return Order::parse(o.cast<std::string>());
  return Order::finite(o.cast<std::uint64_t>());
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

py::dict parse(const std::string& text) {
  std::vector<ParseWarning> warnings;
  Presentation p = parse_presentation(text, &warnings);
  py::dict d;
  d["generators"] = p.generator_names();
  std::vector<std::string> rels;
  for (const Word& r : p.relators()) rels.push_back(render_word(r, p.generator_names()));
  d["relators"] = rels;
  std::vector<std::string> ws;
  for (const ParseWarning& w : warnings) ws.push_back(w.message);
  d["warnings"] = ws;
  d["text"] = render(p);
  return d;
}

std::vector<py::tuple> approximants(const std::string& text, std::uint64_t p, std::size_t depth,
                                    std::size_t max_index) {
  Presentation g = parse_presentation(text);
  BettiReport r;
  {
    py::gil_scoped_release release;
    r = approx_sequence(g, derived_p_chain(g, p, depth, max_index));
  }
  std::vector<py::tuple> out;
  for (const Approximant& a : r.approximants) out.push_back(py::make_tuple(a.index, a.h1, str(a.normalized)));
  return out;
}

std::string torsion(const std::vector<py::object>& orders) {
  std::vector<Order> os;
  for (const auto& o : orders) os.push_back(order_of(o));
  return str(torsion_bound(os));
}

std::string free_product(const std::vector<std::pair<std::string, py::object>>& summands,
                         const std::vector<std::uint64_t>& relator_orders) {
  std::vector<Summand> s;
  for (const auto& [beta, order] : summands) s.push_back({parse_rational(beta), order_of(order)});
  return str(free_product_lower_bound(s, relator_orders));
}

FiniteGroup group_of(const std::string& text) {
  return FiniteGroup::from_table(enumerate(parse_presentation(text), {}));
}

py::dict uncertainty(const std::string& text, const std::map<std::uint32_t, std::string>& coefficients) {
  FiniteGroup g = group_of(text);
  RingElement f;
  for (const auto& [x, c] : coefficients) f.add(x, parse_rational(c));
  UncertaintyResult r = uncertainty_check(g, f);
  py::dict d;
  d["rank"] = r.rank;
  d["support"] = r.support;
  d["order"] = r.order;
  d["pass"] = r.pass;
  d["equality"] = r.equality;
  return d;
}

py::dict pgroup(const std::string& text, std::uint64_t p) {
  FiniteGroup g = group_of(text);
  AugmentationChain c = augmentation_powers_mod_p(g, p);
  py::dict d;
  d["order"] = g.order();
  d["dims"] = c.dims;
  d["nilpotent"] = c.reached_zero;
  d["p_group"] = p_group_verdict(g, p);
  return d;
}

std::size_t girth(const std::string& text) { return girth_finite(enumerate(parse_presentation(text), {})); }

}  // namespace

PYBIND11_MODULE(_grpcalc, m) {
  m.doc() = "Exact computations for finitely presented groups";
  // translators run most recent first, so the base class goes first
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());

  m.def("run", &run, py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
  m.def("parse", &parse, py::arg("text"));
  m.def("approximants", &approximants, py::arg("text"), py::arg("p") = 2, py::arg("depth") = kDefaultChainDepth,
        py::arg("max_index") = kDefaultMaxIndex);
  m.def("trivial_bound", [](std::size_t k) { return str(trivial_bound(k)); }, py::arg("k"));
  m.def("torsion_bound", &torsion, py::arg("orders"));
  m.def("free_product_bound", &free_product, py::arg("summands"), py::arg("relator_orders") = std::vector<std::uint64_t>{});
  m.def("relator_length_bound", [](const std::string& text) { return str(relator_length_bound(parse_presentation(text))); },
        py::arg("text"));
  m.def("uncertainty", &uncertainty, py::arg("text"), py::arg("coefficients"));
  m.def("pgroup", &pgroup, py::arg("text"), py::arg("p"));
  m.def("girth_finite", &girth, py::arg("text"));
}
