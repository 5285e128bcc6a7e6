// Python bindings: fillings cross the boundary as lists of rows, cells as
// (row, col) tuples, and series coefficients as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rimhook/classical.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/pakmap.hpp"
#include "rimhook/series.hpp"
#include "rimhook/verify.hpp"

namespace py = pybind11;
using namespace rimhook;

namespace {

using CellT = std::pair<int, int>;

Cell cell(const CellT& c) { return {c.first, c.second}; }
CellT tup(const Cell& u) { return {u.row, u.col}; }

std::vector<CellT> tups(const std::vector<Cell>& cs) {
  std::vector<CellT> out;
  for (const auto& u : cs) out.push_back(tup(u));
  return out;
}

Rpp rpp(const Grid& rows) { return Rpp::validate(shape_of(rows), rows); }
Tableau tableau(const Grid& rows) { return Tableau::validate(shape_of(rows), rows); }

py::int_ big(const BigInt& n) { return py::int_(py::module_::import("builtins").attr("int")(n.str())); }

py::list coeffs(const TruncatedSeries& s) {
  py::list out;
  for (const auto& c : s.coefficients()) out.append(big(c));
  return out;
}

// {exponent tuple: coefficient}; variable k sits at position k - low.
py::dict terms(const MultiTraceSeries& s) {
  py::dict out;
  for (const auto& [m, c] : s.terms()) out[py::tuple(py::cast(m.exponents))] = big(c);
  return out;
}

py::dict insert(const Grid& rows, const CellT& anchor) {
  const Rpp pi = rpp(rows);
  auto r = try_insert(rim_hook(pi.shape(), cell(anchor)), pi);
  py::dict d;
  d["ok"] = r.ok();
  d["path"] = tups(r.path().cells);
  if (r.ok()) {
    d["result"] = r.result().rows();
  } else {
    d["reason"] = r.failure().reason;
    d["witness"] = r.failure().witness ? py::cast(tup(*r.failure().witness)) : py::none();
  }
  return d;
}

py::dict factorize_py(const Grid& rows) {
  auto f = factorize(rpp(rows));
  py::dict d;
  d["anchors"] = tups(f.factorization.anchors);
  d["tableau"] = f.tableau.rows();
  return d;
}

py::dict verify_py(const std::string& suite, unsigned jobs) {
  VerifyConfig cfg;
  cfg.jobs = jobs;
  SuiteReport r;
  {
    py::gil_scoped_release unlocked;
    r = run_suite(suite, cfg);
  }
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["checks"] = r.checks;
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_rimhook, m) {
  m.doc() = "Rim-hook insertion on reverse plane partitions";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("hook_length", [](const std::vector<int>& shape, const CellT& u) { return hook_length(Partition(shape), cell(u)); });
  m.def("rim_hook", [](const std::vector<int>& shape, const CellT& u) { return tups(rim_hook(Partition(shape), cell(u)).cells); });
  m.def("candidates", [](const Grid& rows) { return tups(candidates(rpp(rows))); });
  m.def("insertion_path", [](const Grid& rows, const CellT& anchor) {
    const Rpp pi = rpp(rows);
    return tups(insertion_path(rim_hook(pi.shape(), cell(anchor)), pi).cells);
  });
  m.def("insert", &insert, py::arg("pi"), py::arg("anchor"));
  m.def("factorize", &factorize_py, py::arg("pi"));
  m.def("build", [](const Grid& t) { return build(tableau(t)).rows(); }, py::arg("tableau"));
  m.def(
      "xi",
      [](const Grid& rows, std::optional<CellT> corner) {
        const Rpp pi = rpp(rows);
        return (corner ? xi_through(pi, cell(*corner)) : xi(pi)).rows();
      },
      py::arg("pi"), py::arg("corner") = py::none());
  m.def("zeta", [](const Grid& rows, const CellT& x) { return zeta(rpp(rows), cell(x)).rows(); });
  m.def("hg", [](const Grid& rows) { return hg(rpp(rows)).rows(); });
  m.def("hg_inv", [](const Grid& t) { return hg_inv(tableau(t)).rows(); });
  m.def("rsk", [](const Grid& t) {
    auto pair = rsk(tableau(t));
    return std::make_pair(pair.p.rows(), pair.q.rows());
  });
  m.def(
      "rsk_inv",
      [](const Grid& p, const Grid& q, std::optional<std::vector<int>> shape) {
        SsytPair pair{rpp(p), rpp(q)};
        return (shape ? rsk_inv(pair, Partition(*shape)) : rsk_inv(pair)).rows();
      },
      py::arg("p"), py::arg("q"), py::arg("shape") = py::none());
  m.def("trace", [](const Grid& rows, int k) { return trace(rpp(rows), k); });
  m.def("hook_product", [](const std::vector<int>& shape, int n) { return coeffs(hook_product(Partition(shape), n)); });
  m.def("rpp_series", [](const std::vector<int>& shape, int n) { return coeffs(rpp_series(Partition(shape), n)); });
  m.def("gansner_product", [](const std::vector<int>& shape, int d) { return terms(gansner_product(Partition(shape), d)); });
  m.def("trace_series", [](const std::vector<int>& shape, int d) { return terms(trace_series(Partition(shape), d)); });
  m.def("suite_names", &suite_names);
  m.def("verify", &verify_py, py::arg("suite"), py::arg("jobs") = 1);
}
