#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hg/io.hpp"
#include "hg/weyl.hpp"

namespace py = pybind11;
using namespace hg;

namespace {

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::string canonical_group(const std::string& text) { return parse_group(text)->str(); }

std::string universal_group_of(const std::string& grading) {
  return universal_group(grading_from_json(Json::parse(grading))).group->str();
}

std::string verify_grading_of(const std::string& grading) {
  Grading G = grading_from_json(Json::parse(grading));
  auto r = verify_grading(G);
  Json j{{"ok", r.ok}, {"failure", r.failure}, {"detail", r.detail}};
  Json w = Json::array();
  for (auto& v : r.witness) w.push_back(vect_json(*G.alg, v));
  j["witness"] = w;
  return j.dump();
}

py::tuple snf(const std::vector<std::vector<long>>& a) {
  IntMat A;
  for (auto& row : a) {
    IntVec r;
    for (long x : row) r.emplace_back(x);
    A.push_back(r);
  }
  auto S = smith_normal_form(A);
  auto conv = [](const IntMat& M) {
    std::vector<std::vector<long>> out;
    for (auto& row : M) {
      std::vector<long> r;
      for (auto& x : row) {
        if (!x.fits_slong_p()) throw std::overflow_error("entry does not fit a machine integer");
        r.push_back(x.get_si());
      }
      out.push_back(r);
    }
    return out;
  };
  return py::make_tuple(conv(S.U), conv(S.D), conv(S.V));
}

}  // namespace

PYBIND11_MODULE(_heisgrad, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  m.def("run", &run, py::arg("args"), "run the command line front end; returns (exit code, stdout, stderr)");
  m.def("canonical_group", &canonical_group, py::arg("text"));
  m.def("universal_group", &universal_group_of, py::arg("grading_json"));
  m.def("verify_grading", &verify_grading_of, py::arg("grading_json"));
  m.def("smith_normal_form", &snf, py::arg("matrix"));
  m.def("weyl_order_heisenberg", [](int k) { return weyl_order_heisenberg(k).get_str(); }, py::arg("k"));
  m.def("weyl_order_super", [](int k, int mm, int r) { return weyl_order_super(k, mm, r).get_str(); }, py::arg("k"),
        py::arg("m"), py::arg("r"));
}
