// Python bindings for the main operations: type sets, weight monomials,
// paves/pavings, fan data, the chart catalog and the verification suites.

#include "grasscut/json_io.hpp"

#include <pybind11/pybind11.h>

#include <random>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace grasscut;

namespace {

SizeVector parse_s(const std::string &s) { return SizeVector::parse(s); }

std::vector<std::vector<int>> py_types(const std::string &s) {
  std::vector<std::vector<int>> out;
  for (const auto &p : enumerate_types(parse_s(s)))
    out.push_back(p.coords);
  return out;
}

std::vector<std::vector<int>> py_essential_weights(const std::string &s) {
  std::vector<std::vector<int>> out;
  for (const auto &w : essential_weights(parse_s(s)))
    out.push_back(w.coords);
  return out;
}

int py_height(const std::string &s, const std::vector<int> &w) {
  return height(parse_s(s), WeightVector(w));
}

std::vector<std::vector<std::pair<int, int>>>
py_weight_monomials(const std::string &s, const std::vector<int> &w) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto &m : weight_monomials(parse_s(s), WeightVector(w))) {
    std::vector<std::pair<int, int>> factors;
    for (const auto &p : m.factors)
      factors.emplace_back(p.i1, p.i2);
    out.push_back(factors);
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> py_paves(const std::string &s) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto &c : enumerate_paves(parse_s(s))) {
    std::vector<std::vector<int>> pts;
    for (const auto &p : c.points)
      pts.push_back(p.coords);
    out.push_back(pts);
  }
  return out;
}

std::vector<std::vector<std::vector<std::vector<int>>>>
py_pavings(const std::string &s) {
  std::vector<std::vector<std::vector<std::vector<int>>>> out;
  for (const auto &pv : enumerate_pavings(parse_s(s))) {
    std::vector<std::vector<std::vector<int>>> cells;
    for (const auto &c : pv.cells) {
      std::vector<std::vector<int>> pts;
      for (const auto &p : c.points)
        pts.push_back(p.coords);
      cells.push_back(pts);
    }
    out.push_back(cells);
  }
  return out;
}

std::string py_fan(const std::string &s) {
  SizeVector sv = parse_s(s);
  Json out = Json::array();
  for (const auto &pv : enumerate_pavings(sv)) {
    Cone cone = cone_of_paving(sv, pv);
    auto gens = dual_chart_generators(sv, pv);
    Json g = Json::array();
    for (const auto &f : gens)
      g.push_back(json_functional(f));
    Json item = json_paving(pv);
    item["cone"] = json_cone(cone);
    item["chart_generators"] = g;
    out.push_back(item);
  }
  return out.dump();
}

std::vector<std::string> py_chart_names(const std::string &s) {
  std::vector<std::string> out;
  for (const auto &c : chart_catalog(parse_s(s)))
    out.push_back(c.name);
  return out;
}

std::string py_chart_json(const std::string &s, const std::string &name) {
  for (const auto &c : chart_catalog(parse_s(s)))
    if (c.name == name)
      return json_chart(c).dump();
  throw std::out_of_range("unknown chart " + name);
}

py::dict py_verify_embedding(const std::string &s, const std::string &name,
                             int trials, std::uint64_t seed) {
  for (const auto &c : chart_catalog(parse_s(s)))
    if (c.name == name) {
      auto r = verify_embedding(c, trials, seed);
      py::dict out;
      out["chart"] = r.chart;
      out["pass"] = r.pass();
      out["units"] = r.reps_ok;
      out["formulas"] = r.formulas_ok;
      out["twist"] = r.twist_ok;
      out["scaled_minor"] = r.scaled_ok;
      out["failures"] = r.failures;
      return out;
    }
  throw std::out_of_range("unknown chart " + name);
}

bool py_cross_ratio_check(int trials, std::uint64_t seed) {
  SizeVector s({1, 1, 1, 1});
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < trials) {
    Matrix2xN m(4);
    for (int r = 1; r <= 2; ++r)
      for (int c = 1; c <= 4; ++c)
        m.set(r, c,
              RatFunc(Rational(static_cast<long long>(rng() % 41) - 20,
                               static_cast<long long>(rng() % 20) + 1)));
    auto pt = plucker_vector(m);
    if (!pt)
      continue;
    ++done;
    auto img = map_Fw(s, WeightVector(std::vector<int>{1, 1, 1, 1}), *pt);
    if (!img)
      continue;
    auto c = img->canonical().coords();
    if (!(c[0] - c[1] + c[2]).is_zero())
      return false;
  }
  return true;
}

} // namespace

PYBIND11_MODULE(_grasscut, m) {
  m.doc() = "exact blow-up data for two-row Grassmannian quotients";
  m.def("types", &py_types, py::arg("s"),
        "admissible type vectors of the size vector");
  m.def("essential_weights", &py_essential_weights, py::arg("s"));
  m.def("height", &py_height, py::arg("s"), py::arg("w"));
  m.def("weight_monomials", &py_weight_monomials, py::arg("s"), py::arg("w"),
        "generator monomials as lists of column pairs");
  m.def("paves", &py_paves, py::arg("s"));
  m.def("pavings", &py_pavings, py::arg("s"));
  m.def("fan_json", &py_fan, py::arg("s"),
        "cones and chart generators of every paving, as JSON");
  m.def("chart_names", &py_chart_names, py::arg("s"));
  m.def("chart_json", &py_chart_json, py::arg("s"), py::arg("name"));
  m.def("verify_embedding", &py_verify_embedding, py::arg("s"),
        py::arg("name"), py::arg("trials") = 10, py::arg("seed") = 1);
  m.def("cross_ratio_check", &py_cross_ratio_check, py::arg("trials") = 50,
        py::arg("seed") = 1);
}
