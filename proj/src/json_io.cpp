#include "grasscut/json_io.hpp"

#include <stdexcept>

namespace grasscut {

Json json_rational(const Rational &q) {
  return Json{{"n", q.num().to_string()}, {"d", q.den().to_string()}};
}

Json json_point(const LatticePoint &p) {
  Json out = Json::array();
  for (int c : p.coords)
    out.push_back(c);
  return out;
}

Json json_points(const std::vector<LatticePoint> &pts) {
  Json out = Json::array();
  for (const auto &p : pts)
    out.push_back(json_point(p));
  return out;
}

Json json_pair(const IndexPair &p) { return Json::array({p.i1, p.i2}); }

Json json_monomial(const PluckerMonomial &m) {
  Json out = Json::array();
  for (const auto &p : m.factors)
    out.push_back(json_pair(p));
  return out;
}

Json json_functional(const LatticeFunctional &f) {
  Json out = Json::array();
  for (int e : f.exps)
    out.push_back(e);
  return out;
}

Json json_qvec(const QVec &v) {
  Json out = Json::array();
  for (const auto &q : v)
    out.push_back(json_rational(q));
  return out;
}

Json json_cell(const LatticeConvex &c) {
  Json bounds = Json::array();
  for (const auto &[mask, d] : c.bounds)
    bounds.push_back(Json{{"mask", mask}, {"bound", d}});
  return Json{{"points", json_points(c.points)},
              {"hull_dim", c.hull_dim},
              {"bounds", bounds}};
}

Json json_paving(const Paving &p) {
  Json cells = Json::array();
  for (const auto &c : p.cells)
    cells.push_back(json_cell(c));
  return Json{{"id", p.id}, {"cells", cells}};
}

Json json_cone(const Cone &c) {
  Json lin = Json::array();
  for (const auto &l : c.lineality)
    lin.push_back(json_qvec(l));
  Json rays = Json::array();
  for (const auto &r : c.rays)
    rays.push_back(json_qvec(r));
  return Json{{"types", json_points(c.domain)},
              {"lineality", lin},
              {"rays", rays}};
}

Json json_report(const EmbeddingReport &r) {
  Json failures = Json::array();
  for (const auto &f : r.failures)
    failures.push_back(f);
  return Json{{"chart", r.chart},
              {"clauses",
               Json{{"units", r.reps_ok},
                    {"formulas", r.formulas_ok},
                    {"twist", r.twist_ok},
                    {"scaled_minor", r.scaled_ok}}},
              {"unit_representatives", r.unit_reps},
              {"regular_representatives", r.regular_reps},
              {"trials", r.trials},
              {"seed", r.seed},
              {"failures", failures}};
}

Json json_chart(const ChartSpec &c) {
  Json vars = Json::array();
  for (const auto &v : c.variables)
    vars.push_back(v);
  Json inverted = Json::array();
  for (const auto &u : c.inverted)
    inverted.push_back(u.to_string());
  Json theta = Json::array();
  for (int r = 1; r <= 2; ++r) {
    Json row = Json::array();
    for (int col = 1; col <= c.sizes.columns(); ++col)
      row.push_back(c.theta.at(r, col).to_string());
    theta.push_back(row);
  }
  Json reps = Json::array();
  for (const auto &[t, p] : c.reps)
    reps.push_back(Json{{"type", json_point(t)}, {"pair", json_pair(p)}});
  return Json{{"name", c.name},
              {"shape", c.sizes.to_string()},
              {"pivots", Json::array({c.pivot1, c.pivot2})},
              {"target", c.target},
              {"variables", vars},
              {"inverted", inverted},
              {"theta", theta},
              {"representatives", reps}};
}

ChartSpec chart_from_json(const Json &j) {
  ChartSpec out;
  out.name = j.at("name").get<std::string>();
  out.sizes = SizeVector::parse(j.at("shape").get<std::string>());
  out.family = shape_family(out.sizes);
  out.pivot1 = j.at("pivots").at(0).get<int>();
  out.pivot2 = j.at("pivots").at(1).get<int>();
  out.target = j.at("target").get<std::string>();
  for (const auto &v : j.at("variables"))
    out.variables.push_back(v.get<std::string>());
  for (const auto &u : j.at("inverted"))
    out.inverted.push_back(parse_poly(u.get<std::string>()));
  out.theta = Matrix2xN(out.sizes.columns());
  for (int r = 1; r <= 2; ++r)
    for (int col = 1; col <= out.sizes.columns(); ++col)
      out.theta.set(
          r, col,
          parse_ratfunc(j.at("theta")
                            .at(static_cast<std::size_t>(r - 1))
                            .at(static_cast<std::size_t>(col - 1))
                            .get<std::string>()));
  for (const auto &rp : j.at("representatives")) {
    std::vector<int> coords;
    for (const auto &x : rp.at("type"))
      coords.push_back(x.get<int>());
    out.reps.emplace_back(LatticePoint(coords),
                          IndexPair(rp.at("pair").at(0).get<int>(),
                                    rp.at("pair").at(1).get<int>()));
  }
  // load-time validation
  if (!out.theta.at(1, out.pivot1).equals(RatFunc(1)) ||
      !out.theta.at(2, out.pivot1).is_zero() ||
      !out.theta.at(1, out.pivot2).is_zero() ||
      !out.theta.at(2, out.pivot2).equals(RatFunc(1)))
    throw std::invalid_argument("chart_from_json: bad pivot structure in " +
                                out.name);
  for (int r = 1; r <= 2; ++r)
    for (int col = 1; col <= out.sizes.columns(); ++col)
      if (!out.theta.at(r, col).regular_over(out.inverted, 6))
        throw std::invalid_argument(
            "chart_from_json: denominator not a product of inverted "
            "elements in " +
            out.name);
  for (const auto &[t, p] : out.reps)
    if (!(pair_type(out.sizes, p) == t))
      throw std::invalid_argument(
          "chart_from_json: representative type mismatch in " + out.name);
  return out;
}

std::map<std::string, Rational> params_from_json(const Json &j) {
  std::map<std::string, Rational> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_string())
      out[it.key()] = Rational::from_string(it.value().get<std::string>());
    else if (it.value().is_number_integer())
      out[it.key()] = Rational(it.value().get<long long>());
    else
      throw std::invalid_argument("params: values must be strings or ints");
  }
  return out;
}

} // namespace grasscut
