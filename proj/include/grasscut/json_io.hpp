#pragma once

#include "grasscut/charts.hpp"
#include "grasscut/polyhedral.hpp"
#include "grasscut/torsor.hpp"

#include "json.hpp"

namespace grasscut {

using Json = nlohmann::ordered_json;

// Rationals export as {"n": "...", "d": "..."} with decimal strings.
Json json_rational(const Rational &q);
Json json_point(const LatticePoint &p);
Json json_points(const std::vector<LatticePoint> &pts);
Json json_pair(const IndexPair &p);
Json json_monomial(const PluckerMonomial &m);

// Exponent vectors are integer arrays keyed by the sorted type list, which
// every export carries alongside.
Json json_functional(const LatticeFunctional &f);
Json json_qvec(const QVec &v);

Json json_cell(const LatticeConvex &c);
Json json_paving(const Paving &p);
Json json_cone(const Cone &c);
Json json_report(const EmbeddingReport &r);

// Chart catalog record: {name, shape, variables[], inverted[], theta[2][n]}
// with polynomial strings in the grammar of parse_poly/parse_ratfunc.
Json json_chart(const ChartSpec &c);
ChartSpec chart_from_json(const Json &j);

// Parameter files: {"var": "num/den", ...}.
std::map<std::string, Rational> params_from_json(const Json &j);

} // namespace grasscut
