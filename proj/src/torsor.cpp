#include "grasscut/torsor.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grasscut {

namespace {

std::size_t type_index(const std::vector<LatticePoint> &domain,
                       const LatticePoint &v) {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == v)
      return i;
  throw std::out_of_range("type not in domain");
}

LatticeFunctional functional_of(const std::vector<LatticePoint> &domain,
                                const CharExponent &g) {
  LatticeFunctional f;
  f.exps.assign(domain.size(), 0);
  for (const auto &[v, e] : g)
    f.exps[type_index(domain, v)] += e;
  return f;
}

LatticePoint type4_local(int a, int b) {
  std::vector<int> v(4, 0);
  if (a == b)
    v[static_cast<std::size_t>(a - 1)] = 2;
  else {
    v[static_cast<std::size_t>(a - 1)] = 1;
    v[static_cast<std::size_t>(b - 1)] = 1;
  }
  return LatticePoint(v);
}

} // namespace

Splitting standard_splitting(const SizeVector &s) {
  Splitting out;
  out.domain = enumerate_types(s);
  auto fam = s.blocks() == 4 && s.entries()[0] == 1 && s.entries()[1] == 1 &&
                     s.entries()[2] == 1 && s.entries()[3] >= 2
                 ? "pinned"
                 : "constructed";
  if (std::string(fam) == "pinned") {
    // dual characters: the cross-ratio pair, the complementary pair, and the
    // doubled-block ratio; section exponents per the identification section
    auto mk = [&](std::initializer_list<std::pair<std::pair<int, int>, int>>
                      entries) {
      CharExponent g;
      for (const auto &[pr, e] : entries)
        g.emplace_back(type4_local(pr.first, pr.second), e);
      return functional_of(out.domain, g);
    };
    out.dual_basis = {
        mk({{{2, 3}, 1}, {{1, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}}),
        mk({{{1, 2}, 1}, {{3, 4}, 1}, {{2, 3}, -1}, {{1, 4}, -1}}),
        mk({{{1, 3}, 1}, {{4, 4}, 1}, {{1, 4}, -1}, {{3, 4}, -1}})};
    out.section.assign(out.domain.size(), std::vector<int>(3, 0));
    auto set_row = [&](int a, int b, std::initializer_list<int> exps) {
      auto &row = out.section[type_index(out.domain, type4_local(a, b))];
      row.assign(exps);
    };
    set_row(1, 4, {0, -1, 0});
    set_row(2, 4, {-1, -1, 0});
    set_row(4, 4, {0, -1, 1});
  } else {
    out.dual_basis = perp_lattice_basis(s);
    std::size_t r = out.dual_basis.size();
    std::size_t m = out.domain.size();
    ZMat mat(r, ZVec(m));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m; ++j)
        mat[i][j] = BigInt(out.dual_basis[i].exps[j]);
    ZMat section = integer_right_inverse(mat); // m x r
    out.section.assign(m, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < r; ++j)
        out.section[i][j] = static_cast<int>(section[i][j].to_ll());
  }
  // section property: dual_i composed with the section is the i-th
  // coordinate
  for (std::size_t i = 0; i < out.rank(); ++i)
    for (std::size_t j = 0; j < out.rank(); ++j) {
      long acc = 0;
      for (std::size_t q = 0; q < out.domain.size(); ++q)
        acc += static_cast<long>(out.dual_basis[i].exps[q]) *
               out.section[q][j];
      if (acc != (i == j ? 1 : 0))
        throw std::logic_error("standard_splitting: section check failed");
    }
  return out;
}

std::vector<Rational> lambda_of_scalars(const Splitting &b,
                                        const std::vector<Rational> &c) {
  std::vector<Rational> out;
  for (const auto &m : b.dual_basis) {
    Rational acc(1);
    for (std::size_t q = 0; q < c.size(); ++q) {
      if (c[q].is_zero())
        throw std::domain_error("lambda_of_scalars: zero scalar");
      if (m.exps[q])
        acc *= Rational::pow(c[q], m.exps[q]);
    }
    out.push_back(acc.inv());
  }
  return out;
}

bool twist_relations_check(const SizeVector &s, const Splitting &b,
                           const std::vector<Rational> &lambda,
                           const std::map<IndexPair, Rational> &z) {
  for (const auto &l : lambda)
    if (l.is_zero())
      throw std::domain_error("twist_relations_check: zero lambda");
  // per-type scale of the section at lambda
  std::vector<Rational> scale;
  for (std::size_t q = 0; q < b.domain.size(); ++q) {
    Rational acc(1);
    for (std::size_t j = 0; j < b.rank(); ++j)
      if (b.section[q][j])
        acc *= Rational::pow(lambda[j], b.section[q][j]);
    scale.push_back(acc);
  }
  std::vector<std::string> labels;
  std::vector<Rational> coords;
  for (const auto &p : all_pairs(s.columns())) {
    auto it = z.find(p);
    if (it == z.end())
      throw std::invalid_argument("twist_relations_check: missing pair " +
                                  p.to_string());
    std::size_t q = type_index(b.domain, pair_type(s, p));
    labels.push_back(pair_label(p));
    coords.push_back(it->second * scale[q]);
  }
  return check_plucker_relations(ProjectivePoint(labels, coords),
                                 s.columns());
}

Rational OmegaPoint::z_at(const IndexPair &p) const {
  for (const auto &[pr, v] : z)
    if (pr == p)
      return v;
  throw std::out_of_range("OmegaPoint: missing pair " + p.to_string());
}

OmegaPoint embedding_image(const ChartSpec &chart, const AmbientChart &target,
                           const std::map<std::string, Rational> &params,
                           const std::map<LatticePoint, Rational> &xvals) {
  if (!chart_domain_check(chart, params))
    throw std::domain_error("embedding_image: off the chart domain");
  auto types = enumerate_types(chart.sizes);
  std::vector<Rational> g_vals;
  for (const auto &v : types) {
    Rational g = chart.theta.minor_of(chart.rep_of(v)).eval(params);
    if (g.is_zero())
      throw std::domain_error(
          "embedding_image: representative minor vanishes");
    g_vals.push_back(g);
  }
  OmegaPoint out;
  for (const auto &gen : target.generators) {
    Rational acc(1);
    for (const auto &[v, e] : gen) {
      std::size_t q = type_index(types, v);
      Rational gx = g_vals[q] / xvals.at(types[q]);
      acc *= Rational::pow(gx, e);
    }
    out.gen_coords.push_back(acc);
  }
  for (const auto &p : all_pairs(chart.sizes.columns())) {
    std::size_t q = type_index(types, pair_type(chart.sizes, p));
    Rational val = chart.theta.minor_of(p).eval(params) / g_vals[q] *
                   xvals.at(types[q]);
    out.z.emplace_back(p, val);
  }
  return out;
}

std::vector<Rational>
lambda_of_image(const SizeVector &s, const Splitting &b,
                const ChartSpec &chart,
                const std::map<std::string, Rational> &params,
                const std::map<LatticePoint, Rational> &xvals) {
  auto types = enumerate_types(s);
  std::vector<Rational> c;
  for (const auto &v : types) {
    Rational g = chart.theta.minor_of(chart.rep_of(v)).eval(params);
    if (g.is_zero())
      throw std::domain_error("lambda_of_image: representative vanishes");
    c.push_back(xvals.at(v) / g);
  }
  return lambda_of_scalars(b, c);
}

RepStatus representative_status(const ChartSpec &chart,
                                const LatticePoint &v) {
  RatFunc g = chart.theta.minor_of(chart.rep_of(v));
  // unit: +-1 times a monomial in the variables times inverted elements
  {
    IntPoly num = g.num();
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto &u : chart.inverted) {
        auto q = num.divide_exact(u);
        if (q && !q->is_zero()) {
          num = *q;
          progress = true;
        }
      }
    }
    // reduce a pure monomial: a single term with coefficient +-1
    bool unit = false;
    if (num.term_count() == 1) {
      BigInt c = num.terms().begin()->second;
      unit = c.is_one() || (-c).is_one();
    }
    if (unit && g.den().is_constant()) {
      BigInt dc = g.den().constant_value();
      if (dc.is_one() || (-dc).is_one())
        return RepStatus::kUnit;
    }
    if (unit) {
      // fraction denominators are products of inverted elements by the
      // catalog invariant, so the minor stays a unit
      RatFunc recip = RatFunc(IntPoly(1)) / g;
      if (recip.regular_over(chart.inverted, 6))
        return RepStatus::kUnit;
    }
  }
  // regular: every same-type minor divides it over the localization
  for (const auto &p : pairs_of_type(chart.sizes, v)) {
    RatFunc ratio = chart.theta.minor_of(p) / g;
    if (!ratio.regular_over(chart.inverted, 6))
      return RepStatus::kBad;
  }
  return RepStatus::kRegular;
}

std::map<std::string, Rational> sample_chart_params(const ChartSpec &chart,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto types = enumerate_types(chart.sizes);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::map<std::string, Rational> params;
    for (const auto &v : chart.variables)
      params[v] = Rational(static_cast<long long>(rng() % 41) - 20,
                           static_cast<long long>(rng() % 20) + 1);
    if (!chart_domain_check(chart, params))
      continue;
    bool ok = true;
    for (const auto &v : types) {
      const IndexPair &rep = chart.rep_of(v);
      RatFunc m = chart.theta.minor_of(rep);
      if (m.den_vanishes_at(params) || m.eval(params).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok)
      return params;
  }
  throw std::runtime_error("sample_chart_params: rejection sampling exhausted");
}

std::map<LatticePoint, Rational> sample_type_scalars(const SizeVector &s,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::map<LatticePoint, Rational> out;
  for (const auto &v : enumerate_types(s)) {
    long long num = 0;
    while (num == 0)
      num = static_cast<long long>(rng() % 41) - 20;
    out[v] = Rational(num, static_cast<long long>(rng() % 20) + 1);
  }
  return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string &name,
                       int trial) {
  std::uint64_t h = seed;
  for (char c : name)
    h = h * 1099511628211ull + static_cast<unsigned char>(c);
  h ^= static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ull;
  return h;
}

} // namespace

EmbeddingReport verify_embedding_with_reps(
    const ChartSpec &chart_in,
    const std::vector<std::pair<LatticePoint, IndexPair>> &reps, int trials,
    std::uint64_t seed) {
  ChartSpec chart = chart_in;
  chart.reps = reps;
  EmbeddingReport rep;
  rep.chart = chart.name;
  rep.trials = trials;
  rep.seed = seed;
  auto types = enumerate_types(chart.sizes);
  const auto ambients = ambient_charts(chart.sizes);
  const AmbientChart *target = nullptr;
  for (const auto &a : ambients)
    if (a.name == chart.target)
      target = &a;
  if (!target) {
    rep.failures.push_back("unknown target chart " + chart.target);
    return rep;
  }

  // clause (a): representative data and symbolic regularity
  rep.reps_ok = true;
  for (const auto &[v, p] : chart.reps)
    if (!(pair_type(chart.sizes, p) == v)) {
      rep.reps_ok = false;
      rep.failures.push_back("representative " + p.to_string() +
                             " has the wrong type");
    }
  if (rep.reps_ok) {
    for (const auto &v : types) {
      switch (representative_status(chart, v)) {
      case RepStatus::kUnit:
        ++rep.unit_reps;
        break;
      case RepStatus::kRegular:
        ++rep.regular_reps;
        break;
      case RepStatus::kBad:
        rep.reps_ok = false;
        rep.failures.push_back("representative for " + v.to_string() +
                               " does not divide its type class");
        break;
      }
    }
    // generator images must also be regular on the chart
    for (std::size_t k = 0; k < target->generators.size() && rep.reps_ok;
         ++k) {
      RatFunc acc(1);
      for (const auto &[v, e] : target->generators[k]) {
        RatFunc g = chart.theta.minor_of(chart.rep_of(v));
        for (int i = 0; i < (e > 0 ? e : -e); ++i)
          acc = e > 0 ? acc * g : acc / g;
      }
      if (!acc.regular_over(chart.inverted, 8)) {
        rep.reps_ok = false;
        rep.failures.push_back("generator image " + std::to_string(k) +
                               " is not regular on the chart");
      }
    }
  }

  // clause (b): pinned simplified formulas, where present
  rep.formulas_ok = true;
  for (const auto &f : pinned_formulas(chart)) {
    RatFunc expected = parse_ratfunc(f.expected);
    RatFunc got;
    if (f.is_generator) {
      got = RatFunc(1);
      for (const auto &[v, e] :
           target->generators[static_cast<std::size_t>(f.generator)]) {
        RatFunc g = chart.theta.minor_of(chart.rep_of(v));
        for (int i = 0; i < (e > 0 ? e : -e); ++i)
          got = e > 0 ? got * g : got / g;
      }
    } else {
      got = chart.theta.minor_of(f.pair) /
            chart.theta.minor_of(chart.rep_of(pair_type(chart.sizes, f.pair)));
    }
    if (!got.equals(expected)) {
      rep.formulas_ok = false;
      rep.failures.push_back(
          "simplified formula mismatch at " +
          (f.is_generator ? "generator " + std::to_string(f.generator)
                          : "pair " + f.pair.to_string()));
    }
  }

  // clauses (c) and (d): sampled twisted relations and scaled minors
  rep.twist_ok = true;
  rep.scaled_ok = true;
  Splitting b = standard_splitting(chart.sizes);
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t ts = mix_seed(seed, chart.name, trial);
    std::map<std::string, Rational> params;
    try {
      params = sample_chart_params(chart, ts);
    } catch (const std::exception &e) {
      rep.twist_ok = false;
      rep.failures.push_back(std::string("sampling failed: ") + e.what());
      break;
    }
    auto xvals = sample_type_scalars(chart.sizes, ts);
    OmegaPoint pt = embedding_image(chart, *target, params, xvals);
    auto lambda = lambda_of_image(chart.sizes, b, chart, params, xvals);
    std::map<IndexPair, Rational> z;
    for (const auto &[p, v] : pt.z)
      z[p] = v;
    if (!twist_relations_check(chart.sizes, b, lambda, z)) {
      rep.twist_ok = false;
      rep.failures.push_back("twisted relation violated at trial " +
                             std::to_string(trial));
    }
    // generator coordinates agree with the lambda monomials
    for (std::size_t k = 0; k < target->generators.size(); ++k) {
      LatticeFunctional f = functional_of(types, target->generators[k]);
      // express through the dual basis pairing with the section
      Rational expect(1);
      for (std::size_t j = 0; j < b.rank(); ++j) {
        long coeff = 0;
        for (std::size_t q = 0; q < types.size(); ++q)
          coeff += static_cast<long>(f.exps[q]) * b.section[q][j];
        if (coeff)
          expect *= Rational::pow(lambda[j], coeff);
      }
      if (pt.gen_coords[k] != expect) {
        rep.twist_ok = false;
        rep.failures.push_back("generator coordinate mismatch at trial " +
                               std::to_string(trial));
      }
    }
    // clause (d): the representative coordinate reproduces x, and scaling
    // back by g/x recovers the minors exactly
    for (const auto &v : types) {
      if (pt.z_at(chart.rep_of(v)) != xvals.at(v)) {
        rep.scaled_ok = false;
        rep.failures.push_back("representative coordinate for " +
                               v.to_string() + " does not reproduce x at " +
                               "trial " + std::to_string(trial));
      }
    }
    for (const auto &[p, zv] : pt.z) {
      LatticePoint v = pair_type(chart.sizes, p);
      Rational g = chart.theta.minor_of(chart.rep_of(v)).eval(params);
      Rational minor = chart.theta.minor_of(p).eval(params);
      if (zv * g / xvals.at(v) != minor) {
        rep.scaled_ok = false;
        rep.failures.push_back("scaled tuple mismatch at " + p.to_string() +
                               " trial " + std::to_string(trial));
      }
    }
    if (!rep.twist_ok || !rep.scaled_ok)
      break;
  }
  return rep;
}

EmbeddingReport verify_embedding(const ChartSpec &chart, int trials,
                                 std::uint64_t seed) {
  return verify_embedding_with_reps(chart, chart.reps, trials, seed);
}

std::optional<std::map<std::string, Rational>>
solve_chart_params(const ChartSpec &chart, const Matrix2xN &numeric) {
  std::map<std::string, Rational> assign;
  std::set<std::string> remaining(chart.variables.begin(),
                                  chart.variables.end());
  struct Eq {
    IntPoly poly; // = 0
  };
  std::vector<Eq> eqs;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= chart.sizes.columns(); ++c) {
      const RatFunc &e = chart.theta.at(r, c);
      Rational val = numeric.num_at(r, c);
      // e.num - val * e.den = 0; clear the rational value
      IntPoly p = e.num() * IntPoly(val.den()) - e.den() * IntPoly(val.num());
      if (!p.is_zero())
        eqs.push_back({p});
    }
  bool progress = true;
  while (progress && !remaining.empty()) {
    progress = false;
    for (const auto &eq : eqs) {
      RatFunc cur = eq.poly.partial_eval(assign);
      if (cur.is_zero())
        continue;
      const IntPoly &num = cur.num();
      if (num.vars().size() != 1)
        continue;
      const std::string &var = num.vars()[0];
      if (!remaining.count(var))
        continue;
      if (num.total_degree() != 1)
        continue;
      // a * var + b = 0
      Rational a(0), bq(0);
      for (const auto &[e, coef] : num.terms()) {
        if (e[0] == 0)
          bq = Rational(coef);
        else if (e[0] == 1)
          a = Rational(coef);
      }
      if (a.is_zero())
        continue;
      assign[var] = -bq / a;
      remaining.erase(var);
      progress = true;
    }
  }
  if (!remaining.empty())
    return std::nullopt;
  // verify all equations and the chart domain
  for (const auto &eq : eqs) {
    RatFunc cur = eq.poly.partial_eval(assign);
    if (!cur.is_zero())
      return std::nullopt;
  }
  if (!chart_domain_check(chart, assign))
    return std::nullopt;
  return assign;
}

OverlapResult overlap_ratio_check(const ChartSpec &a, const ChartSpec &b,
                                  int trials, std::uint64_t seed) {
  OverlapResult out;
  if (!(a.sizes == b.sizes)) {
    out.detail = "different shapes";
    return out;
  }
  out.ok = true;
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t ts = mix_seed(seed, a.name + "|" + b.name, trial);
    std::map<std::string, Rational> pa;
    try {
      pa = sample_chart_params(a, ts);
    } catch (const std::exception &) {
      continue;
    }
    Matrix2xN m = a.theta.eval(pa);
    auto pb = solve_chart_params(b, m);
    if (!pb)
      continue;
    ++out.samples;
    out.checked = true;
    // all minor ratios agree: both sides evaluate the same matrix, so
    // compare the minors of b's matrix at the solved parameters
    Matrix2xN mb = b.theta.eval(*pb);
    for (const auto &p : all_pairs(a.sizes.columns())) {
      Rational va = m.minor_of(p).eval({});
      Rational vb = mb.minor_of(p).eval({});
      if (va != vb) {
        out.ok = false;
        out.detail = "minor mismatch at " + p.to_string();
        return out;
      }
    }
  }
  if (!out.checked)
    out.detail = "no common sample";
  return out;
}

std::map<IndexPair, Rational>
face_restrict_point(const SizeVector &s, const std::vector<int> &quadruple,
                    const std::map<IndexPair, Rational> &z) {
  std::set<int> keep(quadruple.begin(), quadruple.end());
  std::map<IndexPair, Rational> out;
  for (const auto &[p, v] : z) {
    if (keep.count(s.block_of(p.i1)) && keep.count(s.block_of(p.i2)))
      out[p] = v;
  }
  return out;
}

} // namespace grasscut
