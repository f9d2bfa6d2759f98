#include "grasscut/charts.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grasscut {

STriple striple_of(const SizeVector &s, int column) {
  STriple out;
  out.j = column;
  out.t = s.block_of(column);
  out.p = column - s.block_begin(out.t) + 1;
  return out;
}

std::string ChartIndex::to_string() const {
  std::ostringstream os;
  os << "(" << j1.j << "," << j2.j << ",(";
  for (std::size_t i = 0; i < plus_list.size(); ++i)
    os << (i ? "," : "") << plus_list[i].j;
  os << "),(";
  for (std::size_t i = 0; i < minus_list.size(); ++i)
    os << (i ? "," : "") << minus_list[i].j;
  os << "))";
  return os.str();
}

std::vector<ChartIndex> enumerate_chart_indices(const SizeVector &s) {
  const int N = s.blocks();
  std::vector<ChartIndex> out;
  auto emit = [&](int t1, int p1, int t2, int p2,
                  const std::vector<int> &rest) {
    std::size_t r = rest.size();
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << r);
         ++mask) {
      std::vector<int> pos(r, 1);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == r) {
          ChartIndex ci;
          ci.j1 = STriple{s.block_begin(t1) + p1 - 1, t1, p1};
          ci.j2 = STriple{s.block_begin(t2) + p2 - 1, t2, p2};
          for (std::size_t i = 0; i < r; ++i) {
            STriple jt{s.block_begin(rest[i]) + pos[i] - 1, rest[i], pos[i]};
            if ((mask >> i) & 1u)
              ci.minus_list.push_back(jt);
            else
              ci.plus_list.push_back(jt);
          }
          out.push_back(std::move(ci));
          return;
        }
        for (int p = 1; p <= s.size(rest[k]); ++p) {
          pos[k] = p;
          rec(k + 1);
        }
      };
      rec(0);
    }
  };
  // pivots in two distinct blocks
  for (int t1 = 1; t1 <= N; ++t1)
    for (int t2 = t1 + 1; t2 <= N; ++t2) {
      std::vector<int> rest;
      for (int t = 1; t <= N; ++t)
        if (t != t1 && t != t2)
          rest.push_back(t);
      for (int p1 = 1; p1 <= s.size(t1); ++p1)
        for (int p2 = 1; p2 <= s.size(t2); ++p2)
          emit(t1, p1, t2, p2, rest);
    }
  // both pivots in one block
  for (int t1 = 1; t1 <= N; ++t1) {
    if (s.size(t1) < 2)
      continue;
    std::vector<int> rest;
    for (int t = 1; t <= N; ++t)
      if (t != t1)
        rest.push_back(t);
    for (int p1 = 1; p1 <= s.size(t1); ++p1)
      for (int p2 = p1 + 1; p2 <= s.size(t1); ++p2)
        emit(t1, p1, t1, p2, rest);
  }
  return out;
}

namespace {

bool all_singletons(const SizeVector &s) {
  for (int e : s.entries())
    if (e != 1)
      return false;
  return true;
}

std::string idx2(const std::string &base, int k, int r, int c) {
  return base + std::to_string(k) + "_" + std::to_string(r) +
         std::to_string(c);
}

} // namespace

std::vector<std::string> gamma_variables(const SizeVector &s,
                                         const ChartIndex &tau) {
  std::vector<std::string> out;
  bool simple = all_singletons(s);
  for (const auto &jt : tau.plus_list)
    out.push_back("a_" + std::to_string(jt.j));
  for (const auto &jt : tau.minus_list)
    out.push_back("a_" + std::to_string(jt.j));
  if (!tau.class_two()) {
    for (int c = 1; c <= s.size(tau.j1.t); ++c)
      if (c != tau.j1.p) {
        out.push_back("y_" + std::to_string(c));
        out.push_back("u_" + std::to_string(c));
      }
    for (int c = 1; c <= s.size(tau.j2.t); ++c)
      if (c != tau.j2.p) {
        out.push_back("v_" + std::to_string(c));
        out.push_back("z_" + std::to_string(c));
      }
  } else {
    for (int c = 1; c <= s.size(tau.j1.t); ++c)
      if (c != tau.j1.p && c != tau.j2.p) {
        out.push_back("w_1" + std::to_string(c));
        out.push_back("w_2" + std::to_string(c));
      }
  }
  for (std::size_t k = 0; k < tau.plus_list.size(); ++k) {
    const auto &jt = tau.plus_list[k];
    if (simple) {
      out.push_back("eta_" + std::to_string(jt.j));
      continue;
    }
    for (int c = 1; c <= s.size(jt.t); ++c)
      if (c != jt.p)
        out.push_back(idx2("eta", static_cast<int>(k + 1), 1, c));
    for (int c = 1; c <= s.size(jt.t); ++c)
      out.push_back(idx2("eta", static_cast<int>(k + 1), 2, c));
  }
  for (std::size_t k = 0; k < tau.minus_list.size(); ++k) {
    const auto &jt = tau.minus_list[k];
    if (simple) {
      out.push_back("xi_" + std::to_string(jt.j));
      continue;
    }
    for (int c = 1; c <= s.size(jt.t); ++c)
      out.push_back(idx2("xi", static_cast<int>(k + 1), 1, c));
    for (int c = 1; c <= s.size(jt.t); ++c)
      if (c != jt.p)
        out.push_back(idx2("xi", static_cast<int>(k + 1), 2, c));
  }
  return out;
}

Matrix2xN gamma_matrix(const SizeVector &s, const ChartIndex &tau,
                       const std::map<std::string, RatFunc> &params) {
  auto wanted = gamma_variables(s, tau);
  std::set<std::string> want(wanted.begin(), wanted.end());
  std::set<std::string> have;
  for (const auto &[k, v] : params)
    have.insert(k);
  if (want != have) {
    std::string msg = "gamma_matrix: wrong variable set;";
    for (const auto &w : want)
      if (!have.count(w))
        msg += " missing " + w;
    for (const auto &h : have)
      if (!want.count(h))
        msg += " extra " + h;
    throw std::invalid_argument(msg);
  }
  auto at = [&](const std::string &n) { return params.at(n); };
  bool simple = all_singletons(s);
  Matrix2xN m(s.columns());
  m.set(1, tau.j1.j, RatFunc(1));
  m.set(2, tau.j1.j, RatFunc(0));
  m.set(1, tau.j2.j, RatFunc(0));
  m.set(2, tau.j2.j, RatFunc(1));
  if (!tau.class_two()) {
    for (int c = 1; c <= s.size(tau.j1.t); ++c) {
      if (c == tau.j1.p)
        continue;
      int col = s.block_begin(tau.j1.t) + c - 1;
      m.set(1, col, at("y_" + std::to_string(c)));
      m.set(2, col, at("u_" + std::to_string(c)));
    }
    for (int c = 1; c <= s.size(tau.j2.t); ++c) {
      if (c == tau.j2.p)
        continue;
      int col = s.block_begin(tau.j2.t) + c - 1;
      m.set(1, col, at("v_" + std::to_string(c)));
      m.set(2, col, at("z_" + std::to_string(c)));
    }
  } else {
    for (int c = 1; c <= s.size(tau.j1.t); ++c) {
      if (c == tau.j1.p || c == tau.j2.p)
        continue;
      int col = s.block_begin(tau.j1.t) + c - 1;
      m.set(1, col, at("w_1" + std::to_string(c)));
      m.set(2, col, at("w_2" + std::to_string(c)));
    }
  }
  for (std::size_t k = 0; k < tau.plus_list.size(); ++k) {
    const auto &jt = tau.plus_list[k];
    RatFunc a = at("a_" + std::to_string(jt.j));
    for (int c = 1; c <= s.size(jt.t); ++c) {
      int col = s.block_begin(jt.t) + c - 1;
      RatFunc eta2 = simple ? at("eta_" + std::to_string(jt.j))
                            : at(idx2("eta", static_cast<int>(k + 1), 2, c));
      if (c == jt.p)
        m.set(1, col, a);
      else
        m.set(1, col, a * at(idx2("eta", static_cast<int>(k + 1), 1, c)));
      m.set(2, col, a * eta2);
    }
  }
  for (std::size_t k = 0; k < tau.minus_list.size(); ++k) {
    const auto &jt = tau.minus_list[k];
    RatFunc a = at("a_" + std::to_string(jt.j));
    for (int c = 1; c <= s.size(jt.t); ++c) {
      int col = s.block_begin(jt.t) + c - 1;
      RatFunc xi1 = simple ? at("xi_" + std::to_string(jt.j))
                           : at(idx2("xi", static_cast<int>(k + 1), 1, c));
      m.set(1, col, a * xi1);
      if (c == jt.p)
        m.set(2, col, a);
      else
        m.set(2, col, a * at(idx2("xi", static_cast<int>(k + 1), 2, c)));
    }
  }
  return m;
}

Matrix2xN gamma_matrix_symbolic(const SizeVector &s, const ChartIndex &tau) {
  std::map<std::string, RatFunc> params;
  for (const auto &v : gamma_variables(s, tau))
    params[v] = RatFunc::variable(v);
  return gamma_matrix(s, tau, params);
}

std::map<std::string, RatFunc>
sigma_lambda_max(int N, const std::vector<int> &lambda,
                 const std::map<std::string, RatFunc> &params) {
  if (static_cast<int>(lambda.size()) != N - 2)
    throw std::invalid_argument("sigma_lambda_max: bad permutation size");
  std::map<std::string, RatFunc> out;
  for (int j = 3; j <= N; ++j) {
    RatFunc a = params.at("a_" + std::to_string(j));
    RatFunc prod(1);
    int upto = lambda[static_cast<std::size_t>(j - 3)];
    for (int g = 1; g <= upto; ++g)
      prod *= params.at("epsP_" + std::to_string(g));
    out["a_" + std::to_string(j)] = a;
    out["eta_" + std::to_string(j)] = prod;
  }
  return out;
}

Matrix2xN b_lambda_matrix(int N, const std::vector<int> &lambda) {
  Matrix2xN m(N);
  m.set(1, 1, RatFunc(1));
  m.set(2, 1, RatFunc(0));
  m.set(1, 2, RatFunc(0));
  m.set(2, 2, RatFunc(1));
  for (int j = 3; j <= N; ++j) {
    RatFunc a = RatFunc::variable("a_" + std::to_string(j));
    RatFunc prod(1);
    for (int g = 1; g <= lambda[static_cast<std::size_t>(j - 3)]; ++g)
      prod *= RatFunc::variable("epsP_" + std::to_string(g));
    m.set(1, j, a);
    m.set(2, j, a * prod);
  }
  return m;
}

namespace {

enum class Fam { kPivot1, kPivot2, kPlus, kMinus };

Fam family_of(const ChartIndex &tau, int column) {
  if (column == tau.j1.j)
    return Fam::kPivot1;
  if (column == tau.j2.j)
    return Fam::kPivot2;
  for (const auto &jt : tau.plus_list)
    if (jt.j == column)
      return Fam::kPlus;
  for (const auto &jt : tau.minus_list)
    if (jt.j == column)
      return Fam::kMinus;
  throw std::logic_error("family_of: column not in index");
}

RatFunc va(int j) { return RatFunc::variable("a_" + std::to_string(j)); }
RatFunc veta(int j) { return RatFunc::variable("eta_" + std::to_string(j)); }
RatFunc vxi(int j) { return RatFunc::variable("xi_" + std::to_string(j)); }

} // namespace

std::vector<RatFunc> extended_block_tuple(int N, const ChartIndex &tau,
                                          int t) {
  if (tau.j1.j != 1 || tau.j2.j != 2)
    throw std::invalid_argument("extended_block_tuple: pivots must be (1,2)");
  std::vector<RatFunc> out;
  auto fam = [&](int c) { return family_of(tau, c); };
  if (t == 1) {
    for (int j = 2; j <= N; ++j) {
      if (j == 2)
        out.emplace_back(1);
      else if (fam(j) == Fam::kPlus)
        out.push_back(va(j) * veta(j));
      else
        out.push_back(va(j));
    }
    return out;
  }
  if (t == 2) {
    out.emplace_back(1); // coordinate (1,2)
    for (int j = 3; j <= N; ++j) {
      if (fam(j) == Fam::kPlus)
        out.push_back(-va(j));
      else
        out.push_back(-va(j) * vxi(j));
    }
    return out;
  }
  bool t_plus = fam(t) == Fam::kPlus;
  for (int i = 1; i < t; ++i) {
    if (i == 1) {
      out.push_back(t_plus ? -veta(t) : RatFunc(1));
    } else if (i == 2) {
      out.push_back(t_plus ? RatFunc(1) : -vxi(t));
    } else if (t_plus) {
      if (fam(i) == Fam::kPlus)
        out.push_back(-va(i) * (veta(t) - veta(i)));
      else
        out.push_back(va(i) * (RatFunc(1) - veta(t) * vxi(i)));
    } else {
      if (fam(i) == Fam::kPlus)
        out.push_back(va(i) * (RatFunc(1) - veta(i) * vxi(t)));
      else
        out.push_back(va(i) * (vxi(i) - vxi(t)));
    }
  }
  for (int j = t + 1; j <= N; ++j) {
    if (t_plus) {
      if (fam(j) == Fam::kPlus)
        out.push_back(-va(j) * (veta(j) - veta(t)));
      else
        out.push_back(-va(j) * (RatFunc(1) - veta(t) * vxi(j)));
    } else {
      if (fam(j) == Fam::kPlus)
        out.push_back(-va(j) * (RatFunc(1) - veta(j) * vxi(t)));
      else
        out.push_back(va(j) * (vxi(t) - vxi(j)));
    }
  }
  return out;
}

ExtensionCheck extension_check(int N, const ChartIndex &tau, int t,
                               const std::map<std::string, Rational> &assign) {
  ExtensionCheck out;
  std::vector<int> ones(static_cast<std::size_t>(N), 1);
  SizeVector s(ones);
  std::map<std::string, RatFunc> params;
  for (const auto &v : gamma_variables(s, tau))
    params[v] = RatFunc(assign.at(v));
  Matrix2xN m = gamma_matrix(s, tau, params);
  std::vector<Rational> direct;
  for (const auto &p : pairs_meeting_block(s, t)) {
    RatFunc v = m.minor_of(p);
    direct.push_back(
        Rational(v.num().constant_value(), v.den().constant_value()));
  }
  std::vector<Rational> ext;
  bool ext_nonzero = false;
  for (const auto &f : extended_block_tuple(N, tau, t)) {
    Rational q = f.eval(assign);
    ext_nonzero = ext_nonzero || !q.is_zero();
    ext.push_back(q);
  }
  if (!ext_nonzero) {
    out.pass = false;
    out.detail = "extended tuple vanished";
    return out;
  }
  out.direct_defined =
      std::any_of(direct.begin(), direct.end(),
                  [](const Rational &q) { return !q.is_zero(); });
  if (!out.direct_defined)
    return out; // vacuous on the indeterminate locus
  for (std::size_t i = 0; i < direct.size(); ++i)
    for (std::size_t j = i + 1; j < direct.size(); ++j)
      if (direct[i] * ext[j] != direct[j] * ext[i]) {
        out.pass = false;
        out.detail = "proportionality failed at coordinates " +
                     std::to_string(i) + "," + std::to_string(j);
        return out;
      }
  return out;
}

const IndexPair &ChartSpec::rep_of(const LatticePoint &v) const {
  for (const auto &[type, pair] : reps)
    if (type == v)
      return pair;
  throw std::out_of_range("ChartSpec: no representative for type " +
                          v.to_string());
}

bool chart_domain_check(const ChartSpec &chart,
                        const std::map<std::string, Rational> &assign) {
  for (const auto &u : chart.inverted)
    if (u.eval(assign).is_zero())
      return false;
  return true;
}

ChartSpec permute_chart(const ChartSpec &chart, const std::vector<int> &perm) {
  const int n = chart.sizes.columns();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_chart: wrong permutation length");
  for (int t = 1; t <= chart.sizes.blocks(); ++t) {
    int b = chart.sizes.block_begin(t);
    int tgt = chart.sizes.block_of(perm[static_cast<std::size_t>(b - 1)]);
    if (chart.sizes.size(tgt) != chart.sizes.size(t))
      throw std::invalid_argument("permute_chart: block size mismatch");
    for (int c = 0; c < chart.sizes.size(t); ++c)
      if (chart.sizes.block_of(perm[static_cast<std::size_t>(b + c - 1)]) !=
          tgt)
        throw std::invalid_argument(
            "permute_chart: blocks must map to blocks");
  }
  ChartSpec out = chart;
  out.name = chart.name + "_perm";
  Matrix2xN theta(n);
  for (int c = 1; c <= n; ++c) {
    int image = perm[static_cast<std::size_t>(c - 1)];
    theta.set(1, image, chart.theta.at(1, c));
    theta.set(2, image, chart.theta.at(2, c));
  }
  out.theta = theta;
  out.pivot1 = std::min(perm[static_cast<std::size_t>(chart.pivot1 - 1)],
                        perm[static_cast<std::size_t>(chart.pivot2 - 1)]);
  out.pivot2 = std::max(perm[static_cast<std::size_t>(chart.pivot1 - 1)],
                        perm[static_cast<std::size_t>(chart.pivot2 - 1)]);
  std::vector<std::pair<LatticePoint, IndexPair>> reps;
  for (const auto &[type, pair] : chart.reps) {
    int a = perm[static_cast<std::size_t>(pair.i1 - 1)];
    int b = perm[static_cast<std::size_t>(pair.i2 - 1)];
    IndexPair moved(std::min(a, b), std::max(a, b));
    reps.emplace_back(pair_type(chart.sizes, moved), moved);
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  out.reps = reps;
  return out;
}

} // namespace grasscut
