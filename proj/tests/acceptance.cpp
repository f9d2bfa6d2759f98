// Acceptance suite: the benchmark computations at desk scale, one line per
// criterion. Exits nonzero when any criterion fails.

#include "grasscut/json_io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

using namespace grasscut;

namespace {

int failures = 0;

void criterion(int number, const std::string &label,
               const std::function<bool(std::string &)> &body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception &e) {
    detail = std::string("exception: ") + e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count() /
      1000.0;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << label << " (" << secs << " s)";
  if (!ok && !detail.empty())
    std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok)
    ++failures;
}

LatticePoint tp(int a, int b) {
  std::vector<int> v(4, 0);
  if (a == b)
    v[static_cast<std::size_t>(a - 1)] = 2;
  else {
    v[static_cast<std::size_t>(a - 1)] = 1;
    v[static_cast<std::size_t>(b - 1)] = 1;
  }
  return LatticePoint(v);
}

std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> ps) {
  std::vector<LatticePoint> out;
  for (auto [a, b] : ps)
    out.push_back(tp(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

LatticeFunctional chi(const SizeVector &s,
                      const std::map<std::pair<int, int>, int> &vals) {
  auto types = enumerate_types(s);
  LatticeFunctional f;
  f.exps.assign(types.size(), 0);
  for (const auto &[pr, v] : vals) {
    LatticePoint t = tp(pr.first, pr.second);
    for (std::size_t i = 0; i < types.size(); ++i)
      if (types[i] == t)
        f.exps[i] = v;
  }
  return f;
}

QVec fn_of(const SizeVector &s,
           const std::map<std::pair<int, int>, long long> &vals) {
  auto types = enumerate_types(s);
  QVec out(types.size(), Rational(0));
  for (const auto &[pr, v] : vals) {
    LatticePoint t = tp(pr.first, pr.second);
    for (std::size_t i = 0; i < types.size(); ++i)
      if (types[i] == t)
        out[i] = Rational(v);
  }
  return out;
}

const Paving *find_paving(const std::vector<Paving> &all,
                          const std::set<std::vector<LatticePoint>> &want) {
  for (const auto &p : all) {
    std::set<std::vector<LatticePoint>> got;
    for (const auto &c : p.cells)
      got.insert(c.points);
    if (got == want)
      return &p;
  }
  return nullptr;
}

std::vector<SizeVector> sweep_sizes() {
  std::vector<SizeVector> out;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int rem) {
    if (cur.size() >= 2 && cur.size() <= 5)
      out.push_back(SizeVector(cur));
    if (cur.size() == 5 || rem == 0)
      return;
    for (int s = 1; s <= rem; ++s) {
      cur.push_back(s);
      gen(rem - s);
      cur.pop_back();
    }
  };
  gen(8);
  return out;
}

} // namespace

int main() {
  SizeVector bench({1, 1, 1, 2});
  auto S12 = pts({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto S13 = pts({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  auto S23 = pts({{1, 2}, {2, 3}, {2, 4}, {1, 3}, {3, 4}});
  auto S24 = pts({{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S34 = pts({{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
  auto S14 = pts({{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto S4 = pts({{1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S144 = pts({{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S244 = pts({{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});
  auto S344 = pts({{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 4}});
  auto S1234 = pts({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S12344 =
      pts({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});

  std::vector<Paving> pavings;

  criterion(1, "pave and paving census for s = (1,1,1,2)", [&](std::string &d) {
    auto paves = enumerate_paves(bench);
    std::set<std::vector<LatticePoint>> got;
    for (const auto &p : paves)
      got.insert(p.points);
    std::set<std::vector<LatticePoint>> expect{
        S12, S13, S23, S24, S34, S14, S4, S144, S244, S344, S1234, S12344};
    if (paves.size() != 12 || got != expect) {
      d = "pave census mismatch (" + std::to_string(paves.size()) + ")";
      return false;
    }
    pavings = enumerate_pavings(bench);
    std::set<std::set<std::vector<LatticePoint>>> pgot;
    for (const auto &p : pavings) {
      std::set<std::vector<LatticePoint>> cells;
      for (const auto &c : p.cells)
        cells.insert(c.points);
      pgot.insert(cells);
    }
    std::set<std::set<std::vector<LatticePoint>>> pexpect{
        {S12, S344},    {S13, S244},    {S23, S144},    {S4, S1234},
        {S12, S34, S4}, {S13, S24, S4}, {S23, S14, S4}, {S12344}};
    if (pavings.size() != 8 || pgot != pexpect) {
      d = "paving census mismatch (" + std::to_string(pavings.size()) + ")";
      return false;
    }
    return true;
  });

  criterion(2, "toric chart generators of the three top cones",
            [&](std::string &d) {
              auto BC = chi(bench, {{{1, 3}, 1}, {{2, 4}, 1}, {{2, 3}, -1}, {{1, 4}, -1}});
              auto CB = chi(bench, {{{2, 3}, 1}, {{1, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}});
              auto AC = chi(bench, {{{1, 2}, 1}, {{3, 4}, 1}, {{2, 3}, -1}, {{1, 4}, -1}});
              auto CA = chi(bench, {{{2, 3}, 1}, {{1, 4}, 1}, {{1, 2}, -1}, {{3, 4}, -1}});
              auto AB = chi(bench, {{{1, 2}, 1}, {{3, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}});
              auto BA = chi(bench, {{{1, 3}, 1}, {{2, 4}, 1}, {{1, 2}, -1}, {{3, 4}, -1}});
              auto D = chi(bench, {{{1, 3}, 1}, {{4, 4}, 1}, {{1, 4}, -1}, {{3, 4}, -1}});
              auto Dp = chi(bench, {{{2, 3}, 1}, {{4, 4}, 1}, {{2, 4}, -1}, {{3, 4}, -1}});
              struct Case {
                std::set<std::vector<LatticePoint>> cells;
                std::set<LatticeFunctional> expect;
              };
              std::vector<Case> cases{
                  {{S12, S34, S4}, {BC, CB, AC, D}},
                  {{S13, S24, S4}, {CA, AC, BA, Dp}},
                  {{S23, S14, S4}, {AB, BA, CA, D}}};
              for (const auto &c : cases) {
                const Paving *p = find_paving(pavings, c.cells);
                if (!p) {
                  d = "paving not found";
                  return false;
                }
                auto g = dual_chart_generators(bench, *p);
                if (std::set<LatticeFunctional>(g.begin(), g.end()) !=
                    c.expect) {
                  d = "generator set mismatch for " + p->id;
                  return false;
                }
              }
              return true;
            });

  criterion(3, "wall cone rays match the pinned reference functions",
            [&](std::string &d) {
              QVec l12 = fn_of(bench, {{{1, 4}, -1}, {{2, 4}, -1}, {{4, 4}, -1}});
              QVec l13 = fn_of(bench, {{{2, 4}, 1}, {{4, 4}, 1}});
              QVec l23 = fn_of(bench, {{{1, 4}, 1}, {{4, 4}, 1}});
              QVec l4 = fn_of(bench, {{{4, 4}, 1}});
              struct Wall {
                std::set<std::vector<LatticePoint>> cells;
                QVec ref;
              };
              std::vector<Wall> walls{{{S12, S344}, l12},
                                      {{S13, S244}, l13},
                                      {{S23, S144}, l23},
                                      {{S4, S1234}, l4}};
              for (const auto &w : walls) {
                const Paving *p = find_paving(pavings, w.cells);
                if (!p) {
                  d = "paving not found";
                  return false;
                }
                Cone cone = cone_of_paving(bench, *p);
                if (cone.rays.size() != 1) {
                  d = "expected one ray for " + p->id;
                  return false;
                }
                if (!same_ray_class(bench, cone.rays[0], w.ref)) {
                  d = "ray class mismatch for " + p->id;
                  return false;
                }
              }
              return true;
            });

  criterion(4, "cross-ratio identity on 200 seeded samples",
            [&](std::string &d) {
              SizeVector s({1, 1, 1, 1});
              WeightVector w(std::vector<int>{1, 1, 1, 1});
              std::mt19937_64 rng(20260808);
              int done = 0;
              while (done < 200) {
                Matrix2xN m(4);
                for (int r = 1; r <= 2; ++r)
                  for (int c = 1; c <= 4; ++c)
                    m.set(r, c,
                          RatFunc(Rational(
                              static_cast<long long>(rng() % 41) - 20,
                              static_cast<long long>(rng() % 20) + 1)));
                auto pt = plucker_vector(m);
                if (!pt)
                  continue;
                ++done;
                auto img = map_Fw(s, w, *pt);
                if (!img)
                  continue;
                auto c = img->canonical().coords();
                if (!(c[0] - c[1] + c[2]).is_zero()) {
                  d = "nonzero residual at sample " + std::to_string(done);
                  return false;
                }
              }
              return true;
            });

  criterion(
      5, "chart certification at the four minimal shapes, 50 trials each",
      [&](std::string &d) {
        for (auto s : {SizeVector({1, 1, 1, 2}), SizeVector({1, 1, 2, 2}),
                       SizeVector({1, 2, 2, 2}), SizeVector({2, 2, 2, 2})}) {
          for (const auto &c : chart_catalog(s)) {
            if (!check_plucker_relations_sym(plucker_minors_sym(c.theta),
                                             c.sizes.columns())) {
              d = c.name + ": symbolic relation failure";
              return false;
            }
            auto rep = verify_embedding(c, 50, 20260808);
            if (!rep.pass()) {
              d = c.name + ": " +
                  (rep.failures.empty() ? "clause failure" : rep.failures[0]);
              return false;
            }
          }
        }
        return true;
      });

  criterion(6, "generator sets match the brute-force oracle over the sweep",
            [&](std::string &d) {
              auto sizes = sweep_sizes();
              if (sizes.size() < 30) {
                d = "sweep too small";
                return false;
              }
              for (const auto &s : sizes)
                for (const auto &w : essential_weights(s)) {
                  if (weight_monomials(s, w) !=
                      weight_monomials_bruteforce(s, w)) {
                    d = "mismatch at s = " + s.to_string();
                    return false;
                  }
                }
              return true;
            });

  criterion(7, "torus weights are homogeneous over the sweep",
            [&](std::string &d) {
              for (const auto &s : sweep_sizes())
                for (const auto &w : essential_weights(s))
                  for (const auto &m : weight_monomials(s, w))
                    if (!(torus_weight(s, m) == w)) {
                      d = "weight mismatch at s = " + s.to_string();
                      return false;
                    }
              return true;
            });

  criterion(8, "extended block tuples for N in {4,5,6}, 20 samples each",
            [&](std::string &d) {
              std::mt19937_64 rng(20260808);
              for (int N : {4, 5, 6}) {
                SizeVector s(std::vector<int>(static_cast<std::size_t>(N), 1));
                std::vector<int> rest;
                for (int j = 3; j <= N; ++j)
                  rest.push_back(j);
                for (std::size_t mask = 0; mask < (1u << rest.size());
                     ++mask) {
                  ChartIndex tau;
                  tau.j1 = striple_of(s, 1);
                  tau.j2 = striple_of(s, 2);
                  for (std::size_t i = 0; i < rest.size(); ++i) {
                    STriple jt = striple_of(s, rest[i]);
                    if ((mask >> i) & 1u)
                      tau.minus_list.push_back(jt);
                    else
                      tau.plus_list.push_back(jt);
                  }
                  for (int t = 1; t <= N; ++t)
                    for (int trial = 0; trial < 20; ++trial) {
                      std::map<std::string, Rational> assign;
                      for (const auto &v : gamma_variables(s, tau))
                        assign[v] = Rational(
                            static_cast<long long>(rng() % 41) - 20,
                            static_cast<long long>(rng() % 20) + 1);
                      auto chk = extension_check(N, tau, t, assign);
                      if (!chk.pass) {
                        d = "failure at N = " + std::to_string(N) + " tau " +
                            tau.to_string() + " t = " + std::to_string(t);
                        return false;
                      }
                    }
                }
              }
              return true;
            });

  criterion(9, "negative controls are rejected", [&](std::string &d) {
    auto paves = enumerate_paves(bench);
    const LatticeConvex *c12 = nullptr, *c13 = nullptr;
    for (const auto &c : paves) {
      if (c.points == S12)
        c12 = &c;
      if (c.points == S13)
        c13 = &c;
    }
    if (!c12 || !c13) {
      d = "cells not found";
      return false;
    }
    if (is_paving(bench, {*c12}).ok) {
      d = "single wall cell accepted";
      return false;
    }
    if (is_paving(bench, {*c12, *c13}).ok) {
      d = "overlapping pair accepted";
      return false;
    }
    auto cat = chart_catalog(bench);
    auto reps = cat[0].reps;
    for (auto &[t, p] : reps)
      if (t == tp(1, 4))
        p = IndexPair(2, 4); // wrong type on purpose
    auto rep = verify_embedding_with_reps(cat[0], reps, 5, 1);
    if (rep.pass()) {
      d = "corrupted representative table accepted";
      return false;
    }
    return true;
  });

  std::cout << (failures ? "ACCEPTANCE: FAIL (" : "ACCEPTANCE: PASS (")
            << (9 - failures) << "/9)\n";
  return failures ? 1 : 0;
}
