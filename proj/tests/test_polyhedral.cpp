#include "doctest.h"

#include "grasscut/polyhedral.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace grasscut;

namespace {

SizeVector sv(std::initializer_list<int> v) { return SizeVector(v); }

LatticePoint tp4(int n_blocks, int a, int b) {
  std::vector<int> v(static_cast<std::size_t>(n_blocks), 0);
  if (a == b)
    v[static_cast<std::size_t>(a - 1)] = 2;
  else {
    v[static_cast<std::size_t>(a - 1)] = 1;
    v[static_cast<std::size_t>(b - 1)] = 1;
  }
  return LatticePoint(v);
}

std::vector<LatticePoint> pts(int n_blocks,
                              std::initializer_list<std::pair<int, int>> ps) {
  std::vector<LatticePoint> out;
  for (auto [a, b] : ps)
    out.push_back(tp4(n_blocks, a, b));
  std::sort(out.begin(), out.end());
  return out;
}

QVec fn_of(const SizeVector &s,
           const std::map<std::pair<int, int>, long long> &vals) {
  auto types = enumerate_types(s);
  QVec out(types.size(), Rational(0));
  for (const auto &[pr, v] : vals) {
    LatticePoint t = tp4(s.blocks(), pr.first, pr.second);
    for (std::size_t i = 0; i < types.size(); ++i)
      if (types[i] == t)
        out[i] = Rational(v);
  }
  return out;
}

LatticeFunctional chi(const SizeVector &s,
                      const std::map<std::pair<int, int>, int> &vals) {
  auto types = enumerate_types(s);
  LatticeFunctional f;
  f.exps.assign(types.size(), 0);
  for (const auto &[pr, v] : vals) {
    LatticePoint t = tp4(s.blocks(), pr.first, pr.second);
    for (std::size_t i = 0; i < types.size(); ++i)
      if (types[i] == t)
        f.exps[i] = v;
  }
  return f;
}

const Paving &
paving_with_cells(const std::vector<Paving> &all,
                  const std::vector<std::vector<LatticePoint>> &cells) {
  std::set<std::vector<LatticePoint>> want(cells.begin(), cells.end());
  for (const auto &p : all) {
    std::set<std::vector<LatticePoint>> got;
    for (const auto &c : p.cells)
      got.insert(c.points);
    if (got == want)
      return p;
  }
  throw std::runtime_error("paving not found");
}

} // namespace

TEST_CASE("affine function space dimensions") {
  CHECK(affine_function_basis(sv({1, 1, 1, 2})).size() == 4);
  CHECK(affine_function_basis(sv({1, 1})).size() == 1);
  CHECK(affine_function_basis(sv({1, 1, 1, 1})).size() == 4);
}

TEST_CASE("convex from a bound family") {
  SizeVector s({1, 1, 1, 2});
  std::map<SubsetMask, int> trivial{{0, 0}, {15, 2}};
  auto r0 = convex_from_bounds(s, trivial);
  REQUIRE(r0.ok);
  CHECK(r0.convex.points.size() == 7);
  // x1 + x2 >= 1 with its monotone closure
  std::map<SubsetMask, int> d12{{0, 0}, {15, 2}, {3, 1}, {7, 1}, {11, 1}};
  auto r1 = convex_from_bounds(s, d12);
  REQUIRE(r1.ok);
  CHECK(r1.convex.points == pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  std::map<SubsetMask, int> d1{{0, 0},  {15, 2}, {1, 2},  {3, 2},
                               {5, 2},  {9, 2},  {7, 2},  {11, 2},
                               {13, 2}};
  auto r2 = convex_from_bounds(s, d1);
  REQUIRE(r2.ok);
  CHECK(r2.convex.points.empty());
  CHECK(r2.convex.hull_dim == -1);
  std::map<SubsetMask, int> bad{{0, 0}, {15, 2}, {1, 2}, {2, 2}};
  CHECK(!convex_from_bounds(s, bad).ok);
}

TEST_CASE("pave census for the benchmark shape") {
  SizeVector s({1, 1, 1, 2});
  auto paves = enumerate_paves(s);
  REQUIRE(paves.size() == 12);
  std::set<std::vector<LatticePoint>> got;
  for (const auto &p : paves)
    got.insert(p.points);
  std::set<std::vector<LatticePoint>> expect{
      pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}),
      pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}),
      pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 3}, {3, 4}}),
      pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}}),
      pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}}),
      pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}),
      pts(4, {{1, 4}, {2, 4}, {3, 4}, {4, 4}}),
      pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}}),
      pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}}),
      pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 4}}),
      pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}}),
      pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}})};
  CHECK(got == expect);
}

TEST_CASE("small shapes") {
  auto p11 = enumerate_paves(sv({1, 1}));
  REQUIRE(p11.size() == 1);
  CHECK(p11[0].points.size() == 1);
  auto v1111 = enumerate_paves(sv({1, 1, 1, 1}));
  CHECK(v1111.size() == 7);
  CHECK_THROWS(enumerate_paves(sv({1, 1, 1, 1, 1})));
}

TEST_CASE("paving recognition with certificates and rejections") {
  SizeVector s({1, 1, 1, 2});
  auto paves = enumerate_paves(s);
  auto find = [&](const std::vector<LatticePoint> &want) {
    for (const auto &c : paves)
      if (c.points == want)
        return c;
    throw std::runtime_error("pave not found");
  };
  LatticeConvex s12 = find(pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  LatticeConvex s13 = find(pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}));
  LatticeConvex s344 =
      find(pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 4}}));
  LatticeConvex whole =
      find(pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}}));

  auto ok = is_paving(s, {s12, s344});
  CHECK(ok.ok);
  CHECK(!ok.certificate.empty());

  auto trivial = is_paving(s, {whole});
  CHECK(trivial.ok);

  auto missing = is_paving(s, {s12});
  CHECK(!missing.ok); // volume deficit

  auto overlapping = is_paving(s, {s12, s13});
  CHECK(!overlapping.ok); // interiors meet
}

TEST_CASE("paving census for the benchmark shape") {
  SizeVector s({1, 1, 1, 2});
  auto pavings = enumerate_pavings(s);
  REQUIRE(pavings.size() == 8);
  std::set<std::set<std::vector<LatticePoint>>> got;
  for (const auto &p : pavings) {
    std::set<std::vector<LatticePoint>> cells;
    for (const auto &c : p.cells)
      cells.insert(c.points);
    got.insert(cells);
  }
  auto S12 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto S13 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  auto S23 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 3}, {3, 4}});
  auto S24 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S34 = pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
  auto S14 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto S4 = pts(4, {{1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S144 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S244 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});
  auto S344 = pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 4}});
  auto S1234 = pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S12344 =
      pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});
  std::set<std::set<std::vector<LatticePoint>>> expect{
      {S12, S344},    {S13, S244},    {S23, S144},    {S4, S1234},
      {S12, S34, S4}, {S13, S24, S4}, {S23, S14, S4}, {S12344}};
  CHECK(got == expect);

  for (const auto &p : pavings) {
    if (p.cells.size() < 2)
      continue;
    std::vector<LatticeConvex> fewer(p.cells.begin(), p.cells.end() - 1);
    CHECK(!is_paving(s, fewer).ok);
  }
}

TEST_CASE("wall cones carry the pinned ray classes") {
  SizeVector s({1, 1, 1, 2});
  auto pavings = enumerate_pavings(s);
  auto S12 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto S13 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  auto S23 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 3}, {3, 4}});
  auto S24 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S34 = pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
  auto S14 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto S4 = pts(4, {{1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S144 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S244 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});
  auto S344 = pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 4}});
  auto S1234 = pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S12344 =
      pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});

  QVec l12 = fn_of(s, {{{1, 4}, -1}, {{2, 4}, -1}, {{4, 4}, -1}});
  QVec l13 = fn_of(s, {{{2, 4}, 1}, {{4, 4}, 1}});
  QVec l23 = fn_of(s, {{{1, 4}, 1}, {{4, 4}, 1}});
  QVec l4 = fn_of(s, {{{4, 4}, 1}});

  struct Wall {
    std::vector<std::vector<LatticePoint>> cells;
    QVec ref;
  };
  std::vector<Wall> walls{{{S12, S344}, l12},
                          {{S13, S244}, l13},
                          {{S23, S144}, l23},
                          {{S4, S1234}, l4}};
  for (const auto &w : walls) {
    const Paving &p = paving_with_cells(pavings, w.cells);
    Cone c = cone_of_paving(s, p);
    CHECK(c.lineality.size() == 4);
    REQUIRE(c.rays.size() == 1);
    CHECK(same_ray_class(s, c.rays[0], w.ref));
  }
  const Paving &triv = paving_with_cells(pavings, {S12344});
  CHECK(cone_of_paving(s, triv).rays.empty());
  struct Top {
    std::vector<std::vector<LatticePoint>> cells;
    QVec r1, r2;
  };
  std::vector<Top> tops{{{S12, S34, S4}, l12, l4},
                        {{S13, S24, S4}, l13, l4},
                        {{S23, S14, S4}, l23, l4}};
  for (const auto &t : tops) {
    const Paving &p = paving_with_cells(pavings, t.cells);
    Cone c = cone_of_paving(s, p);
    REQUIRE(c.rays.size() == 2);
    bool direct = same_ray_class(s, c.rays[0], t.r1) &&
                  same_ray_class(s, c.rays[1], t.r2);
    bool swapped = same_ray_class(s, c.rays[0], t.r2) &&
                   same_ray_class(s, c.rays[1], t.r1);
    CHECK((direct || swapped));
  }
}

TEST_CASE("rays avoid the lineality span") {
  SizeVector s({1, 1, 1, 2});
  for (const auto &p : enumerate_pavings(s)) {
    Cone c = cone_of_paving(s, p);
    for (const auto &ray : c.rays) {
      QMat sys(ray.size(), QVec(c.lineality.size()));
      QVec rhs = ray;
      for (std::size_t i = 0; i < ray.size(); ++i)
        for (std::size_t j = 0; j < c.lineality.size(); ++j)
          sys[i][j] = c.lineality[j][i];
      CHECK(!solve(sys, rhs).has_value());
    }
  }
}

TEST_CASE("perpendicular lattice basis") {
  SizeVector s({1, 1, 1, 2});
  auto basis = perp_lattice_basis(s);
  REQUIRE(basis.size() == 3);
  CHECK(basis.size() ==
        enumerate_types(s).size() - affine_function_basis(s).size());
  auto X = chi(s, {{{1, 2}, 1}, {{3, 4}, 1}, {{2, 3}, -1}, {{1, 4}, -1}});
  auto Y = chi(s, {{{1, 2}, 1}, {{3, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}});
  auto Z = chi(s, {{{1, 2}, 1},
                   {{1, 3}, -1},
                   {{2, 3}, -1},
                   {{3, 4}, 2},
                   {{4, 4}, -1}});
  std::set<LatticeFunctional> rows(basis.begin(), basis.end());
  CHECK(rows.count(X));
  CHECK(rows.count(Y));
  CHECK(rows.count(Z));
  for (const auto &f : basis)
    for (const auto &l : affine_function_basis(s)) {
      Rational acc(0);
      for (std::size_t i = 0; i < f.exps.size(); ++i)
        acc += Rational(f.exps[i]) * l[i];
      CHECK(acc.is_zero());
    }
  CHECK(perp_lattice_basis(sv({1, 1})).empty());
}

TEST_CASE("dual chart generator sets match the pinned golden sets") {
  SizeVector s({1, 1, 1, 2});
  auto pavings = enumerate_pavings(s);
  auto S12 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto S13 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  auto S23 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 3}, {3, 4}});
  auto S24 = pts(4, {{1, 2}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  auto S34 = pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
  auto S14 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto S4 = pts(4, {{1, 4}, {2, 4}, {3, 4}, {4, 4}});
  auto S12344 =
      pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {4, 4}});

  auto BC = chi(s, {{{1, 3}, 1}, {{2, 4}, 1}, {{2, 3}, -1}, {{1, 4}, -1}});
  auto CB = chi(s, {{{2, 3}, 1}, {{1, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}});
  auto AC = chi(s, {{{1, 2}, 1}, {{3, 4}, 1}, {{2, 3}, -1}, {{1, 4}, -1}});
  auto CA = chi(s, {{{2, 3}, 1}, {{1, 4}, 1}, {{1, 2}, -1}, {{3, 4}, -1}});
  auto AB = chi(s, {{{1, 2}, 1}, {{3, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}});
  auto BA = chi(s, {{{1, 3}, 1}, {{2, 4}, 1}, {{1, 2}, -1}, {{3, 4}, -1}});
  auto D = chi(s, {{{1, 3}, 1}, {{4, 4}, 1}, {{1, 4}, -1}, {{3, 4}, -1}});
  auto Dp = chi(s, {{{2, 3}, 1}, {{4, 4}, 1}, {{2, 4}, -1}, {{3, 4}, -1}});

  auto gens_of = [&](const std::vector<std::vector<LatticePoint>> &cells) {
    const Paving &p = paving_with_cells(pavings, cells);
    auto g = dual_chart_generators(s, p);
    return std::set<LatticeFunctional>(g.begin(), g.end());
  };

  CHECK(gens_of({S12, S34, S4}) == std::set<LatticeFunctional>{BC, CB, AC, D});
  CHECK(gens_of({S13, S24, S4}) == std::set<LatticeFunctional>{CA, AC, BA, Dp});
  CHECK(gens_of({S23, S14, S4}) == std::set<LatticeFunctional>{AB, BA, CA, D});

  auto triv = gens_of({S12344});
  CHECK(triv.size() == 6);
  for (const auto &b : perp_lattice_basis(s)) {
    CHECK(triv.count(b));
    LatticeFunctional neg = b;
    for (auto &e : neg.exps)
      e = -e;
    CHECK(triv.count(neg));
  }
}

TEST_CASE("generators pair correctly with the cone and are minimal") {
  SizeVector s({1, 1, 1, 2});
  for (const auto &p : enumerate_pavings(s)) {
    Cone c = cone_of_paving(s, p);
    auto gens = dual_chart_generators(s, p);
    for (const auto &g : gens) {
      for (const auto &l : c.lineality) {
        Rational acc(0);
        for (std::size_t i = 0; i < g.exps.size(); ++i)
          acc += Rational(g.exps[i]) * l[i];
        CHECK(acc.is_zero());
      }
      for (const auto &ray : c.rays) {
        Rational acc(0);
        for (std::size_t i = 0; i < g.exps.size(); ++i)
          acc += Rational(g.exps[i]) * ray[i];
        CHECK(acc >= Rational(0));
      }
    }
    for (std::size_t drop = 0; drop < gens.size(); ++drop) {
      std::vector<LatticeFunctional> rest;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != drop)
          rest.push_back(gens[i]);
      bool expressible = false;
      std::size_t n = rest.size();
      for (std::size_t i = 0; i < n && !expressible; ++i)
        for (std::size_t j = i; j < n && !expressible; ++j) {
          LatticeFunctional sum2;
          sum2.exps.assign(gens[drop].exps.size(), 0);
          for (std::size_t q = 0; q < sum2.exps.size(); ++q)
            sum2.exps[q] = rest[i].exps[q] + rest[j].exps[q];
          if (sum2 == gens[drop])
            expressible = true;
          for (std::size_t k2 = j; k2 < n && !expressible; ++k2) {
            LatticeFunctional sum3 = sum2;
            for (std::size_t q = 0; q < sum3.exps.size(); ++q)
              sum3.exps[q] += rest[k2].exps[q];
            if (sum3 == gens[drop])
              expressible = true;
          }
        }
      CHECK(!expressible);
    }
  }
}

TEST_CASE("faces and paving restriction") {
  SizeVector s({1, 1, 1, 1});
  auto f4 = face_convex(s, {4});
  CHECK(f4.face_sizes.entries() == std::vector<int>{1, 1, 1});
  CHECK(f4.face_points.size() == 3);
  CHECK_THROWS(face_convex(s, {2, 3, 4}));

  auto pavings = enumerate_pavings(s);
  CHECK(pavings.size() == 4); // three two-cell pavings and the trivial one
  auto S12 = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto S34 = pts(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const Paving &wall = paving_with_cells(pavings, {S12, S34});
  auto restricted = restrict_paving(s, wall, {4});
  REQUIRE(restricted.size() == 1); // only one cell meets the face fully
  CHECK(restricted[0].size() == 3);

  auto whole = pts(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}});
  const Paving &triv = paving_with_cells(pavings, {whole});
  auto rt = restrict_paving(s, triv, {4});
  REQUIRE(rt.size() == 1);
  CHECK(rt[0].size() == 3);

  SizeVector s2({1, 1, 1, 2});
  auto pav2 = enumerate_pavings(s2);
  auto S12w = pts(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto S344 = pts(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 4}});
  const Paving &w12 = paving_with_cells(pav2, {S12w, S344});
  auto r2 = restrict_paving(s2, w12, {4});
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].size() == 3);

  for (const auto &cell : r2) {
    auto conv = tightest_convex(SizeVector({1, 1, 1}), cell);
    CHECK(conv.has_value());
  }
}
