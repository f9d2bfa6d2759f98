#include "doctest.h"

#include "grasscut/charts.hpp"

#include <random>
#include <set>

using namespace grasscut;

namespace {
SizeVector sv(std::initializer_list<int> v) { return SizeVector(v); }

ChartIndex idx_1n(const SizeVector &s, const std::vector<int> &plus,
                  const std::vector<int> &minus) {
  ChartIndex ci;
  ci.j1 = striple_of(s, 1);
  ci.j2 = striple_of(s, 2);
  for (int j : plus)
    ci.plus_list.push_back(striple_of(s, j));
  for (int j : minus)
    ci.minus_list.push_back(striple_of(s, j));
  return ci;
}

RatFunc chart_minor_ratio(const ChartSpec &c, const IndexPair &p) {
  RatFunc num = c.theta.minor_of(p);
  RatFunc den = c.theta.minor_of(c.rep_of(pair_type(c.sizes, p)));
  return num / den;
}
} // namespace

TEST_CASE("index enumeration counts") {
  auto j1111 = enumerate_chart_indices(sv({1, 1, 1, 1}));
  int class1 = 0, class2 = 0;
  for (const auto &t : j1111)
    (t.class_two() ? class2 : class1)++;
  CHECK(class1 == 24); // C(4,2) * 2^2
  CHECK(class2 == 0);

  auto j21 = enumerate_chart_indices(sv({2, 1}));
  class1 = class2 = 0;
  for (const auto &t : j21)
    (t.class_two() ? class2 : class1)++;
  CHECK(class2 == 2); // pivots (1,2) in block 1, block 2 up or down
  CHECK(class1 == 2); // pivot position in block 1 varies

  auto j11 = enumerate_chart_indices(sv({1, 1}));
  REQUIRE(j11.size() == 1);
  CHECK(j11[0].plus_list.empty());
  CHECK(j11[0].minus_list.empty());
}

TEST_CASE("parametrized matrix for a singleton index") {
  SizeVector s({1, 1, 1, 1});
  ChartIndex tau = idx_1n(s, {3}, {4});
  auto vars = gamma_variables(s, tau);
  CHECK(std::set<std::string>(vars.begin(), vars.end()) ==
        std::set<std::string>{"a_3", "a_4", "eta_3", "xi_4"});
  Matrix2xN m = gamma_matrix_symbolic(s, tau);
  CHECK(m.at(1, 3).equals(RatFunc::variable("a_3")));
  CHECK(m.at(1, 4).equals(RatFunc::variable("a_4") * RatFunc::variable("xi_4")));
  CHECK(m.at(2, 3).equals(RatFunc::variable("a_3") * RatFunc::variable("eta_3")));
  CHECK(m.at(2, 4).equals(RatFunc::variable("a_4")));
  CHECK(m.at(1, 1).equals(RatFunc(1)));
  CHECK(m.at(2, 1).equals(RatFunc(0)));

  std::map<std::string, RatFunc> zero{{"a_3", RatFunc(0)},
                                      {"a_4", RatFunc(0)},
                                      {"eta_3", RatFunc(7)},
                                      {"xi_4", RatFunc(9)}};
  Matrix2xN mz = gamma_matrix(s, tau, zero);
  CHECK(mz.at(1, 3).is_zero());
  CHECK(mz.at(2, 4).is_zero());

  ChartIndex tp = idx_1n(s, {3, 4}, {});
  Matrix2xN mp = gamma_matrix_symbolic(s, tp);
  CHECK(mp.at(1, 4).equals(RatFunc::variable("a_4")));
  CHECK(mp.at(2, 4).equals(RatFunc::variable("a_4") *
                           RatFunc::variable("eta_4")));

  CHECK_THROWS(gamma_matrix(s, tau, {}));
}

TEST_CASE("class II matrix structure") {
  SizeVector s({3, 2});
  ChartIndex tau;
  tau.j1 = striple_of(s, 1);
  tau.j2 = striple_of(s, 3); // both pivots in block 1
  tau.minus_list.push_back(striple_of(s, 4));
  Matrix2xN m = gamma_matrix_symbolic(s, tau);
  CHECK(m.at(1, 1).equals(RatFunc(1)));
  CHECK(m.at(2, 3).equals(RatFunc(1)));
  CHECK(m.at(1, 2).equals(RatFunc::variable("w_12")));
  CHECK(m.at(2, 2).equals(RatFunc::variable("w_22")));
  CHECK(m.at(1, 4).equals(RatFunc::variable("a_4") *
                          RatFunc::variable("xi1_11")));
  CHECK(m.at(2, 4).equals(RatFunc::variable("a_4")));
  CHECK(m.at(2, 5).equals(RatFunc::variable("a_4") *
                          RatFunc::variable("xi1_22")));
}

TEST_CASE("maximal-torus factorization substitution") {
  const int N = 4;
  std::map<std::string, RatFunc> params;
  for (int j = 3; j <= N; ++j)
    params["a_" + std::to_string(j)] =
        RatFunc::variable("a_" + std::to_string(j));
  for (int g = 1; g <= N - 2; ++g)
    params["epsP_" + std::to_string(g)] =
        RatFunc::variable("epsP_" + std::to_string(g));

  auto sub_id = sigma_lambda_max(N, {1, 2}, params);
  CHECK(sub_id.at("eta_3").equals(RatFunc::variable("epsP_1")));
  CHECK(sub_id.at("eta_4").equals(RatFunc::variable("epsP_1") *
                                  RatFunc::variable("epsP_2")));

  auto sub_swap = sigma_lambda_max(N, {2, 1}, params);
  CHECK(sub_swap.at("eta_3").equals(RatFunc::variable("epsP_1") *
                                    RatFunc::variable("epsP_2")));
  CHECK(sub_swap.at("eta_4").equals(RatFunc::variable("epsP_1")));

  std::map<std::string, RatFunc> ones = params;
  for (int g = 1; g <= N - 2; ++g)
    ones["epsP_" + std::to_string(g)] = RatFunc(1);
  auto red = sigma_lambda_max(N, {1, 2}, ones);
  CHECK(red.at("eta_3").equals(RatFunc(1)));
  CHECK(red.at("eta_4").equals(RatFunc(1)));

  SizeVector s({1, 1, 1, 1});
  ChartIndex tp = idx_1n(s, {3, 4}, {});
  for (auto lambda : std::vector<std::vector<int>>{{1, 2}, {2, 1}}) {
    auto sub = sigma_lambda_max(N, lambda, params);
    Matrix2xN via_sub = gamma_matrix(s, tp, sub);
    Matrix2xN direct = b_lambda_matrix(N, lambda);
    for (int r = 1; r <= 2; ++r)
      for (int c = 1; c <= N; ++c)
        CHECK(via_sub.at(r, c).equals(direct.at(r, c)));
  }
}

TEST_CASE("extended block tuples match the direct map") {
  std::mt19937_64 rng(555);
  for (int N : {4, 5, 6}) {
    SizeVector s(std::vector<int>(static_cast<std::size_t>(N), 1));
    std::vector<int> rest;
    for (int j = 3; j <= N; ++j)
      rest.push_back(j);
    for (std::size_t mask = 0; mask < (1u << rest.size()); ++mask) {
      std::vector<int> plus, minus;
      for (std::size_t i = 0; i < rest.size(); ++i)
        ((mask >> i) & 1u ? minus : plus).push_back(rest[i]);
      ChartIndex tau = idx_1n(s, plus, minus);
      for (int t = 1; t <= N; ++t) {
        for (int trial = 0; trial < 20; ++trial) {
          std::map<std::string, Rational> assign;
          for (const auto &v : gamma_variables(s, tau))
            assign[v] = Rational(static_cast<long long>(rng() % 41) - 20,
                                 static_cast<long long>(rng() % 20) + 1);
          auto rep = extension_check(N, tau, t, assign);
          CHECK(rep.pass);
        }
        std::map<std::string, Rational> assign;
        for (const auto &v : gamma_variables(s, tau))
          assign[v] = Rational(static_cast<long long>(rng() % 9) + 1);
        if (!plus.empty())
          assign["a_" + std::to_string(plus[0])] = Rational(0);
        auto rep = extension_check(N, tau, t, assign);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("catalog counts and shape dispatch") {
  CHECK(chart_catalog(sv({1, 1, 1, 2})).size() == 6);
  CHECK(chart_catalog(sv({1, 1, 2, 2})).size() == 8);
  CHECK(chart_catalog(sv({1, 2, 2, 2})).size() == 11);
  CHECK(chart_catalog(sv({2, 2, 2, 2})).size() == 28);
  CHECK(shape_family(sv({1, 1, 1, 3})) == "X");
  CHECK_THROWS(shape_family(sv({2, 1, 1, 1})));
  CHECK_THROWS(chart_catalog(sv({1, 1, 1, 1})));
}

TEST_CASE("first chart data at the minimal shape") {
  auto cat = chart_catalog(sv({1, 1, 1, 2}));
  const ChartSpec &x1a = cat[0];
  CHECK(x1a.name == "X_1A");
  CHECK(x1a.theta.minor_of(IndexPair(1, 3)).equals(RatFunc::variable("epsP_2")));
  REQUIRE(x1a.inverted.size() == 1);
  CHECK(x1a.inverted[0] == parse_poly("epsP_2"));
  CHECK(x1a.variables ==
        (std::vector<std::string>{"epsP_2", "xX_12", "hH_22"}));
  const ChartSpec &x3 = cat[3];
  CHECK(x3.name == "X_3");
  REQUIRE(x3.inverted.size() == 2);
  CHECK(x3.inverted[0] == parse_poly("1-eta_12*hH_21"));
  CHECK(x3.inverted[1] == parse_poly("1-epsP_2*eta_12"));
}

TEST_CASE("pinned variable lists across the families") {
  auto cat_y = chart_catalog(sv({1, 1, 2, 2}));
  for (const auto &c : cat_y)
    if (c.name == "Y_2A")
      CHECK(c.variables ==
            (std::vector<std::string>{"eta1_12", "hH1_22", "xX2_11", "xX2_12",
                                      "hH2_22"}));
  auto cat_z = chart_catalog(sv({1, 2, 2, 2}));
  for (const auto &c : cat_z)
    if (c.name == "Z_7")
      CHECK(c.variables ==
            (std::vector<std::string>{"epsP_1", "eta1_12", "hH1_21", "xX1_12",
                                      "xi1_22", "epsM_2", "z_2"}));
  auto cat_w = chart_catalog(sv({2, 2, 2, 2}));
  for (const auto &c : cat_w) {
    if (c.name == "W_9A")
      CHECK(c.variables ==
            (std::vector<std::string>{"eta1_12", "hH1_21", "hH1_22", "eta2_12",
                                      "hH2_21", "hH2_22", "epsM_1", "z_2",
                                      "y_2"}));
    if (c.name == "W_1A")
      CHECK(c.variables ==
            (std::vector<std::string>{"epsP_2", "xX1_12", "hH1_22", "xX2_12",
                                      "hH2_22", "epsM_1", "z_2", "epsP_3",
                                      "y_2"}));
  }
  // variable counts at a larger shape: the first chart has 2 s4 - 1 names
  auto cat_x = chart_catalog(sv({1, 1, 1, 4}));
  CHECK(cat_x[0].variables.size() == 7);
}

TEST_CASE("catalog variable lists match the matrices") {
  for (auto s : {sv({1, 1, 1, 2}), sv({1, 1, 2, 2}), sv({1, 2, 2, 2}),
                 sv({2, 2, 2, 2}), sv({1, 1, 1, 3}), sv({1, 1, 2, 3})}) {
    for (const auto &c : chart_catalog(s)) {
      std::set<std::string> declared(c.variables.begin(), c.variables.end());
      CHECK(declared.size() == c.variables.size());
      std::set<std::string> used;
      for (int r = 1; r <= 2; ++r)
        for (int col = 1; col <= c.sizes.columns(); ++col) {
          for (const auto &v : c.theta.at(r, col).num().vars())
            used.insert(v);
          for (const auto &v : c.theta.at(r, col).den().vars())
            used.insert(v);
        }
      for (const auto &u : c.inverted)
        for (const auto &v : u.vars())
          used.insert(v);
      CHECK_MESSAGE(used == declared, c.name);
    }
  }
}

TEST_CASE("every catalog denominator is a product of inverted elements") {
  for (auto s : {sv({1, 1, 1, 2}), sv({1, 1, 2, 2}), sv({1, 2, 2, 2}),
                 sv({2, 2, 2, 2}), sv({1, 1, 2, 3})}) {
    for (const auto &c : chart_catalog(s)) {
      for (int r = 1; r <= 2; ++r)
        for (int col = 1; col <= c.sizes.columns(); ++col) {
          RatFunc e = c.theta.at(r, col);
          CHECK(e.regular_over(c.inverted, 4));
        }
    }
  }
}

TEST_CASE("pivot columns are standard basis columns") {
  for (auto s : {sv({1, 1, 1, 2}), sv({1, 1, 2, 2}), sv({1, 2, 2, 2}),
                 sv({2, 2, 2, 2})}) {
    for (const auto &c : chart_catalog(s)) {
      CHECK(c.theta.at(1, c.pivot1).equals(RatFunc(1)));
      CHECK(c.theta.at(2, c.pivot1).is_zero());
      CHECK(c.theta.at(1, c.pivot2).is_zero());
      CHECK(c.theta.at(2, c.pivot2).equals(RatFunc(1)));
    }
  }
}

TEST_CASE("pinned simplified formulas hold as identities") {
  for (auto s : {sv({1, 1, 1, 2}), sv({1, 1, 1, 4})}) {
    auto cat = chart_catalog(s);
    auto ambients = ambient_charts(s);
    for (const auto &c : cat) {
      auto formulas = pinned_formulas(c);
      if (c.name != "X_1A" && c.name != "X_2") {
        CHECK(formulas.empty());
        continue;
      }
      REQUIRE(!formulas.empty());
      const AmbientChart *amb = nullptr;
      for (const auto &a : ambients)
        if (a.name == c.target)
          amb = &a;
      REQUIRE(amb != nullptr);
      for (const auto &f : formulas) {
        RatFunc expected = parse_ratfunc(f.expected);
        if (f.is_generator) {
          const CharExponent &g =
              amb->generators[static_cast<std::size_t>(f.generator)];
          RatFunc acc(1);
          for (const auto &[type, e] : g) {
            RatFunc gv = c.theta.minor_of(c.rep_of(type));
            for (int k = 0; k < (e > 0 ? e : -e); ++k)
              acc = e > 0 ? acc * gv : acc / gv;
          }
          CHECK_MESSAGE(acc.equals(expected), c.name, " generator ",
                        f.generator);
        } else {
          RatFunc ratio = chart_minor_ratio(c, f.pair);
          CHECK_MESSAGE(ratio.equals(expected), c.name, " pair ",
                        f.pair.to_string());
        }
      }
    }
  }
}

TEST_CASE("ambient generator lists are orthogonal to affine functions") {
  for (auto s : {sv({1, 1, 1, 2}), sv({1, 1, 2, 2}), sv({1, 2, 2, 2}),
                 sv({2, 2, 2, 2})}) {
    for (const auto &amb : ambient_charts(s)) {
      for (const auto &g : amb.generators) {
        int esum = 0;
        std::vector<int> wsum(4, 0);
        for (const auto &[type, e] : g) {
          esum += e;
          for (int k = 0; k < 4; ++k)
            wsum[static_cast<std::size_t>(k)] +=
                e * type.coords[static_cast<std::size_t>(k)];
        }
        CHECK(esum == 0);
        CHECK(wsum == std::vector<int>(4, 0));
      }
    }
  }
}

TEST_CASE("domain membership checks") {
  auto cat = chart_catalog(sv({1, 1, 1, 2}));
  const ChartSpec &x1a = cat[0];
  std::map<std::string, Rational> at{{"epsP_2", Rational(0)},
                                     {"xX_12", Rational(3)},
                                     {"hH_22", Rational(4)}};
  CHECK(!chart_domain_check(x1a, at));
  at["epsP_2"] = Rational(1);
  CHECK(chart_domain_check(x1a, at));
  const ChartSpec &x2 = cat[2];
  std::map<std::string, Rational> at2{{"xX_11", Rational(1)},
                                      {"eta_12", Rational(1)},
                                      {"hH_22", Rational(5)}};
  CHECK(!chart_domain_check(x2, at2)); // 1 - xX_11*eta_12 = 0
}

TEST_CASE("column permutation action") {
  auto cat = chart_catalog(sv({1, 1, 1, 2}));
  const ChartSpec &x4 = cat[4];
  std::vector<int> perm{1, 3, 2, 4, 5};
  ChartSpec moved = permute_chart(x4, perm);
  CHECK(moved.theta.minor_of(IndexPair(2, 3))
            .equals(-x4.theta.minor_of(IndexPair(2, 3))));
  CHECK(moved.theta.at(1, 3).equals(x4.theta.at(1, 2)));
  CHECK_THROWS(permute_chart(x4, std::vector<int>{4, 2, 3, 1, 5}));
}

TEST_CASE("parametrized matrices always carry the two pivot columns") {
  std::mt19937_64 rng(2718);
  for (auto s : {sv({1, 2, 2}), sv({2, 2}), sv({1, 1, 3})}) {
    auto indices = enumerate_chart_indices(s);
    for (const auto &tau : indices) {
      Matrix2xN m = gamma_matrix_symbolic(s, tau);
      CHECK(m.at(1, tau.j1.j).equals(RatFunc(1)));
      CHECK(m.at(2, tau.j1.j).is_zero());
      CHECK(m.at(1, tau.j2.j).is_zero());
      CHECK(m.at(2, tau.j2.j).equals(RatFunc(1)));
    }
    (void)rng;
  }
}

TEST_CASE("maximal-torus substitution at five columns") {
  const int N = 5;
  std::map<std::string, RatFunc> params;
  for (int j = 3; j <= N; ++j)
    params["a_" + std::to_string(j)] =
        RatFunc::variable("a_" + std::to_string(j));
  for (int g = 1; g <= N - 2; ++g)
    params["epsP_" + std::to_string(g)] =
        RatFunc::variable("epsP_" + std::to_string(g));
  SizeVector s({1, 1, 1, 1, 1});
  ChartIndex tp;
  tp.j1 = striple_of(s, 1);
  tp.j2 = striple_of(s, 2);
  for (int j = 3; j <= N; ++j)
    tp.plus_list.push_back(striple_of(s, j));
  for (auto lambda :
       std::vector<std::vector<int>>{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}) {
    auto sub = sigma_lambda_max(N, lambda, params);
    Matrix2xN via_sub = gamma_matrix(s, tp, sub);
    Matrix2xN direct = b_lambda_matrix(N, lambda);
    for (int r = 1; r <= 2; ++r)
      for (int c = 1; c <= N; ++c)
        CHECK(via_sub.at(r, c).equals(direct.at(r, c)));
  }
}
