#include "grasscut/charts.hpp"

#include <functional>
#include <stdexcept>

// The N = 4 chart catalog: one builder per chart family, parametrized by
// the concrete block sizes. Data entry is guarded by the validation and
// verification suites (pivot structure, denominator/localization
// consistency, representative regularity, pinned simplified formulas).

namespace grasscut {

namespace {

RatFunc V(const std::string &n) { return RatFunc::variable(n); }
RatFunc C1() { return RatFunc(1); }

std::string num2(const std::string &base, int r, int c) {
  return base + "_" + std::to_string(r) + std::to_string(c);
}
std::string sup2(const std::string &base, int k, int r, int c) {
  return base + std::to_string(k) + "_" + std::to_string(r) +
         std::to_string(c);
}

LatticePoint type4(int a, int b) {
  std::vector<int> v(4, 0);
  if (a == b)
    v[static_cast<std::size_t>(a - 1)] = 2;
  else {
    v[static_cast<std::size_t>(a - 1)] = 1;
    v[static_cast<std::size_t>(b - 1)] = 1;
  }
  return LatticePoint(v);
}

CharExponent chi_ratio(std::pair<int, int> n1, std::pair<int, int> n2,
                       std::pair<int, int> d1, std::pair<int, int> d2) {
  CharExponent out;
  auto add = [&](std::pair<int, int> t, int e) {
    LatticePoint v = type4(t.first, t.second);
    for (auto &[pt, exp] : out)
      if (pt == v) {
        exp += e;
        return;
      }
    out.emplace_back(v, e);
  };
  add(n1, 1);
  add(n2, 1);
  add(d1, -1);
  add(d2, -1);
  return out;
}

struct Builder {
  ChartSpec spec;
  void var(const std::string &n) { spec.variables.push_back(n); }
  void vars_range(const std::string &base, int r, int from, int to,
                  int skip = -1) {
    for (int c = from; c <= to; ++c)
      if (c != skip)
        spec.variables.push_back(num2(base, r, c));
  }
  void vars_range_sup(const std::string &base, int k, int r, int from, int to,
                      int skip = -1) {
    for (int c = from; c <= to; ++c)
      if (c != skip)
        spec.variables.push_back(sup2(base, k, r, c));
  }
  void invert(const RatFunc &f) {
    if (!f.den().is_one())
      throw std::logic_error("catalog: inverted element must be polynomial");
    spec.inverted.push_back(f.num());
  }
  void col(int c, RatFunc top, RatFunc bottom) {
    spec.theta.set(1, c, std::move(top));
    spec.theta.set(2, c, std::move(bottom));
  }
  void rep(int a, int b, int i1, int i2) {
    spec.reps.emplace_back(type4(a, b), IndexPair(i1, i2));
  }
};

} // namespace

std::string shape_family(const SizeVector &sizes) {
  if (sizes.blocks() != 4)
    throw std::invalid_argument("shape_family: four blocks required");
  auto e = sizes.entries();
  if (e[0] == 1 && e[1] == 1 && e[2] == 1 && e[3] >= 2)
    return "X";
  if (e[0] == 1 && e[1] == 1 && e[2] >= 2 && e[3] >= 2)
    return "Y";
  if (e[0] == 1 && e[1] >= 2 && e[2] >= 2 && e[3] >= 2)
    return "Z";
  if (e[0] >= 2 && e[1] >= 2 && e[2] >= 2 && e[3] >= 2)
    return "W";
  throw std::invalid_argument(
      "shape_family: unsupported shape " + sizes.to_string() +
      " (need nondecreasing 1-entries first, larger blocks >= 2)");
}

// ---------------------------------------------------------------------------
// Ambient toric chart generator lists per shape family
// ---------------------------------------------------------------------------

std::vector<AmbientChart> ambient_charts(const SizeVector &sizes) {
  std::string fam = shape_family(sizes);
  std::vector<AmbientChart> out(3);
  out[0].name = "A12";
  out[1].name = "A13";
  out[2].name = "A23";
  if (fam == "X") {
    out[0].generators = {chi_ratio({1, 3}, {2, 4}, {2, 3}, {1, 4}),
                         chi_ratio({2, 3}, {1, 4}, {1, 3}, {2, 4}),
                         chi_ratio({1, 2}, {3, 4}, {2, 3}, {1, 4}),
                         chi_ratio({1, 3}, {4, 4}, {1, 4}, {3, 4})};
    out[1].generators = {chi_ratio({2, 3}, {1, 4}, {1, 2}, {3, 4}),
                         chi_ratio({1, 2}, {3, 4}, {2, 3}, {1, 4}),
                         chi_ratio({1, 3}, {2, 4}, {1, 2}, {3, 4}),
                         chi_ratio({2, 3}, {4, 4}, {2, 4}, {3, 4})};
    out[2].generators = {chi_ratio({1, 2}, {3, 4}, {1, 3}, {2, 4}),
                         chi_ratio({1, 3}, {2, 4}, {1, 2}, {3, 4}),
                         chi_ratio({2, 3}, {1, 4}, {1, 2}, {3, 4}),
                         chi_ratio({1, 3}, {4, 4}, {1, 4}, {3, 4})};
    return out;
  }
  if (fam == "Y") {
    out[0].generators = {chi_ratio({1, 4}, {2, 3}, {1, 3}, {2, 4}),
                         chi_ratio({1, 3}, {2, 4}, {1, 4}, {2, 3}),
                         chi_ratio({1, 2}, {3, 4}, {2, 3}, {1, 4}),
                         chi_ratio({1, 4}, {3, 3}, {1, 3}, {3, 4}),
                         chi_ratio({1, 3}, {4, 4}, {1, 4}, {3, 4})};
    out[1].generators = {chi_ratio({2, 3}, {1, 4}, {1, 2}, {3, 4}),
                         chi_ratio({1, 2}, {3, 4}, {2, 3}, {1, 4}),
                         chi_ratio({1, 2}, {3, 3}, {1, 3}, {2, 3}),
                         chi_ratio({1, 3}, {2, 4}, {1, 2}, {3, 4}),
                         chi_ratio({2, 3}, {4, 4}, {2, 4}, {3, 4})};
    out[2].generators = {chi_ratio({1, 2}, {3, 4}, {1, 3}, {2, 4}),
                         chi_ratio({1, 3}, {2, 4}, {1, 2}, {3, 4}),
                         chi_ratio({2, 3}, {1, 4}, {1, 2}, {3, 4}),
                         chi_ratio({1, 2}, {3, 3}, {1, 3}, {2, 3}),
                         chi_ratio({1, 3}, {4, 4}, {1, 4}, {3, 4})};
    return out;
  }
  if (fam == "Z") {
    auto y = ambient_charts(SizeVector({1, 1, sizes.entries()[2],
                                        sizes.entries()[3]}));
    out = y;
    out[0].generators.push_back(chi_ratio({1, 3}, {2, 2}, {1, 2}, {2, 3}));
    out[1].generators.push_back(chi_ratio({2, 2}, {3, 4}, {2, 3}, {2, 4}));
    out[2].generators.push_back(chi_ratio({1, 3}, {2, 2}, {1, 2}, {2, 3}));
    return out;
  }
  // W
  auto z = ambient_charts(SizeVector({1, sizes.entries()[1],
                                      sizes.entries()[2],
                                      sizes.entries()[3]}));
  out = z;
  out[0].generators.push_back(chi_ratio({1, 1}, {2, 3}, {1, 2}, {1, 3}));
  out[1].generators.push_back(chi_ratio({1, 1}, {2, 3}, {1, 2}, {1, 3}));
  out[2].generators.push_back(chi_ratio({1, 1}, {3, 4}, {1, 3}, {1, 4}));
  return out;
}

// ---------------------------------------------------------------------------
// Chart builders
// ---------------------------------------------------------------------------

namespace {

// ----- family X: sizes (1,1,1,s4), pivots (1,2), block 4 = columns 4..3+s4

void x_default_reps(Builder &b, int /*s4*/) {
  b.rep(1, 2, 1, 2);
  b.rep(1, 3, 1, 3);
  b.rep(2, 3, 2, 3);
  b.rep(1, 4, 1, 4);
  b.rep(2, 4, 2, 4);
  b.rep(3, 4, 3, 4);
  b.rep(4, 4, 4, 5);
}

ChartSpec build_x(const SizeVector &sizes, const std::string &which) {
  int s4 = sizes.entries()[3];
  Builder b;
  b.spec.name = "X_" + which;
  b.spec.family = "X";
  b.spec.sizes = sizes;
  b.spec.pivot1 = 1;
  b.spec.pivot2 = 2;
  b.spec.theta = Matrix2xN(sizes.columns());
  b.col(1, C1(), RatFunc(0));
  b.col(2, RatFunc(0), C1());
  auto xx = [&](int c) { return V(num2("xX", 1, c)); };
  auto hh = [&](int c) { return V(num2("hH", 2, c)); };
  auto et = [&](int c) { return V(num2("eta", 1, c)); };
  RatFunc eps = V("epsP_2");
  if (which == "1A" || which == "1B") {
    b.var("epsP_2");
    b.vars_range("xX", 1, 2, s4);
    b.vars_range("hH", 2, 2, s4);
    b.invert(which == "1A" ? eps : C1() - eps);
    b.col(3, C1(), eps);
    b.col(4, C1(), C1());
    for (int c = 2; c <= s4; ++c) {
      RatFunc lead = (c == 2) ? xx(2) : xx(2) * xx(c);
      b.col(3 + c, lead * (C1() - eps) + hh(c), hh(c));
    }
    x_default_reps(b, s4);
    b.spec.target = which == "1A" ? "A12" : "A13";
  } else if (which == "2") {
    b.var("xX_11");
    b.var("eta_12");
    b.vars_range("xX", 1, 3, s4);
    b.vars_range("hH", 2, 2, s4);
    RatFunc x11 = V("xX_11"), e12 = V("eta_12");
    RatFunc d = C1() + x11 * (hh(2) - e12);
    b.invert(d);
    b.invert(C1() - x11 * e12);
    b.col(3, C1(), d);
    b.col(4, C1(), C1());
    b.col(5, e12, hh(2));
    for (int c = 3; c <= s4; ++c)
      b.col(3 + c, hh(c) + xx(c) * (hh(2) - e12), hh(c));
    x_default_reps(b, s4);
    b.spec.reps[5].second = IndexPair(3, 5); // block-3/4 representative
    b.spec.target = "A12";
  } else if (which == "3") {
    b.var("epsP_2");
    b.vars_range("eta", 1, 2, s4);
    b.var("hH_21");
    b.vars_range("hH", 2, 3, s4);
    RatFunc h21 = V("hH_21");
    b.invert(C1() - et(2) * h21);
    b.invert(C1() - eps * et(2));
    b.col(3, C1(), eps);
    b.col(4, C1(), h21);
    b.col(5, et(2), C1());
    for (int c = 3; c <= s4; ++c)
      b.col(3 + c, et(c), hh(c));
    x_default_reps(b, s4);
    b.spec.reps[3].second = IndexPair(1, 5);
    b.spec.reps[5].second = IndexPair(3, 5);
    b.spec.target = "A13";
  } else if (which == "4") {
    b.var("epsP_2");
    b.vars_range("eta", 1, 2, s4);
    b.vars_range("hH", 2, 2, s4);
    b.invert(C1() - eps);
    b.col(3, C1(), C1());
    b.col(4, C1(), eps);
    b.col(5, et(2), eps * (hh(2) + et(2)));
    for (int c = 3; c <= s4; ++c)
      b.col(3 + c, et(c), eps * (hh(c) * hh(2) + et(c)));
    x_default_reps(b, s4);
    b.spec.target = "A23";
  } else if (which == "5") {
    b.var("epsP_2");
    b.vars_range("eta", 1, 2, s4);
    b.var("hH_21");
    b.vars_range("hH", 2, 3, s4);
    RatFunc h21 = V("hH_21");
    b.invert(C1() - et(2) * h21);
    b.invert(C1() - eps * h21);
    b.col(3, C1(), C1());
    b.col(4, C1(), eps * h21);
    b.col(5, et(2), eps);
    for (int c = 3; c <= s4; ++c)
      b.col(3 + c, et(c), eps * hh(c));
    x_default_reps(b, s4);
    b.spec.reps[3].second = IndexPair(1, 5);
    b.spec.target = "A23";
  } else {
    throw std::logic_error("build_x: unknown chart");
  }
  return b.spec;
}

} // namespace

// Forward declaration used by pinned_formulas.
std::vector<ChartSpec> chart_catalog(const SizeVector &sizes);

namespace {

// helpers to keep Y/Z/W builders readable
RatFunc vs(const std::string &base, int k, int r, int c) {
  return V(sup2(base, k, r, c));
}

// Y-family big blocks (also used by Z charts 1..6 and W charts 1..6).
// k1/k2 are the superscripts of the two blocks (normally 1 and 2).

void y_style_blocks(Builder &b, const std::string &which, int blk3_col,
                    int s3, int blk4_col, int s4) {
  RatFunc eps = V("epsP_2");
  auto x1 = [&](int c) { return vs("xX", 1, 1, c); };
  auto h1 = [&](int c) { return vs("hH", 1, 2, c); };
  auto e1 = [&](int c) { return vs("eta", 1, 1, c); };
  auto x2 = [&](int c) { return vs("xX", 2, 1, c); };
  auto h2 = [&](int c) { return vs("hH", 2, 2, c); };
  auto e2 = [&](int c) { return vs("eta", 2, 1, c); };
  if (which == "1A" || which == "1B") {
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3_col, C1(), C1());
      else {
        RatFunc lead = (c == 2) ? x1(2) : x1(2) * x1(c);
        b.col(blk3_col + c - 1, h1(c) + lead * (C1() - eps), h1(c));
      }
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4_col, C1(), eps);
      else {
        RatFunc lead = (c == 2) ? x2(2) : x2(2) * x2(c);
        b.col(blk4_col + c - 1, lead * (C1() - eps) + h2(c), eps * h2(c));
      }
    }
  } else if (which == "2A" || which == "2B") {
    RatFunc E = e1(2) - h1(2);
    RatFunc D = C1() + x2(1) * E;
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3_col, C1(), C1());
      else if (c == 2)
        b.col(blk3_col + 1, e1(2), h1(2));
      else
        b.col(blk3_col + c - 1, h1(c) + x1(c) * E, h1(c));
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4_col, C1(), D);
      else if (c == 2)
        b.col(blk4_col + 1, h2(2) + (x2(2) + x2(1) * h2(2)) * E, D * h2(2));
      else
        b.col(blk4_col + c - 1,
              h2(c) + (x2(2) * x2(c) + x2(1) * x2(c) * h2(c)) * E, D * h2(c));
    }
  } else if (which == "3") {
    RatFunc q(e2(2) - h2(2));
    RatFunc dden = C1() - x2(1) * h2(2);
    RatFunc Q = q / dden;
    RatFunc R = (C1() - x2(1) * e2(2)) / dden;
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3_col, C1(), C1());
      else {
        RatFunc lead = (c == 2) ? x1(2) : x1(2) * x1(c);
        b.col(blk3_col + c - 1, h1(c) + lead * Q, h1(c));
      }
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4_col, C1(), R);
      else if (c == 2)
        b.col(blk4_col + 1, e2(2), R * h2(2));
      else
        b.col(blk4_col + c - 1, Q * x2(c) + R * h2(c), R * h2(c));
    }
  } else if (which == "4") {
    auto hh1 = [&](int c) { return vs("hH", 1, 2, c); };
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3_col, C1(), vs("hH", 1, 2, 1));
      else if (c == 2)
        b.col(blk3_col + 1, e1(2), C1());
      else
        b.col(blk3_col + c - 1, e1(c), hh1(c));
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4_col, C1(), eps);
      else if (c == 2)
        b.col(blk4_col + 1, e2(2), eps * (h2(2) + e2(2)));
      else
        b.col(blk4_col + c - 1, e2(c), eps * (h2(c) * h2(2) + e2(c)));
    }
  } else if (which == "5") {
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3_col, C1(), C1());
      else if (c == 2)
        b.col(blk3_col + 1, e1(2), h1(2) + e1(2));
      else
        b.col(blk3_col + c - 1, e1(c), h1(c) * h1(2) + e1(c));
    }
    RatFunc h21 = vs("hH", 2, 2, 1);
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4_col, C1(), eps * h21);
      else if (c == 2)
        b.col(blk4_col + 1, e2(2), eps);
      else
        b.col(blk4_col + c - 1, e2(c), eps * h2(c));
    }
  } else if (which == "6") {
    auto hh1 = [&](int c) { return vs("hH", 1, 2, c); };
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3_col, C1(), vs("hH", 1, 2, 1));
      else if (c == 2)
        b.col(blk3_col + 1, e1(2), C1());
      else
        b.col(blk3_col + c - 1, e1(c), hh1(c));
    }
    RatFunc h21 = vs("hH", 2, 2, 1);
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4_col, C1(), eps * h21);
      else if (c == 2)
        b.col(blk4_col + 1, e2(2), eps);
      else
        b.col(blk4_col + c - 1, e2(c), eps * h2(c));
    }
  } else {
    throw std::logic_error("y_style_blocks: unknown chart");
  }
}

void y_style_vars(Builder &b, const std::string &which, int s3, int s4) {
  if (which == "1A" || which == "1B") {
    b.var("epsP_2");
    b.vars_range_sup("xX", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 2, s3);
    b.vars_range_sup("xX", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 2, s4);
    b.invert(which == "1A" ? C1() - V("epsP_2") : V("epsP_2"));
  } else if (which == "2A" || which == "2B") {
    b.var("eta1_12");
    b.vars_range_sup("xX", 1, 1, 3, s3);
    b.vars_range_sup("hH", 1, 2, 2, s3);
    b.vars_range_sup("xX", 2, 1, 1, s4);
    b.vars_range_sup("hH", 2, 2, 2, s4);
    RatFunc D = C1() + vs("xX", 2, 1, 1) * (V("eta1_12") - vs("hH", 1, 2, 2));
    b.invert(D);
    if (which == "2A")
      b.invert(vs("xX", 2, 1, 1));
    else
      b.invert(C1() + vs("xX", 2, 1, 1) * V("eta1_12"));
  } else if (which == "3") {
    b.vars_range_sup("xX", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 2, s3);
    b.var("xX2_11");
    b.var("eta2_12");
    b.vars_range_sup("xX", 2, 1, 3, s4);
    b.vars_range_sup("hH", 2, 2, 2, s4);
    b.invert(C1() - vs("xX", 2, 1, 1) * V("eta2_12"));
    b.invert(C1() - vs("xX", 2, 1, 1) * vs("hH", 2, 2, 2));
  } else if (which == "4") {
    b.var("epsP_2");
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.var("hH1_21");
    b.vars_range_sup("hH", 1, 2, 3, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 2, s4);
    b.invert(C1() - V("eta1_12") * V("epsP_2"));
    b.invert(C1() - V("eta1_12") * V("hH1_21"));
  } else if (which == "5") {
    b.var("epsP_2");
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 2, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.var("hH2_21");
    b.vars_range_sup("hH", 2, 2, 3, s4);
    b.invert(C1() - V("epsP_2") * V("hH2_21"));
    b.invert(C1() - V("eta2_12") * V("hH2_21"));
  } else if (which == "6") {
    b.var("epsP_2");
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.var("hH1_21");
    b.vars_range_sup("hH", 1, 2, 3, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.var("hH2_21");
    b.vars_range_sup("hH", 2, 2, 3, s4);
    b.invert(C1() - V("eta1_12") * V("hH1_21"));
    b.invert(C1() - V("eta2_12") * V("hH2_21"));
    b.invert(C1() - V("eta1_12") * V("epsP_2") * V("hH2_21"));
  }
}

ChartSpec build_y(const SizeVector &sizes, const std::string &which) {
  int s3 = sizes.entries()[2], s4 = sizes.entries()[3];
  Builder b;
  b.spec.name = "Y_" + which;
  b.spec.family = "Y";
  b.spec.sizes = sizes;
  b.spec.pivot1 = 1;
  b.spec.pivot2 = 2;
  b.spec.theta = Matrix2xN(sizes.columns());
  b.col(1, C1(), RatFunc(0));
  b.col(2, RatFunc(0), C1());
  y_style_vars(b, which, s3, s4);
  y_style_blocks(b, which, 3, s3, 3 + s3, s4);
  // default representatives
  b.rep(1, 2, 1, 2);
  b.rep(1, 3, 1, 3);
  b.rep(1, 4, 1, 3 + s3);
  b.rep(2, 3, 2, 3);
  b.rep(2, 4, 2, 3 + s3);
  b.rep(3, 3, 3, 4);
  b.rep(3, 4, 3, 3 + s3);
  b.rep(4, 4, 3 + s3, 4 + s3);
  auto set_rep = [&](int a, int bb, int i1, int i2) {
    for (auto &[t, p] : b.spec.reps)
      if (t == type4(a, bb))
        p = IndexPair(i1, i2);
  };
  if (which == "1A")
    b.spec.target = "A23";
  else if (which == "1B" || which == "2A" || which == "2B" || which == "3")
    b.spec.target = "A12";
  else
    b.spec.target = "A23";
  if (which == "2B")
    set_rep(3, 4, 4, 3 + s3);
  else if (which == "3")
    set_rep(3, 4, 3, 4 + s3);
  else if (which == "4") {
    set_rep(1, 3, 1, 4);
    set_rep(3, 4, 4, 3 + s3);
  } else if (which == "5")
    set_rep(1, 4, 1, 4 + s3);
  else if (which == "6") {
    set_rep(1, 3, 1, 4);
    set_rep(1, 4, 1, 4 + s3);
    set_rep(3, 4, 4, 3 + s3);
  }
  return b.spec;
}

// ----- family Z: sizes (1,s2,s3,s4), pivots (1,2) -------------------------

void z_block2(Builder &b, int s2, const std::string &eps_name) {
  // columns 2..1+s2; first is the second pivot
  for (int c = 2; c <= s2; ++c) {
    RatFunc top = eps_name.empty() ? C1() : V(eps_name);
    if (c >= 3)
      top = top * V("vV_" + std::to_string(c));
    b.col(1 + c, top, V("z_" + std::to_string(c)));
  }
}

void z_block2_vars(Builder &b, int s2, const std::string &eps_name) {
  if (!eps_name.empty())
    b.var(eps_name);
  for (int c = 2; c <= s2; ++c)
    b.var("z_" + std::to_string(c));
  for (int c = 3; c <= s2; ++c)
    b.var("vV_" + std::to_string(c));
}

ChartSpec build_z(const SizeVector &sizes, const std::string &which) {
  int s2 = sizes.entries()[1], s3 = sizes.entries()[2],
      s4 = sizes.entries()[3];
  Builder b;
  b.spec.name = "Z_" + which;
  b.spec.family = "Z";
  b.spec.sizes = sizes;
  b.spec.pivot1 = 1;
  b.spec.pivot2 = 2;
  b.spec.theta = Matrix2xN(sizes.columns());
  b.col(1, C1(), RatFunc(0));
  b.col(2, RatFunc(0), C1());
  int blk3 = 2 + s2, blk4 = 2 + s2 + s3;
  bool y_style = which == "1A" || which == "1B" || which == "2A" ||
                 which == "2B" || which == "3" || which == "4" ||
                 which == "5" || which == "6";
  if (y_style) {
    y_style_vars(b, which, s3, s4);
    z_block2_vars(b, s2, "epsM_1");
    z_block2(b, s2, "epsM_1");
    y_style_blocks(b, which, blk3, s3, blk4, s4);
  } else {
    // charts 7..9: eta/hH carry superscript 1 over block 4, xX/xi over block 3
    auto e1 = [&](int c) { return vs("eta", 1, 1, c); };
    auto h1 = [&](int c) { return vs("hH", 1, 2, c); };
    auto x1 = [&](int c) { return vs("xX", 1, 1, c); };
    auto xi1 = [&](int c) { return vs("xi", 1, 2, c); };
    if (which == "7") {
      b.var("epsP_1");
      b.vars_range_sup("eta", 1, 1, 2, s4);
      b.var("hH1_21");
      b.vars_range_sup("hH", 1, 2, 3, s4);
      b.vars_range_sup("xX", 1, 1, 2, s3);
      b.vars_range_sup("xi", 1, 2, 2, s3);
      z_block2_vars(b, s2, "epsM_2");
      b.invert(C1() - e1(2) * V("hH1_21"));
      b.invert(C1() - V("epsP_1") * V("hH1_21"));
      z_block2(b, s2, "epsM_2");
      for (int c = 1; c <= s3; ++c) {
        if (c == 1)
          b.col(blk3, C1(), C1());
        else {
          RatFunc lead = (c == 2) ? x1(2) : x1(2) * x1(c);
          b.col(blk3 + c - 1, lead + xi1(c), xi1(c));
        }
      }
    } else if (which == "8") {
      b.var("epsP_1");
      b.vars_range_sup("eta", 1, 1, 2, s4);
      b.var("hH1_21");
      b.vars_range_sup("hH", 1, 2, 3, s4);
      b.var("xX1_11");
      b.vars_range_sup("xX", 1, 1, 3, s3);
      b.vars_range_sup("xi", 1, 2, 2, s3);
      z_block2_vars(b, s2, "epsM_2");
      b.invert(C1() - e1(2) * V("hH1_21"));
      b.invert(C1() - V("xX1_11") * xi1(2));
      b.invert(C1() - V("xX1_11") * V("epsP_1") * V("hH1_21"));
      z_block2(b, s2, "epsM_2");
      for (int c = 1; c <= s3; ++c) {
        if (c == 1)
          b.col(blk3, V("xX1_11"), C1());
        else if (c == 2)
          b.col(blk3 + 1, C1(), xi1(2));
        else
          b.col(blk3 + c - 1, x1(c), xi1(c));
      }
    } else if (which == "9") {
      b.var("epsP_1");
      b.vars_range_sup("eta", 1, 1, 2, s4);
      b.var("hH1_21");
      b.vars_range_sup("hH", 1, 2, 3, s4);
      b.vars_range_sup("xX", 1, 1, 1, s3);
      b.vars_range_sup("xi", 1, 2, 2, s3);
      z_block2_vars(b, s2, "");
      b.invert(C1() - e1(2) * V("hH1_21"));
      b.invert(C1() - V("xX1_11") * V("z_2"));
      b.invert(C1() - V("xX1_11") * V("epsP_1") * V("hH1_21"));
      z_block2(b, s2, "");
      for (int c = 1; c <= s3; ++c) {
        if (c == 1)
          b.col(blk3, V("xX1_11"), C1());
        else if (c == 2)
          b.col(blk3 + 1, x1(2) + V("xX1_11") * xi1(2), xi1(2));
        else
          b.col(blk3 + c - 1, x1(2) * x1(c) + V("xX1_11") * xi1(c), xi1(c));
      }
    } else {
      throw std::logic_error("build_z: unknown chart");
    }
    // block 4 for charts 7..9
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4, C1(), V("epsP_1") * V("hH1_21"));
      else if (c == 2)
        b.col(blk4 + 1, e1(2), V("epsP_1"));
      else
        b.col(blk4 + c - 1, e1(c), V("epsP_1") * h1(c));
    }
  }
  // default representatives
  b.rep(1, 2, 1, 2);
  b.rep(1, 3, 1, 2 + s2);
  b.rep(1, 4, 1, 2 + s2 + s3);
  b.rep(2, 2, 2, 3);
  b.rep(2, 3, 2, 2 + s2);
  b.rep(2, 4, 2, 2 + s2 + s3);
  b.rep(3, 3, 2 + s2, 3 + s2);
  b.rep(3, 4, 2 + s2, 2 + s2 + s3);
  b.rep(4, 4, 2 + s2 + s3, 3 + s2 + s3);
  auto set_rep = [&](int a, int bb, int i1, int i2) {
    for (auto &[t, p] : b.spec.reps)
      if (t == type4(a, bb))
        p = IndexPair(i1, i2);
  };
  if (which == "1A")
    b.spec.target = "A23";
  else if (which == "1B" || which == "2A" || which == "2B" || which == "3")
    b.spec.target = "A12";
  else
    b.spec.target = "A23";
  if (which == "2B")
    set_rep(3, 4, 3 + s2, 2 + s2 + s3);
  else if (which == "3")
    set_rep(3, 4, 2 + s2, 3 + s2 + s3);
  else if (which == "4") {
    set_rep(1, 3, 1, 3 + s2);
    set_rep(3, 4, 3 + s2, 2 + s2 + s3);
  } else if (which == "5" || which == "7")
    set_rep(1, 4, 1, 3 + s2 + s3);
  else if (which == "6") {
    set_rep(1, 3, 1, 3 + s2);
    set_rep(1, 4, 1, 3 + s2 + s3);
    set_rep(3, 4, 3 + s2, 2 + s2 + s3);
  } else if (which == "8") {
    set_rep(1, 4, 1, 3 + s2 + s3);
    set_rep(2, 3, 2, 3 + s2);
  } else if (which == "9") {
    set_rep(1, 4, 1, 3 + s2 + s3);
    set_rep(2, 3, 3, 2 + s2);
  }
  return b.spec;
}

// ----- family W: all sizes >= 2, pivots (1, 1+s1) --------------------------

ChartSpec build_w(const SizeVector &sizes, const std::string &which) {
  int s1 = sizes.entries()[0], s2 = sizes.entries()[1],
      s3 = sizes.entries()[2], s4 = sizes.entries()[3];
  Builder b;
  b.spec.name = "W_" + which;
  b.spec.family = "W";
  b.spec.sizes = sizes;
  b.spec.pivot1 = 1;
  b.spec.pivot2 = 1 + s1;
  b.spec.theta = Matrix2xN(sizes.columns());
  b.col(1, C1(), RatFunc(0));
  b.col(1 + s1, RatFunc(0), C1());
  int blk3 = 1 + s1 + s2, blk4 = 1 + s1 + s2 + s3;
  auto e1 = [&](int c) { return vs("eta", 1, 1, c); };
  auto h1 = [&](int c) { return vs("hH", 1, 2, c); };
  auto e2 = [&](int c) { return vs("eta", 2, 1, c); };
  auto h2 = [&](int c) { return vs("hH", 2, 2, c); };

  bool y_style = which == "1A" || which == "1B" || which == "2A" ||
                 which == "2B" || which == "3" || which == "4" ||
                 which == "5" || which == "6";
  // variables and the two large blocks
  std::string ykey = which;
  if (y_style) {
    y_style_vars(b, which, s3, s4);
    y_style_blocks(b, which, blk3, s3, blk4, s4);
  } else if (which == "7A" || which == "7B") {
    b.var("epsP_2");
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 2, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 1, s4);
    b.invert(C1() - V("epsP_2") * h2(1));
    b.invert(which == "7A" ? h2(1) : C1() - V("y_2") * h2(1));
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3, C1(), C1());
      else if (c == 2)
        b.col(blk3 + 1, e1(2), h1(2) + e1(2));
      else
        b.col(blk3 + c - 1, e1(c), h1(2) * h1(c) + e1(c));
    }
    RatFunc eps = V("epsP_2");
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4, C1(), eps * h2(1));
      else if (c == 2)
        b.col(blk4 + 1, e2(2), eps * (h2(2) + e2(2) * h2(1)));
      else
        b.col(blk4 + c - 1, e2(c), eps * (h2(2) * h2(c) + e2(c) * h2(1)));
    }
  } else if (which == "8A" || which == "8B") {
    b.var("epsP_2");
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.var("hH1_21");
    b.vars_range_sup("hH", 1, 2, 3, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 1, s4);
    b.invert(C1() - e1(2) * V("epsP_2") * h2(1));
    b.invert(C1() - e1(2) * h2(1));
    b.invert(which == "8A" ? h2(1) : C1() - V("y_2") * h2(1));
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3, C1(), V("hH1_21"));
      else if (c == 2)
        b.col(blk3 + 1, e1(2), C1());
      else
        b.col(blk3 + c - 1, e1(c), h1(c));
    }
    RatFunc eps = V("epsP_2");
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4, C1(), eps * h2(1));
      else if (c == 2)
        b.col(blk4 + 1, e2(2), eps * (h2(2) + e2(2) * h2(1)));
      else
        b.col(blk4 + c - 1, e2(c), eps * (h2(2) * h2(c) + e2(c) * h2(1)));
    }
  } else if (which[0] == '9') {
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 1, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 1, s4);
    RatFunc g = h2(2) - e2(2) * h1(1);
    RatFunc corner = h2(1) * g + h1(1);
    b.invert(C1() - e2(2) * h2(1));
    if (which == "9A" || which == "9B")
      b.invert(h1(1));
    else
      b.invert(C1() - V("y_2") * h1(1));
    if (which == "9A" || which == "9C")
      b.invert(corner);
    else
      b.invert(C1() - V("y_2") * corner);
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3, C1(), h1(1));
      else if (c == 2)
        b.col(blk3 + 1, e1(2), h1(2) * g + h1(1) * e1(2));
      else
        b.col(blk3 + c - 1, e1(c), h1(2) * h1(c) * g + h1(1) * e1(c));
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4, C1(), corner);
      else if (c == 2)
        b.col(blk4 + 1, e2(2), h2(2));
      else
        b.col(blk4 + c - 1, e2(c), h2(c) * g + h1(1) * e2(c));
    }
  } else if (which[0] == '1' && which[1] == '0') {
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 1, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 1, s4);
    RatFunc g = h1(2) - e1(2) * h1(1);
    RatFunc corner = h2(1) * g + h1(1);
    char sub = which[2];
    if (sub == 'A' || sub == 'B' || sub == 'C' || sub == 'D')
      b.invert(C1() - e1(2) * h2(1));
    else
      b.invert(h2(1));
    if (sub == 'A' || sub == 'B' || sub == 'E' || sub == 'F')
      b.invert(h1(1));
    else
      b.invert(C1() - V("y_2") * h1(1));
    if (sub == 'A' || sub == 'C' || sub == 'E' || sub == 'G')
      b.invert(corner);
    else
      b.invert(C1() - V("y_2") * corner);
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3, C1(), h1(1));
      else if (c == 2)
        b.col(blk3 + 1, e1(2), h1(2));
      else
        b.col(blk3 + c - 1, e1(c), h1(c) * g + e1(c) * h1(1));
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4, C1(), corner);
      else if (c == 2)
        b.col(blk4 + 1, e2(2), (h2(2) + h2(1) * e2(2)) * g + h1(1) * e2(2));
      else
        b.col(blk4 + c - 1, e2(c),
              (h2(2) * h2(c) + h2(1) * e2(c)) * g + h1(1) * e2(c));
    }
  } else if (which[0] == '1' && which[1] == '1') {
    b.vars_range_sup("eta", 1, 1, 2, s3);
    b.vars_range_sup("hH", 1, 2, 1, s3);
    b.vars_range_sup("eta", 2, 1, 2, s4);
    b.vars_range_sup("hH", 2, 2, 1, s4);
    RatFunc g = h2(1) - h1(1);
    char sub = which[2];
    if (sub == 'A' || sub == 'B')
      b.invert(h1(1));
    else
      b.invert(C1() - V("y_2") * h1(1));
    if (sub == 'A' || sub == 'C')
      b.invert(h2(1));
    else
      b.invert(C1() - V("y_2") * h2(1));
    for (int c = 1; c <= s3; ++c) {
      if (c == 1)
        b.col(blk3, C1(), h1(1));
      else if (c == 2)
        b.col(blk3 + 1, e1(2), h1(2) * g + h1(1) * e1(2));
      else
        b.col(blk3 + c - 1, e1(c), h1(2) * h1(c) * g + h1(1) * e1(c));
    }
    for (int c = 1; c <= s4; ++c) {
      if (c == 1)
        b.col(blk4, C1(), h2(1));
      else if (c == 2)
        b.col(blk4 + 1, e2(2), (h2(2) + e2(2)) * g + e2(2) * h1(1));
      else
        b.col(blk4 + c - 1, e2(c), (h2(2) * h2(c) + e2(c)) * g + e2(c) * h1(1));
    }
  } else {
    throw std::logic_error("build_w: unknown chart");
  }

  // block 2 (between the pivots) is common to all W charts
  z_block2_vars(b, s2, "epsM_1");
  for (int c = 2; c <= s2; ++c) {
    RatFunc top = V("epsM_1");
    if (c >= 3)
      top = top * V("vV_" + std::to_string(c));
    b.col(s1 + c, top, V("z_" + std::to_string(c)));
  }
  // block 1: scaled second row
  RatFunc beta;
  if (which == "1A" || which == "1B" || which == "4" || which == "5" ||
      which == "6")
    beta = V("epsP_2") * V("epsP_3");
  else if (which == "2A" || which == "2B")
    beta = (C1() + vs("xX", 2, 1, 1) * (V("eta1_12") - vs("hH", 1, 2, 2))) *
           V("epsP_3");
  else if (which == "3")
    beta = ((C1() - vs("xX", 2, 1, 1) * V("eta2_12")) /
            (C1() - vs("xX", 2, 1, 1) * vs("hH", 2, 2, 2))) *
           V("epsP_3");
  else if (which == "7A" || which == "7B" || which == "8A" || which == "8B")
    beta = V("epsP_2");
  else
    beta = C1();
  bool has_eps3 = which == "1A" || which == "1B" || which == "2A" ||
                  which == "2B" || which == "3" || which == "4" ||
                  which == "5" || which == "6";
  if (has_eps3)
    b.var("epsP_3");
  for (int c = 2; c <= s1; ++c)
    b.var("y_" + std::to_string(c));
  for (int c = 3; c <= s1; ++c)
    b.var("uU_" + std::to_string(c));
  for (int c = 2; c <= s1; ++c) {
    RatFunc bot = beta;
    if (c >= 3)
      bot = bot * V("uU_" + std::to_string(c));
    b.col(c, V("y_" + std::to_string(c)), bot);
  }

  // default representatives
  b.rep(1, 1, 1, 2);
  b.rep(1, 2, 1, 1 + s1);
  b.rep(1, 3, 1, 1 + s1 + s2);
  b.rep(1, 4, 1, 1 + s1 + s2 + s3);
  b.rep(2, 2, 1 + s1, 2 + s1);
  b.rep(2, 3, 1 + s1, 1 + s1 + s2);
  b.rep(2, 4, 1 + s1, 1 + s1 + s2 + s3);
  b.rep(3, 3, 1 + s1 + s2, 2 + s1 + s2);
  b.rep(3, 4, 1 + s1 + s2, 1 + s1 + s2 + s3);
  b.rep(4, 4, 1 + s1 + s2 + s3, 2 + s1 + s2 + s3);
  auto set_rep = [&](int a, int bb, int i1, int i2) {
    for (auto &[t, p] : b.spec.reps)
      if (t == type4(a, bb))
        p = IndexPair(i1, i2);
  };
  int c3 = 1 + s1 + s2, c4 = 1 + s1 + s2 + s3;
  if (which == "2B" || which == "10A") {
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "3" || which == "9A") {
    set_rep(3, 4, c3, c4 + 1);
  } else if (which == "4" || which == "8A") {
    set_rep(1, 3, 1, c3 + 1);
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "5") {
    set_rep(1, 4, 1, c4 + 1);
  } else if (which == "6") {
    set_rep(1, 3, 1, c3 + 1);
    set_rep(1, 4, 1, c4 + 1);
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "7B" || which == "10F" || which == "11B") {
    set_rep(1, 4, 2, c4);
  } else if (which == "8B") {
    set_rep(1, 3, 1, c3 + 1);
    set_rep(1, 4, 2, c4);
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "9B") {
    set_rep(1, 4, 2, c4);
    set_rep(3, 4, c3, c4 + 1);
  } else if (which == "9C") {
    set_rep(1, 3, 2, c3);
    set_rep(3, 4, c3, c4 + 1);
  } else if (which == "9D") {
    set_rep(1, 3, 2, c3);
    set_rep(1, 4, 2, c4);
    set_rep(3, 4, c3, c4 + 1);
  } else if (which == "10B") {
    set_rep(1, 4, 2, c4);
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "10C") {
    set_rep(1, 3, 2, c3);
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "10D") {
    set_rep(1, 3, 2, c3);
    set_rep(1, 4, 2, c4);
    set_rep(3, 4, c3 + 1, c4);
  } else if (which == "10G" || which == "11C") {
    set_rep(1, 3, 2, c3);
  } else if (which == "10H" || which == "11D") {
    set_rep(1, 3, 2, c3);
    set_rep(1, 4, 2, c4);
  }
  static const std::map<std::string, std::string> targets = {
      {"1A", "A23"}, {"1B", "A12"}, {"2A", "A12"}, {"2B", "A12"},
      {"3", "A12"},  {"4", "A23"},  {"5", "A23"},  {"6", "A23"},
      {"7A", "A23"}, {"7B", "A23"}, {"8A", "A23"}, {"8B", "A23"},
      {"9A", "A12"}, {"9B", "A12"}, {"9C", "A12"}, {"9D", "A12"},
      {"10A", "A12"}, {"10B", "A12"}, {"10C", "A12"}, {"10D", "A12"},
      {"10E", "A12"}, {"10F", "A12"}, {"10G", "A12"}, {"10H", "A12"},
      {"11A", "A12"}, {"11B", "A12"}, {"11C", "A12"}, {"11D", "A12"}};
  b.spec.target = targets.at(which);
  return b.spec;
}

} // namespace

std::vector<ChartSpec> chart_catalog(const SizeVector &sizes) {
  std::string fam = shape_family(sizes);
  std::vector<ChartSpec> out;
  if (fam == "X") {
    for (const char *w : {"1A", "1B", "2", "3", "4", "5"})
      out.push_back(build_x(sizes, w));
  } else if (fam == "Y") {
    for (const char *w : {"1A", "1B", "2A", "2B", "3", "4", "5", "6"})
      out.push_back(build_y(sizes, w));
  } else if (fam == "Z") {
    for (const char *w :
         {"1A", "1B", "2A", "2B", "3", "4", "5", "6", "7", "8", "9"})
      out.push_back(build_z(sizes, w));
  } else {
    for (const char *w :
         {"1A", "1B", "2A", "2B", "3", "4", "5", "6", "7A", "7B", "8A", "8B",
          "9A", "9B", "9C", "9D", "10A", "10B", "10C", "10D", "10E", "10F",
          "10G", "10H", "11A", "11B", "11C", "11D"})
      out.push_back(build_w(sizes, w));
  }
  // sanity: every type has a representative of that type
  for (const auto &c : out) {
    auto types = enumerate_types(c.sizes);
    if (c.reps.size() != types.size())
      throw std::logic_error("catalog: representative table size mismatch in " +
                             c.name);
    for (const auto &[t, p] : c.reps)
      if (!(pair_type(c.sizes, p) == t))
        throw std::logic_error("catalog: representative type mismatch in " +
                               c.name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pinned simplified image formulas of the first two X charts; every entry is
// the exact expansion ratio of the corresponding minors.
// ---------------------------------------------------------------------------

std::vector<PinnedFormula> pinned_formulas(const ChartSpec &chart) {
  std::vector<PinnedFormula> out;
  auto gen = [&](int k, const std::string &expected) {
    PinnedFormula f;
    f.is_generator = true;
    f.generator = k;
    f.expected = expected;
    out.push_back(f);
  };
  auto pr = [&](int i1, int i2, const std::string &expected) {
    PinnedFormula f;
    f.pair = IndexPair(i1, i2);
    f.expected = expected;
    out.push_back(f);
  };
  if (chart.family != "X")
    return out;
  int s4 = chart.sizes.entries()[3];
  int n = chart.sizes.columns();
  auto c_of = [&](int i) { return i - 3; }; // local block-4 index
  if (chart.name == "X_1A") {
    gen(0, "epsP_2");
    gen(1, "1/(epsP_2)");
    gen(2, "-(1-epsP_2)");
    gen(3, "-epsP_2*xX_12");
    pr(1, 2, "1");
    pr(1, 3, "1");
    pr(2, 3, "1");
    pr(1, 4, "1");
    pr(2, 4, "1");
    pr(3, 4, "1");
    pr(4, 5, "1");
    for (int i = 5; i <= n; ++i)
      pr(1, i, "hH_2" + std::to_string(c_of(i)));
    pr(2, 5, "xX_12*(1-epsP_2)+hH_22");
    for (int i = 6; i <= n; ++i)
      pr(2, i,
         "xX_12*xX_1" + std::to_string(c_of(i)) + "*(1-epsP_2)+hH_2" +
             std::to_string(c_of(i)));
    pr(3, 5, "hH_22-epsP_2*xX_12");
    for (int i = 6; i <= n; ++i)
      pr(3, i,
         "hH_2" + std::to_string(c_of(i)) + "-epsP_2*xX_12*xX_1" +
             std::to_string(c_of(i)));
    for (int i = 6; i <= n; ++i)
      pr(4, i, "xX_1" + std::to_string(c_of(i)));
    for (int i = 6; i <= n; ++i)
      pr(5, i,
         "hH_22*xX_1" + std::to_string(c_of(i)) + "-hH_2" +
             std::to_string(c_of(i)));
    for (int i1 = 6; i1 <= n; ++i1)
      for (int i2 = i1 + 1; i2 <= n; ++i2)
        pr(i1, i2,
           "xX_1" + std::to_string(c_of(i2)) + "*hH_2" +
               std::to_string(c_of(i1)) + "-xX_1" + std::to_string(c_of(i1)) +
               "*hH_2" + std::to_string(c_of(i2)));
    (void)s4;
  } else if (chart.name == "X_2") {
    gen(0, "1+xX_11*(hH_22-eta_12)");
    gen(1, "1/(1+xX_11*(hH_22-eta_12))");
    gen(2, "-(1-xX_11*eta_12)*(hH_22-eta_12)");
    gen(3, "(1+xX_11*(hH_22-eta_12))/(1-xX_11*eta_12)");
    pr(1, 2, "1");
    pr(1, 3, "1");
    pr(2, 3, "1");
    pr(1, 4, "1");
    pr(2, 4, "1");
    pr(3, 5, "1");
    pr(4, 5, "1");
    for (int i = 5; i <= n; ++i)
      pr(1, i, "hH_2" + std::to_string(c_of(i)));
    pr(2, 5, "eta_12");
    for (int i = 6; i <= n; ++i)
      pr(2, i,
         "hH_2" + std::to_string(c_of(i)) + "+xX_1" + std::to_string(c_of(i)) +
             "*(hH_22-eta_12)");
    pr(3, 4, "(-xX_11)/(1-xX_11*eta_12)");
    for (int i = 6; i <= n; ++i)
      pr(3, i,
         "(-xX_1" + std::to_string(c_of(i)) + "-xX_11*hH_2" +
             std::to_string(c_of(i)) + "-xX_11*xX_1" + std::to_string(c_of(i)) +
             "*(hH_22-eta_12))/(1-xX_11*eta_12)");
    for (int i = 6; i <= n; ++i)
      pr(4, i, "-xX_1" + std::to_string(c_of(i)));
    for (int i = 6; i <= n; ++i)
      pr(5, i,
         "-xX_1" + std::to_string(c_of(i)) + "*hH_22-hH_2" +
             std::to_string(c_of(i)));
    for (int i1 = 6; i1 <= n; ++i1)
      for (int i2 = i1 + 1; i2 <= n; ++i2)
        pr(i1, i2,
           "xX_1" + std::to_string(c_of(i1)) + "*hH_2" +
               std::to_string(c_of(i2)) + "-xX_1" + std::to_string(c_of(i2)) +
               "*hH_2" + std::to_string(c_of(i1)));
  }
  return out;
}

} // namespace grasscut
