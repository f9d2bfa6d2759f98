#include "grasscut/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grasscut {

QVec point_coords(const LatticePoint &p) {
  QVec out;
  out.reserve(p.coords.size());
  for (int c : p.coords)
    out.emplace_back(c);
  return out;
}

namespace {

std::vector<QVec> type_coords(const std::vector<LatticePoint> &pts) {
  std::vector<QVec> out;
  out.reserve(pts.size());
  for (const auto &p : pts)
    out.push_back(point_coords(p));
  return out;
}

int mask_sum(const LatticePoint &p, SubsetMask mask) {
  int acc = 0;
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (mask & (1u << i))
      acc += p.coords[i];
  return acc;
}

Rational dot(const QVec &a, const QVec &b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i] * b[i];
  return acc;
}

std::vector<QVec> identity_basis(std::size_t d) {
  std::vector<QVec> id;
  for (std::size_t i = 0; i < d; ++i) {
    QVec e(d, Rational(0));
    e[i] = Rational(1);
    id.push_back(std::move(e));
  }
  return id;
}

} // namespace

std::vector<QVec> affine_function_basis(const SizeVector &s) {
  auto types = enumerate_types(s);
  std::size_t m = types.size();
  QMat cols;
  {
    QVec ones(m, Rational(1));
    cols.push_back(ones);
    for (int t = 0; t < s.blocks(); ++t) {
      QVec row(m);
      for (std::size_t i = 0; i < m; ++i)
        row[i] = Rational(types[i].coords[static_cast<std::size_t>(t)]);
      cols.push_back(row);
    }
  }
  std::vector<QVec> basis;
  QMat acc;
  for (const auto &row : cols) {
    acc.push_back(row);
    if (rank_of(acc) < static_cast<int>(acc.size()))
      acc.pop_back();
    else
      basis.push_back(row);
  }
  return basis;
}

ConvexBuildResult convex_from_bounds(const SizeVector &s,
                                     const std::map<SubsetMask, int> &bounds) {
  ConvexBuildResult out;
  const int N = s.blocks();
  const SubsetMask full = (1u << N) - 1u;
  auto get = [&](SubsetMask m) {
    auto it = bounds.find(m);
    return it == bounds.end() ? 0 : it->second;
  };
  if (get(0) != 0) {
    out.error = "bound of the empty set must be 0";
    return out;
  }
  if (get(full) != 2) {
    out.error = "bound of the full set must be 2";
    return out;
  }
  for (const auto &[m, d] : bounds)
    if (d < 0) {
      out.error = "bounds must be nonnegative";
      return out;
    }
  for (SubsetMask a = 0; a <= full; ++a)
    for (SubsetMask b = a; b <= full; ++b)
      if (get(a) + get(b) > get(a | b) + get(a & b)) {
        std::ostringstream os;
        os << "bound condition violated at masks " << a << "," << b;
        out.error = os.str();
        return out;
      }
  out.ok = true;
  out.convex.bounds = bounds;
  for (const auto &p : enumerate_types(s)) {
    bool in = true;
    for (const auto &[m, d] : bounds)
      if (mask_sum(p, m) < d) {
        in = false;
        break;
      }
    if (in)
      out.convex.points.push_back(p);
  }
  out.convex.hull_dim = affine_dim(type_coords(out.convex.points));
  return out;
}

std::optional<LatticeConvex> tightest_convex(const SizeVector &s,
                                             std::vector<LatticePoint> pts) {
  if (pts.empty())
    return std::nullopt;
  std::sort(pts.begin(), pts.end());
  const SubsetMask full = (1u << s.blocks()) - 1u;
  std::map<SubsetMask, int> bounds;
  for (SubsetMask m = 1; m <= full; ++m) {
    int lo = 1 << 30;
    for (const auto &p : pts)
      lo = std::min(lo, mask_sum(p, m));
    if (lo > 0)
      bounds[m] = lo;
  }
  auto res = convex_from_bounds(s, bounds);
  if (!res.ok)
    return std::nullopt;
  if (res.convex.points != pts)
    return std::nullopt;
  return res.convex;
}

std::vector<LatticeConvex> enumerate_paves(const SizeVector &s) {
  const int N = s.blocks();
  if (N > 4)
    throw std::invalid_argument("enumerate_paves: too many blocks");
  auto types = enumerate_types(s);
  int top_dim = affine_dim(type_coords(types));
  const SubsetMask full = (1u << N) - 1u;
  // masks in increasing order; the bound condition for a pair (a, b) is
  // enforced exactly once, when their union is assigned, as a lower bound
  // d[a|b] >= d[a] + d[b] - d[a&b]
  std::vector<std::vector<std::pair<SubsetMask, SubsetMask>>> union_pairs(
      full + 1);
  for (SubsetMask a = 1; a <= full; ++a)
    for (SubsetMask b = a; b <= full; ++b) {
      SubsetMask u = a | b;
      if (a != u && b != u)
        union_pairs[u].emplace_back(a, b);
    }
  std::vector<int> d(full + 1, 0);
  d[full] = 2;
  std::set<std::vector<LatticePoint>> seen;
  std::vector<LatticeConvex> out;
  std::function<void(SubsetMask)> rec = [&](SubsetMask m) {
    if (m == full) {
      // the full mask is pinned at 2; enforce its pair bounds
      for (const auto &[a, b] : union_pairs[full])
        if (d[a] + d[b] - d[a & b] > 2)
          return;
      std::map<SubsetMask, int> bounds;
      for (SubsetMask x = 0; x <= full; ++x)
        if (d[x])
          bounds[x] = d[x];
      bounds[0] = 0;
      bounds[full] = 2;
      auto res = convex_from_bounds(s, bounds);
      if (!res.ok || res.convex.hull_dim != top_dim)
        return;
      if (seen.insert(res.convex.points).second)
        out.push_back(res.convex);
      return;
    }
    int lo = 0;
    for (SubsetMask sub = (m - 1) & m;; sub = (sub - 1) & m) {
      lo = std::max(lo, d[sub]);
      if (sub == 0)
        break;
    }
    for (const auto &[a, b] : union_pairs[m])
      lo = std::max(lo, d[a] + d[b] - d[a & b]);
    for (int v = lo; v <= 2; ++v) {
      d[m] = v;
      rec(m + 1);
    }
    d[m] = 0;
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CellRows {
  QMat equalities;
  QMat inequalities;
};

// Linear rows over functions on `domain` expressing compatibility with one
// full-dimensional cell: the function is affine on the cell (equalities) and
// dominates the cell's affine extension elsewhere (inequalities, as
// row . v >= 0).
CellRows cell_rows(const std::vector<LatticePoint> &domain,
                   const LatticeConvex &cell) {
  CellRows out;
  std::size_t m = domain.size();
  std::vector<QVec> anchors;
  std::vector<std::size_t> anchor_idx;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::binary_search(cell.points.begin(), cell.points.end(),
                            domain[i]))
      continue;
    auto cand = anchors;
    cand.push_back(point_coords(domain[i]));
    if (affine_dim(cand) == static_cast<int>(cand.size()) - 1) {
      anchors = cand;
      anchor_idx.push_back(i);
    }
  }
  for (std::size_t q = 0; q < m; ++q) {
    bool in_cell = std::binary_search(cell.points.begin(), cell.points.end(),
                                      domain[q]);
    if (in_cell && std::find(anchor_idx.begin(), anchor_idx.end(), q) !=
                       anchor_idx.end())
      continue;
    QMat sys(domain[q].coords.size() + 1, QVec(anchors.size()));
    QVec rhs;
    for (std::size_t c = 0; c < domain[q].coords.size(); ++c) {
      for (std::size_t a = 0; a < anchors.size(); ++a)
        sys[c][a] = anchors[a][c];
      rhs.push_back(Rational(domain[q].coords[c]));
    }
    for (std::size_t a = 0; a < anchors.size(); ++a)
      sys[domain[q].coords.size()][a] = Rational(1);
    rhs.push_back(Rational(1));
    auto lam = solve(sys, rhs);
    if (!lam)
      throw std::logic_error("cell_rows: point outside the affine span");
    QVec row(m, Rational(0));
    row[q] = Rational(1);
    for (std::size_t a = 0; a < anchors.size(); ++a)
      row[anchor_idx[a]] -= (*lam)[a];
    if (in_cell)
      out.equalities.push_back(std::move(row));
    else
      out.inequalities.push_back(std::move(row));
  }
  return out;
}

} // namespace

PavingCheck is_paving(const SizeVector &s,
                      const std::vector<LatticeConvex> &cells) {
  PavingCheck out;
  auto types = enumerate_types(s);
  auto all_coords = type_coords(types);
  int top_dim = affine_dim(all_coords);
  if (cells.empty()) {
    out.reason = "no cells";
    return out;
  }
  for (const auto &c : cells)
    if (c.hull_dim != top_dim) {
      out.reason = "cell " + cell_id(c) + " is not full-dimensional";
      return out;
    }
  if (top_dim > 0) {
    AffineChart chart(all_coords);
    auto flat = [&](const LatticeConvex &c) {
      std::vector<QVec> pts;
      for (const auto &p : c.points)
        pts.push_back(chart.coords(point_coords(p)));
      return pts;
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (interiors_intersect(flat(cells[i]), flat(cells[j]), top_dim)) {
          out.reason = "cells " + cell_id(cells[i]) + " and " +
                       cell_id(cells[j]) + " overlap";
          return out;
        }
    std::vector<QVec> whole;
    for (const auto &p : types)
      whole.push_back(chart.coords(point_coords(p)));
    Rational total = hull_volume(whole, top_dim);
    Rational acc(0);
    for (const auto &c : cells)
      acc += hull_volume(flat(c), top_dim);
    if (acc != total) {
      out.reason = "cells cover volume " + acc.to_string() + " of " +
                   total.to_string();
      return out;
    }
  } else if (cells.size() != 1) {
    out.reason = "zero-dimensional type set admits only the trivial cover";
    return out;
  }
  std::size_t m = types.size();
  QMat a;
  QVec b, c(m + 1, Rational(0));
  c[m] = Rational(1);
  for (const auto &cell : cells) {
    CellRows rows = cell_rows(types, cell);
    for (const auto &r : rows.equalities) {
      QVec row = r;
      row.push_back(Rational(0));
      a.push_back(row);
      b.push_back(Rational(0));
      for (auto &x : row)
        x = -x;
      a.push_back(row);
      b.push_back(Rational(0));
    }
    for (const auto &r : rows.inequalities) {
      QVec row;
      for (const auto &x : r)
        row.push_back(-x);
      row.push_back(Rational(1)); // row.v >= t  <=>  -row.v + t <= 0
      a.push_back(row);
      b.push_back(Rational(0));
    }
  }
  QVec cap(m + 1, Rational(0));
  cap[m] = Rational(1);
  a.push_back(cap);
  b.push_back(Rational(1));
  LPResult lp = solve_lp(a, b, c);
  if (lp.status != LPResult::Status::kOptimal || !(lp.value > Rational(0))) {
    out.reason = "no strictly compatible function";
    return out;
  }
  out.ok = true;
  out.certificate.assign(lp.x.begin(), lp.x.begin() + static_cast<long>(m));
  return out;
}

std::vector<Paving> enumerate_pavings(const SizeVector &s) {
  auto paves = enumerate_paves(s);
  auto types = enumerate_types(s);
  auto all_coords = type_coords(types);
  int top_dim = affine_dim(all_coords);
  Rational total(0);
  std::vector<Rational> vols;
  if (top_dim > 0) {
    AffineChart chart(all_coords);
    std::vector<QVec> whole;
    for (const auto &p : types)
      whole.push_back(chart.coords(point_coords(p)));
    total = hull_volume(whole, top_dim);
    for (const auto &c : paves) {
      std::vector<QVec> pts;
      for (const auto &p : c.points)
        pts.push_back(chart.coords(point_coords(p)));
      vols.push_back(hull_volume(pts, top_dim));
    }
  }
  std::vector<Paving> out;
  std::size_t n = paves.size();
  if (top_dim == 0) {
    for (const auto &c : paves)
      if (c.points.size() == types.size()) {
        Paving p;
        p.cells = {c};
        p.id = paving_id(p.cells);
        out.push_back(std::move(p));
      }
    return out;
  }
  // depth-first subset search pruned by exact volume and pairwise
  // interior-disjointness
  AffineChart chart(all_coords);
  std::vector<std::vector<QVec>> flats;
  for (const auto &c : paves) {
    std::vector<QVec> pts;
    for (const auto &p : c.points)
      pts.push_back(chart.coords(point_coords(p)));
    flats.push_back(std::move(pts));
  }
  // overlap matrix, computed lazily
  std::vector<std::vector<int>> overlap(n, std::vector<int>(n, -1));
  auto overlaps = [&](std::size_t i, std::size_t j) {
    if (overlap[i][j] < 0) {
      bool o = interiors_intersect(flats[i], flats[j], top_dim);
      overlap[i][j] = overlap[j][i] = o ? 1 : 0;
    }
    return overlap[i][j] == 1;
  };
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t from,
                                                       Rational acc) {
    if (acc == total) {
      std::vector<LatticeConvex> cells;
      for (std::size_t i : chosen)
        cells.push_back(paves[i]);
      auto check = is_paving(s, cells);
      if (check.ok) {
        Paving p;
        p.cells = cells;
        p.id = paving_id(cells);
        out.push_back(std::move(p));
      }
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      if (acc + vols[i] > total)
        continue;
      bool clash = false;
      for (std::size_t j : chosen)
        if (overlaps(i, j)) {
          clash = true;
          break;
        }
      if (clash)
        continue;
      chosen.push_back(i);
      rec(i + 1, acc + vols[i]);
      chosen.pop_back();
    }
  };
  rec(0, Rational(0));
  std::sort(out.begin(), out.end(),
            [](const Paving &x, const Paving &y) { return x.id < y.id; });
  return out;
}

namespace {

ZVec primitive(const QVec &v) {
  BigInt lcm(1);
  for (const auto &q : v)
    lcm = lcm / BigInt::gcd(lcm, q.den()) * q.den();
  ZVec out;
  BigInt g(0);
  for (const auto &q : v) {
    BigInt x = q.num() * (lcm / q.den());
    g = BigInt::gcd(g, x);
    out.push_back(x);
  }
  if (!g.is_zero() && !g.is_one())
    for (auto &x : out)
      x = x / g;
  return out;
}

QVec to_q(const ZVec &v) {
  QVec out;
  for (const auto &x : v)
    out.emplace_back(x);
  return out;
}

// Reduce x modulo the span of `lin` by zeroing its components on the pivot
// coordinates of the reduced basis.
QVec reduce_mod_span(const std::vector<QVec> &lin, const QVec &x) {
  if (lin.empty())
    return x;
  QMat tmp(lin.begin(), lin.end());
  std::vector<int> piv;
  {
    std::size_t row = 0;
    std::size_t cols = tmp[0].size();
    for (std::size_t col = 0; col < cols && row < tmp.size(); ++col) {
      std::size_t sel = row;
      while (sel < tmp.size() && tmp[sel][col].is_zero())
        ++sel;
      if (sel == tmp.size())
        continue;
      std::swap(tmp[row], tmp[sel]);
      Rational inv = tmp[row][col].inv();
      for (std::size_t j = col; j < cols; ++j)
        tmp[row][j] *= inv;
      for (std::size_t i = 0; i < tmp.size(); ++i) {
        if (i == row || tmp[i][col].is_zero())
          continue;
        Rational f = tmp[i][col];
        for (std::size_t j = col; j < cols; ++j)
          tmp[i][j] -= f * tmp[row][j];
      }
      piv.push_back(static_cast<int>(col));
      ++row;
    }
  }
  QVec out = x;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Rational f = out[static_cast<std::size_t>(piv[r])];
    if (f.is_zero())
      continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] -= f * tmp[r][j];
  }
  return out;
}

} // namespace

Cone cone_of_paving(const SizeVector &s, const Paving &p) {
  Cone out;
  out.domain = enumerate_types(s);
  out.lineality = affine_function_basis(s);
  std::size_t m = out.domain.size();
  QMat eqs, ineqs;
  for (const auto &cell : p.cells) {
    CellRows rows = cell_rows(out.domain, cell);
    for (auto &r : rows.equalities)
      eqs.push_back(std::move(r));
    for (auto &r : rows.inequalities)
      ineqs.push_back(std::move(r));
  }
  std::vector<QVec> v0 = eqs.empty() ? identity_basis(m) : kernel_basis(eqs);
  std::size_t d = v0.size();
  QMat a(ineqs.size(), QVec(d, Rational(0)));
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      a[i][j] = dot(ineqs[i], v0[j]);
  std::vector<QVec> lin = a.empty() ? identity_basis(d) : kernel_basis(a);
  std::size_t lin_dim = lin.size();
  if (d == lin_dim)
    return out; // lineality only
  std::size_t need = d - lin_dim - 1;
  std::set<std::vector<std::string>> seen;
  std::vector<QVec> rays_u;
  auto consider = [&](const QVec &cand_in) {
    for (int sign = 0; sign < 2; ++sign) {
      QVec cand = cand_in;
      if (sign)
        for (auto &x : cand)
          x = -x;
      bool feasible = true;
      for (const auto &row : a)
        if (dot(row, cand) < Rational(0)) {
          feasible = false;
          break;
        }
      if (!feasible)
        continue;
      QVec red = reduce_mod_span(lin, cand);
      if (std::all_of(red.begin(), red.end(),
                      [](const Rational &q) { return q.is_zero(); }))
        continue;
      ZVec prim = primitive(red);
      std::vector<std::string> key;
      for (const auto &x : prim)
        key.push_back(x.to_string());
      if (!seen.insert(key).second)
        continue;
      rays_u.push_back(to_q(prim));
    }
  };
  std::vector<std::size_t> comb;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (comb.size() == need) {
      QMat sub;
      for (std::size_t i : comb)
        sub.push_back(a[i]);
      auto ker = sub.empty() ? identity_basis(d) : kernel_basis(sub);
      if (ker.size() != lin_dim + 1)
        return;
      for (const auto &k : ker) {
        QVec red = reduce_mod_span(lin, k);
        if (!std::all_of(red.begin(), red.end(),
                         [](const Rational &q) { return q.is_zero(); })) {
          consider(red);
          break;
        }
      }
      return;
    }
    for (std::size_t i = from; i < a.size(); ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  // back to function space
  for (const auto &u : rays_u) {
    QVec fn(m, Rational(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < m; ++k)
        fn[k] += u[j] * v0[j][k];
    out.rays.push_back(to_q(primitive(fn)));
  }
  std::sort(out.rays.begin(), out.rays.end(),
            [](const QVec &x, const QVec &y) {
              for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] < y[i])
                  return true;
                if (y[i] < x[i])
                  return false;
              }
              return false;
            });
  return out;
}

bool same_ray_class(const SizeVector &s, const QVec &ray,
                    const QVec &reference) {
  auto aff = affine_function_basis(s);
  std::size_t m = ray.size();
  QMat sys(m, QVec(aff.size() + 1));
  for (std::size_t i = 0; i < m; ++i) {
    sys[i][0] = reference[i];
    for (std::size_t j = 0; j < aff.size(); ++j)
      sys[i][j + 1] = aff[j][i];
  }
  auto sol = solve(sys, ray);
  return sol && (*sol)[0] > Rational(0);
}

std::vector<LatticeFunctional> perp_lattice_basis(const SizeVector &s) {
  auto types = enumerate_types(s);
  std::size_t m = types.size();
  auto pair_of = [&](const LatticePoint &p) {
    int a = 0, b = 0;
    for (std::size_t t = 0; t < p.coords.size(); ++t) {
      if (p.coords[t] == 2) {
        a = b = static_cast<int>(t) + 1;
      } else if (p.coords[t] == 1) {
        if (!a)
          a = static_cast<int>(t) + 1;
        else
          b = static_cast<int>(t) + 1;
      }
    }
    return std::pair<int, int>(a, b);
  };
  // anchor scan order: by largest block involved, then first block
  // descending; this pins the interpolation basis
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto px = pair_of(types[x]), py = pair_of(types[y]);
    if (px.second != py.second)
      return px.second < py.second;
    bool dx = px.first == px.second, dy = py.first == py.second;
    if (dx != dy)
      return dy; // doubled blocks scan last within their group
    return px.first > py.first;
  });
  std::vector<std::size_t> anchors;
  std::vector<QVec> span;
  std::vector<std::size_t> rest;
  for (std::size_t i : order) {
    auto cand = span;
    cand.push_back(point_coords(types[i]));
    if (affine_dim(cand) == static_cast<int>(cand.size()) - 1) {
      span = cand;
      anchors.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
    auto px = pair_of(types[x]), py = pair_of(types[y]);
    if (px.second != py.second)
      return px.second < py.second;
    return px.first < py.first;
  });
  std::vector<LatticeFunctional> out;
  for (std::size_t q : rest) {
    QMat sys(types[q].coords.size() + 1, QVec(anchors.size()));
    QVec rhs;
    for (std::size_t c = 0; c < types[q].coords.size(); ++c) {
      for (std::size_t a = 0; a < anchors.size(); ++a)
        sys[c][a] = Rational(types[anchors[a]].coords[c]);
      rhs.push_back(Rational(types[q].coords[c]));
    }
    for (std::size_t a = 0; a < anchors.size(); ++a)
      sys[types[q].coords.size()][a] = Rational(1);
    rhs.push_back(Rational(1));
    auto lam = solve(sys, rhs);
    if (!lam)
      throw std::logic_error("perp_lattice_basis: interpolation failed");
    LatticeFunctional f;
    f.exps.assign(m, 0);
    f.exps[q] = -1;
    for (std::size_t a = 0; a < anchors.size(); ++a) {
      if (!(*lam)[a].den().is_one())
        throw std::logic_error("perp_lattice_basis: non-integer weights");
      f.exps[anchors[a]] += static_cast<int>((*lam)[a].num().to_ll());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<LatticeFunctional> dual_chart_generators(const SizeVector &s,
                                                     const Paving &p) {
  auto basis = perp_lattice_basis(s);
  Cone cone = cone_of_paving(s, p);
  std::size_t r = basis.size();
  std::size_t k = cone.rays.size();
  std::vector<std::vector<long long>> pairing(r, std::vector<long long>(k));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational acc(0);
      for (std::size_t q = 0; q < basis[i].exps.size(); ++q)
        acc += Rational(basis[i].exps[q]) * cone.rays[j][q];
      if (!acc.den().is_one())
        throw std::logic_error("dual_chart_generators: non-integer pairing");
      pairing[i][j] = acc.num().to_ll();
    }
  // unit lattice: coefficient vectors pairing to zero with all rays
  std::vector<ZVec> units;
  if (k == 0) {
    for (std::size_t i = 0; i < r; ++i) {
      ZVec e(r, BigInt(0));
      e[i] = BigInt(1);
      units.push_back(e);
    }
  } else {
    ZMat rows(k, ZVec(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j)
        rows[j][i] = BigInt(pairing[i][j]);
    units = integer_kernel(rows);
    ZMat um(units.begin(), units.end());
    um = hnf_rows(um);
    units.assign(um.begin(), um.end());
  }
  auto to_functional = [&](const std::vector<long long> &coef) {
    LatticeFunctional f;
    f.exps.assign(basis.empty() ? 0 : basis[0].exps.size(), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t q = 0; q < f.exps.size(); ++q)
        f.exps[q] += static_cast<int>(coef[i]) * basis[i].exps[q];
    return f;
  };
  std::vector<LatticeFunctional> out;
  for (const auto &u : units) {
    std::vector<long long> c, cn;
    for (const auto &x : u) {
      c.push_back(x.to_ll());
      cn.push_back(-x.to_ll());
    }
    out.push_back(to_functional(c));
    out.push_back(to_functional(cn));
  }
  if (k == 0) {
    std::sort(out.begin(), out.end());
    return out;
  }
  // pointed part: the image monoid of the pairing inside the nonnegative
  // orthant; generators found by bounded enumeration
  ZMat zp(r, ZVec(k));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j)
      zp[i][j] = BigInt(pairing[i][j]);
  ZMat image_basis = hnf_rows(zp);
  const long long kBox = 6;
  std::vector<std::vector<long long>> members;
  std::vector<long long> cur(k, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == k) {
      if (std::all_of(cur.begin(), cur.end(),
                      [](long long x) { return x == 0; }))
        return;
      ZVec residue(k);
      for (std::size_t i = 0; i < k; ++i)
        residue[i] = BigInt(cur[i]);
      for (const auto &row : image_basis) {
        std::size_t piv = 0;
        while (piv < k && row[piv].is_zero())
          ++piv;
        if (piv == k)
          continue;
        BigInt q = residue[piv] / row[piv];
        BigInt rem = residue[piv] - q * row[piv];
        if (rem.is_neg())
          q -= BigInt(1);
        for (std::size_t j = 0; j < k; ++j)
          residue[j] -= q * row[j];
      }
      if (std::all_of(residue.begin(), residue.end(),
                      [](const BigInt &x) { return x.is_zero(); }))
        members.push_back(cur);
      return;
    }
    for (long long v = 0; v <= kBox; ++v) {
      cur[pos] = v;
      walk(pos + 1);
    }
    cur[pos] = 0;
  };
  walk(0);
  std::set<std::vector<long long>> member_set(members.begin(), members.end());
  auto is_sum = [&](const std::vector<long long> &x) {
    for (const auto &a : members) {
      bool lower = true, strict = false, nonzero = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (a[i] > x[i]) {
          lower = false;
          break;
        }
        if (a[i] < x[i])
          strict = true;
        if (a[i] != 0)
          nonzero = true;
      }
      if (!lower || !strict || !nonzero)
        continue;
      std::vector<long long> diff(k);
      for (std::size_t i = 0; i < k; ++i)
        diff[i] = x[i] - a[i];
      if (member_set.count(diff))
        return true;
    }
    return false;
  };
  std::vector<std::vector<long long>> gens;
  for (const auto &mbr : members)
    if (!is_sum(mbr))
      gens.push_back(mbr);
  // verify that the box members are generated (guards the box bound)
  {
    std::set<std::vector<long long>> gen_set;
    std::vector<long long> zero(k, 0);
    gen_set.insert(zero);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto &g : gens)
        for (const auto &got : std::vector<std::vector<long long>>(
                 gen_set.begin(), gen_set.end())) {
          std::vector<long long> nxt(k);
          bool inside = true;
          for (std::size_t i = 0; i < k; ++i) {
            nxt[i] = got[i] + g[i];
            if (nxt[i] > kBox)
              inside = false;
          }
          if (inside && gen_set.insert(nxt).second)
            grew = true;
        }
    }
    for (const auto &mbr : members)
      if (!gen_set.count(mbr))
        throw std::logic_error(
            "dual_chart_generators: enumeration box too small");
  }
  // lift each generator to an integral, norm-minimal coefficient vector;
  // ties resolved toward the lexicographically largest representative
  for (const auto &g : gens) {
    QMat sys(k, QVec(r));
    QVec rhs;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < r; ++i)
        sys[j][i] = Rational(pairing[i][j]);
      rhs.push_back(Rational(g[j]));
    }
    auto c0 = solve(sys, rhs);
    if (!c0)
      throw std::logic_error("dual_chart_generators: lift failed");
    std::vector<long long> best;
    long best_norm = -1;
    std::vector<long long> shift(units.size(), 0);
    const long long kShift = 4;
    std::function<void(std::size_t)> sweep = [&](std::size_t pos) {
      if (pos == units.size()) {
        std::vector<long long> cand(r);
        for (std::size_t i = 0; i < r; ++i) {
          Rational v = (*c0)[i];
          for (std::size_t u = 0; u < units.size(); ++u)
            v += Rational(shift[u]) * Rational(units[u][i]);
          if (!v.den().is_one())
            return;
          cand[i] = v.num().to_ll();
        }
        long norm = 0;
        for (long long x : cand)
          norm += static_cast<long>(x < 0 ? -x : x);
        if (best_norm < 0 || norm < best_norm ||
            (norm == best_norm && cand > best)) {
          best_norm = norm;
          best = cand;
        }
        return;
      }
      for (long long v = -kShift; v <= kShift; ++v) {
        shift[pos] = v;
        sweep(pos + 1);
      }
      shift[pos] = 0;
    };
    sweep(0);
    if (best_norm < 0)
      throw std::logic_error("dual_chart_generators: no integral lift");
    out.push_back(to_functional(best));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FaceData face_convex(const SizeVector &s,
                     const std::vector<int> &zero_blocks) {
  FaceData out;
  std::set<int> zero(zero_blocks.begin(), zero_blocks.end());
  std::vector<int> kept_sizes;
  for (int t = 1; t <= s.blocks(); ++t)
    if (!zero.count(t)) {
      out.kept_blocks.push_back(t);
      kept_sizes.push_back(s.size(t));
    }
  if (kept_sizes.size() < 2)
    throw std::invalid_argument("face_convex: too few blocks remain");
  out.face_sizes = SizeVector(kept_sizes);
  for (const auto &p : enumerate_types(s)) {
    bool on_face = true;
    for (int t : zero_blocks)
      if (p.coords[static_cast<std::size_t>(t - 1)] != 0)
        on_face = false;
    if (on_face)
      out.face_points.push_back(p);
  }
  return out;
}

std::vector<std::vector<LatticePoint>>
restrict_paving(const SizeVector &s, const Paving &p,
                const std::vector<int> &zero_blocks) {
  FaceData face = face_convex(s, zero_blocks);
  auto project = [&](const LatticePoint &q) {
    std::vector<int> c;
    for (int t : face.kept_blocks)
      c.push_back(q.coords[static_cast<std::size_t>(t - 1)]);
    return LatticePoint(c);
  };
  std::vector<QVec> face_coords;
  for (const auto &q : face.face_points)
    face_coords.push_back(point_coords(project(q)));
  int face_dim = affine_dim(face_coords);
  std::set<std::vector<LatticePoint>> seen;
  std::vector<std::vector<LatticePoint>> out;
  for (const auto &cell : p.cells) {
    std::vector<LatticePoint> inter;
    for (const auto &q : cell.points) {
      bool on_face = true;
      for (int t : zero_blocks)
        if (q.coords[static_cast<std::size_t>(t - 1)] != 0)
          on_face = false;
      if (on_face)
        inter.push_back(project(q));
    }
    if (inter.empty())
      continue;
    std::sort(inter.begin(), inter.end());
    std::vector<QVec> coords;
    for (const auto &q : inter)
      coords.push_back(point_coords(q));
    if (affine_dim(coords) != face_dim)
      continue;
    if (seen.insert(inter).second)
      out.push_back(inter);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string cell_id(const LatticeConvex &c) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < c.points.size(); ++i)
    os << (i ? " " : "") << c.points[i].to_string();
  os << "}";
  return os.str();
}

std::string paving_id(const std::vector<LatticeConvex> &cells) {
  std::vector<std::string> ids;
  for (const auto &c : cells)
    ids.push_back(cell_id(c));
  std::sort(ids.begin(), ids.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i)
    os << (i ? " | " : "") << ids[i];
  return os.str();
}

} // namespace grasscut
