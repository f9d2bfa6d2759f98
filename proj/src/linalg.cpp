#include "grasscut/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grasscut {

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<int> echelonize(QMat &m) {
  std::vector<int> pivots;
  std::size_t row = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero())
      ++sel;
    if (sel == m.size())
      continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col].inv();
    for (std::size_t j = col; j < cols; ++j)
      m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero())
        continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

} // namespace

int rank_of(QMat m) { return static_cast<int>(echelonize(m).size()); }

std::vector<QVec> kernel_basis(const QMat &m_in) {
  QMat m = m_in;
  if (m.empty())
    return {};
  std::size_t cols = m[0].size();
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<QVec> out;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc])
      continue;
    QVec v(cols, Rational(0));
    v[fc] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m[r][fc];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVec> solve(const QMat &m, const QVec &b) {
  if (m.empty())
    return QVec{};
  std::size_t cols = m[0].size();
  QMat aug = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    aug[i].push_back(b[i]);
  std::vector<int> pivots = echelonize(aug);
  QVec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(cols))
      return std::nullopt; // inconsistent
    x[static_cast<std::size_t>(pivots[r])] = aug[r][cols];
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < cols; ++j)
      acc += m[i][j] * x[j];
    if (acc != b[i])
      return std::nullopt;
  }
  return x;
}

namespace {

// Column-style Hermite reduction of A with unimodular column tracking:
// A * U = [H | 0] with U unimodular. Returns U and the column rank.
void column_hermite(ZMat a, ZMat &u, std::size_t &rank) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  u.assign(cols, ZVec(cols, BigInt(0)));
  for (std::size_t i = 0; i < cols; ++i)
    u[i][i] = BigInt(1);
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2)
      return;
    for (std::size_t r = 0; r < rows; ++r)
      std::swap(a[r][c1], a[r][c2]);
    for (std::size_t r = 0; r < cols; ++r)
      std::swap(u[r][c1], u[r][c2]);
  };
  auto col_addmul = [&](std::size_t dst, std::size_t src, const BigInt &f) {
    for (std::size_t r = 0; r < rows; ++r)
      a[r][dst] += f * a[r][src];
    for (std::size_t r = 0; r < cols; ++r)
      u[r][dst] += f * u[r][src];
  };
  auto col_neg = [&](std::size_t c) {
    for (std::size_t r = 0; r < rows; ++r)
      a[r][c] = -a[r][c];
    for (std::size_t r = 0; r < cols; ++r)
      u[r][c] = -u[r][c];
  };
  std::size_t lead = 0;
  for (std::size_t row = 0; row < rows && lead < cols; ++row) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = lead; c < cols; ++c)
        if (!a[row][c].is_zero() &&
            (best == cols ||
             BigInt::cmp(a[row][c].abs(), a[row][best].abs()) < 0))
          best = c;
      if (best == cols)
        break; // row already zero past lead
      col_swap(lead, best);
      if (a[row][lead].is_neg())
        col_neg(lead);
      bool reduced = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (a[row][c].is_zero())
          continue;
        BigInt q = a[row][c] / a[row][lead];
        col_addmul(c, lead, -q);
        if (!a[row][c].is_zero())
          reduced = false;
      }
      if (reduced) {
        ++lead;
        break;
      }
    }
  }
  rank = lead;
}

} // namespace

std::vector<ZVec> integer_kernel(const ZMat &m) {
  if (m.empty())
    return {};
  std::size_t cols = m[0].size();
  ZMat u;
  std::size_t rank = 0;
  column_hermite(m, u, rank);
  std::vector<ZVec> out;
  for (std::size_t c = rank; c < cols; ++c) {
    ZVec v(cols);
    for (std::size_t r = 0; r < cols; ++r)
      v[r] = u[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

ZMat integer_right_inverse(const ZMat &m) {
  std::size_t r = m.size();
  std::size_t n = r ? m[0].size() : 0;
  ZMat u;
  std::size_t rank = 0;
  column_hermite(m, u, rank);
  if (rank != r)
    throw std::invalid_argument("integer_right_inverse: rows not independent");
  QMat h(r, QVec(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      BigInt acc(0);
      for (std::size_t k = 0; k < n; ++k)
        acc += m[i][k] * u[k][j];
      h[i][j] = Rational(acc);
    }
  QMat aug = h;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      aug[i].push_back(Rational(i == j ? 1 : 0));
  echelonize(aug);
  QMat hinv(r, QVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      hinv[i][j] = aug[i][r + j];
  ZMat x(n, ZVec(r, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < r; ++k)
        acc += Rational(u[i][k]) * hinv[k][j];
      if (!acc.den().is_one())
        throw std::domain_error(
            "integer_right_inverse: lattice is not saturated");
      x[i][j] = acc.num();
    }
  return x;
}

ZMat hnf_rows(ZMat m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = row; r < rows; ++r)
        if (!m[r][col].is_zero() &&
            (best == rows ||
             BigInt::cmp(m[r][col].abs(), m[best][col].abs()) < 0))
          best = r;
      if (best == rows)
        break;
      std::swap(m[row], m[best]);
      if (m[row][col].is_neg())
        for (auto &x : m[row])
          x = -x;
      bool clean = true;
      for (std::size_t r = row + 1; r < rows; ++r) {
        if (m[r][col].is_zero())
          continue;
        BigInt q = m[r][col] / m[row][col];
        for (std::size_t j = 0; j < cols; ++j)
          m[r][j] -= q * m[row][j];
        if (!m[r][col].is_zero())
          clean = false;
      }
      if (clean) {
        for (std::size_t r = 0; r < row; ++r) {
          if (m[r][col].is_zero())
            continue;
          BigInt q = m[r][col] / m[row][col];
          BigInt rem = m[r][col] - q * m[row][col];
          if (rem.is_neg())
            q -= BigInt(1); // floor, canonical nonnegative residues
          for (std::size_t j = 0; j < cols; ++j)
            m[r][j] -= q * m[row][j];
        }
        ++row;
        break;
      }
    }
  }
  ZMat out;
  for (auto &r : m)
    if (std::any_of(r.begin(), r.end(),
                    [](const BigInt &x) { return !x.is_zero(); }))
      out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

LPResult solve_lp(const QMat &a, const QVec &b, const QVec &c) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : c.size();
  std::size_t nv = 2 * n + m;
  QMat t(m, QVec(nv, Rational(0)));
  QVec rhs(m);
  std::vector<std::size_t> basis(m);
  std::vector<bool> needs_art(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a[i][j];
      t[i][n + j] = -a[i][j];
    }
    t[i][2 * n + i] = Rational(1);
    rhs[i] = b[i];
    if (rhs[i] < Rational(0)) {
      for (auto &x : t[i])
        x = -x;
      rhs[i] = -rhs[i];
      needs_art[i] = true; // slack column is now -1, not basic-feasible
    }
    basis[i] = 2 * n + i;
  }
  std::size_t n_art = 0;
  for (bool f : needs_art)
    if (f)
      ++n_art;
  std::size_t total = nv + n_art;
  for (std::size_t i = 0; i < m; ++i)
    t[i].resize(total, Rational(0));
  std::size_t art_col = nv;
  for (std::size_t i = 0; i < m; ++i)
    if (needs_art[i]) {
      t[i][art_col] = Rational(1);
      basis[i] = art_col;
      ++art_col;
    }

  auto pivot = [&](std::size_t row, std::size_t col) {
    Rational inv = t[row][col].inv();
    for (auto &x : t[row])
      x *= inv;
    rhs[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col].is_zero())
        continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j < total; ++j)
        t[i][j] -= f * t[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  };

  auto run_simplex = [&](const QVec &obj, Rational &value,
                         std::size_t col_limit) -> bool {
    QVec z(total, Rational(0));
    Rational zval(0);
    for (std::size_t j = 0; j < total; ++j)
      z[j] = -obj[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (obj[basis[i]].is_zero())
        continue;
      Rational f = obj[basis[i]];
      for (std::size_t j = 0; j < total; ++j)
        z[j] += f * t[i][j];
      zval += f * rhs[i];
    }
    while (true) {
      std::size_t enter = total;
      for (std::size_t j = 0; j < col_limit; ++j)
        if (z[j] < Rational(0)) {
          enter = j;
          break; // Bland's rule
        }
      if (enter == total)
        break;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= Rational(0))
          continue;
        Rational ratio = rhs[i] / t[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m)
        return false; // unbounded
      pivot(leave, enter);
      Rational f = z[enter];
      for (std::size_t j = 0; j < total; ++j)
        z[j] -= f * t[leave][j];
      zval -= f * rhs[leave];
    }
    value = zval;
    return true;
  };

  LPResult out;
  out.value = Rational(0);
  if (n_art) {
    QVec phase1(total, Rational(0));
    for (std::size_t j = nv; j < total; ++j)
      phase1[j] = Rational(-1);
    Rational v(0);
    run_simplex(phase1, v, total);
    if (v != Rational(0)) {
      out.status = LPResult::Status::kInfeasible;
      return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < nv)
        continue;
      for (std::size_t j = 0; j < nv; ++j)
        if (!t[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
    }
  }
  QVec obj(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    obj[j] = c[j];
    obj[n + j] = -c[j];
  }
  Rational v(0);
  if (!run_simplex(obj, v, nv)) {
    out.status = LPResult::Status::kUnbounded;
    return out;
  }
  out.status = LPResult::Status::kOptimal;
  out.value = v;
  out.x.assign(n, Rational(0));
  QVec full(total, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < total)
      full[basis[i]] = rhs[i];
  for (std::size_t j = 0; j < n; ++j)
    out.x[j] = full[j] - full[n + j];
  return out;
}

// ---------------------------------------------------------------------------
// Convex geometry
// ---------------------------------------------------------------------------

int affine_dim(const std::vector<QVec> &points) {
  if (points.empty())
    return -1;
  QMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    QVec d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j)
      d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty())
    return 0;
  return rank_of(diffs);
}

AffineChart::AffineChart(const std::vector<QVec> &frame) {
  if (frame.empty())
    throw std::invalid_argument("AffineChart: empty frame");
  origin_ = frame[0];
  QMat acc;
  for (std::size_t i = 1; i < frame.size(); ++i) {
    QVec d(frame[i].size());
    for (std::size_t j = 0; j < d.size(); ++j)
      d[j] = frame[i][j] - origin_[j];
    acc.push_back(d);
    if (rank_of(acc) < static_cast<int>(acc.size()))
      acc.pop_back();
  }
  basis_ = acc;
  dim_ = static_cast<int>(basis_.size());
}

QVec AffineChart::coords(const QVec &p) const {
  std::size_t amb = origin_.size();
  QMat m(amb, QVec(basis_.size()));
  QVec rhs(amb);
  for (std::size_t i = 0; i < amb; ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j)
      m[i][j] = basis_[j][i];
    rhs[i] = p[i] - origin_[i];
  }
  auto sol = solve(m, rhs);
  if (!sol)
    throw std::domain_error("AffineChart: point outside the span");
  return *sol;
}

namespace {

Rational det3(const QVec &a, const QVec &b, const QVec &c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

QVec sub(const QVec &a, const QVec &b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

bool lex_less(const QVec &x, const QVec &y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i])
      return true;
    if (y[i] < x[i])
      return false;
  }
  return false;
}

std::vector<QVec> dedup(std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<QVec> polygon_order(std::vector<QVec> pts) {
  pts = dedup(std::move(pts));
  QVec c(2, Rational(0));
  for (const auto &p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  Rational inv(1, static_cast<long long>(pts.size()));
  c[0] *= inv;
  c[1] *= inv;
  auto half = [&](const QVec &p) {
    Rational dx = p[0] - c[0], dy = p[1] - c[1];
    if (dy > Rational(0) || (dy == Rational(0) && dx > Rational(0)))
      return 0;
    return 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const QVec &p, const QVec &q) {
    int hp = half(p), hq = half(q);
    if (hp != hq)
      return hp < hq;
    Rational cross =
        (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
    if (!cross.is_zero())
      return cross > Rational(0);
    Rational dp =
        (p[0] - c[0]) * (p[0] - c[0]) + (p[1] - c[1]) * (p[1] - c[1]);
    Rational dq =
        (q[0] - c[0]) * (q[0] - c[0]) + (q[1] - c[1]) * (q[1] - c[1]);
    return dp < dq;
  });
  return pts;
}

Rational polygon_area2(const std::vector<QVec> &ordered) {
  Rational acc(0);
  std::size_t n = ordered.size();
  for (std::size_t i = 0; i < n; ++i) {
    const QVec &p = ordered[i], &q = ordered[(i + 1) % n];
    acc += p[0] * q[1] - q[0] * p[1];
  }
  if (acc < Rational(0))
    acc = -acc;
  return acc;
}

} // namespace

Rational hull_volume(const std::vector<QVec> &pts_in, int D) {
  std::vector<QVec> pts = dedup(pts_in);
  if (D == 0)
    return pts.empty() ? Rational(0) : Rational(1);
  if (pts.empty() || affine_dim(pts) < D)
    return Rational(0);
  if (D == 1) {
    Rational lo = pts[0][0], hi = pts[0][0];
    for (const auto &p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (D == 2)
    return polygon_area2(polygon_order(pts)); // normalized: 2 * area
  if (D == 3) {
    Rational vol(0); // normalized: 6 * volume
    auto facets = hull_facets(pts, 3);
    const QVec &anchor = pts[0];
    for (const auto &f : facets) {
      std::vector<QVec> on;
      for (const auto &p : pts) {
        Rational v = f.normal[0] * p[0] + f.normal[1] * p[1] +
                     f.normal[2] * p[2];
        if (v == f.offset)
          on.push_back(p);
      }
      Rational av = f.normal[0] * anchor[0] + f.normal[1] * anchor[1] +
                    f.normal[2] * anchor[2];
      if (av == f.offset)
        continue;
      AffineChart chart(on);
      std::vector<std::pair<QVec, QVec>> flat; // (2d coords, 3d point)
      for (const auto &p : on)
        flat.emplace_back(chart.coords(p), p);
      std::vector<QVec> flats;
      for (auto &pr : flat)
        flats.push_back(pr.first);
      auto ordered2 = polygon_order(flats);
      std::vector<QVec> ordered3;
      for (const auto &f2 : ordered2)
        for (auto &pr : flat)
          if (pr.first == f2) {
            ordered3.push_back(pr.second);
            break;
          }
      for (std::size_t i = 1; i + 1 < ordered3.size(); ++i) {
        Rational d = det3(sub(ordered3[0], anchor), sub(ordered3[i], anchor),
                          sub(ordered3[i + 1], anchor));
        if (d < Rational(0))
          d = -d;
        vol += d;
      }
    }
    return vol;
  }
  throw std::invalid_argument("hull_volume: dimension > 3 not supported");
}

std::vector<HalfSpace> hull_facets(const std::vector<QVec> &pts_in, int D) {
  std::vector<QVec> pts = dedup(pts_in);
  std::vector<HalfSpace> out;
  if (D < 1 || D > 3)
    throw std::invalid_argument("hull_facets: dimension out of range");
  std::size_t n = pts.size();
  std::vector<std::size_t> comb;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (comb.size() == static_cast<std::size_t>(D)) {
      QVec normal(static_cast<std::size_t>(D), Rational(0));
      if (D == 1) {
        normal[0] = Rational(1);
      } else if (D == 2) {
        QVec d = sub(pts[comb[1]], pts[comb[0]]);
        if (d[0].is_zero() && d[1].is_zero())
          return;
        normal[0] = d[1];
        normal[1] = -d[0];
      } else {
        QVec d1 = sub(pts[comb[1]], pts[comb[0]]);
        QVec d2 = sub(pts[comb[2]], pts[comb[0]]);
        normal[0] = d1[1] * d2[2] - d1[2] * d2[1];
        normal[1] = d1[2] * d2[0] - d1[0] * d2[2];
        normal[2] = d1[0] * d2[1] - d1[1] * d2[0];
        if (normal[0].is_zero() && normal[1].is_zero() &&
            normal[2].is_zero())
          return;
      }
      Rational off(0);
      for (int k = 0; k < D; ++k)
        off += normal[static_cast<std::size_t>(k)] *
               pts[comb[0]][static_cast<std::size_t>(k)];
      int pos = 0, neg = 0;
      for (const auto &p : pts) {
        Rational v(0);
        for (int k = 0; k < D; ++k)
          v += normal[static_cast<std::size_t>(k)] *
               p[static_cast<std::size_t>(k)];
        if (v > off)
          ++pos;
        else if (v < off)
          ++neg;
      }
      if (pos && neg)
        return;
      HalfSpace h;
      h.normal = normal;
      h.offset = off;
      if (pos) {
        for (auto &x : h.normal)
          x = -x;
        h.offset = -h.offset;
      }
      Rational scale(0);
      for (const auto &x : h.normal)
        if (!x.is_zero()) {
          scale = x > Rational(0) ? x : -x;
          break;
        }
      if (!scale.is_zero()) {
        for (auto &x : h.normal)
          x /= scale;
        h.offset /= scale;
      }
      for (const auto &e : out)
        if (e.normal == h.normal && e.offset == h.offset)
          return;
      out.push_back(std::move(h));
      return;
    }
    for (std::size_t j = from; j < n; ++j) {
      comb.push_back(j);
      rec(j + 1);
      comb.pop_back();
    }
  };
  rec(0);
  return out;
}

bool interiors_intersect(const std::vector<QVec> &a_pts,
                         const std::vector<QVec> &b_pts, int D) {
  if (D == 0)
    return !a_pts.empty() && !b_pts.empty();
  auto fa = hull_facets(a_pts, D);
  auto fb = hull_facets(b_pts, D);
  QMat a;
  QVec b;
  auto push = [&](const HalfSpace &h) {
    QVec row = h.normal;
    row.push_back(Rational(1)); // slack variable coefficient
    a.push_back(row);
    b.push_back(h.offset);
  };
  for (const auto &h : fa)
    push(h);
  for (const auto &h : fb)
    push(h);
  QVec cap(static_cast<std::size_t>(D) + 1, Rational(0));
  cap[static_cast<std::size_t>(D)] = Rational(1);
  a.push_back(cap);
  b.push_back(Rational(1));
  QVec c(static_cast<std::size_t>(D) + 1, Rational(0));
  c[static_cast<std::size_t>(D)] = Rational(1);
  LPResult r = solve_lp(a, b, c);
  return r.status == LPResult::Status::kOptimal && r.value > Rational(0);
}

} // namespace grasscut
