#include "grasscut/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grasscut {

const RatFunc &Matrix2xN::at(int row, int col) const {
  if (row < 1 || row > 2 || col < 1 || col > n_)
    throw std::out_of_range("Matrix2xN: index out of range");
  return e_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
}

void Matrix2xN::set(int row, int col, RatFunc v) {
  if (row < 1 || row > 2 || col < 1 || col > n_)
    throw std::out_of_range("Matrix2xN: index out of range");
  e_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] =
      std::move(v);
}

RatFunc Matrix2xN::minor_of(const IndexPair &p) const {
  return at(1, p.i1) * at(2, p.i2) - at(1, p.i2) * at(2, p.i1);
}

Matrix2xN Matrix2xN::eval(const std::map<std::string, Rational> &assign) const {
  Matrix2xN out(n_);
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= n_; ++c)
      out.set(r, c, RatFunc(at(r, c).eval(assign)));
  return out;
}

bool Matrix2xN::is_numeric() const {
  for (const auto &row : e_)
    for (const auto &x : row)
      if (!x.num().is_constant() || !x.den().is_constant())
        return false;
  return true;
}

Rational Matrix2xN::num_at(int row, int col) const {
  const RatFunc &x = at(row, col);
  return Rational(x.num().constant_value(), x.den().constant_value());
}

ProjectivePoint::ProjectivePoint(std::vector<std::string> labels,
                                 std::vector<Rational> coords)
    : labels_(std::move(labels)), coords_(std::move(coords)) {
  if (labels_.size() != coords_.size())
    throw std::invalid_argument("ProjectivePoint: label/coord size mismatch");
}

const Rational &ProjectivePoint::at(const std::string &label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return coords_[i];
  throw std::out_of_range("ProjectivePoint: unknown label " + label);
}

bool ProjectivePoint::all_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational &q) { return q.is_zero(); });
}

ProjectivePoint ProjectivePoint::canonical() const {
  for (const Rational &q : coords_) {
    if (!q.is_zero()) {
      std::vector<Rational> out;
      out.reserve(coords_.size());
      for (const Rational &x : coords_)
        out.push_back(x / q);
      return ProjectivePoint(labels_, std::move(out));
    }
  }
  throw std::domain_error("ProjectivePoint: all coordinates are zero");
}

bool ProjectivePoint::equals_projective(const ProjectivePoint &o) const {
  if (labels_ != o.labels_)
    return false;
  // cross-ratio comparison avoids division
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (std::size_t j = i + 1; j < coords_.size(); ++j)
      if (coords_[i] * o.coords_[j] != coords_[j] * o.coords_[i])
        return false;
  return true;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i)
      os << ", ";
    os << labels_[i] << ":" << coords_[i].to_string();
  }
  os << "]";
  return os.str();
}

std::string pair_label(const IndexPair &p) {
  return "z_" + std::to_string(p.i1) + "_" + std::to_string(p.i2);
}

std::string monomial_label(const PluckerMonomial &m) {
  if (m.factors.empty())
    return "1";
  std::string out;
  for (const auto &p : m.factors) {
    if (!out.empty())
      out += "*";
    out += pair_label(p);
  }
  return out;
}

std::optional<ProjectivePoint> plucker_vector(const Matrix2xN &theta) {
  auto pairs = all_pairs(theta.cols());
  std::vector<std::string> labels;
  std::vector<Rational> coords;
  bool nonzero = false;
  for (const auto &p : pairs) {
    RatFunc m = theta.minor_of(p);
    if (!m.num().is_constant() || !m.den().is_constant())
      throw std::invalid_argument("plucker_vector: matrix is not numeric");
    Rational q(m.num().constant_value(), m.den().constant_value());
    nonzero = nonzero || !q.is_zero();
    labels.push_back(pair_label(p));
    coords.push_back(q);
  }
  if (!nonzero)
    return std::nullopt;
  return ProjectivePoint(std::move(labels), std::move(coords));
}

std::vector<RatFunc> plucker_minors_sym(const Matrix2xN &theta) {
  std::vector<RatFunc> out;
  for (const auto &p : all_pairs(theta.cols()))
    out.push_back(theta.minor_of(p));
  return out;
}

namespace {
std::size_t pair_index(int n, int i, int j) {
  // position of (i,j), i<j, in lexicographic ordering of all_pairs(n)
  std::size_t before = 0;
  for (int a = 1; a < i; ++a)
    before += static_cast<std::size_t>(n - a);
  return before + static_cast<std::size_t>(j - i - 1);
}
} // namespace

bool check_plucker_relations(const ProjectivePoint &pt, int n) {
  const auto &z = pt.coords();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          Rational r = z[pair_index(n, a, b)] * z[pair_index(n, c, d)] -
                       z[pair_index(n, a, c)] * z[pair_index(n, b, d)] +
                       z[pair_index(n, a, d)] * z[pair_index(n, b, c)];
          if (!r.is_zero())
            return false;
        }
  return true;
}

bool check_plucker_relations_sym(const std::vector<RatFunc> &minors, int n) {
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          RatFunc r = minors[pair_index(n, a, b)] * minors[pair_index(n, c, d)] -
                      minors[pair_index(n, a, c)] * minors[pair_index(n, b, d)] +
                      minors[pair_index(n, a, d)] * minors[pair_index(n, b, c)];
          if (!r.is_zero())
            return false;
        }
  return true;
}

std::optional<ProjectivePoint> map_Fw(const SizeVector &s,
                                      const WeightVector &w,
                                      const ProjectivePoint &pt) {
  auto monomials = weight_monomials(s, w);
  if (monomials.empty())
    return std::nullopt;
  std::vector<std::string> labels;
  std::vector<Rational> coords;
  bool nonzero = false;
  for (const auto &m : monomials) {
    Rational prod(1);
    for (const auto &f : m.factors)
      prod *= pt.at(pair_label(f));
    nonzero = nonzero || !prod.is_zero();
    labels.push_back(monomial_label(m));
    coords.push_back(prod);
  }
  if (!nonzero)
    return std::nullopt;
  return ProjectivePoint(std::move(labels), std::move(coords));
}

std::optional<ProjectivePoint> map_Ft(const SizeVector &s, int t,
                                      const ProjectivePoint &pt) {
  auto pairs = pairs_meeting_block(s, t);
  std::vector<std::string> labels;
  std::vector<Rational> coords;
  bool nonzero = false;
  for (const auto &p : pairs) {
    Rational q = pt.at(pair_label(p));
    nonzero = nonzero || !q.is_zero();
    labels.push_back(pair_label(p));
    coords.push_back(q);
  }
  if (!nonzero)
    return std::nullopt;
  return ProjectivePoint(std::move(labels), std::move(coords));
}

KsImage map_Ks(const SizeVector &s, const ProjectivePoint &pt) {
  KsImage out;
  for (const auto &w : essential_weights(s)) {
    auto img = map_Fw(s, w, pt);
    if (!img)
      out.indeterminate.push_back(w);
    else
      out.factors.emplace_back(w, img->canonical());
  }
  return out;
}

Matrix2xN chart_matrix_U(int n, int j1, int j2,
                         const std::map<std::pair<int, int>, RatFunc> &values) {
  if (!(1 <= j1 && j1 < j2 && j2 <= n))
    throw std::invalid_argument("chart_matrix_U: bad pivots");
  Matrix2xN out(n);
  out.set(1, j1, RatFunc(1));
  out.set(2, j1, RatFunc(0));
  out.set(1, j2, RatFunc(0));
  out.set(2, j2, RatFunc(1));
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= n; ++c) {
      if (c == j1 || c == j2)
        continue;
      auto it = values.find({r, c});
      out.set(r, c, it == values.end() ? RatFunc(0) : it->second);
    }
  return out;
}

} // namespace grasscut
