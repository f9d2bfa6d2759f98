#pragma once

#include "grasscut/combinatorics.hpp"
#include "grasscut/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace grasscut {

// 2 x n matrix with rational-function entries (rationals embed as constants).
class Matrix2xN {
public:
  Matrix2xN() = default;
  explicit Matrix2xN(int n) : n_(n), e_(2, std::vector<RatFunc>(n)) {}

  int cols() const { return n_; }
  const RatFunc &at(int row, int col) const; // row in {1,2}, col in {1..n}
  void set(int row, int col, RatFunc v);

  // 2x2 minor of columns (p.i1, p.i2): x1a*x2b - x1b*x2a.
  RatFunc minor_of(const IndexPair &p) const;

  // Entry-wise evaluation (throws if a denominator vanishes).
  Matrix2xN eval(const std::map<std::string, Rational> &assign) const;
  bool is_numeric() const;
  Rational num_at(int row, int col) const;

private:
  int n_ = 0;
  std::vector<std::vector<RatFunc>> e_;
};

// Tuple of homogeneous coordinates indexed by string labels; equality is up
// to a global nonzero scalar. Canonical form divides by the first nonzero
// coordinate in label order.
class ProjectivePoint {
public:
  ProjectivePoint() = default;
  ProjectivePoint(std::vector<std::string> labels,
                  std::vector<Rational> coords);

  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<Rational> &coords() const { return coords_; }
  const Rational &at(const std::string &label) const;
  bool all_zero() const;

  ProjectivePoint canonical() const;
  bool equals_projective(const ProjectivePoint &o) const;

  std::string to_string() const;

private:
  std::vector<std::string> labels_;
  std::vector<Rational> coords_;
};

std::string pair_label(const IndexPair &p);
std::string monomial_label(const PluckerMonomial &m);

// All C(n,2) minors of a numeric matrix as one projective tuple over the
// pair labels; nullopt when every minor vanishes (rank < 2).
std::optional<ProjectivePoint> plucker_vector(const Matrix2xN &theta);

// Symbolic minors in pair order.
std::vector<RatFunc> plucker_minors_sym(const Matrix2xN &theta);

// The three-term quadratic relations over all 4-subsets of columns.
bool check_plucker_relations(const ProjectivePoint &pt, int n);
bool check_plucker_relations_sym(const std::vector<RatFunc> &minors, int n);

// Weight-component map: coordinate for each monomial of the generator set is
// the product of pt-coordinates over the monomial's factors. nullopt when
// every monomial vanishes (base locus) or the generator set is empty.
std::optional<ProjectivePoint> map_Fw(const SizeVector &s,
                                      const WeightVector &w,
                                      const ProjectivePoint &pt);

// Restriction of pt to the pairs meeting block t; nullopt on base locus.
std::optional<ProjectivePoint> map_Ft(const SizeVector &s, int t,
                                      const ProjectivePoint &pt);

struct KsImage {
  // one factor per essential weight, canonical form; indeterminate factors
  // are reported by weight.
  std::vector<std::pair<WeightVector, ProjectivePoint>> factors;
  std::vector<WeightVector> indeterminate;
  bool ok() const { return indeterminate.empty(); }
};

KsImage map_Ks(const SizeVector &s, const ProjectivePoint &pt);

// The affine chart matrix: column j1 = (1,0)^T, column j2 = (0,1)^T, the
// remaining entries given by `values` keyed as (row, col).
Matrix2xN chart_matrix_U(int n, int j1, int j2,
                         const std::map<std::pair<int, int>, RatFunc> &values);

} // namespace grasscut
