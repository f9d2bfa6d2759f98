#pragma once

#include "grasscut/rational.hpp"

#include <optional>
#include <vector>

namespace grasscut {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row major
using ZVec = std::vector<BigInt>;
using ZMat = std::vector<ZVec>;

int rank_of(QMat m);

// Basis of {x : M x = 0} over the rationals.
std::vector<QVec> kernel_basis(const QMat &m);

// One solution of M x = b, if any.
std::optional<QVec> solve(const QMat &m, const QVec &b);

// Basis of the saturated integer kernel {x in Z^n : M x = 0}, via a
// column-style Hermite reduction with unimodular tracking.
std::vector<ZVec> integer_kernel(const ZMat &m);

// Integer solution X (n x r) of M X = I_r for an r x n matrix M whose rows
// are a basis of a saturated sublattice of Z^n. Throws when no solution.
ZMat integer_right_inverse(const ZMat &m);

// Hermite-reduced canonical basis of the lattice generated by the rows.
ZMat hnf_rows(ZMat m);

// Linear program: maximize c.x subject to A x <= b, x free.
// Exact simplex (Bland), returns status and an optimizer.
struct LPResult {
  enum class Status { kOptimal, kUnbounded, kInfeasible } status;
  Rational value; // objective at optimum (when kOptimal)
  QVec x;
};
LPResult solve_lp(const QMat &a, const QVec &b, const QVec &c);

// --- convex geometry over the rationals, dimension <= 3 ------------------

// Affine dimension of a point set (-1 for the empty set).
int affine_dim(const std::vector<QVec> &points);

// A fixed affine chart for the span of `frame`: maps points affinely into
// Q^D with D = affine_dim(frame). All volume comparisons made through one
// chart are mutually consistent.
class AffineChart {
public:
  explicit AffineChart(const std::vector<QVec> &frame);
  int dim() const { return dim_; }
  // Coordinates of p (throws if p is outside the span).
  QVec coords(const QVec &p) const;

private:
  int dim_ = 0;
  QVec origin_;
  QMat basis_; // rows: D independent direction vectors
};

// Volume (w.r.t. the chart coordinates) of the convex hull of full-
// dimensional point sets in dimension D <= 3. Lower-dimensional hulls have
// volume 0; the empty set and points give 0 (D >= 1) or 1 (D == 0).
Rational hull_volume(const std::vector<QVec> &pts_in_chart, int D);

// H-representation rows (a, b) meaning a.x <= b, for the hull of a
// full-dimensional point set in dimension D <= 3.
struct HalfSpace {
  QVec normal;
  Rational offset; // normal . x <= offset
};
std::vector<HalfSpace> hull_facets(const std::vector<QVec> &pts_in_chart,
                                   int D);

// True iff the interiors of two full-dimensional hulls intersect.
bool interiors_intersect(const std::vector<QVec> &a_pts,
                         const std::vector<QVec> &b_pts, int D);

} // namespace grasscut
