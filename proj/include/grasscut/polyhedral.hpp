#pragma once

#include "grasscut/combinatorics.hpp"
#include "grasscut/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grasscut {

// Subsets of {1..N} are keyed by bitmask (bit t-1 <-> block t).
using SubsetMask = unsigned;

// A lattice convex cut out of the type set by a bound family d_I: the point
// set {x : sum_{i in I} x_i >= d_I for all I}, plus its hull dimension.
struct LatticeConvex {
  std::map<SubsetMask, int> bounds; // the defining d-family
  std::vector<LatticePoint> points; // sorted
  int hull_dim = -1;
  bool operator==(const LatticeConvex &o) const { return points == o.points; }
  bool operator<(const LatticeConvex &o) const { return points < o.points; }
};

struct Paving {
  std::vector<LatticeConvex> cells; // sorted by point set
  std::string id;                   // deterministic identifier
};

// Cone of compatible piecewise-affine functions, described on the full type
// set: lineality basis (the affine functions) and extreme rays modulo it.
struct Cone {
  std::vector<LatticePoint> domain; // sorted type set
  std::vector<QVec> lineality;
  std::vector<QVec> rays; // primitive integer vectors, canonical per class
};

// Integer character exponents over the sorted type set.
struct LatticeFunctional {
  std::vector<int> exps;
  bool operator==(const LatticeFunctional &o) const { return exps == o.exps; }
  bool operator<(const LatticeFunctional &o) const { return exps < o.exps; }
};

// Rational coordinates of a type point (for hull computations).
QVec point_coords(const LatticePoint &p);

// A basis of the restrictions of affine functions to the type set, as
// vectors of values on the sorted type set.
std::vector<QVec> affine_function_basis(const SizeVector &s);

struct ConvexBuildResult {
  bool ok = false;
  std::string error;
  LatticeConvex convex;
};

// Validates the two bound-family conditions and computes the point set.
ConvexBuildResult convex_from_bounds(const SizeVector &s,
                                     const std::map<SubsetMask, int> &bounds);

// The tightest bound family of a point subset and its convex, when the
// family is valid and reproduces exactly the given points.
std::optional<LatticeConvex> tightest_convex(const SizeVector &s,
                                             std::vector<LatticePoint> pts);

// All maximal-dimension convexes (deduplicated by point set). N <= 4.
std::vector<LatticeConvex> enumerate_paves(const SizeVector &s);

struct PavingCheck {
  bool ok = false;
  std::string reason;  // filled on failure
  QVec certificate;    // a strictly compatible function on success
};

PavingCheck is_paving(const SizeVector &s,
                      const std::vector<LatticeConvex> &cells);

// All pavings assembled from the maximal-dimension convexes. N <= 4.
std::vector<Paving> enumerate_pavings(const SizeVector &s);

Cone cone_of_paving(const SizeVector &s, const Paving &p);

// True iff `ray` is a positive multiple of `reference` modulo the affine
// functions.
bool same_ray_class(const SizeVector &s, const QVec &ray,
                    const QVec &reference);

// Canonical basis of the perpendicular character lattice
// {m : <m, l> = 0 for all affine l}: anchor-interpolation rows.
std::vector<LatticeFunctional> perp_lattice_basis(const SizeVector &s);

// Minimal generating set of the dual-chart monoid {m perp affine :
// <m, ray> >= 0 for every ray of the paving cone}.
std::vector<LatticeFunctional> dual_chart_generators(const SizeVector &s,
                                                     const Paving &p);

// Face obtained by forcing the blocks in `zero_blocks` to zero.
struct FaceData {
  SizeVector face_sizes{std::vector<int>{1, 1}};
  std::vector<int> kept_blocks;          // 1-based indices into s
  std::vector<LatticePoint> face_points; // as points of the ambient type set
};
FaceData face_convex(const SizeVector &s, const std::vector<int> &zero_blocks);

// Restriction of a paving to a face: intersections of the cells with the
// face, keeping the full-dimensional ones, in face coordinates.
std::vector<std::vector<LatticePoint>>
restrict_paving(const SizeVector &s, const Paving &p,
                const std::vector<int> &zero_blocks);

// Deterministic identifier of a cell/paving used by exports and the CLI:
// cells print as the sorted point list.
std::string cell_id(const LatticeConvex &c);
std::string paving_id(const std::vector<LatticeConvex> &cells);

} // namespace grasscut
