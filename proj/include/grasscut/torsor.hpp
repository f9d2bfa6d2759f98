#pragma once

#include "grasscut/charts.hpp"
#include "grasscut/polyhedral.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grasscut {

// A monomial section of the torus quotient: sends the quotient coordinates
// lambda_1..lambda_r to a Laurent monomial per type, paired with the dual
// character basis (dual_basis[i] evaluates to lambda_i on the section).
struct Splitting {
  std::vector<LatticePoint> domain;          // sorted type set
  std::vector<LatticeFunctional> dual_basis; // r characters
  std::vector<std::vector<int>> section;     // |domain| x r exponents
  std::size_t rank() const { return dual_basis.size(); }
};

// The pinned splitting for the (1,1,1,s4) shape and the constructed one for
// the other N = 4 shapes (dual basis = canonical perpendicular basis,
// section solved over the integers).
Splitting standard_splitting(const SizeVector &s);

// Per-type scalars -> quotient coordinates: lambda_i = 1 / dual_i(c).
std::vector<Rational> lambda_of_scalars(const Splitting &b,
                                        const std::vector<Rational> &c);

// Scales each coordinate by the section monomial of its type at lambda and
// checks the three-term relations exactly.
bool twist_relations_check(const SizeVector &s, const Splitting &b,
                           const std::vector<Rational> &lambda,
                           const std::map<IndexPair, Rational> &z);

// Image of a chart point: the ambient-chart generator coordinates and the
// per-pair homogeneous coordinates.
struct OmegaPoint {
  std::vector<Rational> gen_coords;
  std::vector<std::pair<IndexPair, Rational>> z;
  Rational z_at(const IndexPair &p) const;
};

// z_(i,j) = (P_(i,j)/g_type)(params) * x_type; generator coordinates are the
// corresponding products of (g_type/x_type). Throws off the chart domain or
// when a representative minor vanishes.
OmegaPoint embedding_image(const ChartSpec &chart, const AmbientChart &target,
                           const std::map<std::string, Rational> &params,
                           const std::map<LatticePoint, Rational> &xvals);

std::vector<Rational>
lambda_of_image(const SizeVector &s, const Splitting &b,
                const ChartSpec &chart,
                const std::map<std::string, Rational> &params,
                const std::map<LatticePoint, Rational> &xvals);

enum class RepStatus { kUnit, kRegular, kBad };

// Symbolic classification of a representative minor: a unit (up to sign, a
// monomial in the variables times inverted elements), or merely regular
// (all same-type minor ratios divide exactly over the localization).
RepStatus representative_status(const ChartSpec &chart, const LatticePoint &v);

struct EmbeddingReport {
  std::string chart;
  bool reps_ok = false;     // clause (a): representatives regular or units
  bool formulas_ok = false; // clause (b): pinned simplified formulas
  bool twist_ok = false;    // clause (c): twisted relations vanish
  bool scaled_ok = false;   // clause (d): scaled tuple reproduces the minors
  int unit_reps = 0;
  int regular_reps = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  bool pass() const {
    return reps_ok && formulas_ok && twist_ok && scaled_ok;
  }
};

EmbeddingReport verify_embedding(const ChartSpec &chart, int trials,
                                 std::uint64_t seed);

// Same, against an explicitly supplied representative table (negative
// controls corrupt the table).
EmbeddingReport
verify_embedding_with_reps(const ChartSpec &chart,
                           const std::vector<std::pair<LatticePoint, IndexPair>> &reps,
                           int trials, std::uint64_t seed);

// Solves the chart parameters from a numeric matrix in the same pivot frame
// by greedy one-variable elimination; nullopt when the elimination gets
// stuck, a denominator vanishes, or the point is off the chart domain.
std::optional<std::map<std::string, Rational>>
solve_chart_params(const ChartSpec &chart, const Matrix2xN &numeric);

struct OverlapResult {
  bool checked = false; // at least one common sample succeeded
  bool ok = false;      // all sampled ratio comparisons agreed
  int samples = 0;
  std::string detail;
};

// Samples points of `a`, transports them to `b` through the common matrix
// frame and compares all minor ratios.
OverlapResult overlap_ratio_check(const ChartSpec &a, const ChartSpec &b,
                                  int trials, std::uint64_t seed);

// Forget the z-coordinates whose type involves a block outside the
// quadruple.
std::map<IndexPair, Rational>
face_restrict_point(const SizeVector &s, const std::vector<int> &quadruple,
                    const std::map<IndexPair, Rational> &z);

// Deterministic in-domain sample of chart parameters and type scalars.
std::map<std::string, Rational> sample_chart_params(const ChartSpec &chart,
                                                    std::uint64_t seed);
std::map<LatticePoint, Rational> sample_type_scalars(const SizeVector &s,
                                                     std::uint64_t seed);

} // namespace grasscut
