#pragma once

#include "grasscut/grassmann.hpp"

#include <map>
#include <string>
#include <vector>

namespace grasscut {

// Column j written as (j, t, p): block t, position p, j = blocks before + p.
struct STriple {
  int j = 0, t = 0, p = 0;
  bool operator==(const STriple &o) const {
    return j == o.j && t == o.t && p == o.p;
  }
};

STriple striple_of(const SizeVector &s, int column);

// Index of a torus-factorized parametrization: two pivot columns plus an
// ordered split of the remaining blocks into an upper and a lower family.
// Class I: pivots in two distinct blocks (l + m = N - 2);
// Class II: both pivots in one block (l + m = N - 1, p1 < p2).
struct ChartIndex {
  STriple j1, j2;
  std::vector<STriple> plus_list;
  std::vector<STriple> minus_list;
  bool class_two() const { return j1.t == j2.t; }
  std::string to_string() const;
};

std::vector<ChartIndex> enumerate_chart_indices(const SizeVector &s);

// Canonical parameter names for an index. For all-singleton size vectors the
// single-index names a_j, eta_j, xi_j are used; otherwise the two-row family
// names (a_j, y_c, u_c, v_c, z_c, w_rc, eta{k}_rc, xi{k}_rc).
std::vector<std::string> gamma_variables(const SizeVector &s,
                                         const ChartIndex &tau);

// The parametrized matrix in the chart of tau with entries substituted per
// the index families. `params` must assign exactly gamma_variables(s, tau);
// a mismatch throws with the offending names listed.
Matrix2xN gamma_matrix(const SizeVector &s, const ChartIndex &tau,
                       const std::map<std::string, RatFunc> &params);
// Same with each parameter as a formal variable.
Matrix2xN gamma_matrix_symbolic(const SizeVector &s, const ChartIndex &tau);

// Maximal-torus substitution: lambda is a permutation of {1..N-2};
// x_{2j} picks up the product of the first lambda(j-2) epsilon factors.
// Input names: a_3..a_N, epsP_1..epsP_{N-2}; output: a_j, eta_j assignment
// feeding the (1,2,(3..N),()) index.
std::map<std::string, RatFunc>
sigma_lambda_max(int N, const std::vector<int> &lambda,
                 const std::map<std::string, RatFunc> &params);

// Direct construction of the substituted matrix for comparison.
Matrix2xN b_lambda_matrix(int N, const std::vector<int> &lambda);

// Extended block-restriction tuple for all-singleton size vectors and pivot
// columns (1,2): the explicit formulas, defined everywhere. Coordinates are
// ordered (1,t),...,(t-1,t),(t,t+1),...,(t,N).
std::vector<RatFunc> extended_block_tuple(int N, const ChartIndex &tau, int t);

struct ExtensionCheck {
  bool pass = true;
  bool direct_defined = false; // direct tuple nonzero at the sample
  std::string detail;
};

// Compares the extended tuple with the direct minor restriction at a sample
// point; passes when they are projectively equal wherever the direct tuple
// is defined, and the extended tuple is nonzero.
ExtensionCheck extension_check(int N, const ChartIndex &tau, int t,
                               const std::map<std::string, Rational> &assign);

// ---------------------------------------------------------------------------
// Chart catalog
// ---------------------------------------------------------------------------

// A named coordinate chart: variables, localized (inverted) elements, the
// defining matrix, the representative minor table and the assigned ambient
// toric chart.
struct ChartSpec {
  std::string name;   // e.g. "X_1A"
  std::string family; // "X", "Y", "Z", "W"
  SizeVector sizes{std::vector<int>{1, 1}};
  int pivot1 = 1, pivot2 = 2;
  std::vector<std::string> variables;
  std::vector<IntPoly> inverted;
  Matrix2xN theta;
  std::vector<std::pair<LatticePoint, IndexPair>> reps; // sorted by type
  std::string target; // "A12", "A13" or "A23"

  const IndexPair &rep_of(const LatticePoint &v) const;
};

// A character-lattice element written multiplicatively: type -> exponent.
using CharExponent = std::vector<std::pair<LatticePoint, int>>;

// The generator lists of the three ambient toric charts for an N = 4 shape.
struct AmbientChart {
  std::string name; // "A12", "A13", "A23"
  std::vector<CharExponent> generators;
};

// Shape families: X = (1,1,1,s4), Y = (1,1,s3,s4), Z = (1,s2,s3,s4),
// W = all sizes >= 2. Throws for other shapes.
std::string shape_family(const SizeVector &sizes);

// The full chart catalog for a concrete N = 4 size vector.
std::vector<ChartSpec> chart_catalog(const SizeVector &sizes);

std::vector<AmbientChart> ambient_charts(const SizeVector &sizes);

// Pinned simplified image formulas carried by the first two X charts:
// minor ratios (P/g) and ambient-generator ratios, used as golden checks.
struct PinnedFormula {
  bool is_generator = false; // otherwise a pair ratio
  IndexPair pair{1, 2};      // when a pair ratio
  int generator = 0;         // index into the target ambient chart list
  std::string expected;      // rational-function text in the chart variables
};
std::vector<PinnedFormula> pinned_formulas(const ChartSpec &chart);

// True iff every inverted element evaluates to a nonzero rational.
bool chart_domain_check(const ChartSpec &chart,
                        const std::map<std::string, Rational> &assign);

// Column permutation action. The permutation (1-based, perm[i-1] is the
// image of column i) must map blocks onto blocks of equal size.
ChartSpec permute_chart(const ChartSpec &chart, const std::vector<int> &perm);

} // namespace grasscut
