#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace grasscut {

// Ordered block sizes (s_1..s_N), all positive. n = sum of sizes.
class SizeVector {
public:
  explicit SizeVector(std::vector<int> entries);
  static SizeVector parse(const std::string &comma_separated);

  int blocks() const { return static_cast<int>(entries_.size()); } // N
  int columns() const { return n_; }                               // n
  int size(int t) const { return entries_.at(static_cast<size_t>(t - 1)); }
  const std::vector<int> &entries() const { return entries_; }

  // 1-based first/last column of block t.
  int block_begin(int t) const;
  int block_end(int t) const { return block_begin(t) + size(t) - 1; }
  // Block index of column i (the map i -> tau(i)).
  int block_of(int i) const;

  std::string to_string() const;
  bool operator==(const SizeVector &o) const { return entries_ == o.entries_; }

private:
  std::vector<int> entries_;
  int n_ = 0;
};

// Column pair (i1, i2) with 1 <= i1 < i2 <= n.
struct IndexPair {
  int i1 = 0, i2 = 0;
  IndexPair() = default;
  IndexPair(int a, int b);
  bool operator==(const IndexPair &o) const {
    return i1 == o.i1 && i2 == o.i2;
  }
  bool operator!=(const IndexPair &o) const { return !(*this == o); }
  bool operator<(const IndexPair &o) const {
    return i1 != o.i1 ? i1 < o.i1 : i2 < o.i2;
  }
  std::string to_string() const;
};

// Nonnegative integer vector indexed by blocks; when a member of the type set
// it satisfies sum = 2 and v_t <= s_t.
struct LatticePoint {
  std::vector<int> coords;
  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> c) : coords(std::move(c)) {}
  int sum() const;
  bool operator==(const LatticePoint &o) const { return coords == o.coords; }
  bool operator<(const LatticePoint &o) const { return coords < o.coords; }
  std::string to_string() const;
};

using WeightVector = LatticePoint; // integer block weights, no sum constraint

// Multiset of index pairs in canonical (sorted) order.
struct PluckerMonomial {
  std::vector<IndexPair> factors; // sorted
  PluckerMonomial() = default;
  explicit PluckerMonomial(std::vector<IndexPair> f);
  int degree() const { return static_cast<int>(factors.size()); }
  bool operator==(const PluckerMonomial &o) const {
    return factors == o.factors;
  }
  bool operator<(const PluckerMonomial &o) const {
    return factors < o.factors;
  }
  std::string to_string() const;
};

// All pairs (i1, i2), 1 <= i1 < i2 <= n, in lexicographic order.
std::vector<IndexPair> all_pairs(int n);

// Consecutive blocks of {1..n} with the given sizes.
std::vector<std::vector<int>> blocks(const SizeVector &s);

// Block membership map for a single column (throws when out of range).
int tau_of(const SizeVector &s, int column);

// All admissible types: v >= 0, sum v = 2, v_t <= s_t. Sorted.
std::vector<LatticePoint> enumerate_types(const SizeVector &s);

// Type of a pair: v_t = |{i1,i2} ∩ block t|.
LatticePoint pair_type(const SizeVector &s, const IndexPair &p);

// All pairs of the given type (throws when v is not an admissible type).
std::vector<IndexPair> pairs_of_type(const SizeVector &s,
                                     const LatticePoint &v);

// All pairs meeting block t.
std::vector<IndexPair> pairs_meeting_block(const SizeVector &s, int t);

// Number of factors in any decomposition of w, or 0 when no monomial exists.
int height(const SizeVector &s, const WeightVector &w);

// The full monomial generator set for weight w (possibly empty), sorted.
std::vector<PluckerMonomial> weight_monomials(const SizeVector &s,
                                              const WeightVector &w);

// Independent brute-force oracle: enumerate all pair multisets of size up to
// sum(w)/2 and keep those whose type sum is w.
std::vector<PluckerMonomial> weight_monomials_bruteforce(const SizeVector &s,
                                                         const WeightVector &w);

// The three families of essential weights, sorted.
std::vector<WeightVector> essential_weights(const SizeVector &s);

// Sum of pair types over the factors of m.
WeightVector torus_weight(const SizeVector &s, const PluckerMonomial &m);

} // namespace grasscut
