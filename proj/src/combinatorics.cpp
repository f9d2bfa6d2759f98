#include "grasscut/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grasscut {

SizeVector::SizeVector(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2)
    throw std::invalid_argument("SizeVector: need at least two blocks");
  for (int s : entries_)
    if (s < 1)
      throw std::invalid_argument("SizeVector: block sizes must be positive");
  n_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

SizeVector SizeVector::parse(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  return SizeVector(out);
}

int SizeVector::block_begin(int t) const {
  int b = 1;
  for (int i = 1; i < t; ++i)
    b += size(i);
  return b;
}

int SizeVector::block_of(int i) const {
  if (i < 1 || i > n_)
    throw std::out_of_range("SizeVector: column out of range");
  int t = 1;
  int end = size(1);
  while (i > end)
    end += size(++t);
  return t;
}

std::string SizeVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

IndexPair::IndexPair(int a, int b) : i1(a), i2(b) {
  if (!(1 <= a && a < b))
    throw std::invalid_argument("IndexPair: need 1 <= i1 < i2");
}

std::string IndexPair::to_string() const {
  return "(" + std::to_string(i1) + "," + std::to_string(i2) + ")";
}

int LatticePoint::sum() const {
  return std::accumulate(coords.begin(), coords.end(), 0);
}

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

PluckerMonomial::PluckerMonomial(std::vector<IndexPair> f)
    : factors(std::move(f)) {
  std::sort(factors.begin(), factors.end());
}

std::string PluckerMonomial::to_string() const {
  if (factors.empty())
    return "1";
  std::string out;
  for (const auto &p : factors)
    out += "z" + p.to_string();
  return out;
}

std::vector<IndexPair> all_pairs(int n) {
  std::vector<IndexPair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> blocks(const SizeVector &s) {
  std::vector<std::vector<int>> out;
  int c = 1;
  for (int t = 1; t <= s.blocks(); ++t) {
    std::vector<int> blk;
    for (int k = 0; k < s.size(t); ++k)
      blk.push_back(c++);
    out.push_back(std::move(blk));
  }
  return out;
}

int tau_of(const SizeVector &s, int column) { return s.block_of(column); }

std::vector<LatticePoint> enumerate_types(const SizeVector &s) {
  const int N = s.blocks();
  std::vector<LatticePoint> out;
  // sum = 2: either one block with 2 (needs s_t >= 2) or two blocks with 1
  for (int t = 1; t <= N; ++t) {
    if (s.size(t) >= 2) {
      std::vector<int> v(N, 0);
      v[t - 1] = 2;
      out.emplace_back(v);
    }
  }
  for (int t1 = 1; t1 <= N; ++t1)
    for (int t2 = t1 + 1; t2 <= N; ++t2) {
      std::vector<int> v(N, 0);
      v[t1 - 1] = 1;
      v[t2 - 1] = 1;
      out.emplace_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePoint pair_type(const SizeVector &s, const IndexPair &p) {
  std::vector<int> v(s.blocks(), 0);
  v[s.block_of(p.i1) - 1] += 1;
  v[s.block_of(p.i2) - 1] += 1;
  return LatticePoint(v);
}

std::vector<IndexPair> pairs_of_type(const SizeVector &s,
                                     const LatticePoint &v) {
  const auto types = enumerate_types(s);
  if (std::find(types.begin(), types.end(), v) == types.end())
    throw std::invalid_argument("pairs_of_type: not an admissible type");
  std::vector<IndexPair> out;
  for (const auto &p : all_pairs(s.columns()))
    if (pair_type(s, p) == v)
      out.push_back(p);
  return out;
}

std::vector<IndexPair> pairs_meeting_block(const SizeVector &s, int t) {
  if (t < 1 || t > s.blocks())
    throw std::out_of_range("pairs_meeting_block: block out of range");
  std::vector<IndexPair> out;
  for (const auto &p : all_pairs(s.columns()))
    if (s.block_of(p.i1) == t || s.block_of(p.i2) == t)
      out.push_back(p);
  return out;
}

namespace {

// Decompose w as an ordered-insensitive sum of admissible types; collect the
// distinct type multisets.
void type_decompositions(const std::vector<LatticePoint> &types,
                         std::vector<int> &w, std::size_t start,
                         std::vector<int> &counts,
                         std::vector<std::vector<int>> &out) {
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) {
    out.push_back(counts);
    return;
  }
  if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; }))
    return;
  for (std::size_t i = start; i < types.size(); ++i) {
    const auto &v = types[i].coords;
    bool fits = true;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (v[k] > w[k]) {
        fits = false;
        break;
      }
    if (!fits)
      continue;
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] -= v[k];
    ++counts[i];
    type_decompositions(types, w, i, counts, out);
    --counts[i];
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] += v[k];
  }
}

// Expand a type multiset into all monomials: choose a multiset of pairs of
// each type with the prescribed multiplicity.
void expand_monomials(const SizeVector &s,
                      const std::vector<LatticePoint> &types,
                      const std::vector<int> &counts,
                      std::set<PluckerMonomial> &out) {
  std::vector<std::vector<IndexPair>> choices; // per type slot
  std::vector<int> mult;
  for (std::size_t i = 0; i < types.size(); ++i)
    if (counts[i] > 0) {
      choices.push_back(pairs_of_type(s, types[i]));
      mult.push_back(counts[i]);
    }
  std::vector<IndexPair> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    if (slot == choices.size()) {
      out.insert(PluckerMonomial(acc));
      return;
    }
    const auto &pool = choices[slot];
    int k = mult[slot];
    // multisets of size k from pool
    std::function<void(std::size_t, int)> pick = [&](std::size_t from,
                                                     int left) {
      if (left == 0) {
        rec(slot + 1);
        return;
      }
      for (std::size_t j = from; j < pool.size(); ++j) {
        acc.push_back(pool[j]);
        pick(j, left - 1);
        acc.pop_back();
      }
    };
    pick(0, k);
  };
  rec(0);
}

} // namespace

int height(const SizeVector &s, const WeightVector &w) {
  int total = w.sum();
  if (total <= 0 || total % 2 != 0)
    return 0;
  if (std::any_of(w.coords.begin(), w.coords.end(),
                  [](int x) { return x < 0; }))
    return 0;
  auto types = enumerate_types(s);
  std::vector<int> rem = w.coords;
  std::vector<int> counts(types.size(), 0);
  std::vector<std::vector<int>> found;
  type_decompositions(types, rem, 0, counts, found);
  return found.empty() ? 0 : total / 2;
}

std::vector<PluckerMonomial> weight_monomials(const SizeVector &s,
                                              const WeightVector &w) {
  std::vector<PluckerMonomial> out;
  int total = w.sum();
  if (total <= 0 || total % 2 != 0)
    return out;
  if (std::any_of(w.coords.begin(), w.coords.end(),
                  [](int x) { return x < 0; }))
    return out;
  auto types = enumerate_types(s);
  std::vector<int> rem = w.coords;
  std::vector<int> counts(types.size(), 0);
  std::vector<std::vector<int>> decs;
  type_decompositions(types, rem, 0, counts, decs);
  std::set<PluckerMonomial> acc;
  for (const auto &d : decs)
    expand_monomials(s, types, d, acc);
  out.assign(acc.begin(), acc.end());
  return out;
}

std::vector<PluckerMonomial>
weight_monomials_bruteforce(const SizeVector &s, const WeightVector &w) {
  std::vector<PluckerMonomial> out;
  int total = w.sum();
  if (total <= 0 || total % 2 != 0)
    return out;
  int kmax = total / 2;
  auto pairs = all_pairs(s.columns());
  std::vector<IndexPair> acc;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      std::vector<int> sum(s.blocks(), 0);
      for (const auto &p : acc) {
        auto t = pair_type(s, p);
        for (std::size_t i = 0; i < sum.size(); ++i)
          sum[i] += t.coords[i];
      }
      if (sum == w.coords)
        out.push_back(PluckerMonomial(acc));
      return;
    }
    for (std::size_t j = from; j < pairs.size(); ++j) {
      acc.push_back(pairs[j]);
      rec(j, left - 1);
      acc.pop_back();
    }
  };
  for (int k = 1; k <= kmax; ++k)
    rec(0, k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WeightVector> essential_weights(const SizeVector &s) {
  const int N = s.blocks();
  std::vector<WeightVector> out;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      std::vector<int> w(N, 0);
      w[i - 1] = w[j - 1] = 1;
      out.emplace_back(w);
    }
  for (int i = 1; i <= N; ++i)
    if (s.size(i) >= 2) {
      std::vector<int> w(N, 0);
      w[i - 1] = 2;
      out.emplace_back(w);
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = j + 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) {
          std::vector<int> w(N, 0);
          w[i - 1] = w[j - 1] = w[k - 1] = w[l - 1] = 1;
          out.emplace_back(w);
        }
  std::sort(out.begin(), out.end());
  return out;
}

WeightVector torus_weight(const SizeVector &s, const PluckerMonomial &m) {
  std::vector<int> w(s.blocks(), 0);
  for (const auto &p : m.factors) {
    auto t = pair_type(s, p);
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] += t.coords[i];
  }
  return WeightVector(w);
}

} // namespace grasscut
