#pragma once

#include "grasscut/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grasscut {

// Exponent tuples are compared graded-lexicographically: first by total
// degree, then lexicographically on the exponents.
struct GradedLexLess {
  bool operator()(const std::vector<uint32_t> &a,
                  const std::vector<uint32_t> &b) const;
};

class RatFunc;

// Sparse multivariate polynomial with BigInt coefficients.
//
// Variables are kept sorted by name; terms map exponent tuples (aligned with
// the variable list) to nonzero coefficients. Equality of canonical forms is
// plain member equality.
class IntPoly {
public:
  using Term = std::pair<std::vector<uint32_t>, BigInt>;

  IntPoly() = default;
  IntPoly(long long c);
  IntPoly(const BigInt &c);
  static IntPoly variable(const std::string &name);
  static IntPoly constant(const BigInt &c) { return IntPoly(c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Nonzero constant value when constant; throws otherwise.
  BigInt constant_value() const;

  const std::vector<std::string> &vars() const { return vars_; }
  const std::map<std::vector<uint32_t>, BigInt, GradedLexLess> &terms() const {
    return terms_;
  }
  std::size_t term_count() const { return terms_.size(); }
  long total_degree() const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly &o) const;
  IntPoly operator-(const IntPoly &o) const;
  IntPoly operator*(const IntPoly &o) const;
  IntPoly &operator+=(const IntPoly &o) { return *this = *this + o; }
  IntPoly &operator-=(const IntPoly &o) { return *this = *this - o; }
  IntPoly &operator*=(const IntPoly &o) { return *this = *this * o; }
  bool operator==(const IntPoly &o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const IntPoly &o) const { return !(*this == o); }

  static IntPoly pow(const IntPoly &base, unsigned long exp);

  // Exact evaluation; every variable of the polynomial must be assigned.
  Rational eval(const std::map<std::string, Rational> &assign) const;

  // Exact division: returns the quotient iff *this == q * divisor.
  std::optional<IntPoly> divide_exact(const IntPoly &divisor) const;

  // Substitutes values for a subset of the variables; the result is a
  // fraction in the remaining ones.
  RatFunc partial_eval(const std::map<std::string, Rational> &assign) const;

  // Leading coefficient in graded-lex order (zero polynomial -> 0).
  BigInt leading_coeff() const;
  // gcd of all coefficients, nonnegative.
  BigInt content() const;

  // Drops variables with zero exponent everywhere (canonicalizes the list).
  IntPoly pruned() const;

  std::string to_string() const;

private:
  std::vector<std::string> vars_;                                // sorted
  std::map<std::vector<uint32_t>, BigInt, GradedLexLess> terms_; // canonical

  void add_term(const std::vector<uint32_t> &exps, const BigInt &c);
  static void align(const IntPoly &a, const IntPoly &b,
                    std::vector<std::string> &vars, IntPoly &a2, IntPoly &b2);
  IntPoly remapped(const std::vector<std::string> &new_vars) const;

  friend class RatFunc;
};

// Formal fraction of integer polynomials. The denominator is nonzero;
// equality is by cross multiplication. Light normalization only (sign,
// integer content, common monomial factors) -- no polynomial gcd.
class RatFunc {
public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long long c) : num_(c), den_(1) {}
  RatFunc(const Rational &q);
  RatFunc(IntPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(IntPoly num, IntPoly den);
  static RatFunc variable(const std::string &name) {
    return RatFunc(IntPoly::variable(name));
  }

  const IntPoly &num() const { return num_; }
  const IntPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc &o) const;
  RatFunc operator-(const RatFunc &o) const;
  RatFunc operator*(const RatFunc &o) const;
  RatFunc operator/(const RatFunc &o) const;
  RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
  RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
  RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }

  // Field equality p/q == r/s  <=>  p*s - r*q == 0.
  bool equals(const RatFunc &o) const;

  // Exact value; throws if the denominator vanishes at the point.
  Rational eval(const std::map<std::string, Rational> &assign) const;
  bool den_vanishes_at(const std::map<std::string, Rational> &assign) const;

  // True iff the fraction can be written with a denominator of the form
  // +/- c * prod units[i]^{e_i} (c a nonzero integer); i.e. it is regular on
  // the localization inverting `units`. On success returns the exponents
  // used and the polynomial numerator part via out-params when non-null.
  bool regular_over(const std::vector<IntPoly> &units, unsigned max_exp,
                    IntPoly *reduced_num = nullptr,
                    std::vector<unsigned> *exps = nullptr) const;

  std::string to_string() const;

private:
  IntPoly num_, den_;
  void normalize();
};

// Parses the polynomial grammar: integer literals, variable tokens,
// '+', '-', '*', '^', parentheses, implicit multiplication is not allowed.
// The UTF-8 glyphs for minus and middle-dot are accepted as '-' and '*'.
IntPoly parse_poly(const std::string &text);
// Parses "p" or "p / q" at top level (a single '/' splitting two poly exprs).
RatFunc parse_ratfunc(const std::string &text);

} // namespace grasscut
