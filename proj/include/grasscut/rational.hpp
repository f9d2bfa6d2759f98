#pragma once

#include "grasscut/bigint.hpp"

#include <string>

namespace grasscut {

// Exact rational number in canonical form: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  // Parses "a" or "a/b".
  static Rational from_string(const std::string &s);
  std::string to_string() const;

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational operator+(const Rational &o) const;
  Rational operator-(const Rational &o) const;
  Rational operator*(const Rational &o) const;
  Rational operator/(const Rational &o) const;
  Rational inv() const;

  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }
  Rational &operator/=(const Rational &o) { return *this = *this / o; }

  bool operator==(const Rational &o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational &o) const { return !(*this == o); }
  bool operator<(const Rational &o) const;
  bool operator<=(const Rational &o) const { return !(o < *this); }
  bool operator>(const Rational &o) const { return o < *this; }
  bool operator>=(const Rational &o) const { return !(*this < o); }

  static Rational pow(const Rational &base, long exp);

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
  BigInt num_, den_;
  void normalize();
};

} // namespace grasscut
