#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grasscut {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32 limbs.
// Limbs are little-endian and never have trailing zeros; zero has no limbs
// and sign_ == 0.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  explicit BigInt(const std::string &decimal);

  static BigInt from_string(const std::string &decimal);
  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  bool is_neg() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt &o) const;
  BigInt operator-(const BigInt &o) const;
  BigInt operator*(const BigInt &o) const;
  // Truncated division (quotient rounds toward zero, like C++ int division).
  BigInt operator/(const BigInt &o) const;
  BigInt operator%(const BigInt &o) const;
  static void divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r);

  BigInt &operator+=(const BigInt &o) { return *this = *this + o; }
  BigInt &operator-=(const BigInt &o) { return *this = *this - o; }
  BigInt &operator*=(const BigInt &o) { return *this = *this * o; }

  bool operator==(const BigInt &o) const;
  bool operator!=(const BigInt &o) const { return !(*this == o); }
  bool operator<(const BigInt &o) const { return cmp(*this, o) < 0; }
  bool operator<=(const BigInt &o) const { return cmp(*this, o) <= 0; }
  bool operator>(const BigInt &o) const { return cmp(*this, o) > 0; }
  bool operator>=(const BigInt &o) const { return cmp(*this, o) >= 0; }

  static int cmp(const BigInt &a, const BigInt &b);
  static BigInt gcd(BigInt a, BigInt b); // nonnegative
  static BigInt pow(const BigInt &base, unsigned long exp);

  // Exact conversion when the value fits, otherwise throws.
  long long to_ll() const;
  bool fits_ll() const;

  std::size_t hash() const;

private:
  int sign_ = 0;
  std::vector<uint32_t> limbs_;

  void trim();
  static int cmp_mag(const std::vector<uint32_t> &a,
                     const std::vector<uint32_t> &b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  static void divmod_mag(const std::vector<uint32_t> &a,
                         const std::vector<uint32_t> &b,
                         std::vector<uint32_t> &q, std::vector<uint32_t> &r);
};

} // namespace grasscut
