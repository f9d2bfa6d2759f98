#include "grasscut/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasscut {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0)
    return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
            : static_cast<unsigned long long>(v);
  while (m) {
    limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt::BigInt(const std::string &decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(const std::string &decimal) {
  BigInt out;
  std::size_t i = 0;
  int sgn = 1;
  if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
    sgn = decimal[i] == '-' ? -1 : 1;
    ++i;
  }
  if (i >= decimal.size())
    throw std::invalid_argument("BigInt: empty numeral");
  BigInt ten(10);
  for (; i < decimal.size(); ++i) {
    char c = decimal[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigInt: bad digit in numeral");
    out = out * ten + BigInt(c - '0');
  }
  if (sgn < 0)
    out = -out;
  return out;
}

std::string BigInt::to_string() const {
  if (is_zero())
    return "0";
  std::vector<uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!mag.empty() && mag.back() == 0)
      mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0')
    digits.pop_back();
  if (sign_ < 0)
    digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool BigInt::is_one() const {
  return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0)
    limbs_.pop_back();
  if (limbs_.empty())
    sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t> &a,
                    const std::vector<uint32_t> &b) {
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t> &a,
                                      const std::vector<uint32_t> &b) {
  const std::vector<uint32_t> &x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t> &y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(x.size() + 1, 0);
  uint64_t carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
    out[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[x.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t> &a,
                                      const std::vector<uint32_t> &b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow -
                (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t> &a,
                                      const std::vector<uint32_t> &b) {
  if (a.empty() || b.empty())
    return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<uint32_t> &a,
                        const std::vector<uint32_t> &b,
                        std::vector<uint32_t> &q, std::vector<uint32_t> &r) {
  q.clear();
  r.clear();
  if (b.empty())
    throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0)
      q.pop_back();
    if (rem)
      r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  int shift = 0;
  uint32_t top = b.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  auto shl = [&](const std::vector<uint32_t> &v) {
    std::vector<uint32_t> out(v.size() + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << shift) &
                                      0xffffffffu);
      if (shift)
        out[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >>
                                           (32 - shift));
    }
    while (!out.empty() && out.back() == 0)
      out.pop_back();
    return out;
  };
  std::vector<uint32_t> u = shl(a), v = shl(b);
  std::size_t n = v.size(), m = u.size() - n;
  u.resize(u.size() + 1, 0);
  q.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase ||
           (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase)
        break;
    }
    // multiply-subtract
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) -
                  static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) -
                borrow;
    if (t < 0) {
      // qhat was one too large
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0)
    q.pop_back();
  // un-shift remainder
  u.resize(n);
  if (shift) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      uint32_t hi = (i + 1 < u.size()) ? u[i + 1] : 0;
      u[i] = static_cast<uint32_t>(
          ((static_cast<uint64_t>(hi) << (32 - shift)) |
           (static_cast<uint64_t>(u[i]) >> shift)) &
          0xffffffffu);
    }
  }
  while (!u.empty() && u.back() == 0)
    u.pop_back();
  r = u;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0)
    out.sign_ = 1;
  return out;
}

BigInt BigInt::operator+(const BigInt &o) const {
  if (is_zero())
    return o;
  if (o.is_zero())
    return *this;
  BigInt out;
  if (sign_ == o.sign_) {
    out.sign_ = sign_;
    out.limbs_ = add_mag(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0)
      return BigInt();
    if (c > 0) {
      out.sign_ = sign_;
      out.limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
      out.sign_ = o.sign_;
      out.limbs_ = sub_mag(o.limbs_, limbs_);
    }
  }
  out.trim();
  return out;
}

BigInt BigInt::operator-(const BigInt &o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt &o) const {
  if (is_zero() || o.is_zero())
    return BigInt();
  BigInt out;
  out.sign_ = sign_ * o.sign_;
  out.limbs_ = mul_mag(limbs_, o.limbs_);
  out.trim();
  return out;
}

void BigInt::divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.limbs_, b.limbs_, qm, rm);
  q = BigInt();
  r = BigInt();
  q.limbs_ = qm;
  r.limbs_ = rm;
  q.sign_ = qm.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = rm.empty() ? 0 : a.sign_;
  q.trim();
  r.trim();
}

BigInt BigInt::operator/(const BigInt &o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt &o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::operator==(const BigInt &o) const {
  return sign_ == o.sign_ && limbs_ == o.limbs_;
}

int BigInt::cmp(const BigInt &a, const BigInt &b) {
  if (a.sign_ != b.sign_)
    return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.limbs_, b.limbs_);
  return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::pow(const BigInt &base, unsigned long exp) {
  BigInt out(1), cur = base;
  while (exp) {
    if (exp & 1ul)
      out *= cur;
    cur *= cur;
    exp >>= 1;
  }
  return out;
}

bool BigInt::fits_ll() const { return limbs_.size() <= 2 && (limbs_.size() < 2 || (limbs_[1] < 0x80000000u || (sign_ < 0 && limbs_[1] == 0x80000000u && limbs_[0] == 0))); }

long long BigInt::to_ll() const {
  if (!fits_ll())
    throw std::overflow_error("BigInt: does not fit in long long");
  unsigned long long m = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    m = (m << 32) | limbs_[i];
  if (sign_ < 0)
    return -static_cast<long long>(m - 1) - 1; // safe at LLONG_MIN
  return static_cast<long long>(m);
}

std::size_t BigInt::hash() const {
  std::size_t h = static_cast<std::size_t>(sign_ + 1);
  for (uint32_t l : limbs_)
    h = h * 1000003u + l;
  return h;
}

} // namespace grasscut
