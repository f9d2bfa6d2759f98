#include "grasscut/rational.hpp"

#include <stdexcept>

namespace grasscut {

void Rational::normalize() {
  if (den_.is_zero())
    throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_neg()) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(const std::string &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_.is_one())
    return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::operator+(const Rational &o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational &o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational &o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational &o) const {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inv() const {
  if (is_zero())
    throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

bool Rational::operator<(const Rational &o) const {
  return BigInt::cmp(num_ * o.den_, o.num_ * den_) < 0;
}

Rational Rational::pow(const Rational &base, long exp) {
  if (exp == 0)
    return Rational(1);
  if (exp < 0)
    return pow(base.inv(), -exp);
  return Rational(BigInt::pow(base.num_, static_cast<unsigned long>(exp)),
                  BigInt::pow(base.den_, static_cast<unsigned long>(exp)));
}

} // namespace grasscut
