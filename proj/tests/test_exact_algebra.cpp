#include "doctest.h"

#include "grasscut/poly.hpp"

#include <limits>
#include <random>

using namespace grasscut;

TEST_CASE("bigint arithmetic round trips through strings") {
  BigInt a("123456789012345678901234567890");
  BigInt b("-98765432109876543210");
  CHECK(a.to_string() == "123456789012345678901234567890");
  CHECK((a * b).to_string() == (b * a).to_string());
  CHECK((a + b - b) == a);
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  CHECK(q * b + r == a);
  CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
  CHECK(BigInt::pow(BigInt(3), 20).to_string() == "3486784401");
  CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("bigint divmod stress against small integers") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 2000; ++k) {
    long long x = static_cast<long long>(rng() % 2000001) - 1000000;
    long long y = static_cast<long long>(rng() % 999) + 1;
    if (rng() & 1)
      y = -y;
    BigInt q, r;
    BigInt::divmod(BigInt(x), BigInt(y), q, r);
    CHECK(q == BigInt(x / y));
    CHECK(r == BigInt(x % y));
  }
}

TEST_CASE("rational canonical form") {
  Rational a(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::from_string("-14/21") == Rational(-2, 3));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("poly product: difference of squares") {
  IntPoly x = IntPoly::variable("x");
  IntPoly p = (x + IntPoly(1)) * (x - IntPoly(1));
  CHECK(p == x * x - IntPoly(1));
}

TEST_CASE("poly times zero is the empty term map") {
  IntPoly x = IntPoly::variable("x");
  IntPoly p = (x * x + IntPoly(7)) * IntPoly(0);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("minor cross product expands as expected") {
  // eps*(-1) - (-1)*(1) = -eps + 1
  IntPoly eps = IntPoly::variable("epsP_2");
  IntPoly lhs = eps * IntPoly(-1) - IntPoly(-1) * IntPoly(1);
  CHECK(lhs == IntPoly(1) - eps);
}

TEST_CASE("poly_eval examples") {
  IntPoly x = IntPoly::variable("x");
  IntPoly p = x * x - IntPoly(1);
  CHECK(p.eval({{"x", Rational(3, 2)}}) == Rational(5, 4));
  CHECK(IntPoly(7).eval({}) == Rational(7));
  IntPoly eps = IntPoly::variable("epsP_2");
  CHECK(eps.eval({{"epsP_2", Rational(2, 3)}}) == Rational(2, 3));
  CHECK_THROWS(p.eval({}));
}

TEST_CASE("ratfunc equality by cross multiplication") {
  IntPoly x = IntPoly::variable("x");
  IntPoly y = IntPoly::variable("y");
  RatFunc a(x * x - IntPoly(1), x - IntPoly(1));
  RatFunc b(x + IntPoly(1));
  CHECK(a.equals(b));
  CHECK(!RatFunc(IntPoly(1), x).equals(RatFunc(IntPoly(1), y)));
}

TEST_CASE("ring axioms on random sparse polynomials") {
  std::mt19937_64 rng(7);
  const char *names[4] = {"a", "b", "c", "d"};
  auto random_poly = [&]() {
    IntPoly p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      IntPoly m(static_cast<long long>(rng() % 11) - 5);
      for (int v = 0; v < 4; ++v) {
        unsigned long e = rng() % 3;
        if (e)
          m *= IntPoly::pow(IntPoly::variable(names[v]), e);
      }
      p += m;
    }
    return p;
  };
  for (int k = 0; k < 60; ++k) {
    IntPoly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  const char *names[3] = {"x", "y", "z"};
  auto random_poly = [&]() {
    IntPoly p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      IntPoly m(static_cast<long long>(rng() % 9) - 4);
      for (int v = 0; v < 3; ++v) {
        unsigned long e = rng() % 3;
        if (e)
          m *= IntPoly::pow(IntPoly::variable(names[v]), e);
      }
      p += m;
    }
    return p;
  };
  for (int k = 0; k < 40; ++k) {
    IntPoly p = random_poly(), q = random_poly();
    std::map<std::string, Rational> at;
    for (int v = 0; v < 3; ++v)
      at[names[v]] = Rational(static_cast<long long>(rng() % 19) - 9,
                              static_cast<long long>(rng() % 6) + 1);
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
  }
}

TEST_CASE("ratfunc equality agrees with evaluation at generic points") {
  IntPoly x = IntPoly::variable("x");
  IntPoly y = IntPoly::variable("y");
  RatFunc f(x * y + x, y + IntPoly(1)); // = x away from y = -1
  RatFunc g(x);
  CHECK(f.equals(g));
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    std::map<std::string, Rational> at{
        {"x", Rational(static_cast<long long>(rng() % 41) - 20)},
        {"y", Rational(static_cast<long long>(rng() % 41) - 20)}};
    if (f.den_vanishes_at(at) || g.den_vanishes_at(at))
      continue;
    CHECK(f.eval(at) == g.eval(at));
  }
}

TEST_CASE("exact division") {
  IntPoly x = IntPoly::variable("x");
  IntPoly y = IntPoly::variable("y");
  IntPoly p = (x + y) * (x - y) * IntPoly(3);
  auto q = p.divide_exact(x + y);
  REQUIRE(q.has_value());
  CHECK(*q == (x - y) * IntPoly(3));
  CHECK(!p.divide_exact(x + IntPoly(1)).has_value());
  auto q2 = p.divide_exact(IntPoly(3));
  REQUIRE(q2.has_value());
  CHECK(*q2 == (x + y) * (x - y));
}

TEST_CASE("polynomial grammar parser") {
  IntPoly p = parse_poly("(x+1)*(x-1) - x^2 + 1");
  CHECK(p.is_zero());
  IntPoly q = parse_poly("1 - epsP_2*eta_12");
  CHECK(q.eval({{"epsP_2", Rational(2)}, {"eta_12", Rational(1, 2)}}) ==
        Rational(0));
  RatFunc f = parse_ratfunc("(eta1_12 - hH2_22) / (1 - xX2_11*hH2_22)");
  CHECK(!f.is_zero());
  CHECK_THROWS(parse_poly("x +"));
}

TEST_CASE("regularity over a localization") {
  IntPoly x = IntPoly::variable("x");
  IntPoly u = IntPoly(1) - x;
  RatFunc f((x + IntPoly(2)) * u, u * u);
  CHECK(f.regular_over({u}, 4));
  RatFunc g(IntPoly(1), x);
  CHECK(!g.regular_over({u}, 4));
  CHECK(g.regular_over({x}, 4));
}

TEST_CASE("fraction equality is an equivalence relation") {
  IntPoly x = IntPoly::variable("x");
  IntPoly y = IntPoly::variable("y");
  RatFunc a(x * y - y, y);                     // x - 1 away from y = 0
  RatFunc b(x - IntPoly(1));
  RatFunc c((x - IntPoly(1)) * (y + IntPoly(2)), y + IntPoly(2));
  CHECK(a.equals(a));
  CHECK(a.equals(b));
  CHECK(b.equals(a));
  CHECK(b.equals(c));
  CHECK(a.equals(c)); // transitivity across distinct representations
  RatFunc d(x + IntPoly(1));
  CHECK(!a.equals(d));
}

TEST_CASE("multi-limb division satisfies the division identity") {
  std::mt19937_64 rng(1234);
  auto random_big = [&](int limbs) {
    std::string digits;
    int len = 10 * limbs + static_cast<int>(rng() % 10);
    digits.push_back(static_cast<char>('1' + rng() % 9));
    for (int i = 1; i < len; ++i)
      digits.push_back(static_cast<char>('0' + rng() % 10));
    BigInt v(digits);
    return (rng() & 1) ? -v : v;
  };
  for (int k = 0; k < 300; ++k) {
    BigInt a = random_big(3 + static_cast<int>(rng() % 3));
    BigInt b = random_big(1 + static_cast<int>(rng() % 2));
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(BigInt::cmp(r.abs(), b.abs()) < 0);
    // truncated division: remainder carries the dividend's sign
    if (!r.is_zero())
      CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("64-bit conversion boundaries") {
  BigInt two63("9223372036854775808"); // 2^63
  CHECK(!two63.fits_ll());
  BigInt max_ll("9223372036854775807");
  CHECK(max_ll.fits_ll());
  CHECK(max_ll.to_ll() == 9223372036854775807LL);
  BigInt min_ll("-9223372036854775808");
  CHECK(min_ll.fits_ll());
  CHECK(min_ll.to_ll() == std::numeric_limits<long long>::min());
  CHECK((-two63 - BigInt(1)).fits_ll() == false);
}
