#include "grasscut/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grasscut {

bool GradedLexLess::operator()(const std::vector<uint32_t> &a,
                               const std::vector<uint32_t> &b) const {
  long da = 0, db = 0;
  for (uint32_t e : a)
    da += e;
  for (uint32_t e : b)
    db += e;
  if (da != db)
    return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntPoly::IntPoly(long long c) {
  if (c != 0)
    terms_[{}] = BigInt(c);
}

IntPoly::IntPoly(const BigInt &c) {
  if (!c.is_zero())
    terms_[{}] = c;
}

IntPoly IntPoly::variable(const std::string &name) {
  IntPoly p;
  p.vars_ = {name};
  p.terms_[{1u}] = BigInt(1);
  return p;
}

bool IntPoly::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() != 1)
    return false;
  const auto &e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

bool IntPoly::is_one() const {
  return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

BigInt IntPoly::constant_value() const {
  if (terms_.empty())
    return BigInt(0);
  if (!is_constant())
    throw std::logic_error("IntPoly: not a constant");
  return terms_.begin()->second;
}

long IntPoly::total_degree() const {
  long d = -1;
  for (const auto &[e, c] : terms_) {
    long t = 0;
    for (uint32_t x : e)
      t += x;
    d = std::max(d, t);
  }
  return d;
}

void IntPoly::add_term(const std::vector<uint32_t> &exps, const BigInt &c) {
  if (c.is_zero())
    return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

IntPoly IntPoly::remapped(const std::vector<std::string> &new_vars) const {
  IntPoly out;
  out.vars_ = new_vars;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
    pos[i] = static_cast<std::size_t>(it - new_vars.begin());
  }
  for (const auto &[e, c] : terms_) {
    std::vector<uint32_t> ne(new_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      ne[pos[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void IntPoly::align(const IntPoly &a, const IntPoly &b,
                    std::vector<std::string> &vars, IntPoly &a2, IntPoly &b2) {
  vars.clear();
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(vars));
  a2 = (vars == a.vars_) ? a : a.remapped(vars);
  b2 = (vars == b.vars_) ? b : b.remapped(vars);
}

IntPoly IntPoly::operator-() const {
  IntPoly out;
  out.vars_ = vars_;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(e, -c);
  return out;
}

IntPoly IntPoly::operator+(const IntPoly &o) const {
  std::vector<std::string> vars;
  IntPoly a, b;
  align(*this, o, vars, a, b);
  for (const auto &[e, c] : b.terms_)
    a.add_term(e, c);
  return a.pruned();
}

IntPoly IntPoly::operator-(const IntPoly &o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly &o) const {
  if (is_zero() || o.is_zero())
    return IntPoly();
  std::vector<std::string> vars;
  IntPoly a, b;
  align(*this, o, vars, a, b);
  IntPoly out;
  out.vars_ = vars;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      std::vector<uint32_t> e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i)
        e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out.pruned();
}

IntPoly IntPoly::pow(const IntPoly &base, unsigned long exp) {
  IntPoly out(1), cur = base;
  while (exp) {
    if (exp & 1ul)
      out *= cur;
    cur *= cur;
    exp >>= 1;
  }
  return out;
}

Rational IntPoly::eval(const std::map<std::string, Rational> &assign) const {
  std::vector<Rational> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assign.find(vars_[i]);
    if (it == assign.end())
      throw std::invalid_argument("IntPoly: missing variable " + vars_[i]);
    vals[i] = it->second;
  }
  Rational acc(0);
  for (const auto &[e, c] : terms_) {
    Rational t{c};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i])
        t *= Rational::pow(vals[i], static_cast<long>(e[i]));
    acc += t;
  }
  return acc;
}

BigInt IntPoly::leading_coeff() const {
  if (terms_.empty())
    return BigInt(0);
  return terms_.rbegin()->second;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto &[e, c] : terms_) {
    g = BigInt::gcd(g, c);
    if (g.is_one())
      break;
  }
  return g;
}

IntPoly IntPoly::pruned() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto &[e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i])
        used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
    return *this;
  IntPoly out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i])
      out.vars_.push_back(vars_[i]);
  for (const auto &[e, c] : terms_) {
    std::vector<uint32_t> ne;
    ne.reserve(out.vars_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i])
        ne.push_back(e[i]);
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly &divisor) const {
  if (divisor.is_zero())
    return std::nullopt;
  if (is_zero())
    return IntPoly();
  if (divisor.is_constant()) {
    BigInt d = divisor.constant_value();
    IntPoly out;
    out.vars_ = vars_;
    for (const auto &[e, c] : terms_) {
      BigInt q, r;
      BigInt::divmod(c, d, q, r);
      if (!r.is_zero())
        return std::nullopt;
      out.terms_.emplace(e, q);
    }
    return out;
  }
  std::vector<std::string> vars;
  IntPoly rem, div;
  align(*this, divisor, vars, rem, div);
  IntPoly quot;
  quot.vars_ = vars;
  const auto lead = div.terms_.rbegin();
  const std::vector<uint32_t> &lexp = lead->first;
  const BigInt &lc = lead->second;
  while (!rem.terms_.empty()) {
    auto rl = rem.terms_.rbegin();
    std::vector<uint32_t> qe(vars.size());
    bool divisible = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (rl->first[i] < lexp[i]) {
        divisible = false;
        break;
      }
      qe[i] = rl->first[i] - lexp[i];
    }
    if (!divisible)
      return std::nullopt;
    BigInt qc, rr;
    BigInt::divmod(rl->second, lc, qc, rr);
    if (!rr.is_zero())
      return std::nullopt;
    quot.add_term(qe, qc);
    IntPoly mono;
    mono.vars_ = vars;
    mono.terms_.emplace(qe, qc);
    rem = rem - mono * div;
    if (!(rem.vars_ == vars))
      rem = rem.remapped(vars);
  }
  return quot.pruned();
}

RatFunc IntPoly::partial_eval(
    const std::map<std::string, Rational> &assign) const {
  RatFunc acc(0);
  for (const auto &[e, c] : terms_) {
    RatFunc term{Rational(c)};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i])
        continue;
      auto it = assign.find(vars_[i]);
      if (it != assign.end())
        term = term * RatFunc(Rational::pow(it->second,
                                            static_cast<long>(e[i])));
      else
        term = term * RatFunc(IntPoly::pow(IntPoly::variable(vars_[i]), e[i]));
    }
    acc += term;
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    BigInt a = c;
    if (first) {
      if (a.is_neg()) {
        os << "-";
        a = -a;
      }
      first = false;
    } else if (a.is_neg()) {
      os << " - ";
      a = -a;
    } else {
      os << " + ";
    }
    bool any_var =
        std::any_of(e.begin(), e.end(), [](uint32_t x) { return x != 0; });
    if (!a.is_one() || !any_var)
      os << a.to_string();
    bool printed = !a.is_one() || !any_var;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i])
        continue;
      if (printed)
        os << "*";
      os << vars_[i];
      if (e[i] > 1)
        os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

RatFunc::RatFunc(const Rational &q) : num_(q.num()), den_(q.den()) {}

RatFunc::RatFunc(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  // sign: positive leading coefficient in the denominator
  if (den_.leading_coeff().is_neg()) {
    num_ = -num_;
    den_ = -den_;
  }
  // integer content
  BigInt g = BigInt::gcd(num_.content(), den_.content());
  if (!g.is_zero() && !g.is_one()) {
    num_ = *num_.divide_exact(IntPoly(g));
    den_ = *den_.divide_exact(IntPoly(g));
  }
  // common monomial factor: divide by x^min(exponents) variable by variable
  auto min_exps = [](const IntPoly &p) {
    std::map<std::string, uint32_t> m;
    std::vector<uint32_t> mins(p.vars().size(), UINT32_MAX);
    for (const auto &[e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        mins[i] = std::min(mins[i], e[i]);
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      if (mins[i] != UINT32_MAX && mins[i] > 0)
        m[p.vars()[i]] = mins[i];
    return m;
  };
  std::map<std::string, uint32_t> mn = min_exps(num_), md = min_exps(den_);
  IntPoly common(1);
  for (const auto &[v, en] : mn) {
    auto it = md.find(v);
    if (it == md.end())
      continue;
    uint32_t k = std::min(en, it->second);
    if (k)
      common *= IntPoly::pow(IntPoly::variable(v), k);
  }
  if (!common.is_one()) {
    num_ = *num_.divide_exact(common);
    den_ = *den_.divide_exact(common);
  }
  // cancel equal or negated polynomials outright
  if (num_ == den_) {
    num_ = IntPoly(1);
    den_ = IntPoly(1);
  } else if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = IntPoly(1);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc &o) const {
  if (den_ == o.den_)
    return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc &o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc &o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc &o) const {
  if (o.is_zero())
    throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::equals(const RatFunc &o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Rational RatFunc::eval(const std::map<std::string, Rational> &assign) const {
  Rational d = den_.eval(assign);
  if (d.is_zero())
    throw std::domain_error("RatFunc: denominator vanishes at the point");
  return num_.eval(assign) / d;
}

bool RatFunc::den_vanishes_at(
    const std::map<std::string, Rational> &assign) const {
  return den_.eval(assign).is_zero();
}

bool RatFunc::regular_over(const std::vector<IntPoly> &units, unsigned max_exp,
                           IntPoly *reduced_num,
                           std::vector<unsigned> *exps) const {
  IntPoly d = den_;
  IntPoly n = num_;
  std::vector<unsigned> used(units.size(), 0);
  bool progress = true;
  while (progress && !d.is_constant()) {
    progress = false;
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (units[i].is_constant())
        continue;
      while (used[i] < max_exp) {
        auto q = d.divide_exact(units[i]);
        if (!q)
          break;
        d = *q;
        ++used[i];
        progress = true;
      }
    }
  }
  if (!d.is_constant()) {
    // remaining factors must cancel against the numerator exactly
    auto q = n.divide_exact(d);
    if (!q)
      return false;
    n = *q;
    d = IntPoly(1);
  }
  if (reduced_num)
    *reduced_num = n;
  if (exps)
    *exps = used;
  return true;
}

std::string RatFunc::to_string() const {
  if (den_.is_one())
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  std::string s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n'))
      ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  // returns one of: '+', '-', '*', '^', '(', ')', '/', 'n' (number),
  // 'v' (variable), 0 at end
  char peek_kind() {
    skip_ws();
    if (i >= s.size())
      return 0;
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == 0xE2 && i + 2 < s.size()) {
      // UTF-8 minus sign U+2212 (e2 88 92) and dot operator U+22C5 (e2 8b 85)
      unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
      unsigned char c2 = static_cast<unsigned char>(s[i + 2]);
      if (c1 == 0x88 && c2 == 0x92)
        return '-';
      if (c1 == 0x8B && c2 == 0x85)
        return '*';
    }
    if (c == 0xC2 && i + 1 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0xB7)
      return '*'; // middle dot U+00B7
    if (std::isdigit(c))
      return 'n';
    if (std::isalpha(c) || c == '_')
      return 'v';
    return static_cast<char>(c);
  }
  void consume_op() {
    skip_ws();
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == 0xE2)
      i += 3;
    else if (c == 0xC2)
      i += 2;
    else
      ++i;
  }
  std::string read_number() {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
      ++j;
    std::string out = s.substr(i, j - i);
    i = j;
    return out;
  }
  std::string read_name() {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    std::string out = s.substr(i, j - i);
    i = j;
    return out;
  }
};

IntPoly parse_expr(Lexer &lx);

IntPoly parse_atom(Lexer &lx) {
  char k = lx.peek_kind();
  if (k == '(') {
    lx.consume_op();
    IntPoly p = parse_expr(lx);
    if (lx.peek_kind() != ')')
      throw std::invalid_argument("poly parse: expected ')'");
    lx.consume_op();
    return p;
  }
  if (k == 'n')
    return IntPoly(BigInt(lx.read_number()));
  if (k == 'v')
    return IntPoly::variable(lx.read_name());
  throw std::invalid_argument("poly parse: unexpected token");
}

IntPoly parse_power(Lexer &lx) {
  IntPoly base = parse_atom(lx);
  if (lx.peek_kind() == '^') {
    lx.consume_op();
    if (lx.peek_kind() != 'n')
      throw std::invalid_argument("poly parse: exponent must be a number");
    BigInt e(lx.read_number());
    return IntPoly::pow(base, static_cast<unsigned long>(e.to_ll()));
  }
  return base;
}

IntPoly parse_product(Lexer &lx) {
  IntPoly acc = parse_power(lx);
  while (lx.peek_kind() == '*') {
    lx.consume_op();
    acc *= parse_power(lx);
  }
  return acc;
}

IntPoly parse_expr(Lexer &lx) {
  bool neg = false;
  char k = lx.peek_kind();
  if (k == '+' || k == '-') {
    neg = k == '-';
    lx.consume_op();
  }
  IntPoly acc = parse_product(lx);
  if (neg)
    acc = -acc;
  while (true) {
    char op = lx.peek_kind();
    if (op != '+' && op != '-')
      break;
    lx.consume_op();
    IntPoly t = parse_product(lx);
    acc = op == '+' ? acc + t : acc - t;
  }
  return acc;
}

} // namespace

IntPoly parse_poly(const std::string &text) {
  Lexer lx{text};
  IntPoly p = parse_expr(lx);
  if (!lx.eof())
    throw std::invalid_argument("poly parse: trailing input");
  return p;
}

RatFunc parse_ratfunc(const std::string &text) {
  // split at a top-level '/'
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(')
      ++depth;
    else if (text[i] == ')')
      --depth;
    else if (text[i] == '/' && depth == 0)
      return RatFunc(parse_poly(text.substr(0, i)),
                     parse_poly(text.substr(i + 1)));
  }
  return RatFunc(parse_poly(text));
}

} // namespace grasscut
