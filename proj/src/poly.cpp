#include "poly.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace artin {

namespace {

// Shared term printer: coefficient plus a list of (var, exp) factors.
void print_term(std::string& out, bool first, const Rational& c,
                const std::vector<std::pair<char, int>>& factors) {
  Rational a = c < 0 ? Rational(-c) : c;
  if (!first)
    out += c < 0 ? "-" : "+";
  else if (c < 0)
    out += "-";
  std::string fs;
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!fs.empty()) fs += "*";
    fs += v;
    if (e != 1) fs += "^" + std::to_string(e);
  }
  if (fs.empty()) {
    out += to_string(a);
  } else {
    if (a != 1) out += to_string(a) + "*";
    out += fs;
  }
}

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void die(const std::string& what) {
    fail("polynomial parse error at offset " + std::to_string(i) + ": " + what +
         " in '" + s + "'");
  }

  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) die("expected integer");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::strtol(s.substr(start, i - start).c_str(), nullptr, 10);
  }

  Rational number() {
    long num = integer();
    if (accept('/')) {
      long den = integer();
      return make_rational(num, den);
    }
    return Rational(num);
  }

  // term := number ['*' factors] | factors ; exponents may be negative.
  // Allowed variable letters are given by `vars`.
  void term(const std::string& vars, Rational& coeff, std::map<char, int>& exps) {
    coeff = 1;
    exps.clear();
    bool have_any = false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = number();
      have_any = true;
      if (!accept('*')) return;
    }
    while (true) {
      c = peek();
      if (vars.find(c) == std::string::npos) {
        if (!have_any) die("expected a term");
        die(std::string("unexpected character '") + c + "'");
      }
      ++i;
      int e = 1;
      if (accept('^')) e = static_cast<int>(integer());
      exps[c] += e;
      have_any = true;
      if (!accept('*')) break;
    }
  }
};

}  // namespace

// ---------------------------------------------------------------- univariate

UnivariatePoly UnivariatePoly::monomial(char var, const Rational& c, int exp) {
  UnivariatePoly p(var);
  if (c != 0) p.coeffs_[exp] = c;
  return p;
}

bool UnivariatePoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

bool UnivariatePoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Rational UnivariatePoly::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int UnivariatePoly::min_exp() const {
  if (coeffs_.empty()) fail("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int UnivariatePoly::max_exp() const {
  if (coeffs_.empty()) fail("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void UnivariatePoly::add_term(int exp, const Rational& c) {
  if (c == 0) return;
  Rational& slot = coeffs_[exp];
  slot += c;
  if (slot == 0) coeffs_.erase(exp);
}

namespace {
char merged_var(char a, bool a_const, char b, bool b_const) {
  if (a_const) return b;
  if (b_const) return a;
  if (a != b) fail(std::string("variable mismatch: ") + a + " vs " + b);
  return a;
}
}  // namespace

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r(var_);
  for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  UnivariatePoly r(merged_var(var_, is_constant(), o.var_, o.is_constant()));
  r.coeffs_ = coeffs_;
  for (auto& [e, c] : o.coeffs_) {
    Rational& slot = r.coeffs_[e];
    slot += c;
    if (slot == 0) r.coeffs_.erase(e);
  }
  return r;
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const { return *this + (-o); }

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
  UnivariatePoly r(merged_var(var_, is_constant(), o.var_, o.is_constant()));
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

UnivariatePoly UnivariatePoly::scaled(const Rational& c) const {
  UnivariatePoly r(var_);
  if (c == 0) return r;
  for (auto& [e, x] : coeffs_) r.coeffs_[e] = x * c;
  return r;
}

UnivariatePoly UnivariatePoly::divide_exact(const UnivariatePoly& d) const {
  if (d.is_zero()) fail("division by zero polynomial");
  if (is_zero()) return UnivariatePoly(var_);
  UnivariatePoly f = *this, q(merged_var(var_, is_constant(), d.var_, d.is_constant()));
  // For an exact Laurent quotient, min_exp(f/d) = min_exp(f) - min_exp(d).
  int elo = min_exp() - d.min_exp();
  int dtop = d.max_exp();
  Rational dlead = d.coeffs_.rbegin()->second;
  while (!f.is_zero()) {
    int e = f.max_exp() - dtop;
    if (e < elo) fail("inexact polynomial division");
    Rational c = f.coeffs_.rbegin()->second / dlead;
    q.add_term(e, c);
    for (auto& [de, dc] : d.coeffs_) f.add_term(de + e, -c * dc);
  }
  return q;
}

Rational UnivariatePoly::eval(const Rational& x) const {
  Rational acc(0), xp(1);
  if (!is_zero() && min_exp() < 0 && x == 0) fail("evaluating Laurent polynomial at zero");
  for (auto& [e, c] : coeffs_) {
    Rational p(1);
    if (e >= 0) {
      mpz_class num;
      mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
      p = Rational(num, den);
    } else {
      mpz_class num;
      mpz_pow_ui(num.get_mpz_t(), x.get_den().get_mpz_t(), -e);
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), x.get_num().get_mpz_t(), -e);
      p = Rational(num, den);
    }
    p.canonicalize();
    acc += c * p;
  }
  (void)xp;
  return acc;
}

UnivariatePoly UnivariatePoly::pow(unsigned k) const {
  UnivariatePoly r(var_, Rational(1));
  UnivariatePoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

UnivariatePoly UnivariatePoly::unit_normalized() const {
  if (is_zero()) return *this;
  int e0 = min_exp();
  Rational c0 = coeffs_.begin()->second;
  UnivariatePoly r(var_);
  for (auto& [e, c] : coeffs_) r.coeffs_[e - e0] = c / c0;
  return r;
}

std::string UnivariatePoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : coeffs_) {
    print_term(out, first, c, {{var_, e}});
    first = false;
  }
  return out;
}

UnivariatePoly UnivariatePoly::parse(const std::string& text, char var) {
  Parser p(text);
  UnivariatePoly out(var);
  bool neg = false;
  if (p.accept('-'))
    neg = true;
  else
    p.accept('+');
  while (true) {
    Rational c;
    std::map<char, int> exps;
    p.term(std::string(1, var), c, exps);
    if (neg) c = -c;
    out.add_term(exps.count(var) ? exps[var] : 0, c);
    if (p.eof()) break;
    if (p.accept('+'))
      neg = false;
    else if (p.accept('-'))
      neg = true;
    else
      p.die("expected '+' or '-'");
  }
  return out;
}

// ----------------------------------------------------------------- bivariate

BivariatePoly BivariatePoly::monomial(const Rational& c, int qe, int te) {
  BivariatePoly p;
  if (c != 0) p.coeffs_[{qe, te}] = c;
  return p;
}

BivariatePoly BivariatePoly::from_univariate(const UnivariatePoly& p) {
  BivariatePoly r;
  bool is_t = p.var() == 't';
  if (!p.is_constant() && p.var() != 'q' && p.var() != 't')
    fail("cannot embed variable into Q[q,t]");
  for (auto& [e, c] : p.terms()) r.coeffs_[is_t ? Key{0, e} : Key{e, 0}] = c;
  return r;
}

bool BivariatePoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0} &&
         coeffs_.begin()->second == 1;
}

bool BivariatePoly::is_t_free() const {
  for (auto& [k, c] : coeffs_)
    if (k.second != 0) return false;
  return true;
}

bool BivariatePoly::is_q_free() const {
  for (auto& [k, c] : coeffs_)
    if (k.first != 0) return false;
  return true;
}

Rational BivariatePoly::coeff(int qe, int te) const {
  auto it = coeffs_.find({qe, te});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int qe, int te, const Rational& c) {
  if (c == 0) return;
  Key k{qe, te};
  Rational& slot = coeffs_[k];
  slot += c;
  if (slot == 0) coeffs_.erase(k);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
  return r;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  for (auto& [k, c] : o.coeffs_) {
    Rational& slot = r.coeffs_[k];
    slot += c;
    if (slot == 0) r.coeffs_.erase(k);
  }
  return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const { return *this + (-o); }

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly r;
  for (auto& [k1, c1] : coeffs_)
    for (auto& [k2, c2] : o.coeffs_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

BivariatePoly BivariatePoly::scaled(const Rational& c) const {
  BivariatePoly r;
  if (c == 0) return r;
  for (auto& [k, x] : coeffs_) r.coeffs_[k] = x * c;
  return r;
}

namespace {
// deglex on (qe, te): total degree first, then q-exponent.
bool deglex_less(const BivariatePoly::Key& a, const BivariatePoly::Key& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}
}  // namespace

BivariatePoly BivariatePoly::divide_exact(const BivariatePoly& d) const {
  if (d.is_zero()) fail("division by zero polynomial");
  BivariatePoly f = *this, q;
  // leading term of the divisor under deglex
  Key dlead_k = d.coeffs_.begin()->first;
  for (auto& [k, c] : d.coeffs_)
    if (deglex_less(dlead_k, k)) dlead_k = k;
  Rational dlead_c = d.coeffs_.at(dlead_k);
  while (!f.is_zero()) {
    Key flead_k = f.coeffs_.begin()->first;
    for (auto& [k, c] : f.coeffs_)
      if (deglex_less(flead_k, k)) flead_k = k;
    Rational c = f.coeffs_.at(flead_k) / dlead_c;
    int qe = flead_k.first - dlead_k.first, te = flead_k.second - dlead_k.second;
    q.add_term(qe, te, c);
    for (auto& [k, dc] : d.coeffs_) f.add_term(k.first + qe, k.second + te, -c * dc);
    // exactness guard: the quotient's support cannot grow forever
    if (q.coeffs_.size() > coeffs_.size() + d.coeffs_.size() + 64 &&
        q.coeffs_.size() > 4096)
      fail("inexact bivariate division");
  }
  BivariatePoly check = q * d;
  if (!(check == *this)) fail("inexact bivariate division");
  return q;
}

UnivariatePoly BivariatePoly::specialize_q(const Rational& q0) const {
  if (q0 == 0) fail("specialization value must be nonzero");
  UnivariatePoly r('t');
  for (auto& [k, c] : coeffs_) {
    UnivariatePoly m = UnivariatePoly::monomial('q', c, k.first);
    r.add_term(k.second, m.eval(q0));
  }
  return r;
}

UnivariatePoly BivariatePoly::specialize_t(const Rational& t0) const {
  if (t0 == 0) fail("specialization value must be nonzero");
  UnivariatePoly r('q');
  for (auto& [k, c] : coeffs_) {
    UnivariatePoly m = UnivariatePoly::monomial('t', c, k.second);
    r.add_term(k.first, m.eval(t0));
  }
  return r;
}

Rational BivariatePoly::eval(const Rational& q0, const Rational& t0) const {
  return specialize_q(q0).eval(t0);
}

UnivariatePoly BivariatePoly::as_univariate(char var) const {
  UnivariatePoly r(var);
  for (auto& [k, c] : coeffs_) {
    if (var == 'q') {
      if (k.second != 0) fail("polynomial is not t-free");
      r.add_term(k.first, c);
    } else {
      if (k.first != 0) fail("polynomial is not q-free");
      r.add_term(k.second, c);
    }
  }
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned k) const {
  BivariatePoly r(Rational(1));
  BivariatePoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

BivariatePoly BivariatePoly::unit_normalized() const {
  if (is_zero()) return *this;
  // lowest term under deglex becomes 1 with exponent (0,0)
  Key low = coeffs_.begin()->first;
  for (auto& [k, c] : coeffs_)
    if (deglex_less(k, low)) low = k;
  Rational c0 = coeffs_.at(low);
  BivariatePoly r;
  for (auto& [k, c] : coeffs_) r.coeffs_[{k.first - low.first, k.second - low.second}] = c / c0;
  return r;
}

std::string BivariatePoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [k, c] : coeffs_) {
    print_term(out, first, c, {{'q', k.first}, {'t', k.second}});
    first = false;
  }
  return out;
}

BivariatePoly BivariatePoly::parse(const std::string& text) {
  Parser p(text);
  BivariatePoly out;
  bool neg = false;
  if (p.accept('-'))
    neg = true;
  else
    p.accept('+');
  while (true) {
    Rational c;
    std::map<char, int> exps;
    p.term("qt", c, exps);
    if (neg) c = -c;
    out.add_term(exps.count('q') ? exps['q'] : 0, exps.count('t') ? exps['t'] : 0, c);
    if (p.eof()) break;
    if (p.accept('+'))
      neg = false;
    else if (p.accept('-'))
      neg = true;
    else
      p.die("expected '+' or '-'");
  }
  return out;
}

}  // namespace artin
