#include "cyclotomic.hpp"

#include <mutex>

namespace artin {

int euler_phi(int m) {
  if (m < 1) fail("euler_phi requires m >= 1");
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::mutex g_cyclo_mutex;

UnivariatePoly q_power_minus_one(int m) {
  UnivariatePoly p('q');
  p.add_term(m, Rational(1));
  p.add_term(0, Rational(-1));
  return p;
}

}  // namespace

const UnivariatePoly& cyclotomic(int m) {
  if (m < 1) fail("cyclotomic index must be >= 1");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  static std::map<int, UnivariatePoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (q^m - 1) / prod_{d|m, d<m} Phi_d, recursively.
  UnivariatePoly num = q_power_minus_one(m);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto dit = cache.find(d);
    if (dit == cache.end()) {
      UnivariatePoly nd = q_power_minus_one(d);
      for (int e = 1; e < d; ++e)
        if (d % e == 0) nd = nd.divide_exact(cache.at(e));
      dit = cache.emplace(d, nd).first;
    }
    num = num.divide_exact(dit->second);
  }
  return cache.emplace(m, num).first->second;
}

// Per-index reduction data: powers zeta^k for k in [phi, 2*phi-2].
namespace {

struct CycloTableData {
  int phi;
  std::vector<std::vector<Rational>> high_powers;  // index k-phi
};

std::mutex g_table_mutex;

const CycloTableData& cyclo_table(int m) {
  const UnivariatePoly phi_poly = cyclotomic(m);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  static std::map<int, CycloTableData> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  CycloTableData data;
  data.phi = euler_phi(m);
  int phi = data.phi;
  // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}), Phi monic.
  std::vector<Rational> base(phi, Rational(0));
  for (auto& [e, c] : phi_poly.terms())
    if (e < phi) base[e] = -c;
  data.high_powers.push_back(base);
  std::vector<Rational> prev = base;
  for (int k = phi + 1; k <= 2 * phi - 2; ++k) {
    // multiply prev by zeta
    std::vector<Rational> cur(phi, Rational(0));
    for (int i = 0; i < phi - 1; ++i) cur[i + 1] = prev[i];
    if (prev[phi - 1] != 0)
      for (int i = 0; i < phi; ++i) cur[i] += prev[phi - 1] * base[i];
    data.high_powers.push_back(cur);
    prev = cur;
  }
  return cache.emplace(m, std::move(data)).first->second;
}

}  // namespace

Cyclo::Cyclo(int m) : m_(m), v_(euler_phi(m), Rational(0)) {
  if (m < 1) fail("Cyclo index must be >= 1");
}

Cyclo::Cyclo(int m, const Rational& c) : Cyclo(m) { v_[0] = c; }

Cyclo Cyclo::zeta_pow(int m, long e) {
  Cyclo r(m);
  long k = ((e % m) + m) % m;  // zeta^m = 1 since Phi_m | q^m - 1
  int phi = static_cast<int>(r.v_.size());
  if (k < phi) {
    r.v_[k] = 1;
    return r;
  }
  // fold down iteratively using the high-power table
  const auto& tab = cyclo_table(m);
  std::vector<Rational> cur(phi, Rational(0));
  cur[0] = 1;
  for (long s = 0; s < k; ++s) {
    std::vector<Rational> next(phi, Rational(0));
    for (int i = 0; i < phi - 1; ++i) next[i + 1] = cur[i];
    if (cur[phi - 1] != 0)
      for (int i = 0; i < phi; ++i) next[i] += cur[phi - 1] * tab.high_powers[0][i];
    cur = next;
  }
  r.v_ = cur;
  return r;
}

Cyclo Cyclo::from_qpoly(int m, const UnivariatePoly& p) {
  Cyclo r(m);
  for (auto& [e, c] : p.terms()) {
    Cyclo zp = zeta_pow(m, e);
    for (size_t i = 0; i < r.v_.size(); ++i) r.v_[i] += c * zp.v_[i];
  }
  return r;
}

bool Cyclo::is_zero() const {
  for (auto& c : v_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < v_.size(); ++i)
    if (v_[i] != 0) return false;
  return true;
}

Rational Cyclo::rational_value() const {
  if (!is_rational()) fail("cyclotomic element is not rational");
  return v_[0];
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (m_ != o.m_) {
    if (is_zero() && o.is_zero()) return true;
    if (is_rational() && o.is_rational()) return v_[0] == o.v_[0];
    return false;
  }
  return v_ == o.v_;
}

Cyclo Cyclo::operator-() const {
  Cyclo r(m_);
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = -v_[i];
  return r;
}

namespace {
int merged_index(const Cyclo& a, const Cyclo& b) {
  if (a.index() == b.index()) return a.index();
  if (a.is_rational()) return b.index();
  if (b.is_rational()) return a.index();
  fail("cyclotomic index mismatch");
}
}  // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
  int m = merged_index(*this, o);
  Cyclo r(m);
  if (m_ == m)
    r.v_ = v_;
  else
    r.v_[0] = v_[0];
  if (o.m_ == m)
    for (size_t i = 0; i < r.v_.size(); ++i) r.v_[i] += o.v_[i];
  else
    r.v_[0] += o.v_[0];
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  int m = merged_index(*this, o);
  if (m_ != o.m_) {
    // one side is rational: scale
    const Cyclo& big = (m_ == m) ? *this : o;
    const Rational& s = (m_ == m) ? o.v_[0] : v_[0];
    Cyclo r(m);
    for (size_t i = 0; i < big.v_.size(); ++i) r.v_[i] = big.v_[i] * s;
    return r;
  }
  int phi = static_cast<int>(v_.size());
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (v_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.v_[j] == 0) continue;
      conv[i + j] += v_[i] * o.v_[j];
    }
  }
  Cyclo r(m);
  for (int k = 0; k < phi; ++k) r.v_[k] = conv[k];
  if (phi > 1) {
    const auto& tab = cyclo_table(m);
    for (int k = phi; k <= 2 * phi - 2; ++k) {
      if (conv[k] == 0) continue;
      const auto& pw = tab.high_powers[k - phi];
      for (int i = 0; i < phi; ++i) r.v_[i] += conv[k] * pw[i];
    }
  } else if (phi == 1) {
    // phi == 1 (m = 1 or 2): conv has length 1, nothing to fold
  }
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) fail("division by zero in cyclotomic field");
  if (is_rational()) {
    Cyclo r(m_);
    r.v_[0] = 1 / v_[0];
    return r;
  }
  // extended Euclid: a * s + Phi_m * t = 1 in Q[q]
  UnivariatePoly a('q');
  for (size_t i = 0; i < v_.size(); ++i) a.add_term(static_cast<int>(i), v_[i]);
  UnivariatePoly r0 = cyclotomic(m_), r1 = a;
  UnivariatePoly s0('q'), s1('q', Rational(1));
  while (!r1.is_zero()) {
    // divide r0 by r1: ordinary polynomials, min_exp >= 0
    UnivariatePoly quo('q'), rem = r0;
    int dtop = r1.max_exp();
    Rational dlead = r1.terms().rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= dtop) {
      int e = rem.max_exp() - dtop;
      Rational c = rem.terms().rbegin()->second / dlead;
      quo.add_term(e, c);
      for (auto& [de, dc] : r1.terms()) rem.add_term(de + e, -c * dc);
    }
    UnivariatePoly s2 = s0 - quo * s1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd(Phi, a), a unit in Q since Phi_m is irreducible and a != 0 mod Phi
  if (r0.is_zero() || !r0.is_constant()) fail("inverse: gcd with Phi_m not constant");
  UnivariatePoly inv = s0.scaled(1 / r0.coeff(0));
  return from_qpoly(m_, inv);
}

std::string Cyclo::str() const {
  UnivariatePoly p('z');
  for (size_t i = 0; i < v_.size(); ++i) p.add_term(static_cast<int>(i), v_[i]);
  return p.str();
}

// ------------------------------------------------------------------- KTPoly

KTPoly::KTPoly(int m, char var, const Cyclo& c) : m_(m), var_(var) {
  if (!c.is_zero()) coeffs_[0] = c;
}

KTPoly KTPoly::monomial(int m, char var, const Cyclo& c, int exp) {
  KTPoly p(m, var);
  if (!c.is_zero()) p.coeffs_[exp] = c;
  return p;
}

KTPoly KTPoly::from_rational_poly(int m, const UnivariatePoly& p) {
  KTPoly r(m, p.var());
  for (auto& [e, c] : p.terms()) r.coeffs_[e] = Cyclo(m, c);
  return r;
}

bool KTPoly::is_unit() const { return coeffs_.size() == 1; }

Cyclo KTPoly::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Cyclo(m_) : it->second;
}

int KTPoly::min_exp() const {
  if (coeffs_.empty()) fail("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int KTPoly::max_exp() const {
  if (coeffs_.empty()) fail("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void KTPoly::add_term(int exp, const Cyclo& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_.emplace(exp, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool KTPoly::operator==(const KTPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  auto it = coeffs_.begin();
  auto jt = o.coeffs_.begin();
  for (; it != coeffs_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

KTPoly KTPoly::operator-() const {
  KTPoly r(m_, var_);
  for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

KTPoly KTPoly::operator+(const KTPoly& o) const {
  KTPoly r = *this;
  if (r.coeffs_.empty()) {
    r.m_ = o.m_;
    r.var_ = o.var_;
  }
  for (auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

KTPoly KTPoly::operator-(const KTPoly& o) const { return *this + (-o); }

KTPoly KTPoly::operator*(const KTPoly& o) const {
  KTPoly r(m_ == 1 ? o.m_ : m_, var_);
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

KTPoly KTPoly::scaled(const Cyclo& c) const {
  KTPoly r(m_, var_);
  if (c.is_zero()) return r;
  for (auto& [e, x] : coeffs_) r.add_term(e, x * c);
  return r;
}

KTPoly KTPoly::shifted(int k) const {
  KTPoly r(m_, var_);
  for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

KTDivMod KTPoly::divmod(const KTPoly& d) const {
  if (d.is_zero()) fail("divmod by zero polynomial");
  if (!is_zero() && min_exp() < 0) fail("divmod requires ordinary polynomials");
  if (d.min_exp() < 0) fail("divmod requires ordinary polynomials");
  KTDivMod out{KTPoly(m_, var_), *this};
  int dtop = d.max_exp();
  Cyclo dlead_inv = d.coeffs_.rbegin()->second.inverse();
  while (!out.rem.is_zero() && out.rem.max_exp() >= dtop) {
    int e = out.rem.max_exp() - dtop;
    Cyclo c = out.rem.coeffs_.rbegin()->second * dlead_inv;
    out.quot.add_term(e, c);
    for (auto& [de, dc] : d.coeffs_) out.rem.add_term(de + e, -(c * dc));
  }
  return out;
}

bool KTPoly::try_divide_exact(const KTPoly& d, KTPoly& out) const {
  if (is_zero()) {
    out = KTPoly(m_, var_);
    return true;
  }
  // shift both to ordinary polynomials; units shift out
  KTPoly f = shifted(-min_exp());
  KTPoly g = d.shifted(-d.min_exp());
  KTDivMod dm = f.divmod(g);
  if (!dm.rem.is_zero()) return false;
  out = dm.quot.shifted(min_exp() - d.min_exp());
  return true;
}

KTPoly KTPoly::unit_normalized() const {
  if (is_zero()) return *this;
  int e0 = min_exp();
  Cyclo inv = coeffs_.begin()->second.inverse();
  KTPoly r(m_, var_);
  for (auto& [e, c] : coeffs_) r.coeffs_[e - e0] = c * inv;
  return r;
}

std::string KTPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : coeffs_) {
    std::string cs = c.str();
    bool simple = c.is_rational() || c.coords().size() == 0;
    if (!simple) {
      // single z-monomial counts as simple
      int nonzero = 0;
      for (auto& x : c.coords())
        if (x != 0) ++nonzero;
      simple = nonzero <= 1;
    }
    std::string varpart;
    if (e != 0) {
      varpart = std::string(1, var_);
      if (e != 1) varpart += "^" + std::to_string(e);
    }
    if (simple) {
      bool neg = cs.size() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (!first)
        out += neg ? "-" : "+";
      else if (neg)
        out += "-";
      if (varpart.empty())
        out += mag;
      else if (mag == "1")
        out += varpart;
      else
        out += mag + "*" + varpart;
    } else {
      if (!first) out += "+";
      out += "(" + cs + ")";
      if (!varpart.empty()) out += "*" + varpart;
    }
    first = false;
  }
  return out;
}

KTPoly reduce_mod_cyclotomic(const BivariatePoly& p, int m) {
  KTPoly r(m, 't');
  for (auto& [k, c] : p.terms()) {
    Cyclo z = Cyclo::zeta_pow(m, k.first);
    Cyclo zc = z * Cyclo(m, c);
    r.add_term(k.second, zc);
  }
  return r;
}

}  // namespace artin
