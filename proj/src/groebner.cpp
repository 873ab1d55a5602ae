#include "groebner.hpp"

#include <algorithm>
#include <deque>

#include "cyclotomic.hpp"
#include "qanalog.hpp"

namespace artin {
namespace gb {

int total_degree(const Mon& a) {
  int t = 0;
  for (int i = 0; i < kVars; ++i) t += a[i];
  return t;
}

bool divides(const Mon& a, const Mon& b) {
  for (int i = 0; i < kVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mon mon_mul(const Mon& a, const Mon& b) {
  Mon r;
  for (int i = 0; i < kVars; ++i) r[i] = static_cast<uint16_t>(a[i] + b[i]);
  return r;
}

Mon mon_div(const Mon& a, const Mon& b) {
  Mon r;
  for (int i = 0; i < kVars; ++i) {
    if (b[i] > a[i]) fail("monomial division underflow");
    r[i] = static_cast<uint16_t>(a[i] - b[i]);
  }
  return r;
}

Mon mon_lcm(const Mon& a, const Mon& b) {
  Mon r;
  for (int i = 0; i < kVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

namespace {

// degrevlex on the variable subset `vars` (listed most significant first)
bool degrevlex_less(const Mon& a, const Mon& b, const int* vars, int count) {
  int ta = 0, tb = 0;
  for (int i = 0; i < count; ++i) {
    ta += a[vars[i]];
    tb += b[vars[i]];
  }
  if (ta != tb) return ta < tb;
  for (int i = count - 1; i >= 0; --i) {
    int d = static_cast<int>(a[vars[i]]) - static_cast<int>(b[vars[i]]);
    if (d != 0) return d > 0;
  }
  return false;
}

constexpr int kAll[] = {Var::Q, Var::T, Var::Z, Var::W};
constexpr int kNoW[] = {Var::Q, Var::T, Var::Z};
constexpr int kQT[] = {Var::Q, Var::T};

}  // namespace

bool MonCmp::operator()(const Mon& a, const Mon& b) const {
  switch (order) {
    case MonOrder::Degrevlex:
      return degrevlex_less(a, b, kAll, 4);
    case MonOrder::ElimW:
      if (a[Var::W] != b[Var::W]) return a[Var::W] < b[Var::W];
      return degrevlex_less(a, b, kNoW, 3);
    case MonOrder::ElimZ:
      if (a[Var::Z] != b[Var::Z]) return a[Var::Z] < b[Var::Z];
      return degrevlex_less(a, b, kQT, 2);
  }
  return false;
}

MPoly MPoly::constant(const Rational& c, MonOrder order) {
  MPoly p(order);
  if (c != 0) p.terms_.emplace(Mon{}, c);
  return p;
}

MPoly MPoly::monomial(const Mon& m, const Rational& c, MonOrder order) {
  MPoly p(order);
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

MPoly MPoly::from_bivariate(const BivariatePoly& p, MonOrder order) {
  // clear Laurent exponents with a unit monomial q^a t^b
  int qshift = 0, tshift = 0;
  for (auto& [k, c] : p.terms()) {
    (void)c;
    qshift = std::min(qshift, k.first);
    tshift = std::min(tshift, k.second);
  }
  MPoly out(order);
  for (auto& [k, c] : p.terms()) {
    Mon m{};
    m[Var::Q] = static_cast<uint16_t>(k.first - qshift);
    m[Var::T] = static_cast<uint16_t>(k.second - tshift);
    out.terms_.emplace(m, c);
  }
  return out;
}

BivariatePoly MPoly::to_bivariate() const {
  BivariatePoly out;
  for (auto& [m, c] : terms_) {
    if (m[Var::Z] != 0 || m[Var::W] != 0) fail("to_bivariate: polynomial involves z or w");
    out.add_term(m[Var::Q], m[Var::T], c);
  }
  return out;
}

MPoly MPoly::with_order(MonOrder order) const {
  MPoly out(order);
  for (auto& [m, c] : terms_) out.terms_.emplace(m, c);
  return out;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

const Mon& MPoly::leading_monomial() const {
  if (terms_.empty()) fail("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MPoly::leading_coeff() const {
  if (terms_.empty()) fail("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

void MPoly::add_term(const Mon& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(order());
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(mon_mul(m1, m2), c1 * c2);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

MPoly MPoly::mul_term(const Mon& m, const Rational& c) const {
  MPoly r(order());
  if (c == 0) return r;
  for (auto& [mm, cc] : terms_) r.terms_.emplace(mon_mul(mm, m), cc * c);
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return mul_term(Mon{}, 1 / leading_coeff());
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  static const char* names[kVars] = {"q", "t", "z", "w"};
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!first)
      out += (c < 0) ? "-" : "+";
    else if (c < 0)
      out += "-";
    std::string fs;
    for (int v = 0; v < kVars; ++v) {
      if (it->first[v] == 0) continue;
      if (!fs.empty()) fs += "*";
      fs += names[v];
      if (it->first[v] != 1) fs += "^" + std::to_string(it->first[v]);
    }
    if (fs.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += fs;
    else
      out += to_string(mag) + "*" + fs;
    first = false;
  }
  return out;
}

MPoly normal_form(MPoly f, const std::vector<MPoly>& basis) {
  MPoly r(f.order());
  while (!f.is_zero()) {
    const Mon& lm = f.leading_monomial();
    bool reduced = false;
    for (const MPoly& g : basis) {
      if (g.is_zero()) continue;
      if (!divides(g.leading_monomial(), lm)) continue;
      Mon m = mon_div(lm, g.leading_monomial());
      Rational c = f.leading_coeff() / g.leading_coeff();
      f = f - g.mul_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, f.leading_coeff());
      f.add_term(lm, -f.leading_coeff());
    }
  }
  return r;
}

bool reduces_to_zero(const MPoly& f_in, const std::vector<MPoly>& basis) {
  MPoly f = f_in;
  while (!f.is_zero()) {
    const Mon& lm = f.leading_monomial();
    bool reduced = false;
    for (const MPoly& g : basis) {
      if (g.is_zero()) continue;
      if (!divides(g.leading_monomial(), lm)) continue;
      Mon m = mon_div(lm, g.leading_monomial());
      Rational c = f.leading_coeff() / g.leading_coeff();
      f = f - g.mul_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) return false;
  }
  return true;
}

namespace {

MPoly spoly(const MPoly& f, const MPoly& g) {
  Mon l = mon_lcm(f.leading_monomial(), g.leading_monomial());
  MPoly a = f.mul_term(mon_div(l, f.leading_monomial()), 1 / f.leading_coeff());
  MPoly b = g.mul_term(mon_div(l, g.leading_monomial()), 1 / g.leading_coeff());
  return a - b;
}

bool coprime(const Mon& a, const Mon& b) {
  for (int i = 0; i < kVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

std::vector<MPoly> buchberger(std::vector<MPoly> gens) {
  std::vector<MPoly> basis;
  for (MPoly& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());

  struct Pair {
    size_t i, j;
    int weight;
  };
  auto pair_weight = [&](size_t i, size_t j) {
    return total_degree(mon_lcm(basis[i].leading_monomial(), basis[j].leading_monomial()));
  };
  std::deque<Pair> pairs;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, pair_weight(i, j)});
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree first
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (it->weight < best->weight) best = it;
    Pair p = *best;
    pairs.erase(best);
    const Mon& lmi = basis[p.i].leading_monomial();
    const Mon& lmj = basis[p.j].leading_monomial();
    if (coprime(lmi, lmj)) continue;  // Buchberger's first criterion
    // chain criterion: some k whose LM divides the lcm, with both pairs done
    Mon l = mon_lcm(lmi, lmj);
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis[k].leading_monomial(), l)) continue;
      bool pending = false;
      for (const Pair& q : pairs)
        if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k)) ||
            (q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) {
          pending = true;
          break;
        }
      if (!pending) skip = true;
    }
    if (skip) continue;
    MPoly r = normal_form(spoly(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs_for(basis.size() - 1);
  }

  // minimalize: drop generators whose LM is divisible by another's
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!divides(basis[j].leading_monomial(), basis[i].leading_monomial())) continue;
      // on equal leading monomials keep the earlier one
      if (basis[j].leading_monomial() == basis[i].leading_monomial())
        redundant = j < i;
      else
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MPoly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MPoly nf = normal_form(minimal[i], others);
      if (!(nf == minimal[i])) {
        changed = true;
        if (nf.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = nf.monic();
        }
      }
    }
  }
  MonCmp cmp{minimal.empty() ? MonOrder::Degrevlex : minimal[0].order()};
  std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a, const MPoly& b) {
    return cmp(a.leading_monomial(), b.leading_monomial());
  });
  return minimal;
}

bool groebner_selfcheck(const std::vector<MPoly>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!reduces_to_zero(spoly(basis[i], basis[j]), basis)) return false;
  return true;
}

}  // namespace gb

// ---------------------------------------------------------------- Laurent

namespace {

gb::MPoly saturation_relation(gb::MonOrder order) {
  gb::Mon zqt{};
  zqt[gb::Var::Q] = 1;
  zqt[gb::Var::T] = 1;
  zqt[gb::Var::Z] = 1;
  gb::MPoly p = gb::MPoly::monomial(zqt, Rational(1), order);
  p.add_term(gb::Mon{}, Rational(-1));
  return p;
}

}  // namespace

std::vector<gb::MPoly> saturated_basis(const LaurentIdeal& ideal) {
  std::vector<gb::MPoly> gens;
  for (const BivariatePoly& g : ideal.gens)
    if (!g.is_zero()) gens.push_back(gb::MPoly::from_bivariate(g, gb::MonOrder::Degrevlex));
  gens.push_back(saturation_relation(gb::MonOrder::Degrevlex));
  return gb::buchberger(std::move(gens));
}

bool ideal_member(const BivariatePoly& f, const std::vector<gb::MPoly>& sat_basis) {
  return gb::reduces_to_zero(gb::MPoly::from_bivariate(f, gb::MonOrder::Degrevlex), sat_basis);
}

bool is_unit_ideal(const LaurentIdeal& ideal) {
  std::vector<gb::MPoly> basis = saturated_basis(ideal);
  for (const gb::MPoly& g : basis)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

std::vector<BivariatePoly> contract_to_qt(const LaurentIdeal& ideal) {
  std::vector<gb::MPoly> gens;
  for (const BivariatePoly& g : ideal.gens)
    if (!g.is_zero()) gens.push_back(gb::MPoly::from_bivariate(g, gb::MonOrder::ElimZ));
  gens.push_back(saturation_relation(gb::MonOrder::ElimZ));
  std::vector<gb::MPoly> basis = gb::buchberger(std::move(gens));
  std::vector<BivariatePoly> out;
  for (const gb::MPoly& g : basis) {
    bool z_free = true;
    for (auto& [m, c] : g.terms()) {
      (void)c;
      if (m[gb::Var::Z] != 0) {
        z_free = false;
        break;
      }
    }
    if (z_free) out.push_back(g.to_bivariate());
  }
  return out;
}

std::vector<BivariatePoly> intersect_qt(const std::vector<BivariatePoly>& a,
                                        const std::vector<BivariatePoly>& b) {
  // w*a + (1-w)*b, eliminate w
  std::vector<gb::MPoly> gens;
  gb::Mon w{};
  w[gb::Var::W] = 1;
  gb::MPoly wp = gb::MPoly::monomial(w, Rational(1), gb::MonOrder::ElimW);
  gb::MPoly one_minus_w = gb::MPoly::constant(Rational(1), gb::MonOrder::ElimW) - wp;
  for (const BivariatePoly& f : a)
    gens.push_back(wp * gb::MPoly::from_bivariate(f, gb::MonOrder::ElimW));
  for (const BivariatePoly& f : b)
    gens.push_back(one_minus_w * gb::MPoly::from_bivariate(f, gb::MonOrder::ElimW));
  std::vector<gb::MPoly> basis = gb::buchberger(std::move(gens));
  std::vector<BivariatePoly> out;
  for (const gb::MPoly& g : basis) {
    bool w_free = true;
    for (auto& [m, c] : g.terms()) {
      (void)c;
      if (m[gb::Var::W] != 0) {
        w_free = false;
        break;
      }
    }
    if (w_free) out.push_back(g.to_bivariate());
  }
  return out;
}

std::vector<BivariatePoly> colon_ideal(const LaurentIdeal& ideal, const BivariatePoly& f) {
  if (f.is_zero()) fail("colon by zero");
  std::vector<BivariatePoly> contracted = contract_to_qt(ideal);
  std::vector<BivariatePoly> meet = intersect_qt(contracted, {f});
  std::vector<BivariatePoly> out;
  for (const BivariatePoly& g : meet) out.push_back(g.divide_exact(f));
  return out;
}

LaurentIdeal ideal_product(const LaurentIdeal& a, const LaurentIdeal& b) {
  LaurentIdeal prod;
  for (const BivariatePoly& f : a.gens)
    for (const BivariatePoly& g : b.gens) prod.gens.push_back(f * g);
  // intermediate reduction keeps generator counts bounded
  std::vector<BivariatePoly> reduced = contract_to_qt(prod);
  if (!reduced.empty()) prod.gens = std::move(reduced);
  return prod;
}

// --------------------------------------------------------------- the lemmas

LaurentIdeal ideal_I(int n, int k) {
  if (n < 1) fail("ideal_I: n >= 1");
  LaurentIdeal ideal;
  for (int d = 1; d <= k && d <= n; ++d) {
    if (n % d != 0) continue;
    ideal.gens.push_back(qt_primed_binomial(n, n - d));
  }
  return ideal;
}

LemmaReport verify_lemma_ideali2(int n, int k) {
  LemmaReport report;
  if (k < 2 || n % k != 0) {
    report.detail = "requires k | n and k >= 2";
    return report;
  }
  LaurentIdeal ideal = ideal_I(n, k - 1);
  BivariatePoly f = qt_primed_binomial(n, n - k);
  BivariatePoly phi_k = BivariatePoly::from_univariate(cyclotomic(k));

  std::vector<gb::MPoly> basis = saturated_basis(ideal);
  if (!gb::groebner_selfcheck(basis)) {
    report.detail = "groebner selfcheck failed for I(n,k-1)";
    return report;
  }
  bool well_defined = ideal_member(phi_k * f, basis);
  if (!well_defined) {
    report.detail = "Phi_k * qbin'(n,n-k) is not in I(n,k-1): the map is not well defined";
    return report;
  }
  std::vector<BivariatePoly> colon = colon_ideal(ideal, f);
  std::vector<gb::MPoly> phi_basis = saturated_basis(LaurentIdeal{{phi_k}});
  for (const BivariatePoly& g : colon) {
    if (!ideal_member(g, phi_basis)) {
      report.detail = "colon generator " + g.str() + " escapes (Phi_k): not injective";
      return report;
    }
  }
  report.pass = true;
  report.detail = "well-defined and injective";
  return report;
}

LemmaReport verify_lemma_ideali1(int n) {
  LemmaReport report;
  if (n < 1) {
    report.detail = "requires n >= 1";
    return report;
  }
  LaurentIdeal lhs = ideal_I(n, n);

  // factor list: (Phi_d, q^i t + 1) for d | n, 0 <= i <= d-2, and (q^{n-1} t + 1)
  std::vector<LaurentIdeal> factors;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    for (int i = 0; i + 1 <= d - 1; ++i) {
      LaurentIdeal f;
      f.gens.push_back(BivariatePoly::from_univariate(cyclotomic(d)));
      BivariatePoly qit(Rational(1));
      qit.add_term(i, 1, Rational(1));
      f.gens.push_back(qit);
      factors.push_back(std::move(f));
    }
  }
  {
    LaurentIdeal f;
    BivariatePoly qnt(Rational(1));
    qnt.add_term(n - 1, 1, Rational(1));
    f.gens.push_back(qnt);
    factors.push_back(std::move(f));
  }

  // pairwise coprime: each pair sums to the unit ideal
  for (size_t a = 0; a < factors.size(); ++a)
    for (size_t b = a + 1; b < factors.size(); ++b) {
      LaurentIdeal sum;
      sum.gens = factors[a].gens;
      sum.gens.insert(sum.gens.end(), factors[b].gens.begin(), factors[b].gens.end());
      if (!is_unit_ideal(sum)) {
        report.detail = "factors " + std::to_string(a) + " and " + std::to_string(b) +
                        " are not coprime";
        return report;
      }
    }

  LaurentIdeal product = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) product = ideal_product(product, factors[i]);

  std::vector<gb::MPoly> lhs_basis = saturated_basis(lhs);
  std::vector<gb::MPoly> rhs_basis = saturated_basis(product);
  if (!gb::groebner_selfcheck(lhs_basis) || !gb::groebner_selfcheck(rhs_basis)) {
    report.detail = "groebner selfcheck failed";
    return report;
  }
  for (const BivariatePoly& g : lhs.gens)
    if (!ideal_member(g, rhs_basis)) {
      report.detail = "I(n) generator " + g.str() + " is not in the product";
      return report;
    }
  for (const BivariatePoly& g : product.gens)
    if (!ideal_member(g, lhs_basis)) {
      report.detail = "product generator escapes I(n)";
      return report;
    }
  report.pass = true;
  report.detail = "product decomposition and pairwise coprimality hold";
  return report;
}

}  // namespace artin
