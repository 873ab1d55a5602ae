#include "shapiro.hpp"

namespace artin {

namespace {

template <class P>
std::vector<std::vector<P>> identity_matrix(int size, const P& one) {
  std::vector<std::vector<P>> m(size, std::vector<P>(size));
  for (int i = 0; i < size; ++i) m[i][i] = one;
  return m;
}

template <class P>
std::vector<std::vector<P>> mul(const std::vector<std::vector<P>>& a,
                                const std::vector<std::vector<P>>& b) {
  size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  std::vector<std::vector<P>> r(rows, std::vector<P>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

template <class P>
bool equal(const std::vector<std::vector<P>>& a, const std::vector<std::vector<P>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

template <class M>
BraidCheckReport check_relations(const std::vector<M>& mats) {
  BraidCheckReport report;
  int n = static_cast<int>(mats.size());
  for (int i = 0; i + 1 < n; ++i) {
    auto lhs = mul(mul(mats[i], mats[i + 1]), mats[i]);
    auto rhs = mul(mul(mats[i + 1], mats[i]), mats[i + 1]);
    if (!equal(lhs, rhs)) {
      report.ok = false;
      report.failed = "braid relation at (" + std::to_string(i + 1) + "," +
                      std::to_string(i + 2) + ")";
      return report;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (!equal(mul(mats[i], mats[j]), mul(mats[j], mats[i]))) {
        report.ok = false;
        report.failed = "commutation at (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")";
        return report;
      }
    }
  return report;
}

}  // namespace

std::vector<UMat> tym_representation(int n) {
  if (n < 1) fail("tym_representation: n >= 1");
  UnivariatePoly one('u', Rational(1));
  UnivariatePoly u = UnivariatePoly::monomial('u', Rational(1), 1);
  std::vector<UMat> mats;
  for (int i = 1; i <= n; ++i) {
    UMat m = identity_matrix(n + 1, one);
    m[i - 1][i - 1] = UnivariatePoly('u');
    m[i][i] = UnivariatePoly('u');
    m[i - 1][i] = one;
    m[i][i - 1] = u;
    mats.push_back(std::move(m));
  }
  return mats;
}

std::vector<UMat> tym_representation_inverses(int n) {
  if (n < 1) fail("tym_representation_inverses: n >= 1");
  UnivariatePoly one('u', Rational(1));
  UnivariatePoly u_inv = UnivariatePoly::monomial('u', Rational(1), -1);
  std::vector<UMat> mats;
  for (int i = 1; i <= n; ++i) {
    UMat m = identity_matrix(n + 1, one);
    m[i - 1][i - 1] = UnivariatePoly('u');
    m[i][i] = UnivariatePoly('u');
    m[i - 1][i] = u_inv;
    m[i][i - 1] = one;
    mats.push_back(std::move(m));
  }
  return mats;
}

std::vector<BMat> induced_representation(int n) {
  if (n < 1) fail("induced_representation: n >= 1");
  BivariatePoly minus_q = BivariatePoly::monomial(Rational(-1), 1, 0);
  BivariatePoly qinv_t = BivariatePoly::monomial(Rational(1), -1, 1);
  BivariatePoly one(Rational(1));
  BivariatePoly minus_t = BivariatePoly::monomial(Rational(-1), 0, 1);
  std::vector<BMat> mats;
  for (int i = 1; i <= n; ++i) {
    BMat m(n + 1, std::vector<BivariatePoly>(n + 1));
    for (int d = 0; d < n + 1; ++d) m[d][d] = minus_q;
    m[i - 1][i - 1] = BivariatePoly();
    m[i][i] = BivariatePoly();
    if (i < n) {
      m[i - 1][i] = minus_q;
      m[i][i - 1] = qinv_t;
    } else {
      m[i - 1][i] = one;
      m[i][i - 1] = minus_t;
    }
    mats.push_back(std::move(m));
  }
  return mats;
}

BraidCheckReport check_braid_relations(const std::vector<UMat>& mats) {
  return check_relations(mats);
}

BraidCheckReport check_braid_relations(const std::vector<BMat>& mats) {
  return check_relations(mats);
}

BMat substitute_u(const UMat& mat) {
  // u -> -q^{-2} t
  BMat out(mat.size(), std::vector<BivariatePoly>(mat.size()));
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat[i].size(); ++j) {
      BivariatePoly acc;
      for (auto& [e, c] : mat[i][j].terms()) {
        BivariatePoly term = BivariatePoly::monomial(c, 0, 0);
        BivariatePoly image = BivariatePoly::monomial(Rational(-1), -2, 1);
        if (e >= 0) {
          term = term * image.pow(static_cast<unsigned>(e));
        } else {
          BivariatePoly inv = BivariatePoly::monomial(Rational(-1), 2, -1);
          term = term * inv.pow(static_cast<unsigned>(-e));
        }
        acc += term;
      }
      out[i][j] = acc;
    }
  return out;
}

bool check_conjugation_equivalence(int n, std::string* detail) {
  std::vector<BMat> induced = induced_representation(n);
  std::vector<UMat> tym = tym_representation(n);
  BivariatePoly minus_q = BivariatePoly::monomial(Rational(-1), 1, 0);
  // U = Diag(1,...,1, -q^{-1})
  BMat u(n + 1, std::vector<BivariatePoly>(n + 1));
  BMat u_inv(n + 1, std::vector<BivariatePoly>(n + 1));
  for (int d = 0; d < n; ++d) u[d][d] = u_inv[d][d] = BivariatePoly(Rational(1));
  u[n][n] = BivariatePoly::monomial(Rational(-1), -1, 0);
  u_inv[n][n] = BivariatePoly::monomial(Rational(-1), 1, 0);
  for (int i = 0; i < n; ++i) {
    BMat lhs = mul(mul(u, induced[i]), u_inv);
    BMat sub = substitute_u(tym[i]);
    for (auto& row : sub)
      for (auto& e : row) e = e * minus_q;
    if (!equal(lhs, sub)) {
      if (detail) *detail = "conjugation identity failed at sigma_" + std::to_string(i + 1);
      return false;
    }
  }
  return true;
}

bool tym_pure_braid_abelian(int n, std::string* detail) {
  std::vector<UMat> s = tym_representation(n);
  std::vector<UMat> s_inv = tym_representation_inverses(n);
  // A_{ij} = (s_{j-1}...s_{i+1}) s_i^2 (s_{j-1}...s_{i+1})^{-1}, 1 <= i < j <= n+1
  std::vector<UMat> gens;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      UMat conj = identity_matrix(n + 1, UnivariatePoly('u', Rational(1)));
      for (int k = j - 1; k >= i + 1; --k) conj = mul(conj, s[k - 1]);
      UMat conj_inv = identity_matrix(n + 1, UnivariatePoly('u', Rational(1)));
      for (int k = i + 1; k <= j - 1; ++k) conj_inv = mul(conj_inv, s_inv[k - 1]);
      UMat a = mul(mul(conj, mul(s[i - 1], s[i - 1])), conj_inv);
      gens.push_back(std::move(a));
      names.push_back("A_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (!equal(mul(gens[a], gens[b]), mul(gens[b], gens[a]))) {
        if (detail) *detail = names[a] + " and " + names[b] + " do not commute";
        return false;
      }
  return true;
}

CohomologyTable affine_cohomology_table(int n, AffineCoefficients coeffs) {
  if (n < 2) fail("affine_cohomology_table: n >= 2");
  CohomologyTable out;
  out.n = n - 1;  // the affine group has n generators; degrees run 0..n-1
  out.mapping_derived = true;
  if (coeffs == AffineCoefficients::RationalTrivial) {
    CohomologyTable ratio = ratio_theorem_table(n);
    out.coefficients = "Q (trivial), via H^{k+1}(G_{B_n}, Q[t^+-])";
    for (auto& [degree, poly] : ratio.torsion) out.torsion[degree - 1] = poly;
  } else {
    CohomologyTable main = main_theorem_table(n);
    out.coefficients = "Q[q^+-]_q, via H^{k+1}(G_{B_n}, R_{q,t})";
    for (auto& [degree, mods] : main.modules) out.modules[degree - 1] = mods;
  }
  return out;
}

CohomologyTable tym_cohomology_table(int n) {
  CohomologyTable out = ratio_theorem_table(n);
  out.mapping_derived = true;
  out.coefficients = "H^*(Br_" + std::to_string(n + 1) + ", V) via H^*(G_{B_n}, Q[t^+-])";
  return out;
}

}  // namespace artin
