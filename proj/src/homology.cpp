#include "homology.hpp"

#include <algorithm>

namespace artin {

PolyMatrix PolyMatrix::zero(int m, char var, int rows, int cols) {
  PolyMatrix a;
  a.m = m;
  a.var = var;
  a.rows = rows;
  a.cols = cols;
  a.entries.assign(static_cast<size_t>(rows) * cols, KTPoly(m, var));
  return a;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) fail("matmul: shape mismatch");
  PolyMatrix r = PolyMatrix::zero(a.m, a.var, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const KTPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        const KTPoly& y = b.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

namespace {

struct Snf {
  PolyMatrix a;
  PolyMatrix u, v;  // track a = u * a_orig * v
  bool track;

  explicit Snf(const PolyMatrix& input, bool with_transforms)
      : a(input), track(with_transforms) {
    if (track) {
      u = PolyMatrix::zero(a.m, a.var, a.rows, a.rows);
      v = PolyMatrix::zero(a.m, a.var, a.cols, a.cols);
      Cyclo one(a.m, Rational(1));
      for (int i = 0; i < a.rows; ++i) u.at(i, i) = KTPoly(a.m, a.var, one);
      for (int i = 0; i < a.cols; ++i) v.at(i, i) = KTPoly(a.m, a.var, one);
    }
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track)
      for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track)
      for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row_i -= f * row_k
  void row_addmul(int i, int k, const KTPoly& f) {
    if (f.is_zero()) return;
    for (int c = 0; c < a.cols; ++c)
      if (!a.at(k, c).is_zero()) a.at(i, c) += -(f * a.at(k, c));
    if (track)
      for (int c = 0; c < u.cols; ++c)
        if (!u.at(k, c).is_zero()) u.at(i, c) += -(f * u.at(k, c));
  }
  // col_j -= f * col_k
  void col_addmul(int j, int k, const KTPoly& f) {
    if (f.is_zero()) return;
    for (int r = 0; r < a.rows; ++r)
      if (!a.at(r, k).is_zero()) a.at(r, j) += -(f * a.at(r, k));
    if (track)
      for (int r = 0; r < v.rows; ++r)
        if (!v.at(r, k).is_zero()) v.at(r, j) += -(f * v.at(r, k));
  }
  // scale row by the unit that unit-normalizes the pivot
  void row_make_unit_normal(int i, int pivot_col) {
    const KTPoly& p = a.at(i, pivot_col);
    if (p.is_zero()) return;
    int e0 = p.min_exp();
    Cyclo inv = p.terms().begin()->second.inverse();
    KTPoly unit = KTPoly::monomial(a.m, a.var, inv, -e0);
    for (int c = 0; c < a.cols; ++c)
      if (!a.at(i, c).is_zero()) a.at(i, c) = a.at(i, c) * unit;
    if (track)
      for (int c = 0; c < u.cols; ++c)
        if (!u.at(i, c).is_zero()) u.at(i, c) = u.at(i, c) * unit;
  }
};

// degree of an entry for pivoting: Laurent span (units have span 0)
int pivot_weight(const KTPoly& p) { return p.degree_span(); }

}  // namespace

SnfResult smith_normal_form(const PolyMatrix& input, bool verify_transforms) {
  Snf s(input, verify_transforms);
  PolyMatrix& a = s.a;
  int k = 0;
  int limit = std::min(a.rows, a.cols);
  while (k < limit) {
    // minimal-degree pivot in the trailing submatrix (ties: lexicographic position)
    int pi = -1, pj = -1, best = -1;
    for (int i = k; i < a.rows; ++i)
      for (int j = k; j < a.cols; ++j) {
        const KTPoly& e = a.at(i, j);
        if (e.is_zero()) continue;
        int w = pivot_weight(e);
        if (best < 0 || w < best) {
          best = w;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    s.row_swap(k, pi);
    s.col_swap(k, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // shift entries to ordinary polynomials relative to the pivot for divmod
      for (int i = k + 1; i < a.rows; ++i) {
        if (a.at(i, k).is_zero()) continue;
        KTPoly lhs = a.at(i, k).shifted(-a.at(i, k).min_exp());
        KTPoly rhs = a.at(k, k).shifted(-a.at(k, k).min_exp());
        auto dm = lhs.divmod(rhs);
        // undo the shifts inside the multiplier
        KTPoly f = dm.quot.shifted(a.at(i, k).min_exp() - a.at(k, k).min_exp());
        s.row_addmul(i, k, f);
        if (!a.at(i, k).is_zero()) {
          // remainder has strictly smaller degree: promote it to pivot
          s.row_swap(k, i);
          clean = false;
        }
      }
      for (int j = k + 1; j < a.cols; ++j) {
        if (a.at(k, j).is_zero()) continue;
        KTPoly lhs = a.at(k, j).shifted(-a.at(k, j).min_exp());
        KTPoly rhs = a.at(k, k).shifted(-a.at(k, k).min_exp());
        auto dm = lhs.divmod(rhs);
        KTPoly f = dm.quot.shifted(a.at(k, j).min_exp() - a.at(k, k).min_exp());
        s.col_addmul(j, k, f);
        if (!a.at(k, j).is_zero()) {
          s.col_swap(k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility chain: the pivot must divide the rest of the submatrix
      KTPoly quot(a.m, a.var);
      for (int i = k + 1; i < a.rows && clean; ++i)
        for (int j = k + 1; j < a.cols && clean; ++j) {
          if (a.at(i, j).is_zero()) continue;
          if (!a.at(i, j).try_divide_exact(a.at(k, k), quot)) {
            // fold row i into row k and restart the reduction
            KTPoly minus_one(a.m, a.var, Cyclo(a.m, Rational(-1)));
            s.row_addmul(k, i, minus_one);
            clean = false;
          }
        }
    }
    s.row_make_unit_normal(k, k);
    ++k;
  }

  SnfResult result;
  for (int i = 0; i < limit; ++i) {
    if (a.at(i, i).is_zero()) continue;
    result.diagonal.push_back(a.at(i, i).unit_normalized());
    ++result.rank;
  }
  // off-diagonal must be clear
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (i != j && !a.at(i, j).is_zero()) fail("smith_normal_form left an off-diagonal entry");
  for (size_t i = 0; i + 1 < result.diagonal.size(); ++i) {
    KTPoly q(a.m, a.var);
    if (!result.diagonal[i + 1].try_divide_exact(result.diagonal[i], q))
      fail("smith_normal_form: divisibility chain broken");
  }

  if (verify_transforms) {
    PolyMatrix check = matmul(matmul(s.u, input), s.v);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j)
        if (!(check.at(i, j) == a.at(i, j)))
          fail("smith_normal_form: transform reconstruction failed");
  }
  return result;
}

std::vector<KTPoly> SnfResult::invariant_factors() const {
  std::vector<KTPoly> out;
  for (const KTPoly& d : diagonal)
    if (d.degree_span() >= 1) out.push_back(d);
  return out;
}

std::vector<CandidatePrime> candidate_primes_km(int m) {
  std::vector<CandidatePrime> out;
  for (int j = 0; j < std::max(1, m); ++j) {
    CandidatePrime p;
    p.key = j;
    KTPoly poly(m, 't');
    poly.add_term(1, Cyclo(m, Rational(1)));
    poly.add_term(0, Cyclo::zeta_pow(m, j));
    p.poly = poly;
    p.name = poly.str();
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CandidatePrime> candidate_primes_qq(int max_index) {
  std::vector<CandidatePrime> out;
  for (int d = 2; d <= max_index; ++d) {
    CandidatePrime p;
    p.key = d;
    p.poly = KTPoly::from_rational_poly(1, cyclotomic(d));
    p.name = "Phi_" + std::to_string(d);
    out.push_back(std::move(p));
  }
  return out;
}

bool ReducedComplex::d_squared_is_zero() const {
  for (size_t k = 0; k + 1 < d.size(); ++k) {
    PolyMatrix prod = matmul(d[k + 1], d[k]);
    for (const KTPoly& e : prod.entries)
      if (!e.is_zero()) return false;
  }
  return true;
}

ReducedComplex reduce_complex_mod_phi(const CochainComplexR& c, int m) {
  if (m < 1) fail("reduce_complex_mod_phi: m >= 1");
  ReducedComplex r;
  r.family = c.family;
  r.n = c.n;
  r.m = m;
  r.var = 't';
  for (const auto& basis : c.bases) r.dims.push_back(static_cast<int>(basis.size()));
  for (const auto& mat : c.d) {
    PolyMatrix p = PolyMatrix::zero(m, 't', static_cast<int>(mat.size()),
                                    mat.empty() ? 0 : static_cast<int>(mat[0].size()));
    for (int i = 0; i < p.rows; ++i)
      for (int j = 0; j < p.cols; ++j)
        if (!mat[i][j].is_zero()) p.at(i, j) = reduce_mod_cyclotomic(mat[i][j], m);
    r.d.push_back(std::move(p));
  }
  if (!r.d_squared_is_zero()) fail("reduction broke d.d = 0");
  return r;
}

ReducedComplex type_a_over_q(const CochainComplexR& ca) {
  if (ca.family != Family::A) fail("type_a_over_q expects a type-A complex");
  ReducedComplex r;
  r.family = Family::A;
  r.n = ca.n;
  r.m = 1;
  r.var = 'q';
  for (const auto& basis : ca.bases) r.dims.push_back(static_cast<int>(basis.size()));
  for (const auto& mat : ca.d) {
    PolyMatrix p = PolyMatrix::zero(1, 'q', static_cast<int>(mat.size()),
                                    mat.empty() ? 0 : static_cast<int>(mat[0].size()));
    for (int i = 0; i < p.rows; ++i)
      for (int j = 0; j < p.cols; ++j)
        if (!mat[i][j].is_zero())
          p.at(i, j) = KTPoly::from_rational_poly(1, mat[i][j].as_univariate('q'));
    r.d.push_back(std::move(p));
  }
  return r;
}

std::vector<ModuleDecomposition> cohomology_modules(const ReducedComplex& c,
                                                    const std::vector<CandidatePrime>& primes) {
  if (!c.d_squared_is_zero()) fail("cohomology_modules: d.d != 0");
  int top = static_cast<int>(c.dims.size()) - 1;
  std::vector<SnfResult> snf(c.d.size());
  for (size_t k = 0; k < c.d.size(); ++k) snf[k] = smith_normal_form(c.d[k]);
  std::vector<ModuleDecomposition> out;
  for (int k = 0; k <= top; ++k) {
    ModuleDecomposition dec;
    dec.degree = k;
    int rank_dk = (k < static_cast<int>(c.d.size())) ? snf[k].rank : 0;
    int rank_prev = (k > 0) ? snf[k - 1].rank : 0;
    int kernel = c.dims[k] - rank_dk;
    dec.free_rank = kernel - rank_prev;
    if (dec.free_rank < 0) fail("cohomology_modules: negative free rank");
    if (k > 0) dec.invariant_factors = snf[k - 1].invariant_factors();
    std::map<int, int> lengths;
    for (const KTPoly& f : dec.invariant_factors) {
      KTPoly rest = f;
      for (const CandidatePrime& p : primes) {
        KTPoly q(c.m, c.var);
        while (!rest.is_unit() && rest.try_divide_exact(p.poly, q)) {
          rest = q;
          ++lengths[p.key];
        }
      }
      dec.unexplained_degree += std::max(0, rest.degree_span());
    }
    for (auto& [key, len] : lengths) dec.primary.emplace_back(key, len);
    out.push_back(std::move(dec));
  }
  return out;
}

namespace {

int rational_matrix_rank(std::vector<std::vector<Rational>> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<int> betti_at_point(const CochainComplexR& c, const Rational& q0,
                                const Rational& t0) {
  if (q0 == 0 || t0 == 0) fail("betti_at_point: specialization values must be nonzero");
  std::vector<int> ranks(c.d.size(), 0);
  for (size_t k = 0; k < c.d.size(); ++k) {
    std::vector<std::vector<Rational>> m(c.d[k].size());
    for (size_t r = 0; r < c.d[k].size(); ++r) {
      m[r].resize(c.d[k][r].size());
      for (size_t cc = 0; cc < c.d[k][r].size(); ++cc) m[r][cc] = c.d[k][r][cc].eval(q0, t0);
    }
    ranks[k] = rational_matrix_rank(std::move(m));
  }
  std::vector<int> betti(c.bases.size());
  for (size_t k = 0; k < c.bases.size(); ++k) {
    int dim = static_cast<int>(c.bases[k].size());
    int rk = (k < ranks.size()) ? ranks[k] : 0;
    int rprev = (k > 0) ? ranks[k - 1] : 0;
    betti[k] = dim - rk - rprev;
  }
  return betti;
}

}  // namespace artin
