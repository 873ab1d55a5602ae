#pragma once

#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "salvetti.hpp"

namespace artin {

// Dense matrix over K_m[var^+-]; one variable over a field, so a PID with
// units c*var^k.
struct PolyMatrix {
  int m = 1;
  char var = 't';
  int rows = 0, cols = 0;
  std::vector<KTPoly> entries;  // row-major

  static PolyMatrix zero(int m, char var, int rows, int cols);
  KTPoly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const KTPoly& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

// diag(d_1 | d_2 | ...) with invertible row/column transforms; the transforms
// are tracked and U*A*V is re-multiplied against the diagonal on every run.
struct SnfResult {
  std::vector<KTPoly> diagonal;  // nonzero entries, unit-normalized
  int rank = 0;
  std::vector<KTPoly> invariant_factors() const;  // the nonunit diagonal entries
};
SnfResult smith_normal_form(const PolyMatrix& a, bool verify_transforms = true);

// Candidate irreducible for the primary table; `key` is the oracle's label
// (j for t + zeta^j over K_m, d for Phi_d over Q[q]).
struct CandidatePrime {
  int key = 0;
  std::string name;
  KTPoly poly;
};

std::vector<CandidatePrime> candidate_primes_km(int m);          // {t + zeta^j}
std::vector<CandidatePrime> candidate_primes_qq(int max_index);  // {Phi_d(q)}, d >= 2

struct ModuleDecomposition {
  int degree = 0;
  int free_rank = 0;
  std::vector<KTPoly> invariant_factors;
  std::vector<std::pair<int, int>> primary;  // (candidate key, total length), sorted
  int unexplained_degree = 0;
};

// Cochain complex after a reduction: entries in K_m[var^+-].
struct ReducedComplex {
  Family family = Family::B;
  int n = 0;
  int m = 1;
  char var = 't';
  std::vector<int> dims;        // basis size per degree 0..n
  std::vector<PolyMatrix> d;    // d[k]: dims[k+1] x dims[k]

  bool d_squared_is_zero() const;
};

ReducedComplex reduce_complex_mod_phi(const CochainComplexR& c, int m);

// Type-A complexes are t-free; reinterpret the entries over Q[q^+-].
ReducedComplex type_a_over_q(const CochainComplexR& ca);

// H^k = ker d_k / im d_{k-1}: free rank from the ranks, torsion from the
// invariant factors of d_{k-1}, primary table by trial division against the
// supplied candidate list (leftover degree is recorded, never dropped).
std::vector<ModuleDecomposition> cohomology_modules(const ReducedComplex& c,
                                                    const std::vector<CandidatePrime>& primes);

// Betti numbers of C_n at a rational point (q0, t0), both nonzero.
std::vector<int> betti_at_point(const CochainComplexR& c, const Rational& q0,
                                const Rational& t0);

}  // namespace artin
