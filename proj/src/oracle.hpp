#pragma once

#include <map>
#include <string>
#include <vector>

#include "homology.hpp"
#include "poly.hpp"

namespace artin {

// Descriptor of {m}_i = R/(Phi_m(q), q^i t + 1); m = 1 means R/(q^i t + 1).
// For m >= 2 the index lives mod m (q^m = 1 holds in K_m).
struct ElementaryModule {
  int m = 1;
  int i = 0;

  ElementaryModule() = default;
  ElementaryModule(int m_, int i_);
  bool operator<(const ElementaryModule& o) const {
    return std::tie(m, i) < std::tie(o.m, o.i);
  }
  bool operator==(const ElementaryModule& o) const { return m == o.m && i == o.i; }
  std::string str() const;  // "{m}_i"
};

// Closed-form answer table.  For R_{q,t} coefficients the per-degree entries
// are multisets of elementary modules; for Q[t^+-]-style tables the entries
// are the torsion polynomials themselves.
struct CohomologyTable {
  int n = 0;
  std::string coefficients;
  bool mapping_derived = false;
  std::map<int, std::vector<ElementaryModule>> modules;
  std::map<int, UnivariatePoly> torsion;
};

// Theorem table for H^*(G_{B_n}, R_{q,t}).
CohomologyTable main_theorem_table(int n);

// H^*(G_{B_n}, Q[t^+-]): (1+t)-torsion in degrees 1..n-1, top degree (1+t)
// for odd n and (1-t^2) for even n.
CohomologyTable ratio_theorem_table(int n);

// Image of the main table under reduction mod Phi_m: per-degree multiset of
// primes (t + zeta^j) with lengths over K_m.
struct ReducedPrediction {
  int n = 0, m = 1;
  std::map<int, std::map<int, int>> degrees;  // degree -> (prime key j -> length)
};
ReducedPrediction predicted_mod_phi(int n, int m);

// Reading a Q[t^+-]-style table as a mod-Phi_2 prediction (t+1 <-> j = 0,
// t-1 <-> j = 1); used for the two-oracles-one-computation check.
ReducedPrediction ratio_as_prediction(const CohomologyTable& ratio);

// Phi_m-torsion positions of H^*(G_{A_a}, Q[q^+-]_q): degree -> multiset of m.
std::map<int, std::vector<int>> predicted_type_a(int a);

enum class IsoView { R, Qq, Qt };
bool elementary_iso(const ElementaryModule& x, const ElementaryModule& y, IsoView view);

struct CompareReport {
  bool pass = false;
  std::string detail;  // first mismatch: degree, prime, expected vs found
};
CompareReport compare(const std::vector<ModuleDecomposition>& computed,
                      const ReducedPrediction& predicted);

// Same comparison for the type-A tables keyed by cyclotomic index.
CompareReport compare_type_a(const std::vector<ModuleDecomposition>& computed,
                             const std::map<int, std::vector<int>>& predicted);

}  // namespace artin
