#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "poly.hpp"

namespace artin {

// Generator matrices for the two representation families.  The Tong-Yang-Ma
// matrices live over Q[u^+-], the induced G_{B_n} -> G_{A_n} module over
// Q[q^+-, t^+-]; the two coefficient systems are kept in separate types so
// they cannot silently mix.
using UMat = std::vector<std::vector<UnivariatePoly>>;
using BMat = std::vector<std::vector<BivariatePoly>>;

// rho(sigma_i): identity except the 2x2 block [[0,1],[u,0]] at rows i, i+1.
// n matrices of size n+1.
std::vector<UMat> tym_representation(int n);
std::vector<UMat> tym_representation_inverses(int n);

// sigma_i -> diag(-q) with block [[0,-q],[q^-1 t,0]] (i < n);
// sigma_n -> diag(-q) with block [[0,1],[-t,0]].
std::vector<BMat> induced_representation(int n);

struct BraidCheckReport {
  bool ok = true;
  std::string failed;  // which relation broke, empty when ok
};

BraidCheckReport check_braid_relations(const std::vector<UMat>& mats);
BraidCheckReport check_braid_relations(const std::vector<BMat>& mats);

// U (induced sigma_i) U^{-1} = (-q) * (tym sigma_i with u -> -q^{-2} t) for
// U = Diag(1, ..., 1, -q^{-1}).
bool check_conjugation_equivalence(int n, std::string* detail = nullptr);

// Pairwise commutation of the pure braid generators
// A_{ij} = (s_{j-1}...s_{i+1}) s_i^2 (s_{j-1}...s_{i+1})^{-1} under TYM.
bool tym_pure_braid_abelian(int n, std::string* detail = nullptr);

// u -> -q^{-2} t applied entrywise.
BMat substitute_u(const UMat& mat);

// Transfer tables (Shapiro + degree shift); tagged mapping-derived.
enum class AffineCoefficients { RationalTrivial, LaurentQ };
CohomologyTable affine_cohomology_table(int n, AffineCoefficients coeffs);
CohomologyTable tym_cohomology_table(int n);

}  // namespace artin
