#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclotomic.hpp"
#include "poly.hpp"
#include "qanalog.hpp"

namespace artin {

enum class Family { A, B };

// Coxeter graph: vertices 1..rank, edge labels >= 3 or infinity; an absent
// pair means label 2.
class CoxeterGraph {
 public:
  static constexpr int kInfinity = 0;  // sentinel label for the "inf" token

  CoxeterGraph() = default;
  explicit CoxeterGraph(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  // m(i, j): 1 on the diagonal, 2 for non-edges, else the stored label.
  int label(int i, int j) const;
  void set_label(int i, int j, int label);
  bool has_edge(int i, int j) const { return label(i, j) >= 3 || label(i, j) == kInfinity; }
  const std::map<std::pair<int, int>, int>& edges() const { return edges_; }

  CoxeterGraph induced(uint32_t vertex_mask) const;  // bit i-1 <-> vertex i

 private:
  int rank_ = 0;
  std::map<std::pair<int, int>, int> edges_;
};

// File format: first line "rank n"; then lines "i j L" with L >= 3 or "inf";
// "#" starts a comment. Duplicate edges and malformed lines are errors.
CoxeterGraph parse_graph(const std::string& text);

// True iff every connected component matches the classification list
// A_k, B_k, D_k, E_6, E_7, E_8, F_4, H_3, H_4, I_2(m finite).
bool is_finite_type(const CoxeterGraph& g);

// Independent finiteness probe: closes the orbit of the simple roots under
// the geometric representation, over an exact cyclotomic field.  The orbit
// is finite iff the group is; `root_cap` bounds the search.
bool finite_by_root_closure(const CoxeterGraph& g, int root_cap = 2048);

// sum over J subset of S with |W_J| finite of (-1)^{|J|}, J = empty included.
long long euler_characteristic_kfin(const CoxeterGraph& g);

// Named diagrams.
CoxeterGraph graph_type_a(int n);        // path, n >= 0
CoxeterGraph graph_type_b(int n);        // path with final 4-edge, n >= 1
CoxeterGraph graph_affine_a(int n);      // rank n+1, n >= 1 (n = 1: inf edge)
CoxeterGraph graph_affine_b(int n);      // rank n+1, n >= 3
CoxeterGraph graph_affine_c(int n);      // rank n+1, n >= 2

// Poincare polynomial of the parabolic W_Gamma inside A_n/B_n with the
// (q,t)-weighting: each component without the last node contributes
// [m+1]_q!, a component containing node n contributes [2m]_{q,t}!!
// (family A: always [m+1]_q!).  Gamma is a bitmask, bit i-1 <-> node i.
BivariatePoly parabolic_poincare_qt(int n, uint32_t gamma, Family family);

// W(B_n) as signed permutations via BFS over the Cayley graph.
// One-line notation: v[i-1] = w(i) with sign, i = 1..n.
class BnGroup {
 public:
  struct Info {
    int length;
    int special;  // n(w): s_n count along a geodesic
  };

  explicit BnGroup(int n, int bound = 7);

  int n() const { return n_; }
  const std::unordered_map<uint64_t, Info>& table() const { return table_; }
  static uint64_t encode(const std::vector<int>& v);
  std::vector<int> identity() const;
  // right multiplication by s_i (1-based; i = n flips the sign at slot n)
  std::vector<int> apply_gen(const std::vector<int>& v, int i) const;

  // sum over W of q^{l(w)-n(w)} t^{n(w)}
  BivariatePoly weighted_poincare() const;

  // n(w) recomputed along a random geodesic (for the well-definedness check)
  int special_count_random_geodesic(const std::vector<int>& w, std::mt19937_64& rng) const;

  const Info& info(const std::vector<int>& v) const;

 private:
  int n_;
  std::unordered_map<uint64_t, Info> table_;
};

struct CosetRep {
  std::vector<int> word;     // generator indices
  std::vector<int> element;  // signed permutation
  int length;
  int special;
};

// The 2^n minimal coset representatives for W(B_n)/W(A_{n-1}) built from
// p_i = s_i s_{i+1} ... s_n, together with their generating function
// sum q^{l - n(w)} t^{n(w)} = prod_{i=0..n-1} (1 + t q^i).
struct CosetRepsResult {
  std::vector<CosetRep> reps;
  BivariatePoly generating_function;
};
CosetRepsResult minimal_coset_reps(int n, int bound = 7);

}  // namespace artin
