#include "coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace artin {

int CoxeterGraph::label(int i, int j) const {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  auto it = edges_.find({i, j});
  return it == edges_.end() ? 2 : it->second;
}

void CoxeterGraph::set_label(int i, int j, int label) {
  if (i == j) fail("no self-loops in a Coxeter graph");
  if (i < 1 || j < 1 || i > rank_ || j > rank_) fail("vertex out of range");
  if (label != kInfinity && label < 3) fail("edge labels must be >= 3 or inf");
  if (i > j) std::swap(i, j);
  edges_[{i, j}] = label;
}

CoxeterGraph CoxeterGraph::induced(uint32_t vertex_mask) const {
  // relabel kept vertices 1..k preserving order
  std::vector<int> keep;
  for (int v = 1; v <= rank_; ++v)
    if (vertex_mask & (1u << (v - 1))) keep.push_back(v);
  CoxeterGraph g(static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b) {
      int L = label(keep[a], keep[b]);
      if (L != 2) g.set_label(static_cast<int>(a) + 1, static_cast<int>(b) + 1, L);
    }
  return g;
}

CoxeterGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  CoxeterGraph g;
  bool have_rank = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_rank) {
      if (tok != "rank") fail("line " + std::to_string(lineno) + ": expected 'rank n'");
      int n;
      if (!(ls >> n) || n < 0) fail("line " + std::to_string(lineno) + ": bad rank");
      g = CoxeterGraph(n);
      have_rank = true;
      continue;
    }
    int i, j;
    std::string lab;
    std::istringstream ls2(line);
    if (!(ls2 >> i >> j >> lab))
      fail("line " + std::to_string(lineno) + ": expected 'i j label'");
    if (i < 1 || j < 1 || i > g.rank() || j > g.rank() || i == j)
      fail("line " + std::to_string(lineno) + ": bad vertex pair");
    if (g.label(i, j) != 2)
      fail("line " + std::to_string(lineno) + ": duplicate edge");
    int L;
    if (lab == "inf") {
      L = CoxeterGraph::kInfinity;
    } else {
      try {
        L = std::stoi(lab);
      } catch (...) {
        fail("line " + std::to_string(lineno) + ": bad label '" + lab + "'");
      }
      if (L < 3) fail("line " + std::to_string(lineno) + ": labels must be >= 3 or inf");
    }
    g.set_label(i, j, L);
  }
  if (!have_rank) fail("missing 'rank n' header");
  return g;
}

namespace {

// classify one connected component, given as a vertex list
bool component_is_finite(const CoxeterGraph& g, const std::vector<int>& comp) {
  int k = static_cast<int>(comp.size());
  int edge_count = 0;
  std::vector<int> big_labels;  // labels >= 4
  bool has_inf = false;
  std::map<int, int> degree;
  std::map<std::pair<int, int>, int> labels;
  for (size_t a = 0; a < comp.size(); ++a)
    for (size_t b = a + 1; b < comp.size(); ++b) {
      int L = g.label(comp[a], comp[b]);
      if (L == 2) continue;
      ++edge_count;
      ++degree[comp[a]];
      ++degree[comp[b]];
      labels[{comp[a], comp[b]}] = L;
      if (L == CoxeterGraph::kInfinity)
        has_inf = true;
      else if (L >= 4)
        big_labels.push_back(L);
    }
  if (has_inf) return false;
  if (k == 1) return true;                  // A_1
  if (edge_count != k - 1) return false;    // a cycle: affine or worse
  if (k == 2) return true;                  // I_2(m), m finite
  int max_deg = 0, branch_nodes = 0, branch = 0;
  for (int v : comp) {
    int d = degree.count(v) ? degree.at(v) : 0;
    max_deg = std::max(max_deg, d);
    if (d >= 3) {
      ++branch_nodes;
      branch = v;
    }
  }
  if (max_deg >= 4 || branch_nodes >= 2) return false;
  if (branch_nodes == 1) {
    if (!big_labels.empty()) return false;  // branched diagrams are simply laced
    // arm lengths from the branch vertex (in vertices, excluding the center)
    std::vector<int> arms;
    for (auto& [e, L] : labels) {
      (void)L;
      int start = -1;
      if (e.first == branch)
        start = e.second;
      else if (e.second == branch)
        start = e.first;
      if (start < 0) continue;
      int len = 1, prev = branch, cur = start;
      while (true) {
        int next = -1;
        for (int v : comp) {
          if (v == prev || v == cur) continue;
          if (g.label(cur, v) != 2) {
            next = v;
            break;
          }
        }
        if (next < 0) break;
        ++len;
        prev = cur;
        cur = next;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return false;
    if (arms[0] != 1) return false;
    if (arms[1] == 1) return true;                    // D_k
    if (arms[1] == 2 && arms[2] <= 4) return true;    // E_6, E_7, E_8
    return false;
  }
  // plain path
  if (big_labels.size() >= 2) return false;
  if (big_labels.empty()) return true;  // A_k
  // locate the marked edge: is it at an end of the path?
  int L = big_labels[0];
  std::pair<int, int> marked{0, 0};
  for (auto& [e, lab] : labels)
    if (lab >= 4) marked = e;
  auto deg_of = [&](int v) { return degree.count(v) ? degree.at(v) : 0; };
  bool at_end = deg_of(marked.first) == 1 || deg_of(marked.second) == 1;
  if (L == 4) {
    if (at_end) return true;  // B_k
    // F_4: 4 vertices, the 4-edge on the middle edge
    return k == 4 && !at_end;
  }
  if (L == 5) return at_end && k <= 4;  // H_3, H_4
  return false;                         // labels >= 6 on a path of length >= 3
}

void components(const CoxeterGraph& g, std::vector<std::vector<int>>& out) {
  int n = g.rank();
  std::vector<int> comp_id(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    if (comp_id[v] >= 0) continue;
    std::vector<int> comp;
    std::deque<int> queue{v};
    comp_id[v] = v;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w = 1; w <= n; ++w) {
        if (comp_id[w] >= 0 || g.label(u, w) == 2 || u == w) continue;
        comp_id[w] = v;
        queue.push_back(w);
      }
    }
    out.push_back(comp);
  }
}

}  // namespace

bool is_finite_type(const CoxeterGraph& g) {
  std::vector<std::vector<int>> comps;
  components(g, comps);
  for (auto& c : comps)
    if (!component_is_finite(g, c)) return false;
  return true;
}

bool finite_by_root_closure(const CoxeterGraph& g, int root_cap) {
  int n = g.rank();
  if (n == 0) return true;
  // field: K_{2L} with L = lcm of the finite labels; infinity handled by -1
  long L = 2;
  for (auto& [e, lab] : g.edges())
    if (lab != CoxeterGraph::kInfinity) L = std::lcm(L, static_cast<long>(lab));
  int idx = static_cast<int>(2 * L);
  // 2cos(pi/m) = zeta^{L/m} + zeta^{-L/m} for zeta a primitive 2L-th root
  auto two_cos = [&](int m) -> Cyclo {
    if (m == CoxeterGraph::kInfinity) return Cyclo(idx, Rational(2));
    return Cyclo::zeta_pow(idx, L / m) + Cyclo::zeta_pow(idx, -(L / m));
  };
  // gram[i][j] = 2B(e_i, e_j) = -2cos(pi/m(i,j)); diagonal 2
  std::vector<std::vector<Cyclo>> gram(n, std::vector<Cyclo>(n, Cyclo(idx)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram[i][j] = (i == j) ? Cyclo(idx, Rational(2)) : -two_cos(g.label(i + 1, j + 1));

  using Vec = std::vector<Cyclo>;
  auto key_of = [&](const Vec& v) {
    std::vector<Rational> flat;
    for (auto& c : v) flat.insert(flat.end(), c.coords().begin(), c.coords().end());
    return flat;
  };
  std::set<std::vector<Rational>> seen;
  std::deque<Vec> queue;
  for (int s = 0; s < n; ++s) {
    Vec e(n, Cyclo(idx));
    e[s] = Cyclo(idx, Rational(1));
    if (seen.insert(key_of(e)).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec x = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      // sigma_s(x) = x - <x, alpha_s> alpha_s with <x, alpha_s> = sum x_t 2B(e_t,e_s)
      Cyclo inner(idx);
      for (int t = 0; t < n; ++t)
        if (!x[t].is_zero()) inner += x[t] * gram[t][s];
      Vec y = x;
      y[s] = y[s] - inner;
      if (seen.insert(key_of(y)).second) {
        if (static_cast<int>(seen.size()) > root_cap) return false;
        queue.push_back(y);
      }
    }
  }
  return true;
}

long long euler_characteristic_kfin(const CoxeterGraph& g) {
  int n = g.rank();
  if (n > 24) fail("euler_characteristic_kfin: rank too large to enumerate");
  long long sum = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    CoxeterGraph sub = g.induced(mask);
    if (is_finite_type(sub)) sum += (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return sum;
}

CoxeterGraph graph_type_a(int n) {
  if (n < 0) fail("graph_type_a: n >= 0");
  CoxeterGraph g(n);
  for (int i = 1; i < n; ++i) g.set_label(i, i + 1, 3);
  return g;
}

CoxeterGraph graph_type_b(int n) {
  if (n < 1) fail("graph_type_b: n >= 1");
  CoxeterGraph g(n);
  for (int i = 1; i + 1 < n; ++i) g.set_label(i, i + 1, 3);
  if (n >= 2) g.set_label(n - 1, n, 4);
  return g;
}

CoxeterGraph graph_affine_a(int n) {
  if (n < 1) fail("graph_affine_a: n >= 1");
  CoxeterGraph g(n + 1);
  if (n == 1) {
    g.set_label(1, 2, CoxeterGraph::kInfinity);
    return g;
  }
  for (int i = 1; i <= n; ++i) g.set_label(i, i + 1, 3);
  g.set_label(1, n + 1, 3);
  return g;
}

CoxeterGraph graph_affine_b(int n) {
  if (n < 3) fail("graph_affine_b: n >= 3");
  CoxeterGraph g(n + 1);
  g.set_label(1, 3, 3);
  g.set_label(2, 3, 3);
  for (int i = 3; i < n; ++i) g.set_label(i, i + 1, 3);
  g.set_label(n, n + 1, 4);
  return g;
}

CoxeterGraph graph_affine_c(int n) {
  if (n < 2) fail("graph_affine_c: n >= 2");
  CoxeterGraph g(n + 1);
  g.set_label(1, 2, 4);
  for (int i = 2; i < n; ++i) g.set_label(i, i + 1, 3);
  g.set_label(n, n + 1, 4);
  return g;
}

BivariatePoly parabolic_poincare_qt(int n, uint32_t gamma, Family family) {
  if (n < 0 || (n < 32 && (gamma >> n) != 0)) fail("gamma must be a subset of 1..n");
  BivariatePoly result(Rational(1));
  int i = 1;
  while (i <= n) {
    if (!(gamma & (1u << (i - 1)))) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= n && (gamma & (1u << j))) ++j;  // run i..j
    int m = j - i + 1;
    if (family == Family::B && j == n)
      result *= qt_double_factorial(m);
    else
      result *= BivariatePoly::from_univariate(q_factorial(m + 1));
    i = j + 1;
  }
  return result;
}

// ------------------------------------------------------------------ BnGroup

uint64_t BnGroup::encode(const std::vector<int>& v) {
  // each slot: |value|-1 in 5 bits plus a sign bit; supports n <= 10
  uint64_t key = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    int a = v[i] > 0 ? v[i] : -v[i];
    uint64_t slot = static_cast<uint64_t>(a - 1) | (v[i] < 0 ? 32u : 0u);
    key |= slot << (6 * i);
  }
  return key;
}

std::vector<int> BnGroup::identity() const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = i + 1;
  return v;
}

std::vector<int> BnGroup::apply_gen(const std::vector<int>& v, int i) const {
  std::vector<int> w = v;
  if (i < 1 || i > n_) fail("generator index out of range");
  if (i < n_)
    std::swap(w[i - 1], w[i]);
  else
    w[n_ - 1] = -w[n_ - 1];
  return w;
}

BnGroup::BnGroup(int n, int bound) : n_(n) {
  if (n < 1) fail("BnGroup: n >= 1");
  if (n > bound) fail("BnGroup: enumeration bound exceeded");
  std::vector<int> id = identity();
  table_[encode(id)] = {0, 0};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    std::vector<int> w = queue.front();
    queue.pop_front();
    Info info = table_.at(encode(w));
    for (int i = 1; i <= n_; ++i) {
      std::vector<int> u = apply_gen(w, i);
      uint64_t key = encode(u);
      if (table_.count(key)) continue;
      table_[key] = {info.length + 1, info.special + (i == n_ ? 1 : 0)};
      queue.push_back(u);
    }
  }
}

const BnGroup::Info& BnGroup::info(const std::vector<int>& v) const {
  auto it = table_.find(encode(v));
  if (it == table_.end()) fail("element not in enumeration table");
  return it->second;
}

BivariatePoly BnGroup::weighted_poincare() const {
  BivariatePoly sum;
  for (auto& [key, info] : table_) {
    (void)key;
    sum.add_term(info.length - info.special, info.special, Rational(1));
  }
  return sum;
}

int BnGroup::special_count_random_geodesic(const std::vector<int>& w,
                                           std::mt19937_64& rng) const {
  std::vector<int> cur = w;
  int len = info(cur).length;
  int special = 0;
  while (len > 0) {
    std::vector<int> down;
    for (int i = 1; i <= n_; ++i)
      if (info(apply_gen(cur, i)).length == len - 1) down.push_back(i);
    int pick = down[std::uniform_int_distribution<size_t>(0, down.size() - 1)(rng)];
    if (pick == n_) ++special;
    cur = apply_gen(cur, pick);
    --len;
  }
  return special;
}

CosetRepsResult minimal_coset_reps(int n, int bound) {
  if (n < 1) fail("minimal_coset_reps: n >= 1");
  if (n > bound) fail("minimal_coset_reps: enumeration bound exceeded");
  BnGroup group(n, bound);
  CosetRepsResult out;
  out.generating_function = BivariatePoly(Rational(1));
  // subsets {i_1 < ... < i_r}: word p_{i_r} p_{i_{r-1}} ... p_{i_1}
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    CosetRep rep;
    std::vector<int> chosen;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) chosen.push_back(i);
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
      for (int s = *it; s <= n; ++s) rep.word.push_back(s);
    std::vector<int> el = group.identity();
    for (int s : rep.word) el = group.apply_gen(el, s);
    rep.element = el;
    rep.length = group.info(el).length;
    rep.special = group.info(el).special;
    out.reps.push_back(std::move(rep));
  }
  BivariatePoly gf;
  for (auto& rep : out.reps) gf.add_term(rep.length - rep.special, rep.special, Rational(1));
  out.generating_function = gf;
  return out;
}

}  // namespace artin
