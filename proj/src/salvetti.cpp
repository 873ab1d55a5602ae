#include "salvetti.hpp"

#include <algorithm>
#include <mutex>

#include "cyclotomic.hpp"
#include "qanalog.hpp"

namespace artin {

std::string GammaString::str() const {
  std::string s(n, '0');
  for (int i = 1; i <= n; ++i)
    if (contains(i)) s[i - 1] = '1';
  return s;
}

int CochainComplexR::basis_index(int degree, uint32_t bits) const {
  const auto& basis = bases.at(degree);
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].bits == bits) return static_cast<int>(i);
  return -1;
}

bool CochainComplexR::d_squared_is_zero() const {
  for (size_t k = 0; k + 1 < d.size(); ++k) {
    const auto& A = d[k + 1];  // degree k+1 -> k+2
    const auto& B = d[k];      // degree k   -> k+1
    size_t rows = A.size(), mid = B.size(), cols = mid ? B[0].size() : 0;
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        BivariatePoly acc;
        for (size_t j = 0; j < mid; ++j) {
          if (A[r][j].is_zero() || B[j][c].is_zero()) continue;
          acc += A[r][j] * B[j][c];
        }
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

namespace {

// subsets of degree k in lexicographic order of their element tuples
std::vector<GammaString> degree_basis(int n, int k) {
  std::vector<uint32_t> masks;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == k) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [n](uint32_t a, uint32_t b) {
    for (int i = 0; i < n; ++i) {
      bool ia = a & (1u << i), ib = b & (1u << i);
      if (ia != ib) return ia;  // smaller first element wins
    }
    return false;
  });
  std::vector<GammaString> basis;
  for (uint32_t m : masks) basis.push_back({n, m});
  return basis;
}

struct CoeffShape {
  int m;
  int i;
  bool primed;
  bool operator<(const CoeffShape& o) const {
    return std::tie(m, i, primed) < std::tie(o.m, o.i, o.primed);
  }
};

// closed form for one shape, checked once against the Poincare ratio
const BivariatePoly& shape_coefficient(int n, uint32_t gamma, int j, Family family,
                                       const CoeffShape& shape) {
  static std::map<CoeffShape, BivariatePoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;
  BivariatePoly value = shape.primed
                            ? qt_primed_binomial(shape.m, shape.i)
                            : BivariatePoly::from_univariate(q_binomial(shape.m + 1, shape.i + 1));
  // independent route: the ratio of parabolic Poincare polynomials
  BivariatePoly whole = parabolic_poincare_qt(n, gamma | (1u << (j - 1)), family);
  BivariatePoly part = parabolic_poincare_qt(n, gamma, family);
  if (!(whole.divide_exact(part) == value))
    fail("coboundary coefficient disagrees with Poincare ratio");
  return cache.emplace(shape, std::move(value)).first->second;
}

}  // namespace

BivariatePoly coboundary_coefficient(int n, uint32_t gamma, int j, Family family) {
  if (j < 1 || j > n) fail("coboundary index out of range");
  if (gamma & (1u << (j - 1))) fail("coboundary index already in Gamma");
  uint32_t with_j = gamma | (1u << (j - 1));
  int lo = j, hi = j;
  while (lo > 1 && (with_j & (1u << (lo - 2)))) --lo;
  while (hi < n && (with_j & (1u << hi))) ++hi;
  CoeffShape shape{hi - lo + 1, hi - j, family == Family::B && hi == n};
  int sigma = __builtin_popcount(gamma & ((1u << (j - 1)) - 1));
  BivariatePoly coeff = shape_coefficient(n, gamma, j, family, shape);
  return (sigma % 2 == 0) ? coeff : -coeff;
}

CochainComplexR build_complex(Family family, int n) {
  if (n < 0 || n > 12) fail("build_complex: size bound exceeded (0 <= n <= 12)");
  CochainComplexR c;
  c.family = family;
  c.n = n;
  for (int k = 0; k <= n; ++k) c.bases.push_back(degree_basis(n, k));
  std::vector<std::map<uint32_t, int>> index(n + 1);
  for (int k = 0; k <= n; ++k)
    for (size_t i = 0; i < c.bases[k].size(); ++i) index[k][c.bases[k][i].bits] = static_cast<int>(i);
  for (int k = 0; k < n; ++k) {
    size_t rows = c.bases[k + 1].size(), cols = c.bases[k].size();
    std::vector<std::vector<BivariatePoly>> mat(rows, std::vector<BivariatePoly>(cols));
    for (size_t col = 0; col < cols; ++col) {
      uint32_t gamma = c.bases[k][col].bits;
      for (int j = 1; j <= n; ++j) {
        if (gamma & (1u << (j - 1))) continue;
        BivariatePoly coeff = coboundary_coefficient(n, gamma, j, family);
        if (family == Family::A && !coeff.is_t_free())
          fail("type-A complex acquired a t-dependent entry");
        int row = index[k + 1].at(gamma | (1u << (j - 1)));
        mat[row][col] += coeff;
      }
    }
    c.d.push_back(std::move(mat));
  }
  if (!c.d_squared_is_zero()) fail("coboundary does not square to zero");
  return c;
}

namespace {

// strings of length n ending in exactly s ones (b_{n-s} = 0 when s < n)
bool exact_tail(uint32_t bits, int n, int s) {
  for (int p = n - s + 1; p <= n; ++p)
    if (!(bits & (1u << (p - 1)))) return false;
  if (s < n && (bits & (1u << (n - s - 1)))) return false;
  return true;
}

}  // namespace

FiltrationReport filtration_quotient(int n, int s) {
  if (n < 1 || n > 12) fail("filtration_quotient: 1 <= n <= 12");
  if (s < 0 || s > n) fail("filtration_quotient: 0 <= s <= n");
  FiltrationReport report;
  CochainComplexR& q = report.quotient;
  q.family = Family::B;
  q.n = n;
  // quotient basis per degree, in the same tuple-lex order
  q.bases.resize(n + 1);
  std::vector<std::map<uint32_t, int>> index(n + 1);
  for (int k = 0; k <= n; ++k) {
    for (const GammaString& g : degree_basis(n, k))
      if (exact_tail(g.bits, n, s)) {
        index[k][g.bits] = static_cast<int>(q.bases[k].size());
        q.bases[k].push_back(g);
      }
  }
  for (int k = 0; k < n; ++k) {
    size_t rows = q.bases[k + 1].size(), cols = q.bases[k].size();
    std::vector<std::vector<BivariatePoly>> mat(rows, std::vector<BivariatePoly>(cols));
    for (size_t col = 0; col < cols; ++col) {
      uint32_t gamma = q.bases[k][col].bits;
      for (int j = 1; j + s < n + 1 - 0 && j <= n; ++j) {
        if (j > n - s - 1) break;  // terms with j >= n-s land deeper in the filtration
        if (gamma & (1u << (j - 1))) continue;
        uint32_t target = gamma | (1u << (j - 1));
        auto it = index[k + 1].find(target);
        if (it == index[k + 1].end()) continue;
        mat[it->second][col] += coboundary_coefficient(n, gamma, j, Family::B);
      }
    }
    q.d.push_back(std::move(mat));
  }

  // compare against CA_{n-s-1}[s] under Gamma' -> Gamma'.0.1^s
  report.matches_shifted_type_a = true;
  if (s == n) {
    // one-dimensional complex R.1^n; nothing to compare
    return report;
  }
  int a = n - s - 1;
  CochainComplexR ca = build_complex(Family::A, a);
  uint32_t tail = ((1u << s) - 1) << (n - s);
  for (int k = 0; k <= a; ++k) {
    if (q.bases[k + s].size() != ca.bases[k].size()) {
      report.matches_shifted_type_a = false;
      report.detail = "basis size mismatch in degree " + std::to_string(k + s);
      return report;
    }
    for (size_t i = 0; i < ca.bases[k].size(); ++i) {
      uint32_t mapped = ca.bases[k][i].bits | tail;
      if (q.bases[k + s][i].bits != mapped) {
        report.matches_shifted_type_a = false;
        report.detail = "basis order mismatch in degree " + std::to_string(k + s);
        return report;
      }
    }
  }
  for (int k = 0; k < a; ++k) {
    const auto& A = ca.d[k];
    const auto& B = q.d[k + s];
    for (size_t r = 0; r < A.size(); ++r)
      for (size_t c = 0; c < A[r].size(); ++c)
        if (!(A[r][c] == B[r][c])) {
          report.matches_shifted_type_a = false;
          report.detail = "entry mismatch at degree " + std::to_string(k + s) + " (" +
                          std::to_string(r) + "," + std::to_string(c) + "): " +
                          A[r][c].str() + " vs " + B[r][c].str();
          return report;
        }
  }
  // degrees above a in the quotient must vanish
  for (int k = a; k < n - s; ++k)
    if (!q.bases[k + s + 1].empty()) {
      report.matches_shifted_type_a = false;
      report.detail = "unexpected quotient basis above the shifted range";
      return report;
    }
  return report;
}

int Chain::degree() const {
  int deg = -1;
  for (auto& [bits, c] : terms) {
    (void)c;
    int d = __builtin_popcount(static_cast<uint32_t>(bits)) +
            __builtin_popcount(static_cast<uint32_t>(bits >> 32));
    if (deg < 0) deg = d;
    if (d != deg) fail("chain mixes degrees");
  }
  return deg;
}

namespace {

Chain chain_string(uint64_t bits, int length, const Rational& c) {
  Chain ch;
  ch.length = length;
  if (c != 0) ch.terms[bits] = c;
  return ch;
}

Chain concat(const Chain& a, const Chain& b) {
  Chain r;
  r.length = a.length + b.length;
  for (auto& [ba, ca] : a.terms)
    for (auto& [bb, cb] : b.terms) {
      Rational c = ca * cb;
      if (c == 0) continue;
      uint64_t bits = ba | (bb << a.length);
      auto [it, fresh] = r.terms.emplace(bits, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

Chain chain_pow(const Chain& a, int k) {
  Chain r = chain_string(0, 0, Rational(1));
  for (int i = 0; i < k; ++i) r = concat(r, a);
  return r;
}

uint64_t ones(int count) { return count == 0 ? 0 : ((uint64_t(1) << count) - 1); }

}  // namespace

Chain dps_generator(DpsKind kind, int h, int i) {
  if (h < 2) fail("dps_generator: h >= 2");
  switch (kind) {
    case DpsKind::w:  // 0 1^{h-2} 0
      return chain_string(ones(h - 2) << 1, h, Rational(1));
    case DpsKind::b:  // 0 1^{h-2}
      return chain_string(ones(h - 2) << 1, h - 1, Rational(1));
    case DpsKind::c:  // 1^{h-1}
      return chain_string(ones(h - 1), h - 1, Rational(1));
    case DpsKind::z: {  // 1^{h-1} 0 + (-1)^h 0 1^{h-1}
      Chain r = chain_string(ones(h - 1), h, Rational(1));
      Rational sign((h % 2 == 0) ? 1 : -1);
      r.terms[ones(h - 1) << 1] = sign;
      return r;
    }
    case DpsKind::zi: {  // sum_{j=0}^{i-1} (-1)^{hj} w^j z w^{i-j-1}
      if (i < 1) fail("dps_generator: i >= 1 for z_h(i)");
      Chain w = dps_generator(DpsKind::w, h), z = dps_generator(DpsKind::z, h);
      Chain acc;
      acc.length = h * i;
      for (int j = 0; j <= i - 1; ++j) {
        Rational sign(((h * j) % 2 == 0) ? 1 : -1);
        Chain term = concat(concat(chain_pow(w, j), z), chain_pow(w, i - j - 1));
        for (auto& [bits, c] : term.terms) {
          Rational v = sign * c;
          auto [it, fresh] = acc.terms.emplace(bits, v);
          if (!fresh) {
            it->second += v;
            if (it->second == 0) acc.terms.erase(it);
          }
        }
      }
      return acc;
    }
    case DpsKind::vi: {
      // sum_{j=0}^{i-2} (-1)^{hj} w^j z w^{i-j-2} b + (-1)^{h(i-1)} w^{i-1} c
      if (i < 1) fail("dps_generator: i >= 1 for v_h(i)");
      Chain w = dps_generator(DpsKind::w, h), z = dps_generator(DpsKind::z, h);
      Chain b = dps_generator(DpsKind::b, h), c = dps_generator(DpsKind::c, h);
      Chain acc;
      acc.length = h * i - 1;
      for (int j = 0; j <= i - 2; ++j) {
        Rational sign(((h * j) % 2 == 0) ? 1 : -1);
        Chain term = concat(concat(concat(chain_pow(w, j), z), chain_pow(w, i - j - 2)), b);
        for (auto& [bits, cc] : term.terms) {
          Rational v = sign * cc;
          auto [it, fresh] = acc.terms.emplace(bits, v);
          if (!fresh) {
            it->second += v;
            if (it->second == 0) acc.terms.erase(it);
          }
        }
      }
      Rational sign(((h * (i - 1)) % 2 == 0) ? 1 : -1);
      Chain last = concat(chain_pow(w, i - 1), c);
      for (auto& [bits, cc] : last.terms) {
        Rational v = sign * cc;
        auto [it, fresh] = acc.terms.emplace(bits, v);
        if (!fresh) {
          it->second += v;
          if (it->second == 0) acc.terms.erase(it);
        }
      }
      return acc;
    }
  }
  fail("dps_generator: unknown kind");
}

namespace {

// quotient coboundary of a chain supported on exactly-s-tail strings,
// reduced mod Phi_m; true iff it vanishes
bool quotient_cocycle_mod_phi(int n, int s, int m, const Chain& chain) {
  std::map<uint32_t, BivariatePoly> image;
  for (auto& [bits64, c] : chain.terms) {
    uint32_t gamma = static_cast<uint32_t>(bits64);
    for (int j = 1; j <= n - s - 1; ++j) {
      if (gamma & (1u << (j - 1))) continue;
      BivariatePoly coeff = coboundary_coefficient(n, gamma, j, Family::B).scaled(c);
      image[gamma | (1u << (j - 1))] += coeff;
    }
  }
  for (auto& [bits, poly] : image) {
    (void)bits;
    if (!reduce_mod_cyclotomic(poly, m).is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<DpsCocycleRecord> dps_cocycle_report(int n, int m) {
  if (m < 2 || m > n) fail("dps_cocycle_report: 2 <= m <= n");
  std::vector<DpsCocycleRecord> records;
  auto add = [&](int s, int r, const Chain& head, int tail_ones, const std::string& name) {
    Chain tail0 = chain_string(0, 1, Rational(1));  // the separating 0
    Chain tail1 = chain_string(ones(tail_ones), tail_ones, Rational(1));
    Chain full = concat(concat(head, tail0), tail1);
    if (full.length != n) fail("dps position bookkeeping is off");
    DpsCocycleRecord rec;
    rec.s = s;
    rec.r = r;
    rec.generator = name;
    rec.cocycle = quotient_cocycle_mod_phi(n, s, m, full);
    records.push_back(rec);
  };
  if (n % m != 0) {
    int c = ((-n) % m + m) % m;  // m | n+c, 1 <= c < m
    int i = (n + c) / m;
    for (int lambda = 1; lambda <= i - 1; ++lambda) {
      int r = n + c - lambda * (m - 2) - 2 * i + 1;
      int s_z = lambda * m - c - 1;
      add(s_z, r, dps_generator(DpsKind::zi, m, i - lambda), s_z,
          "z_" + std::to_string(m) + "(" + std::to_string(i - lambda) + ")01^" +
              std::to_string(s_z));
      int s_v = lambda * m - c;
      add(s_v, r, dps_generator(DpsKind::vi, m, i - lambda), s_v,
          "v_" + std::to_string(m) + "(" + std::to_string(i - lambda) + ")01^" +
              std::to_string(s_v));
    }
  } else {
    int i = n / m;
    for (int lambda = 1; lambda <= i - 1; ++lambda) {
      int r = n - lambda * (m - 2) - 2 * i + 1;
      int s_z = lambda * m - 1;
      add(s_z, r, dps_generator(DpsKind::zi, m, i - lambda), s_z,
          "z_" + std::to_string(m) + "(" + std::to_string(i - lambda) + ")01^" +
              std::to_string(s_z));
    }
    for (int lambda = 0; lambda <= i - 1; ++lambda) {
      int r = n - lambda * (m - 2) - 2 * i + 1;
      int s_v = lambda * m;
      add(s_v, r, dps_generator(DpsKind::vi, m, i - lambda), s_v,
          "v_" + std::to_string(m) + "(" + std::to_string(i - lambda) + ")01^" +
              std::to_string(s_v));
    }
  }
  return records;
}

}  // namespace artin
