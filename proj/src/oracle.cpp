#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

ElementaryModule::ElementaryModule(int m_, int i_) : m(m_), i(i_) {
  if (m < 1) fail("ElementaryModule: m >= 1");
  if (m >= 2) i = ((i % m) + m) % m;
  if (i < 0) fail("ElementaryModule: index must be >= 0 for m = 1");
}

std::string ElementaryModule::str() const {
  return "{" + std::to_string(m) + "}_" + std::to_string(i);
}

CohomologyTable main_theorem_table(int n) {
  if (n < 1) fail("main_theorem_table: n >= 1");
  CohomologyTable table;
  table.n = n;
  table.coefficients = "R_{q,t}";
  // i = n
  {
    std::vector<ElementaryModule>& top = table.modules[n];
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (int k = 0; k <= d - 2; ++k) top.emplace_back(d, k);
    }
    top.emplace_back(1, n - 1);
    std::sort(top.begin(), top.end());
  }
  // i = n - 2j, j >= 1
  for (int j = 1; n - 2 * j >= 0; ++j) {
    std::vector<ElementaryModule> entry;
    for (int d = 2; d * (j + 1) <= n; ++d) {
      if (n % d != 0) continue;
      for (int k = 0; k <= d - 2; ++k) entry.emplace_back(d, k);
    }
    if (!entry.empty()) {
      std::sort(entry.begin(), entry.end());
      table.modules[n - 2 * j] = std::move(entry);
    }
  }
  // i = n - 2j - 1, j >= 0
  for (int j = 0; n - 2 * j - 1 >= 0; ++j) {
    std::vector<ElementaryModule> entry;
    for (int d = 2; d * (j + 1) <= n; ++d) {
      if (n % d == 0) continue;
      entry.emplace_back(d, n - 1);  // stored as {d}_{(n-1) mod d}
    }
    if (!entry.empty()) {
      std::sort(entry.begin(), entry.end());
      table.modules[n - 2 * j - 1] = std::move(entry);
    }
  }
  return table;
}

CohomologyTable ratio_theorem_table(int n) {
  if (n < 1) fail("ratio_theorem_table: n >= 1");
  CohomologyTable table;
  table.n = n;
  table.coefficients = "Q[t^+-]";
  UnivariatePoly one_plus_t = UnivariatePoly::parse("1+t", 't');
  for (int k = 1; k <= n - 1; ++k) table.torsion[k] = one_plus_t;
  table.torsion[n] =
      (n % 2 == 1) ? one_plus_t : UnivariatePoly::parse("1-t^2", 't');
  return table;
}

ReducedPrediction predicted_mod_phi(int n, int m) {
  if (m < 1) fail("predicted_mod_phi: m >= 1");
  CohomologyTable table = main_theorem_table(n);
  ReducedPrediction pred;
  pred.n = n;
  pred.m = m;
  auto mod_m = [m](int e) { return ((e % m) + m) % m; };
  for (auto& [degree, mods] : table.modules) {
    for (const ElementaryModule& em : mods) {
      if (em.m == 1) {
        // R/(q^i t + 1): reduction has cokernel (t + zeta^{-i}), no torsion kernel
        pred.degrees[degree][mod_m(-em.i)] += 1;
      } else if (em.m == m) {
        // killed by Phi_m: cokernel in this degree, kernel one degree lower
        pred.degrees[degree][mod_m(-em.i)] += 1;
        pred.degrees[degree - 1][mod_m(-em.i)] += 1;
      }
      // other m' >= 2: Phi_m is invertible mod Phi_{m'}, contributes nothing
    }
  }
  return pred;
}

ReducedPrediction ratio_as_prediction(const CohomologyTable& ratio) {
  ReducedPrediction pred;
  pred.n = ratio.n;
  pred.m = 2;
  UnivariatePoly one_plus_t = UnivariatePoly::parse("1+t", 't');
  UnivariatePoly one_minus_t2 = UnivariatePoly::parse("1-t^2", 't');
  for (auto& [degree, poly] : ratio.torsion) {
    if (poly == one_plus_t) {
      pred.degrees[degree][0] += 1;
    } else if (poly == one_minus_t2) {
      pred.degrees[degree][0] += 1;
      pred.degrees[degree][1] += 1;
    } else {
      fail("ratio_as_prediction: unexpected torsion polynomial " + poly.str());
    }
  }
  return pred;
}

std::map<int, std::vector<int>> predicted_type_a(int a) {
  if (a < 0) fail("predicted_type_a: a >= 0");
  std::map<int, std::vector<int>> out;
  for (int m = 2; m <= a + 1; ++m) {
    if (a % m == 0) out[a + 1 - 2 * (a / m)].push_back(m);
    if ((a + 1) % m == 0) out[a + 2 - 2 * ((a + 1) / m)].push_back(m);
  }
  for (auto& [r, ms] : out) std::sort(ms.begin(), ms.end());
  return out;
}

bool elementary_iso(const ElementaryModule& x, const ElementaryModule& y, IsoView view) {
  switch (view) {
    case IsoView::R:
      return x.m == y.m && x.i == y.i;  // indexes already normalized mod m
    case IsoView::Qq:
      return x.m == y.m;
    case IsoView::Qt:
      return euler_phi(x.m) == euler_phi(y.m) &&
             x.m / std::gcd(x.m, x.i) == y.m / std::gcd(y.m, y.i);
  }
  fail("elementary_iso: bad view");
}

namespace {

std::string prime_name(int m, int j) {
  KTPoly p(m, 't');
  p.add_term(1, Cyclo(m, Rational(1)));
  p.add_term(0, Cyclo::zeta_pow(m, j));
  return p.str();
}

}  // namespace

CompareReport compare(const std::vector<ModuleDecomposition>& computed,
                      const ReducedPrediction& predicted) {
  CompareReport report;
  if (static_cast<int>(computed.size()) != predicted.n + 1) {
    report.detail = "dimension mismatch: computed has " + std::to_string(computed.size()) +
                    " degrees, expected " + std::to_string(predicted.n + 1);
    return report;
  }
  for (const ModuleDecomposition& dec : computed) {
    if (dec.free_rank != 0) {
      report.detail = "degree " + std::to_string(dec.degree) + ": unexpected free rank " +
                      std::to_string(dec.free_rank);
      return report;
    }
    if (dec.unexplained_degree != 0) {
      report.detail = "degree " + std::to_string(dec.degree) + ": unexplained torsion degree " +
                      std::to_string(dec.unexplained_degree);
      return report;
    }
    std::map<int, int> expected;
    auto it = predicted.degrees.find(dec.degree);
    if (it != predicted.degrees.end()) expected = it->second;
    std::map<int, int> found(dec.primary.begin(), dec.primary.end());
    if (found != expected) {
      // locate the first differing prime
      for (auto& [j, len] : expected) {
        int have = found.count(j) ? found.at(j) : 0;
        if (have != len) {
          report.detail = "degree " + std::to_string(dec.degree) + ", prime " +
                          prime_name(predicted.m, j) + ": expected length " +
                          std::to_string(len) + ", found " + std::to_string(have);
          return report;
        }
      }
      for (auto& [j, len] : found) {
        if (!expected.count(j)) {
          report.detail = "degree " + std::to_string(dec.degree) + ", prime " +
                          prime_name(predicted.m, j) + ": expected length 0, found " +
                          std::to_string(len);
          return report;
        }
      }
      report.detail = "degree " + std::to_string(dec.degree) + ": primary tables differ";
      return report;
    }
  }
  report.pass = true;
  return report;
}

CompareReport compare_type_a(const std::vector<ModuleDecomposition>& computed,
                             const std::map<int, std::vector<int>>& predicted) {
  CompareReport report;
  for (const ModuleDecomposition& dec : computed) {
    if (dec.free_rank != 0) {
      report.detail = "degree " + std::to_string(dec.degree) + ": unexpected free rank " +
                      std::to_string(dec.free_rank);
      return report;
    }
    if (dec.unexplained_degree != 0) {
      report.detail = "degree " + std::to_string(dec.degree) + ": unexplained torsion degree " +
                      std::to_string(dec.unexplained_degree);
      return report;
    }
    std::map<int, int> expected;
    auto it = predicted.find(dec.degree);
    if (it != predicted.end())
      for (int m : it->second) expected[m] += 1;
    std::map<int, int> found(dec.primary.begin(), dec.primary.end());
    if (found != expected) {
      for (auto& [m, len] : expected) {
        int have = found.count(m) ? found.at(m) : 0;
        if (have != len) {
          report.detail = "degree " + std::to_string(dec.degree) + ", prime Phi_" +
                          std::to_string(m) + ": expected length " + std::to_string(len) +
                          ", found " + std::to_string(have);
          return report;
        }
      }
      for (auto& [m, len] : found) {
        if (!expected.count(m)) {
          report.detail = "degree " + std::to_string(dec.degree) + ", prime Phi_" +
                          std::to_string(m) + ": expected length 0, found " +
                          std::to_string(len);
          return report;
        }
      }
      report.detail = "degree " + std::to_string(dec.degree) + ": primary tables differ";
      return report;
    }
  }
  report.pass = true;
  return report;
}

}  // namespace artin
