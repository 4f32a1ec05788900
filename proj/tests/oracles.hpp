// Test-only oracles, independent of the library code paths they check:
// brute-force closures, ordered-pair enumeration, the Radon-partition sign
// formula for moment-curve crossings, and a naive GF(2) elimination.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "vko/rational.hpp"
#include "vko/simplex.hpp"

namespace oracles {

// Downward closure by subset enumeration over std::set, no Simplex machinery.
inline std::set<std::set<int>> closure(const std::vector<std::set<int>>& maximal) {
  std::set<std::set<int>> out;
  for (const std::set<int>& s : maximal) {
    std::vector<int> v(s.begin(), s.end());
    const std::size_t n = v.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::set<int> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.insert(v[i]);
      out.insert(face);
    }
  }
  return out;
}

inline bool sets_disjoint(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (b.count(x)) return false;
  return true;
}

// Ordered disjoint pairs (sigma, tau), sigma != tau, bucketed by dimension sum.
inline std::map<int, long long> ordered_disjoint_pair_counts(
    const std::set<std::set<int>>& simplices) {
  std::map<int, long long> counts;
  for (const auto& a : simplices)
    for (const auto& b : simplices) {
      if (&a == &b) continue;
      if (a == b) continue;
      if (sets_disjoint(a, b))
        counts[static_cast<int>(a.size() + b.size()) - 2] += 1;
    }
  return counts;
}

// Exact moment-curve crossing test via the unique affine dependence of the
// m+2 points t -> (t, ..., t^m): coefficients c_k = 1 / prod_{l != k}(t_k - t_l).
// The hulls meet in an interior point iff s = sum_{k in sigma} c_k is nonzero
// and all of c_i/s (i in sigma), -c_j/s (j in tau) are positive.
inline int moment_crossing(const std::vector<vko::Rational>& sigma_params,
                           const std::vector<vko::Rational>& tau_params) {
  std::vector<std::pair<vko::Rational, bool>> pts;  // (t, in sigma)
  for (const auto& t : sigma_params) pts.emplace_back(t, true);
  for (const auto& t : tau_params) pts.emplace_back(t, false);
  const std::size_t n = pts.size();
  std::vector<vko::Rational> c(n, vko::Rational(1));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) c[k] /= (pts[k].first - pts[l].first);
  vko::Rational s(0);
  for (std::size_t k = 0; k < n; ++k)
    if (pts[k].second) s += c[k];
  if (s == 0) return 0;  // parallel hulls, no intersection
  for (std::size_t k = 0; k < n; ++k) {
    const vko::Rational coeff = pts[k].second ? vko::Rational(c[k] / s) : vko::Rational(-c[k] / s);
    if (coeff <= 0) return 0;
  }
  return 1;
}

// Plain int-matrix Gaussian elimination mod 2.
inline int naive_rank_mod2(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t p = pr;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pr]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != pr && m[r][c])
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[pr][j];
    ++pr;
  }
  return static_cast<int>(pr);
}

// Common fixtures.

// Complete graph on n vertices (1-skeleton of the (n-1)-simplex).
inline vko::Complex complete_graph(int n) {
  std::vector<vko::Simplex> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(vko::Simplex({i, j}));
  return vko::Complex::from_maximal(edges);
}

// K_{3,3} with parts {0,1,2} and {3,4,5}.
inline vko::Complex k33() {
  std::vector<vko::Simplex> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back(vko::Simplex({a, b}));
  return vko::Complex::from_maximal(edges);
}

inline vko::Complex three_points() {
  return vko::Complex::from_maximal({vko::Simplex({0}), vko::Simplex({1}), vko::Simplex({2})});
}

// Path 0 - 1 - 2.
inline vko::Complex path2() {
  return vko::Complex::from_maximal({vko::Simplex({0, 1}), vko::Simplex({1, 2})});
}

inline vko::Complex solid_triangle() {
  return vko::Complex::from_maximal({vko::Simplex({0, 1, 2})});
}

}  // namespace oracles
