#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vko/deleted_product.hpp"
#include "vko/digest.hpp"
#include "vko/errors.hpp"
#include "vko/rational.hpp"
#include "vko/simplex.hpp"

namespace vko {

/**
 * A general-position map of a vertex set into Q^m. Simplices map affinely
 * onto the convex hulls of their vertex images.
 *
 * The default witness is the moment curve t -> (t, t^2, ..., t^m) with one
 * rational parameter per vertex: any m+1 image points are affinely
 * independent (Vandermonde), so every disjoint pair with dimension sum m is
 * automatically in general position. Explicit point assignments are also
 * supported; those may genuinely be degenerate for some pair, which
 * surfaces as a degenerate_position error rather than a silent perturbation.
 */
class GeneralPositionMap {
 public:
  static GeneralPositionMap moment(const Complex& k, int m,
                                   std::optional<std::vector<Rational>> params = std::nullopt) {
    if (m < 0) throw input_error("target dimension must be non-negative");
    const std::vector<int> verts = k.vertex_ids();
    GeneralPositionMap f;
    f.m_ = m;
    f.moment_ = true;
    if (params) {
      if (params->size() != verts.size())
        throw input_error("moment map needs one parameter per vertex (" +
                          std::to_string(verts.size()) + " expected, got " +
                          std::to_string(params->size()) + ")");
      for (std::size_t i = 0; i < verts.size(); ++i) f.params_[verts[i]] = (*params)[i];
    } else {
      // Default: t_i = i in canonical (increasing id) vertex order.
      for (std::size_t i = 0; i < verts.size(); ++i) f.params_[verts[i]] = Rational(i);
    }
    std::set<Rational> distinct;
    for (const auto& [v, t] : f.params_) distinct.insert(t);
    if (distinct.size() != f.params_.size())
      throw input_error("moment-curve parameters must be pairwise distinct");
    return f;
  }

  static GeneralPositionMap moment_params(int m, std::map<int, Rational> params) {
    GeneralPositionMap f;
    f.m_ = m;
    f.moment_ = true;
    f.params_ = std::move(params);
    std::set<Rational> distinct;
    for (const auto& [v, t] : f.params_) distinct.insert(t);
    if (distinct.size() != f.params_.size())
      throw input_error("moment-curve parameters must be pairwise distinct");
    return f;
  }

  static GeneralPositionMap explicit_points(int m, std::map<int, std::vector<Rational>> points) {
    if (m < 0) throw input_error("target dimension must be non-negative");
    GeneralPositionMap f;
    f.m_ = m;
    f.moment_ = false;
    for (const auto& [v, p] : points)
      if (p.size() != static_cast<std::size_t>(m))
        throw input_error("point for vertex " + std::to_string(v) + " has wrong dimension");
    f.points_ = std::move(points);
    if (m > 0) {
      std::set<std::vector<Rational>> distinct;
      for (const auto& [v, p] : f.points_) distinct.insert(p);
      if (distinct.size() != f.points_.size())
        throw input_error("vertex images must be pairwise distinct");
    }
    return f;
  }

  int target_dim() const { return m_; }
  bool is_moment() const { return moment_; }
  const std::map<int, Rational>& parameters() const { return params_; }
  const std::map<int, std::vector<Rational>>& points() const { return points_; }

  Rational parameter(int v) const {
    auto it = params_.find(v);
    if (it == params_.end()) throw input_error("no parameter for vertex " + std::to_string(v));
    return it->second;
  }

  std::vector<Rational> point(int v) const {
    if (moment_) {
      const Rational t = parameter(v);
      std::vector<Rational> p(static_cast<std::size_t>(m_));
      Rational pw = 1;
      for (int c = 0; c < m_; ++c) {
        pw *= t;
        p[static_cast<std::size_t>(c)] = pw;
      }
      return p;
    }
    auto it = points_.find(v);
    if (it == points_.end()) throw input_error("no image point for vertex " + std::to_string(v));
    return it->second;
  }

  std::string digest() const {
    std::string s = "map|m=" + std::to_string(m_) + (moment_ ? "|moment" : "|explicit");
    for (const auto& [v, t] : params_) s += "|" + std::to_string(v) + "=" + format_rational(t);
    for (const auto& [v, p] : points_) {
      s += "|" + std::to_string(v) + "=(";
      for (const Rational& x : p) s += format_rational(x) + ",";
      s += ")";
    }
    return hex_digest(s);
  }

 private:
  int m_ = 0;
  bool moment_ = true;
  std::map<int, Rational> params_;
  std::map<int, std::vector<Rational>> points_;
};

inline GeneralPositionMap moment_map(const Complex& k, int m,
                                     std::optional<std::vector<Rational>> params = std::nullopt) {
  return GeneralPositionMap::moment(k, m, std::move(params));
}

namespace detail {

enum class AffineSolve { Unique, NoSolution, Underdetermined };

// Gauss-Jordan over Q on an augmented matrix (last column = rhs).
// First-nonzero pivoting; exact arithmetic throughout.
inline AffineSolve gauss_solve(std::vector<std::vector<Rational>> aug, std::size_t unknowns,
                               std::vector<Rational>& solution) {
  const std::size_t nrows = aug.size();
  std::vector<std::size_t> pivot_col;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < unknowns && pr < nrows; ++c) {
    std::size_t pivot = pr;
    while (pivot < nrows && aug[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(aug[pr], aug[pivot]);
    const Rational inv = aug[pr][c];
    for (std::size_t j = c; j <= unknowns; ++j) aug[pr][j] /= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == pr || aug[r][c] == 0) continue;
      const Rational factor = aug[r][c];
      for (std::size_t j = c; j <= unknowns; ++j) aug[r][j] -= factor * aug[pr][j];
    }
    pivot_col.push_back(c);
    ++pr;
  }
  for (std::size_t r = pr; r < nrows; ++r)
    if (aug[r][unknowns] != 0) return AffineSolve::NoSolution;
  if (pivot_col.size() < unknowns) return AffineSolve::Underdetermined;
  solution.assign(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) solution[pivot_col[i]] = aug[i][unknowns];
  return AffineSolve::Unique;
}

}  // namespace detail

/**
 * Exact count of points in f(relint σ) ∩ f(relint τ) for a disjoint pair
 * with dim σ + dim τ = m. Solves the affine system
 *   Σ λ_i u_i = Σ μ_j v_j,  Σ λ_i = 1,  Σ μ_j = 1
 * over Q and tests strict positivity of all coefficients. For m = 0 the
 * target is a single point, so the count is 1.
 *
 * Throws degenerate_position when the system is underdetermined or the
 * unique solution touches a face (some coefficient is zero): the map is not
 * in general position for this pair.
 */
inline int pair_intersections(const Simplex& sigma, const Simplex& tau,
                              const GeneralPositionMap& f) {
  if (!sigma.disjoint_with(tau))
    throw input_error("pair_intersections requires disjoint simplices");
  const int m = f.target_dim();
  if (sigma.dimension() + tau.dimension() != m)
    throw input_error("pair_intersections: dimension sum " +
                      std::to_string(sigma.dimension() + tau.dimension()) +
                      " != target dimension " + std::to_string(m));
  if (m == 0) return 1;

  const std::size_t ns = sigma.vertices().size(), nt = tau.vertices().size();
  const std::size_t unknowns = ns + nt;  // = m + 2
  std::vector<std::vector<Rational>> aug(
      static_cast<std::size_t>(m) + 2, std::vector<Rational>(unknowns + 1, Rational(0)));
  for (std::size_t i = 0; i < ns; ++i) {
    const std::vector<Rational> u = f.point(sigma.vertices()[i]);
    for (int r = 0; r < m; ++r) aug[static_cast<std::size_t>(r)][i] = u[static_cast<std::size_t>(r)];
    aug[static_cast<std::size_t>(m)][i] = 1;
  }
  for (std::size_t j = 0; j < nt; ++j) {
    const std::vector<Rational> v = f.point(tau.vertices()[j]);
    for (int r = 0; r < m; ++r) aug[static_cast<std::size_t>(r)][ns + j] = -v[static_cast<std::size_t>(r)];
    aug[static_cast<std::size_t>(m) + 1][ns + j] = 1;
  }
  aug[static_cast<std::size_t>(m)][unknowns] = 1;
  aug[static_cast<std::size_t>(m) + 1][unknowns] = 1;

  std::vector<Rational> x;
  switch (detail::gauss_solve(std::move(aug), unknowns, x)) {
    case detail::AffineSolve::NoSolution:
      return 0;  // affine hulls do not meet
    case detail::AffineSolve::Underdetermined:
      throw degenerate_position("affine hulls of " + sigma.to_string() + " and " +
                                tau.to_string() + " meet in more than one point");
    case detail::AffineSolve::Unique:
      break;
  }
  bool boundary = false;
  for (const Rational& c : x) {
    if (c < 0) return 0;
    if (c == 0) boundary = true;
  }
  if (boundary)
    throw degenerate_position("intersection of " + sigma.to_string() + " and " +
                              tau.to_string() + " lies on a face");
  return 1;
}

/**
 * Moment-curve fast path: true iff the m+2 parameters of σ ∪ τ, sorted,
 * alternate between σ-vertices and τ-vertices (the Radon partition of
 * points on the moment curve crosses exactly when it alternates).
 */
inline bool alternation_predicate(const Simplex& sigma, const Simplex& tau,
                                  const GeneralPositionMap& f) {
  if (!f.is_moment()) throw input_error("alternation_predicate requires a moment-curve map");
  if (f.target_dim() < 1) throw input_error("alternation_predicate requires m >= 1");
  if (!sigma.disjoint_with(tau))
    throw input_error("alternation_predicate requires disjoint simplices");
  if (sigma.dimension() + tau.dimension() != f.target_dim())
    throw input_error("alternation_predicate: dimension sum != target dimension");

  std::vector<std::pair<Rational, bool>> marks;  // (parameter, belongs to sigma)
  for (int v : sigma.vertices()) marks.emplace_back(f.parameter(v), true);
  for (int v : tau.vertices()) marks.emplace_back(f.parameter(v), false);
  std::sort(marks.begin(), marks.end());
  for (std::size_t i = 1; i < marks.size(); ++i)
    if (marks[i].second == marks[i - 1].second) return false;
  return true;
}

/** Total number of intersection points over a family of pairs. */
inline long long total_intersections(const std::vector<UnorderedCell>& pairs,
                                     const GeneralPositionMap& f) {
  long long count = 0;
  for (const UnorderedCell& c : pairs) count += pair_intersections(c.first, c.second, f);
  return count;
}

/** Parity (element of GF(2)) of the total intersection count. */
inline int total_parity(const std::vector<UnorderedCell>& pairs, const GeneralPositionMap& f) {
  return static_cast<int>(total_intersections(pairs, f) & 1);
}

}  // namespace vko
