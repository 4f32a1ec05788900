#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vko/errors.hpp"

namespace vko {

/**
 * An abstract simplex: a strictly increasing sequence of non-negative
 * integer vertex ids. Dimension = vertex count - 1.
 */
class Simplex {
 public:
  explicit Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty()) throw input_error("simplex must have at least one vertex");
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (verts_[i] < 0) throw input_error("simplex vertex ids must be non-negative");
      if (i > 0 && verts_[i] <= verts_[i - 1])
        throw input_error("simplex vertices must be strictly increasing: " + to_string_raw(verts_));
    }
  }

  int dimension() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<int>& vertices() const { return verts_; }

  bool contains(int v) const { return std::binary_search(verts_.begin(), verts_.end(), v); }

  bool disjoint_with(const Simplex& other) const {
    std::size_t i = 0, j = 0;
    while (i < verts_.size() && j < other.verts_.size()) {
      if (verts_[i] == other.verts_[j]) return false;
      if (verts_[i] < other.verts_[j]) ++i; else ++j;
    }
    return true;
  }

  // Union of two vertex-disjoint simplices, as a simplex.
  Simplex union_with(const Simplex& other) const {
    if (!disjoint_with(other)) throw input_error("union_with requires disjoint simplices");
    std::vector<int> merged;
    merged.reserve(verts_.size() + other.verts_.size());
    std::merge(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
               std::back_inserter(merged));
    return Simplex(std::move(merged));
  }

  // Codimension-1 faces; empty for a vertex.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    if (dimension() == 0) return out;
    for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
      std::vector<int> face;
      face.reserve(verts_.size() - 1);
      for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != skip) face.push_back(verts_[i]);
      out.emplace_back(std::move(face));
    }
    return out;
  }

  // All non-empty faces, the simplex itself included.
  std::vector<Simplex> faces() const {
    std::vector<Simplex> out;
    const std::size_t n = verts_.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(verts_[i]);
      out.emplace_back(std::move(face));
    }
    return out;
  }

  Simplex relabeled(int offset) const {
    std::vector<int> v = verts_;
    for (int& x : v) x += offset;
    return Simplex(std::move(v));
  }

  std::string to_string() const { return to_string_raw(verts_); }

  // Ordered by (dimension, lexicographic vertex list).
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.verts_.size() <=> b.verts_.size(); c != 0) return c;
    return a.verts_ <=> b.verts_;
  }
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

 private:
  static std::string to_string_raw(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
  }

  std::vector<int> verts_;
};

/**
 * A finite abstract simplicial complex: a downward-closed set of simplices
 * over integer vertex ids, with optional per-vertex text labels (used to
 * record join/cone provenance).
 *
 * Simplices are stored explicitly and sorted by (dimension, vertex list);
 * complexes in scope are small, so nothing is lazy. Values are immutable
 * after construction.
 */
class Complex {
 public:
  Complex() = default;

  /** Downward closure of the given maximal simplices. Idempotent. */
  static Complex from_maximal(const std::vector<Simplex>& maximal,
                              std::map<int, std::string> labels = {}) {
    std::set<Simplex> closed;
    for (const Simplex& s : maximal)
      for (Simplex& f : s.faces()) closed.insert(std::move(f));
    Complex k;
    k.simplices_.assign(closed.begin(), closed.end());
    k.attach_labels(std::move(labels));
    return k;
  }

  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }

  /** Sorted by (dimension, lexicographic vertex list). */
  const std::vector<Simplex>& simplices() const { return simplices_; }

  int dimension() const {
    if (empty()) throw input_error("dimension of empty complex is undefined");
    return simplices_.back().dimension();
  }

  bool contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
  }

  std::vector<int> vertex_ids() const {
    std::vector<int> out;
    for (const Simplex& s : simplices_) {
      if (s.dimension() > 0) break;  // vertices sort first
      out.push_back(s.vertices()[0]);
    }
    return out;
  }

  int max_vertex_id() const {
    if (empty()) throw input_error("empty complex has no vertices");
    int m = 0;
    for (int v : vertex_ids()) m = std::max(m, v);
    return m;
  }

  const std::map<int, std::string>& labels() const { return labels_; }

  std::vector<Simplex> maximal_simplices() const {
    std::set<Simplex> non_maximal;
    for (const Simplex& s : simplices_)
      for (const Simplex& f : s.facets()) non_maximal.insert(f);
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
      if (!non_maximal.count(s)) out.push_back(s);
    return out;
  }

  std::vector<Simplex> simplices_of_dim(int d) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
      if (s.dimension() == d) out.push_back(s);
    return out;
  }

  friend bool operator==(const Complex& a, const Complex& b) = default;

 private:
  friend Complex join(const Complex&, const Complex&);
  friend Complex skeleton(const Complex&, int);
  friend Complex with_isolated_vertices(Complex, const std::vector<int>&);

  void attach_labels(std::map<int, std::string> labels) {
    for (const auto& [v, text] : labels)
      if (!contains(Simplex({v})))
        throw input_error("label refers to unknown vertex " + std::to_string(v));
    labels_ = std::move(labels);
  }

  std::vector<Simplex> simplices_;  // sorted, unique, downward closed
  std::map<int, std::string> labels_;
};

/**
 * Join of two non-empty complexes: simplices are s1, s2 and s1 ∪ s2 for
 * si in Ki. The second factor is relabeled by offset max_id(K1)+1; each
 * relabeled vertex keeps its prior label, or gets its original id as text.
 * dim(K1*K2) = dim K1 + dim K2 + 1.
 */
inline Complex join(const Complex& k1, const Complex& k2) {
  if (k1.empty() || k2.empty()) throw input_error("join requires non-empty factors");
  const int offset = k1.max_vertex_id() + 1;

  std::set<Simplex> simplices(k1.simplices().begin(), k1.simplices().end());
  std::vector<Simplex> relabeled;
  relabeled.reserve(k2.size());
  for (const Simplex& s : k2.simplices()) {
    relabeled.push_back(s.relabeled(offset));
    simplices.insert(relabeled.back());
  }
  for (const Simplex& a : k1.simplices())
    for (const Simplex& b : relabeled) simplices.insert(a.union_with(b));

  Complex out;
  out.simplices_.assign(simplices.begin(), simplices.end());
  std::map<int, std::string> labels = k1.labels();
  for (int v : k2.vertex_ids()) {
    auto it = k2.labels().find(v);
    labels[v + offset] = it != k2.labels().end() ? it->second : std::to_string(v);
  }
  out.attach_labels(std::move(labels));
  return out;
}

/** Join with a single fresh vertex, labeled "cone". */
inline Complex cone(const Complex& k) {
  Complex pt = Complex::from_maximal({Simplex({0})}, {{0, "cone"}});
  return join(k, pt);
}

/** Subcomplex of simplices of dimension <= d. */
inline Complex skeleton(const Complex& k, int d) {
  if (d < 0) throw input_error("skeleton dimension must be non-negative");
  Complex out;
  for (const Simplex& s : k.simplices())
    if (s.dimension() <= d) out.simplices_.push_back(s);
  std::map<int, std::string> labels;
  for (const auto& [v, text] : k.labels())
    if (out.contains(Simplex({v}))) labels[v] = text;
  out.attach_labels(std::move(labels));
  return out;
}

/** The full n-simplex on vertices 0..n. */
inline Complex full_simplex(int n) {
  if (n < 0) throw input_error("simplex dimension must be non-negative");
  std::vector<int> verts(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) verts[static_cast<std::size_t>(i)] = i;
  return Complex::from_maximal({Simplex(std::move(verts))});
}

/** Complex extended by extra isolated vertices (used by file input). */
inline Complex with_isolated_vertices(Complex k, const std::vector<int>& vertices) {
  std::set<Simplex> all(k.simplices_.begin(), k.simplices_.end());
  for (int v : vertices) all.insert(Simplex({v}));
  k.simplices_.assign(all.begin(), all.end());
  return k;
}

}  // namespace vko
