#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vko/errors.hpp"
#include "vko/gf2.hpp"
#include "vko/simplex.hpp"

namespace vko {

/**
 * A cell {σ,τ} of the unordered (quotient) deleted product: an unordered
 * pair of vertex-disjoint simplices, stored canonically with the smaller
 * simplex first under the (dimension, lexicographic vertices) order.
 * Cell dimension = dim σ + dim τ.
 */
struct UnorderedCell {
  Simplex first, second;

  static UnorderedCell make(Simplex a, Simplex b) {
    if (!a.disjoint_with(b))
      throw input_error("deleted-product cell requires disjoint simplices: " +
                        a.to_string() + " vs " + b.to_string());
    if (b < a) std::swap(a, b);
    return UnorderedCell{std::move(a), std::move(b)};
  }

  int dimension() const { return first.dimension() + second.dimension(); }

  std::string to_string() const { return first.to_string() + "x" + second.to_string(); }

  friend std::strong_ordering operator<=>(const UnorderedCell&, const UnorderedCell&) = default;
};

/**
 * The unordered deleted product of a complex K: all cells {σ,τ} with
 * σ,τ ∈ K and σ∩τ = ∅, grouped by dimension, with the mod-2 boundary
 * ∂{σ,τ} = Σ {σ',τ} + Σ {σ,τ'} over facets σ' of σ and τ' of τ.
 *
 * Only the quotient is materialized; ordered cells exist virtually via
 * ordered_lift. Immutable after build.
 */
class DeletedProductComplex {
 public:
  static DeletedProductComplex build(const Complex& k) {
    DeletedProductComplex dp;
    dp.source_ = k;
    const auto& ss = k.simplices();
    int max_dim = -1;
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = i + 1; j < ss.size(); ++j)
        if (ss[i].disjoint_with(ss[j]))
          max_dim = std::max(max_dim, ss[i].dimension() + ss[j].dimension());
    dp.cells_.resize(static_cast<std::size_t>(max_dim + 1));
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = i + 1; j < ss.size(); ++j)
        if (ss[i].disjoint_with(ss[j])) {
          UnorderedCell cell = UnorderedCell::make(ss[i], ss[j]);
          dp.cells_[static_cast<std::size_t>(cell.dimension())].push_back(std::move(cell));
        }
    dp.index_.resize(dp.cells_.size());
    for (std::size_t d = 0; d < dp.cells_.size(); ++d) {
      std::sort(dp.cells_[d].begin(), dp.cells_[d].end());
      for (std::size_t i = 0; i < dp.cells_[d].size(); ++i)
        dp.index_[d].emplace(dp.cells_[d][i], i);
    }
    return dp;
  }

  const Complex& source() const { return source_; }

  /** Largest cell dimension; -1 when there are no cells at all. */
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }

  const std::vector<UnorderedCell>& cells(int d) const {
    static const std::vector<UnorderedCell> empty;
    if (d < 0 || d > dimension()) return empty;
    return cells_[static_cast<std::size_t>(d)];
  }

  std::optional<std::size_t> cell_index(const UnorderedCell& c) const {
    const int d = c.dimension();
    if (d < 0 || d > dimension()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(c);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  /**
   * Mod-2 boundary matrix from d-cells to (d-1)-cells: rows are (d-1)-cells,
   * columns are d-cells, entry 1 iff incident. Requires 1 <= d <= dimension().
   */
  BitMatrix boundary_matrix(int d) const {
    if (d < 1 || d > dimension())
      throw input_error("boundary_matrix: dimension " + std::to_string(d) +
                        " out of range [1, " + std::to_string(dimension()) + "]");
    const auto& lo = cells(d - 1);
    const auto& hi = cells(d);
    BitMatrix m(lo.size(), hi.size());
    for (std::size_t j = 0; j < hi.size(); ++j)
      for (const UnorderedCell& f : boundary_cells(hi[j])) {
        auto row = cell_index(f);
        if (!row) throw input_error("boundary cell missing from complex: " + f.to_string());
        // Facets are pairwise distinct, so incidences are 0/1 and no mod-2
        // cancellation bookkeeping is needed.
        m.set(*row, j, true);
      }
    return m;
  }

  /** Facets of a cell, canonical, in deterministic order. */
  static std::vector<UnorderedCell> boundary_cells(const UnorderedCell& c) {
    std::vector<UnorderedCell> out;
    for (const Simplex& f : c.first.facets()) out.push_back(UnorderedCell::make(f, c.second));
    for (const Simplex& f : c.second.facets()) out.push_back(UnorderedCell::make(c.first, f));
    return out;
  }

  /** The two ordered cells (σ,τ) and (τ,σ) over an unordered cell. */
  static std::array<std::pair<Simplex, Simplex>, 2> ordered_lift(const UnorderedCell& c) {
    return {std::make_pair(c.first, c.second), std::make_pair(c.second, c.first)};
  }

 private:
  Complex source_;
  std::vector<std::vector<UnorderedCell>> cells_;          // by dimension
  std::vector<std::map<UnorderedCell, std::size_t>> index_;
};

}  // namespace vko
