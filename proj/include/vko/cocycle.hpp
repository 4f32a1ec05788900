#pragma once

#include <optional>
#include <string>
#include <utility>

#include "vko/certifier.hpp"
#include "vko/deleted_product.hpp"
#include "vko/genpos.hpp"
#include "vko/gf2.hpp"
#include "vko/pair_system.hpp"

namespace vko {

/**
 * The mod-2 intersection cochain of a complex for target dimension m: the
 * GF(2)-valued function on the m-cells of the unordered deleted product
 * whose value on {σ,τ} is |f(σ) ∩ f(τ)| mod 2 for a general-position map f.
 * Values are aligned with the canonical cell order of the deleted product.
 */
struct IntersectionCochain {
  int m = 0;
  std::string complex_digest;
  std::string map_digest;
  BitVector values;
};

inline IntersectionCochain intersection_cochain(const DeletedProductComplex& dp, int m,
                                                std::optional<GeneralPositionMap> f = std::nullopt) {
  const GeneralPositionMap map = f ? *f : moment_map(dp.source(), m);
  if (map.target_dim() != m) throw input_error("map target dimension != m");
  const auto& cells = dp.cells(m);
  IntersectionCochain out;
  out.m = m;
  out.complex_digest = complex_digest(dp.source());
  out.map_digest = map.digest();
  out.values = BitVector(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    out.values.set(i, pair_intersections(cells[i].first, cells[i].second, map) & 1);
  return out;
}

inline IntersectionCochain intersection_cochain(const Complex& k, int m,
                                                std::optional<GeneralPositionMap> f = std::nullopt) {
  return intersection_cochain(DeletedProductComplex::build(k), m, std::move(f));
}

/**
 * Outcome of the mod-2 obstruction test. When the intersection cochain is
 * not a coboundary, the mod-2 van Kampen class is nonzero and the complex
 * embeds in no contractible m-manifold. When it is a coboundary, the
 * witness is an (m-1)-cochain c with δc = intersection cochain; this is
 * explicitly inconclusive for embeddability (the mod-2 class only).
 */
struct ObstructionResult {
  bool nonzero = false;
  IntersectionCochain cochain;
  std::optional<BitVector> witness;  // (m-1)-cochain, present iff the class vanishes
};

inline ObstructionResult obstruction_vanishes(const Complex& k, int m,
                                              std::optional<GeneralPositionMap> f = std::nullopt) {
  if (m < 0) throw input_error("target dimension must be non-negative");
  const DeletedProductComplex dp = DeletedProductComplex::build(k);
  ObstructionResult res;
  if (m > dp.dimension() || dp.cells(m).empty()) {
    // No m-cells at all: vacuously vanishing, zero witness.
    res.nonzero = false;
    res.cochain = IntersectionCochain{m, complex_digest(k), "", BitVector(0)};
    res.witness = BitVector(dp.cells(m - 1).size());
    return res;
  }
  res.cochain = intersection_cochain(dp, m, std::move(f));
  if (m == 0) {
    // No (-1)-cells: the only coboundary is zero.
    res.nonzero = !res.cochain.values.is_zero();
    if (!res.nonzero) res.witness = BitVector(0);
    return res;
  }
  const BitMatrix coboundary = dp.boundary_matrix(m).transposed();
  std::optional<BitVector> witness = solve_in_image(coboundary, res.cochain.values);
  if (!witness) {
    res.nonzero = true;
    return res;
  }
  if (apply(coboundary, *witness) != res.cochain.values)
    throw std::logic_error("coboundary witness failed verification");
  res.nonzero = false;
  res.witness = std::move(witness);
  return res;
}

/**
 * Kronecker pairing of a cochain with the cycle Σ: the sum of the cochain
 * over Σ's cells, an element of GF(2). Equals the total intersection parity
 * of Σ under the map the cochain was computed from.
 */
inline int pair_with_cycle(const IntersectionCochain& cochain, const PairSystem& sigma,
                           const DeletedProductComplex& dp) {
  if (cochain.complex_digest != complex_digest(dp.source()))
    throw input_error("cochain was computed over a different complex (digest mismatch)");
  if (cochain.m != sigma.m) throw input_error("cochain and pair system have different m");
  int acc = 0;
  for (const UnorderedCell& c : sigma.pairs) {
    auto idx = dp.cell_index(c);
    if (!idx) throw input_error("sigma pair not a deleted-product cell: " + c.to_string());
    acc ^= cochain.values.get(*idx);
  }
  return acc;
}

}  // namespace vko
