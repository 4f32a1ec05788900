#pragma once

#include <optional>
#include <string>

#include "vko/deleted_product.hpp"
#include "vko/genpos.hpp"
#include "vko/gf2.hpp"
#include "vko/pair_system.hpp"

namespace vko {

struct CycleCheck {
  bool pass = false;
  std::optional<UnorderedCell> witness;  // an (m-1)-cell with odd incidence, on failure
};

struct ParityCheck {
  bool pass = false;
  long long count = 0;  // exact total intersection count
  GeneralPositionMap map;
};

struct EvennessCheck {
  bool pass = false;
  std::optional<Simplex> witness;  // an m-simplex paired with an odd number of vertices
};

/**
 * Machine-checkable certificate that (K, Σ) is an m-obstructor complex:
 * Σ is a mod-2 cycle in the unordered deleted product, its total
 * intersection count under a general-position map is odd, and every
 * m-simplex of K is paired with an even number of vertices. A passing
 * verdict certifies that K embeds in no contractible m-manifold (in
 * particular, not in R^m).
 */
struct Certificate {
  std::string complex_digest;
  std::string sigma_digest;
  int m = 0;
  CycleCheck condition1;
  ParityCheck condition2;
  EvennessCheck condition3;
  bool obstructor = false;
  std::string meaning;
};

/**
 * Condition 1: the cells of Σ sum to a mod-2 cycle, i.e. every (m-1)-cell
 * of the deleted product is a face of an even number of Σ-cells. Vacuous
 * for m = 0. On failure, returns one offending (m-1)-cell.
 */
inline CycleCheck check_cycle(const DeletedProductComplex& dp, const PairSystem& sigma) {
  if (sigma.m == 0) return {true, std::nullopt};
  if (sigma.m > dp.dimension() || dp.cells(sigma.m - 1).empty()) return {true, std::nullopt};
  const BitMatrix boundary = dp.boundary_matrix(sigma.m);
  BitVector indicator(dp.cells(sigma.m).size());
  for (const UnorderedCell& c : sigma.pairs) {
    auto idx = dp.cell_index(c);
    if (!idx) throw input_error("sigma pair not a deleted-product cell: " + c.to_string());
    indicator.set(*idx, true);
  }
  const BitVector image = apply(boundary, indicator);
  if (image.is_zero()) return {true, std::nullopt};
  for (std::size_t r = 0; r < image.size(); ++r)
    if (image.get(r)) return {false, dp.cells(sigma.m - 1)[r]};
  return {false, std::nullopt};  // unreachable
}

inline CycleCheck check_cycle(const Complex& k, const PairSystem& sigma) {
  return check_cycle(DeletedProductComplex::build(k), sigma);
}

/**
 * Condition 2: the total intersection count of Σ under a general-position
 * map is odd. Defaults to the canonical moment map. Reports the exact count.
 */
inline ParityCheck check_parity(const Complex& k, const PairSystem& sigma,
                                std::optional<GeneralPositionMap> f = std::nullopt) {
  GeneralPositionMap map = f ? *f : moment_map(k, sigma.m);
  const long long count = total_intersections(sigma.pairs, map);
  return {(count & 1) == 1, count, std::move(map)};
}

/**
 * Condition 3: for every m-simplex σ of K, the number of vertices v with
 * {σ,v} ∈ Σ is even. Vacuously true when K has no m-simplices.
 */
inline EvennessCheck check_evenness(const Complex& k, const PairSystem& sigma) {
  for (const Simplex& s : k.simplices_of_dim(sigma.m)) {
    int paired_vertices = 0;
    for (int v : k.vertex_ids()) {
      if (s.contains(v)) continue;
      if (sigma.contains(UnorderedCell::make(s, Simplex({v})))) ++paired_vertices;
    }
    if (paired_vertices % 2 != 0) return {false, s};
  }
  return {true, std::nullopt};
}

struct CertifyOptions {
  std::optional<GeneralPositionMap> map;  // default: canonical moment map
};

/** Validates Σ against K; throws input_error if malformed. */
inline void validate_pair_system(const Complex& k, const PairSystem& sigma) {
  for (const UnorderedCell& c : sigma.pairs) {
    if (!k.contains(c.first)) throw input_error("pair simplex " + c.first.to_string() + " not in complex");
    if (!k.contains(c.second)) throw input_error("pair simplex " + c.second.to_string() + " not in complex");
    if (c.dimension() != sigma.m)
      throw input_error("pair " + c.to_string() + " has dimension sum " +
                        std::to_string(c.dimension()) + ", expected " + std::to_string(sigma.m));
  }
  if (!k.empty() && k.dimension() > sigma.m)
    throw input_error("complex dimension " + std::to_string(k.dimension()) +
                      " exceeds m = " + std::to_string(sigma.m));
}

/**
 * Runs all three conditions of the m-obstructor definition and assembles a
 * certificate. Precondition failures (malformed Σ) throw input_error;
 * mathematical failures yield a certificate with verdict false.
 */
inline Certificate certify(const Complex& k, const PairSystem& sigma,
                           const CertifyOptions& options = {}) {
  validate_pair_system(k, sigma);
  Certificate cert;
  cert.complex_digest = complex_digest(k);
  cert.sigma_digest = sigma.digest();
  cert.m = sigma.m;
  const DeletedProductComplex dp = DeletedProductComplex::build(k);
  cert.condition1 = check_cycle(dp, sigma);
  cert.condition2 = check_parity(k, sigma, options.map);
  cert.condition3 = check_evenness(k, sigma);
  cert.obstructor = cert.condition1.pass && cert.condition2.pass && cert.condition3.pass;
  if (cert.obstructor)
    cert.meaning = "the complex admits no embedding into R^" + std::to_string(sigma.m) +
                   " or any other contractible " + std::to_string(sigma.m) + "-manifold";
  else
    cert.meaning = "not certified as a " + std::to_string(sigma.m) + "-obstructor complex";
  return cert;
}

}  // namespace vko
