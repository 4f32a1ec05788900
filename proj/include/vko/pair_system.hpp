#pragma once

#include <string>
#include <vector>

#include "vko/deleted_product.hpp"
#include "vko/digest.hpp"
#include "vko/errors.hpp"
#include "vko/simplex.hpp"

namespace vko {

/**
 * A pair system Σ over a complex K: a set of unordered pairs of disjoint
 * simplices of K, each with dimension sum exactly m. These are the
 * candidate m-cycles fed to the certifier.
 *
 * Validity (membership, disjointness, dimension sum, no duplicates) is a
 * construction-time precondition with precise input errors; it is distinct
 * from the three mathematical conditions the certifier decides.
 */
struct PairSystem {
  int m = 0;
  std::vector<UnorderedCell> pairs;  // canonical, sorted, unique

  static PairSystem create(const Complex& k, int m,
                           const std::vector<std::pair<Simplex, Simplex>>& raw_pairs) {
    if (m < 0) throw input_error("pair system dimension must be non-negative");
    PairSystem sigma;
    sigma.m = m;
    sigma.pairs.reserve(raw_pairs.size());
    for (const auto& [a, b] : raw_pairs) {
      if (!k.contains(a)) throw input_error("pair simplex " + a.to_string() + " not in complex");
      if (!k.contains(b)) throw input_error("pair simplex " + b.to_string() + " not in complex");
      UnorderedCell cell = UnorderedCell::make(a, b);  // checks disjointness
      if (cell.dimension() != m)
        throw input_error("pair " + cell.to_string() + " has dimension sum " +
                          std::to_string(cell.dimension()) + ", expected " + std::to_string(m));
      sigma.pairs.push_back(std::move(cell));
    }
    std::sort(sigma.pairs.begin(), sigma.pairs.end());
    for (std::size_t i = 1; i < sigma.pairs.size(); ++i)
      if (sigma.pairs[i] == sigma.pairs[i - 1])
        throw input_error("duplicate pair in sigma: " + sigma.pairs[i].to_string());
    return sigma;
  }

  bool contains(const UnorderedCell& c) const {
    return std::binary_search(pairs.begin(), pairs.end(), c);
  }

  std::string digest() const {
    std::string s = "sigma|m=" + std::to_string(m);
    for (const UnorderedCell& c : pairs) s += "|" + c.to_string();
    return hex_digest(s);
  }

  friend bool operator==(const PairSystem&, const PairSystem&) = default;
};

inline std::string complex_digest(const Complex& k) {
  std::string s = "complex";
  for (const Simplex& sx : k.simplices()) s += "|" + sx.to_string();
  for (const auto& [v, text] : k.labels()) s += "|L" + std::to_string(v) + "=" + text;
  return hex_digest(s);
}

}  // namespace vko
