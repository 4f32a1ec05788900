#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vko/constructors.hpp"
#include "vko/deleted_product.hpp"

using vko::Complex;
using vko::DeletedProductComplex;
using vko::Simplex;
using vko::UnorderedCell;

TEST_CASE("cell canonicalization") {
  const Simplex a({0, 1}), b({2});
  const UnorderedCell c1 = UnorderedCell::make(a, b);
  const UnorderedCell c2 = UnorderedCell::make(b, a);
  CHECK(c1 == c2);
  CHECK(c1.first == b);  // smaller under (dimension, lex)
  CHECK(c1.dimension() == 1);
  CHECK(UnorderedCell::make(c1.first, c1.second) == c1);  // stable
  CHECK_THROWS_AS(UnorderedCell::make(Simplex({0, 1}), Simplex({1, 2})), vko::input_error);
}

TEST_CASE("three-point set deleted product") {
  const auto dp = DeletedProductComplex::build(oracles::three_points());
  CHECK(dp.dimension() == 0);
  CHECK(dp.cells(0).size() == 3);
  CHECK(dp.cells(1).empty());
}

TEST_CASE("disjoint pair counts on K5 and K33") {
  const auto dp5 = DeletedProductComplex::build(oracles::complete_graph(5));
  CHECK(dp5.cells(2).size() == 15);  // 10 edges x 3 disjoint partners / 2
  const auto dp33 = DeletedProductComplex::build(oracles::k33());
  CHECK(dp33.cells(2).size() == 18);
}

TEST_CASE("K33 boundary matrix in dimension 2") {
  const auto dp = DeletedProductComplex::build(oracles::k33());
  const vko::BitMatrix b2 = dp.boundary_matrix(2);
  CHECK(b2.cols() == 18);
  for (std::size_t c = 0; c < b2.cols(); ++c) CHECK(b2.column_weight(c) == 4);
}

TEST_CASE("solid triangle deleted product") {
  // Disjoint pairs in the closed 2-simplex: vertex-vertex (three 0-cells)
  // and vertex-opposite-edge (three 1-cells). No pair reaches dimension 2.
  const auto dp = DeletedProductComplex::build(oracles::solid_triangle());
  CHECK(dp.dimension() == 1);
  CHECK(dp.cells(0).size() == 3);
  CHECK(dp.cells(1).size() == 3);
  const vko::BitMatrix b1 = dp.boundary_matrix(1);
  CHECK(b1.rows() == 3);
  CHECK(b1.cols() == 3);
  for (std::size_t c = 0; c < b1.cols(); ++c) CHECK(b1.column_weight(c) == 2);
  CHECK_THROWS_AS(dp.boundary_matrix(2), vko::input_error);
  CHECK_THROWS_AS(dp.boundary_matrix(0), vko::input_error);
}

TEST_CASE("ordered lift") {
  const auto dp = DeletedProductComplex::build(oracles::three_points());
  const auto lifted = DeletedProductComplex::ordered_lift(dp.cells(0)[0]);
  CHECK(lifted[0].first == lifted[1].second);
  CHECK(lifted[0].second == lifted[1].first);
  CHECK(lifted[0] != lifted[1]);  // the involution is free: sigma != tau always
}

namespace {

void check_counts_and_chain_complex(const Complex& k) {
  const auto dp = DeletedProductComplex::build(k);

  // Ordered cell count = 2 x unordered in every dimension (oracle enumeration).
  std::set<std::set<int>> simplices;
  for (const Simplex& s : k.simplices())
    simplices.insert(std::set<int>(s.vertices().begin(), s.vertices().end()));
  const auto ordered = oracles::ordered_disjoint_pair_counts(simplices);
  for (int d = 0; d <= dp.dimension(); ++d) {
    const long long expected = ordered.count(d) ? ordered.at(d) : 0;
    CHECK(2 * static_cast<long long>(dp.cells(d).size()) == expected);
  }

  // The involution is free.
  for (int d = 0; d <= dp.dimension(); ++d)
    for (const UnorderedCell& c : dp.cells(d)) CHECK(c.first != c.second);

  // Boundary of boundary vanishes over GF(2).
  for (int d = 2; d <= dp.dimension(); ++d) {
    const vko::BitMatrix bd = dp.boundary_matrix(d);
    const vko::BitMatrix bd1 = dp.boundary_matrix(d - 1);
    for (std::size_t col = 0; col < bd.cols(); ++col) {
      vko::BitVector chain(bd.cols());
      chain.set(col, true);
      CHECK(vko::apply(bd1, vko::apply(bd, chain)).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("cell counts and boundary-of-boundary on the suite") {
  check_counts_and_chain_complex(oracles::three_points());
  check_counts_and_chain_complex(oracles::path2());
  check_counts_and_chain_complex(oracles::solid_triangle());
  check_counts_and_chain_complex(oracles::complete_graph(5));
  check_counts_and_chain_complex(oracles::k33());
  check_counts_and_chain_complex(vko::cone(oracles::three_points()));
  check_counts_and_chain_complex(vko::vk(3).complex);
  check_counts_and_chain_complex(vko::flores(2).complex);
}
