#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "vko/deleted_product.hpp"
#include "vko/gf2.hpp"

using vko::BitMatrix;
using vko::BitVector;

namespace {

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(density);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

std::vector<std::vector<int>> to_ints(const BitMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  return out;
}

}  // namespace

TEST_CASE("rank basics") {
  BitMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, true);
  CHECK(vko::rank(id) == 3);
  CHECK(vko::rank(BitMatrix(4, 6)) == 0);
}

TEST_CASE("rank matches naive elimination on random matrices") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 40);
    const BitMatrix m = random_matrix(rng, dim(rng), dim(rng));
    CHECK(vko::rank(m) == oracles::naive_rank_mod2(to_ints(m)));
  }
}

TEST_CASE("rank of K33 deleted-product boundary matches naive elimination") {
  const auto dp = vko::DeletedProductComplex::build(oracles::k33());
  const BitMatrix b2 = dp.boundary_matrix(2);
  CHECK(vko::rank(b2) == oracles::naive_rank_mod2(to_ints(b2)));
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 30);
    const BitMatrix m = random_matrix(rng, dim(rng), dim(rng));
    CHECK(vko::rank(m) == vko::rank(m.transposed()));
  }
}

TEST_CASE("apply basics") {
  BitMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
  BitVector x(4);
  x.set(1, true);
  x.set(3, true);
  CHECK(vko::apply(id, x) == x);
  CHECK(vko::apply(BitMatrix(4, 4), x).is_zero());
  BitVector bad(3);
  CHECK_THROWS_AS(vko::apply(id, bad), vko::input_error);
}

TEST_CASE("solve_in_image basics") {
  BitMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, true);
  BitVector b(3);
  b.set(0, true);
  b.set(2, true);
  auto x = vko::solve_in_image(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  BitVector nonzero(2);
  nonzero.set(1, true);
  CHECK_FALSE(vko::solve_in_image(BitMatrix(2, 5), nonzero).has_value());
  CHECK(vko::solve_in_image(BitMatrix(2, 5), BitVector(2)).has_value());
  CHECK_THROWS_AS(vko::solve_in_image(id, BitVector(2)), vko::input_error);
}

TEST_CASE("solve_in_image recovers planted solutions") {
  std::mt19937 rng(777);
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix a = random_matrix(rng, 20, 30);
    BitVector planted(30);
    for (std::size_t i = 0; i < 30; ++i)
      if (bit(rng)) planted.set(i, true);
    const BitVector b = vko::apply(a, planted);
    auto x = vko::solve_in_image(a, b);
    REQUIRE(x.has_value());
    CHECK(vko::apply(a, *x) == b);  // any valid solution acceptable
  }
}

TEST_CASE("solve_in_image agrees with the rank criterion") {
  std::mt19937 rng(31337);
  std::bernoulli_distribution bit(0.3);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 18);
    const std::size_t rows = dim(rng), cols = dim(rng);
    const BitMatrix a = random_matrix(rng, rows, cols);
    BitVector b(rows);
    for (std::size_t i = 0; i < rows; ++i)
      if (bit(rng)) b.set(i, true);

    // rank([A|b]) > rank(A) iff no solution
    BitMatrix augmented(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) augmented.set(r, c, a.get(r, c));
      augmented.set(r, cols, b.get(r));
    }
    const bool solvable = vko::rank(augmented) == vko::rank(a);
    const auto x = vko::solve_in_image(a, b);
    CHECK(x.has_value() == solvable);
    if (x) CHECK(vko::apply(a, *x) == b);
  }
}
