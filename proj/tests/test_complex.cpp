#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "oracles.hpp"
#include "vko/simplex.hpp"

using vko::Complex;
using vko::Simplex;

TEST_CASE("simplex validation") {
  CHECK(Simplex({0}).dimension() == 0);
  CHECK(Simplex({0, 3, 7}).dimension() == 2);
  CHECK_THROWS_AS(Simplex({}), vko::input_error);
  CHECK_THROWS_AS(Simplex({1, 1}), vko::input_error);
  CHECK_THROWS_AS(Simplex({2, 1}), vko::input_error);
  CHECK_THROWS_AS(Simplex({-1, 0}), vko::input_error);
}

TEST_CASE("simplex faces and unions") {
  const Simplex t({0, 1, 2});
  CHECK(t.facets().size() == 3);
  CHECK(t.faces().size() == 7);
  CHECK(Simplex({4}).facets().empty());
  CHECK(Simplex({0, 2}).union_with(Simplex({1, 5})) == Simplex({0, 1, 2, 5}));
  CHECK_THROWS_AS(Simplex({0, 2}).union_with(Simplex({2, 5})), vko::input_error);
  CHECK(Simplex({0, 2}).disjoint_with(Simplex({1, 3})));
  CHECK_FALSE(Simplex({0, 2}).disjoint_with(Simplex({2, 3})));
}

TEST_CASE("from_maximal closure counts") {
  CHECK(Complex::from_maximal({Simplex({0})}).size() == 1);
  CHECK(Complex::from_maximal({Simplex({0, 1, 2})}).size() == 7);

  // K5: 5 vertices + 10 edges = 15 simplices.
  const Complex k5 = oracles::complete_graph(5);
  CHECK(k5.size() == 15);

  // Cross-check against the brute-force subset closure.
  std::vector<std::set<int>> maximal;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) maximal.push_back({i, j});
  CHECK(oracles::closure(maximal).size() == 15);
}

TEST_CASE("dimension") {
  CHECK(oracles::three_points().dimension() == 0);
  CHECK(oracles::complete_graph(5).dimension() == 1);
  CHECK(Complex::from_maximal({Simplex({0, 1, 2})}).dimension() == 2);
  CHECK_THROWS_AS(Complex().dimension(), vko::input_error);
}

TEST_CASE("join of two 3-point sets is K33") {
  const Complex j = vko::join(oracles::three_points(), oracles::three_points());
  CHECK(j.vertex_ids().size() == 6);
  CHECK(j.simplices_of_dim(1).size() == 9);
  CHECK(j.dimension() == 1);
  CHECK(j == oracles::k33());
  // Relabeling provenance: second factor keeps its original ids as labels.
  CHECK(j.labels().at(3) == "0");
  CHECK(j.labels().at(5) == "2");
}

TEST_CASE("join with a point is the cone") {
  const Complex k = oracles::three_points();
  const Complex pt = Complex::from_maximal({Simplex({0})});
  CHECK(vko::join(k, pt).simplices() == vko::cone(k).simplices());
}

TEST_CASE("join dimension and simplex counts") {
  const Complex j = vko::join(oracles::complete_graph(5), oracles::three_points());
  CHECK(j.dimension() == 2);
  CHECK(j.simplices_of_dim(2).size() == 30);  // 10 edges x 3 points
  CHECK_THROWS_AS(vko::join(Complex(), oracles::three_points()), vko::input_error);
}

TEST_CASE("cone examples") {
  const Complex tripod = vko::cone(oracles::three_points());
  CHECK(tripod.vertex_ids().size() == 4);
  CHECK(tripod.simplices_of_dim(1).size() == 3);
  CHECK(tripod.labels().at(3) == "cone");

  CHECK(vko::cone(Complex::from_maximal({Simplex({0})})).simplices_of_dim(1).size() == 1);

  const Complex ck33 = vko::cone(oracles::k33());
  CHECK(ck33.simplices_of_dim(2).size() == 9);  // one triangle per edge
}

TEST_CASE("skeleton and full simplex") {
  const Complex k5 = vko::skeleton(vko::full_simplex(4), 1);
  CHECK(k5 == oracles::complete_graph(5));
  CHECK(vko::full_simplex(2).size() == 7);
  CHECK_THROWS_AS(vko::skeleton(oracles::k33(), -1), vko::input_error);
}

namespace {

Complex random_complex(std::mt19937& rng) {
  std::uniform_int_distribution<int> nverts(1, 7), card(1, 4);
  const int n = nverts(rng);
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::vector<Simplex> maximal;
  const int count = card(rng) + 1;
  for (int i = 0; i < count; ++i) {
    std::set<int> picked;
    const int size = card(rng);
    for (int j = 0; j < size; ++j) picked.insert(vert(rng));
    maximal.emplace_back(std::vector<int>(picked.begin(), picked.end()));
  }
  return Complex::from_maximal(maximal);
}

}  // namespace

TEST_CASE("closure idempotence on random complexes") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex k = random_complex(rng);
    CHECK(Complex::from_maximal(k.maximal_simplices()) == Complex::from_maximal(k.simplices()));
    CHECK(Complex::from_maximal(k.maximal_simplices()).simplices() == k.simplices());
  }
}

TEST_CASE("join associativity up to relabeling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex a = random_complex(rng), b = random_complex(rng), c = random_complex(rng);
    const Complex left = vko::join(vko::join(a, b), c);
    const Complex right = vko::join(a, vko::join(b, c));
    CHECK(left.simplices() == right.simplices());
    CHECK(left.labels() == right.labels());
  }
}

TEST_CASE("join dimension is additive plus one") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Complex a = random_complex(rng), b = random_complex(rng);
    CHECK(vko::join(a, b).dimension() == a.dimension() + b.dimension() + 1);
  }
}
