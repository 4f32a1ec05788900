#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "vko/errors.hpp"
#include "vko/pair_system.hpp"
#include "vko/simplex.hpp"

namespace vko {

/**
 * A candidate obstructor: complex, pair system and target dimension,
 * plus the construction expression it came from.
 */
struct ObstructorSpec {
  Complex complex;
  PairSystem sigma;
  int m = 0;
  std::string provenance;
};

/** The 3-point set with Σ = all three vertex pairs; a 0-obstructor. */
inline ObstructorSpec points3() {
  Complex k = Complex::from_maximal({Simplex({0}), Simplex({1}), Simplex({2})});
  std::vector<std::pair<Simplex, Simplex>> pairs = {
      {Simplex({0}), Simplex({1})}, {Simplex({0}), Simplex({2})}, {Simplex({1}), Simplex({2})}};
  return {k, PairSystem::create(k, 0, pairs), 0, "points3"};
}

/**
 * Cone construction: from an m-obstructor (K, Σ) builds the (m+1)-obstructor
 * (cK, Σ') with Σ' = { {cσ,τ}, {σ,cτ} : {σ,τ} ∈ Σ }, twice the pairs.
 */
inline ObstructorSpec cone_spec(const ObstructorSpec& s) {
  Complex coned = cone(s.complex);
  const int apex = coned.max_vertex_id();
  const Simplex apex_simplex({apex});
  std::vector<std::pair<Simplex, Simplex>> pairs;
  pairs.reserve(2 * s.sigma.pairs.size());
  for (const UnorderedCell& c : s.sigma.pairs) {
    pairs.emplace_back(c.first.union_with(apex_simplex), c.second);
    pairs.emplace_back(c.first, c.second.union_with(apex_simplex));
  }
  return {coned, PairSystem::create(coned, s.m + 1, pairs), s.m + 1,
          "cone(" + s.provenance + ")"};
}

/**
 * Join construction: from an m1- and an m2-obstructor builds the
 * (m1+m2+2)-obstructor (K1*K2, Σ') where Σ' has 2|Σ1||Σ2| pairs
 * { σ1*σ2, τ1*τ2 } and { σ1*τ2, τ1*σ2 }. The second factor is relabeled
 * by the same offset the complex join uses.
 */
inline ObstructorSpec join_spec(const ObstructorSpec& s1, const ObstructorSpec& s2) {
  Complex joined = join(s1.complex, s2.complex);
  const int offset = s1.complex.max_vertex_id() + 1;
  std::vector<std::pair<Simplex, Simplex>> pairs;
  pairs.reserve(2 * s1.sigma.pairs.size() * s2.sigma.pairs.size());
  for (const UnorderedCell& c1 : s1.sigma.pairs)
    for (const UnorderedCell& c2 : s2.sigma.pairs) {
      const Simplex a = c2.first.relabeled(offset);
      const Simplex b = c2.second.relabeled(offset);
      pairs.emplace_back(c1.first.union_with(a), c1.second.union_with(b));
      pairs.emplace_back(c1.first.union_with(b), c1.second.union_with(a));
    }
  const int m = s1.m + s2.m + 2;
  return {joined, PairSystem::create(joined, m, pairs), m,
          "join(" + s1.provenance + ", " + s2.provenance + ")"};
}

/**
 * The j-fold join of 3-point sets, a (2j-2)-obstructor: the utilities
 * graph K_{3,3} for j = 2, van Kampen's complex in general.
 */
inline ObstructorSpec vk(int j) {
  if (j < 1) throw input_error("vk(j) requires j >= 1");
  ObstructorSpec s = points3();
  for (int i = 1; i < j; ++i) s = join_spec(s, points3());
  s.provenance = "vk(" + std::to_string(j) + ")";
  return s;
}

/**
 * Flores complex: the n-skeleton of the (2n+2)-simplex with Σ = all pairs
 * of disjoint n-simplices, a 2n-obstructor. flores(1) is K_5.
 */
inline ObstructorSpec flores(int n) {
  if (n < 1) throw input_error("flores(n) requires n >= 1");
  Complex k = skeleton(full_simplex(2 * n + 2), n);
  std::vector<std::pair<Simplex, Simplex>> pairs;
  const std::vector<Simplex> top = k.simplices_of_dim(n);
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j)
      if (top[i].disjoint_with(top[j])) pairs.emplace_back(top[i], top[j]);
  return {k, PairSystem::create(k, 2 * n, pairs), 2 * n, "flores(" + std::to_string(n) + ")"};
}

namespace detail {

// Recursive-descent parser for construction expressions:
//   expr := "points3" | "vk" "(" INT ")" | "flores" "(" INT ")"
//         | "cone" "(" expr ")" | "join" "(" expr "," expr ")"
class ConstructionParser {
 public:
  explicit ConstructionParser(const std::string& text) : text_(text) {}

  ObstructorSpec parse() {
    ObstructorSpec s = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  ObstructorSpec parse_expr() {
    skip_ws();
    const std::string word = parse_word();
    if (word == "points3") return points3();
    if (word == "vk") return vk(parse_int_arg());
    if (word == "flores") return flores(parse_int_arg());
    if (word == "cone") {
      expect('(');
      ObstructorSpec inner = parse_expr();
      expect(')');
      return cone_spec(inner);
    }
    if (word == "join") {
      expect('(');
      ObstructorSpec a = parse_expr();
      expect(',');
      ObstructorSpec b = parse_expr();
      expect(')');
      return join_spec(a, b);
    }
    fail("unknown construction '" + word + "'");
  }

  int parse_int_arg() {
    expect('(');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int value = std::stoi(text_.substr(start, pos_ - start));
    expect(')');
    return value;
  }

  std::string parse_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected construction name");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw input_error("construction expression error at position " + std::to_string(pos_) +
                      ": " + why);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/** Parses and evaluates a construction expression like "join(vk(2), cone(points3))". */
inline ObstructorSpec build_expression(const std::string& text) {
  return detail::ConstructionParser(text).parse();
}

}  // namespace vko
