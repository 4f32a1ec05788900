#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "vko/errors.hpp"

namespace vko {

/**
 * Expression tree over group atoms and products, for deriving lower bounds
 * on the obstructor dimension (and hence the action dimension):
 *
 *   atom := "1" | "Z" | "F" k (free group, k >= 2)
 *         | name "[obdim>=" b ("," flag)* "]"      (asserted subgroup witness)
 *   expr := atom | expr "^" n | expr "x" expr | expr "><" expr
 *
 * "x" is direct product; "><" is a split extension (semidirect product)
 * whose LEFT factor is the normal subgroup; it binds looser than "x" and
 * associates to the right. Flags: weakly_convex, hyperbolic, cat0,
 * semihyperbolic (the latter three imply weak convexity).
 */
struct GroupExpr {
  enum class Kind { Finite, TwoEnded, Free, Asserted, DirectProduct, Semidirect };

  Kind kind = Kind::Finite;
  int rank = 0;              // Free
  std::string name;          // Asserted
  int asserted_bound = 0;    // Asserted
  bool asserted_weakly_convex = false;
  std::vector<std::shared_ptr<const GroupExpr>> factors;  // DirectProduct
  std::shared_ptr<const GroupExpr> normal, quotient;      // Semidirect

  /**
   * Conservative weak-convexity propagation: free groups are hyperbolic,
   * Z and finite groups act properly cocompactly on CAT(0) spaces, and
   * direct products of weakly convex groups are weakly convex (CAT(0)
   * closure under products). Split extensions get no automatic flag: a
   * kernel of a surjection from a weakly convex group need not be weakly
   * convex, and the additivity rule genuinely fails without it.
   */
  bool weakly_convex() const {
    switch (kind) {
      case Kind::Finite:
      case Kind::TwoEnded:
      case Kind::Free:
        return true;
      case Kind::Asserted:
        return asserted_weakly_convex;
      case Kind::DirectProduct:
        for (const auto& f : factors)
          if (!f->weakly_convex()) return false;
        return true;
      case Kind::Semidirect:
        return false;
    }
    return false;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Finite: return "1";
      case Kind::TwoEnded: return "Z";
      case Kind::Free: return "F" + std::to_string(rank);
      case Kind::Asserted: {
        std::string s = name + "[obdim>=" + std::to_string(asserted_bound);
        if (asserted_weakly_convex) s += ",weakly_convex";
        return s + "]";
      }
      case Kind::DirectProduct: {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (i) s += " x ";
          s += wrap(*factors[i]);
        }
        return s;
      }
      case Kind::Semidirect:
        return wrap(*normal) + " >< " + wrap(*quotient);
    }
    return "?";
  }

 private:
  static std::string wrap(const GroupExpr& e) {
    const bool atom = e.kind != Kind::DirectProduct && e.kind != Kind::Semidirect;
    return atom ? e.to_string() : "(" + e.to_string() + ")";
  }
};

using GroupExprPtr = std::shared_ptr<const GroupExpr>;

/** One rule application; leaves are axioms (atom values or assertions). */
struct Derivation {
  std::string expr_text;
  std::string rule;
  int bound = 0;
  std::string note;  // diagnostic, e.g. when the split-extension rule is refused
  std::vector<Derivation> children;

  bool rule_refused_somewhere() const {
    if (!note.empty()) return true;
    for (const Derivation& c : children)
      if (c.rule_refused_somewhere()) return true;
    return false;
  }
};

namespace detail {

struct Token {
  enum class Kind { Int, Ident, LParen, RParen, LBracket, RBracket, Comma, Caret, Ge, Semi, End };
  Kind kind;
  std::string text;
  int value = 0;
  std::size_t pos = 0;
};

class GroupLexer {
 public:
  explicit GroupLexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw input_error("group expression error at position " + std::to_string(tok_.pos) + ": " + why);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.pos = pos_;
    if (pos_ >= text_.size()) { tok_ = {Token::Kind::End, "", 0, pos_}; return; }
    const char c = text_[pos_];
    if (c == '(') { tok_ = {Token::Kind::LParen, "(", 0, pos_++}; return; }
    if (c == ')') { tok_ = {Token::Kind::RParen, ")", 0, pos_++}; return; }
    if (c == '[') { tok_ = {Token::Kind::LBracket, "[", 0, pos_++}; return; }
    if (c == ']') { tok_ = {Token::Kind::RBracket, "]", 0, pos_++}; return; }
    if (c == ',') { tok_ = {Token::Kind::Comma, ",", 0, pos_++}; return; }
    if (c == '^') { tok_ = {Token::Kind::Caret, "^", 0, pos_++}; return; }
    if (c == '>' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '<') {
      tok_ = {Token::Kind::Semi, "><", 0, pos_};
      pos_ += 2;
      return;
    }
    if (c == '>' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      tok_ = {Token::Kind::Ge, ">=", 0, pos_};
      pos_ += 2;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_ = {Token::Kind::Int, text_.substr(start, pos_ - start),
              std::stoi(text_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Kind::Ident, text_.substr(start, pos_ - start), 0, start};
      return;
    }
    tok_ = {Token::Kind::End, std::string(1, c), 0, pos_};
    throw input_error("group expression error at position " + std::to_string(pos_) +
                      ": unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

class GroupParser {
 public:
  explicit GroupParser(const std::string& text) : lex_(text) {}

  GroupExprPtr parse() {
    GroupExprPtr e = parse_semi();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input");
    return e;
  }

 private:
  using TK = Token::Kind;

  // "><" binds loosest, associates to the right; the left factor is normal.
  GroupExprPtr parse_semi() {
    GroupExprPtr left = parse_product();
    if (lex_.peek().kind != TK::Semi) return left;
    lex_.take();
    GroupExprPtr right = parse_semi();
    auto node = std::make_shared<GroupExpr>();
    node->kind = GroupExpr::Kind::Semidirect;
    node->normal = std::move(left);
    node->quotient = std::move(right);
    return node;
  }

  GroupExprPtr parse_product() {
    std::vector<GroupExprPtr> factors{parse_power()};
    while (lex_.peek().kind == TK::Ident && lex_.peek().text == "x") {
      lex_.take();
      factors.push_back(parse_power());
    }
    if (factors.size() == 1) return factors[0];
    auto node = std::make_shared<GroupExpr>();
    node->kind = GroupExpr::Kind::DirectProduct;
    node->factors = std::move(factors);
    return node;
  }

  GroupExprPtr parse_power() {
    GroupExprPtr base = parse_primary();
    if (lex_.peek().kind != TK::Caret) return base;
    lex_.take();
    if (lex_.peek().kind != TK::Int) lex_.fail("expected integer exponent after '^'");
    const int n = lex_.take().value;
    if (n < 1) lex_.fail("exponent must be >= 1");
    if (n == 1) return base;
    auto node = std::make_shared<GroupExpr>();
    node->kind = GroupExpr::Kind::DirectProduct;
    node->factors.assign(static_cast<std::size_t>(n), base);
    return node;
  }

  GroupExprPtr parse_primary() {
    const Token t = lex_.peek();
    if (t.kind == TK::LParen) {
      lex_.take();
      GroupExprPtr e = parse_semi();
      if (lex_.peek().kind != TK::RParen) lex_.fail("expected ')'");
      lex_.take();
      return e;
    }
    if (t.kind == TK::Int) {
      if (t.value != 1) lex_.fail("the only numeric atom is the trivial group '1'");
      lex_.take();
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::Finite;
      return node;
    }
    if (t.kind == TK::Ident) return parse_atom();
    lex_.fail("expected a group atom");
  }

  GroupExprPtr parse_atom() {
    const Token t = lex_.take();
    // A bracket always makes an asserted atom, whatever the name looks like.
    if (lex_.peek().kind == TK::LBracket) return parse_asserted(t.text);
    if (t.text == "Z") {
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::TwoEnded;
      return node;
    }
    if (t.text.size() > 1 && t.text[0] == 'F' &&
        std::all_of(t.text.begin() + 1, t.text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int rank = std::stoi(t.text.substr(1));
      if (rank < 2) lex_.fail("free-group rank must be >= 2 (rank 1 is Z)");
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::Free;
      node->rank = rank;
      return node;
    }
    lex_.fail("atom '" + t.text + "' needs an asserted bound: " + t.text + "[obdim>=k,...]");
  }

  GroupExprPtr parse_asserted(const std::string& name) {
    lex_.take();  // '['
    if (lex_.peek().kind != TK::Ident || lex_.peek().text != "obdim")
      lex_.fail("expected 'obdim>=' in asserted atom");
    lex_.take();
    if (lex_.peek().kind != TK::Ge) lex_.fail("expected '>=' after 'obdim'");
    lex_.take();
    if (lex_.peek().kind != TK::Int) lex_.fail("expected integer bound");
    const int bound = lex_.take().value;
    auto node = std::make_shared<GroupExpr>();
    node->kind = GroupExpr::Kind::Asserted;
    node->name = name;
    node->asserted_bound = bound;
    while (lex_.peek().kind == TK::Comma) {
      lex_.take();
      if (lex_.peek().kind != TK::Ident) lex_.fail("expected flag name");
      const std::string flag = lex_.take().text;
      if (flag == "weakly_convex" || flag == "hyperbolic" || flag == "cat0" ||
          flag == "semihyperbolic")
        node->asserted_weakly_convex = true;  // all imply a bounded-fellow-traveller combing
      else
        lex_.fail("unknown flag '" + flag + "'");
    }
    if (lex_.peek().kind != TK::RBracket) lex_.fail("expected ']'");
    lex_.take();
    return node;
  }

  GroupLexer lex_;
};

}  // namespace detail

inline GroupExprPtr parse_group_expr(const std::string& text) {
  return detail::GroupParser(text).parse();
}

/**
 * Derives the best obstructor-dimension lower bound the rule set supports:
 *
 *  - finite groups: 0;  two-ended groups (Z): 1
 *  - free groups of rank >= 2: 2 (a 3-point set embeds in the Cantor-set
 *    boundary, and a boundary obstructor raises obdim by 2)
 *  - asserted atoms: the user-supplied bound (subgroup monotonicity)
 *  - direct products: sums of the factors' bounds
 *  - split extensions H >< Q with H weakly convex: bound(H) + bound(Q)
 *
 * A split extension whose normal factor is not known weakly convex REFUSES
 * the additivity rule (kernels of maps from products of free groups show
 * the sum can overshoot); only bound(H) survives, via subgroup
 * monotonicity, and the derivation carries a diagnostic note.
 */
inline Derivation obdim_lower_bound(const GroupExpr& e) {
  Derivation d;
  d.expr_text = e.to_string();
  switch (e.kind) {
    case GroupExpr::Kind::Finite:
      d.rule = "finite-group axiom";
      d.bound = 0;
      break;
    case GroupExpr::Kind::TwoEnded:
      d.rule = "two-ended axiom";
      d.bound = 1;
      break;
    case GroupExpr::Kind::Free:
      d.rule = "free-group axiom (3-point boundary obstructor)";
      d.bound = 2;
      break;
    case GroupExpr::Kind::Asserted:
      d.rule = "asserted lower bound (subgroup monotonicity)";
      d.bound = e.asserted_bound;
      break;
    case GroupExpr::Kind::DirectProduct: {
      d.rule = "direct-product additivity";
      d.bound = 0;
      for (const auto& f : e.factors) {
        d.children.push_back(obdim_lower_bound(*f));
        d.bound += d.children.back().bound;
      }
      break;
    }
    case GroupExpr::Kind::Semidirect: {
      Derivation h = obdim_lower_bound(*e.normal);
      Derivation q = obdim_lower_bound(*e.quotient);
      if (e.normal->weakly_convex()) {
        d.rule = "split-extension additivity (weakly convex normal factor)";
        d.bound = h.bound + q.bound;
        d.children.push_back(std::move(h));
        d.children.push_back(std::move(q));
      } else {
        d.rule = "subgroup monotonicity (normal factor only)";
        d.bound = h.bound;
        d.note = "split-extension additivity refused: normal factor '" +
                 e.normal->to_string() +
                 "' is not known weakly convex, and the sum bound fails for such "
                 "extensions; keeping only the normal subgroup's bound";
        d.children.push_back(std::move(h));
        d.children.push_back(std::move(q));
      }
      break;
    }
  }
  return d;
}

inline Derivation obdim_lower_bound(const std::string& text) {
  return obdim_lower_bound(*parse_group_expr(text));
}

/**
 * Consequence for actions: a group with obdim >= b admits no properly
 * discontinuous action on a contractible manifold of dimension < b.
 */
inline std::string actdim_statement(const Derivation& d) {
  if (d.bound <= 0)
    return "vacuous: obdim >= 0 excludes no properly discontinuous action";
  return "the group admits no properly discontinuous action on a contractible manifold of "
         "dimension < " + std::to_string(d.bound) +
         " (in particular, none on R^" + std::to_string(d.bound - 1) + ")";
}

/**
 * Advisory upper bound, valid for torsion-free groups only (free products
 * of finite groups give counterexamples with torsion): by Stallings'
 * embedding-up-to-homotopy theorem, actdim <= 2 * gdim. Never part of a
 * certified verdict; the caller asserts torsion-freeness and gdim.
 */
inline std::string actdim_upper_advisory(int gdim) {
  if (gdim < 0) throw input_error("geometric dimension must be non-negative");
  return "advisory (torsion-free groups only): actdim <= " + std::to_string(2 * gdim) +
         " since actdim <= 2 * gdim with gdim = " + std::to_string(gdim);
}

}  // namespace vko
