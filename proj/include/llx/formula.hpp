#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llx/error.hpp"

namespace llx {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : s.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

/// Formula of the propositional fragment: atoms, tensor (⊗), with (&),
/// linear implication (⊸) and bang (!). Tensor and With are n-ary and kept
/// flat; the factories below are the only way to build a node, so no Tensor
/// ever has a Tensor child and no With has a With child.
class Formula {
 public:
  enum class Kind { atom, tensor, with, lolli, bang };

  static Formula atom(std::string name) {
    Formula f(Kind::atom);
    f.name_ = std::move(name);
    return f;
  }

  /// A single-element list collapses to that element.
  static Formula tensor(std::vector<Formula> parts) {
    return flattened(Kind::tensor, std::move(parts));
  }
  static Formula with(std::vector<Formula> parts) {
    return flattened(Kind::with, std::move(parts));
  }

  static Formula lolli(Formula left, Formula right) {
    Formula f(Kind::lolli);
    f.children_.push_back(std::move(left));
    f.children_.push_back(std::move(right));
    return f;
  }

  static Formula bang(Formula inner) {
    Formula f(Kind::bang);
    f.children_.push_back(std::move(inner));
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::atom; }

  /// Atom name; empty for compound formulas.
  const std::string& name() const { return name_; }
  const std::vector<Formula>& children() const { return children_; }

  const Formula& left() const { return children_.at(0); }
  const Formula& right() const { return children_.at(1); }
  const Formula& inner() const { return children_.at(0); }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  explicit Formula(Kind k) : kind_(k) {}

  static Formula flattened(Kind k, std::vector<Formula> parts) {
    if (parts.empty())
      throw Error("tensor/with of zero formulas is not representable");
    if (parts.size() == 1) return std::move(parts.front());
    Formula f(k);
    for (auto& p : parts) {
      if (p.kind_ == k) {
        for (auto& c : p.children_) f.children_.push_back(std::move(c));
      } else {
        f.children_.push_back(std::move(p));
      }
    }
    return f;
  }

  Kind kind_;
  std::string name_;
  std::vector<Formula> children_;
};

namespace detail {

// Binding strength; larger binds tighter.
inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::lolli: return 1;
    case Formula::Kind::with: return 2;
    case Formula::Kind::tensor: return 3;
    case Formula::Kind::bang:
    case Formula::Kind::atom: return 4;
  }
  return 4;
}

inline void print_into(std::string& out, const Formula& f);

inline void print_child(std::string& out, const Formula& child, int min_prec) {
  bool paren = precedence(child.kind()) < min_prec;
  if (paren) out += '(';
  print_into(out, child);
  if (paren) out += ')';
}

inline void print_into(std::string& out, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::atom:
      out += f.name();
      return;
    case K::bang:
      out += '!';
      print_child(out, f.inner(), 4);
      return;
    case K::tensor:
    case K::with: {
      const char* sep = f.kind() == K::tensor ? " * " : " & ";
      // Children of an n-ary node are never of the same kind, so a strictly
      // tighter child prints bare and anything looser is parenthesised.
      int need = precedence(f.kind()) + 1;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        print_child(out, f.children()[i], need);
      }
      return;
    }
    case K::lolli:
      // Non-associative: a nested implication on either side needs parens.
      print_child(out, f.left(), 2);
      out += " -o ";
      print_child(out, f.right(), 2);
      return;
  }
}

struct Token {
  enum class Type { ident, star, amp, lolli, bang, lparen, rparen, end };
  Type type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline const char* describe(Token::Type t) {
  switch (t) {
    case Token::Type::ident: return "atom";
    case Token::Type::star: return "'*'";
    case Token::Type::amp: return "'&'";
    case Token::Type::lolli: return "'-o'";
    case Token::Type::bang: return "'!'";
    case Token::Type::lparen: return "'('";
    case Token::Type::rparen: return "')'";
    case Token::Type::end: return "end of input";
  }
  return "?";
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {
    advance();
  }

  Formula parse_all() {
    Formula f = implication();
    if (tok_.type == Token::Type::lolli)
      throw ParseError(tok_.line, tok_.column,
                       "'-o' is non-associative; parenthesise one side",
                       {"'&'", "'*'", "end of input"});
    expect_type(Token::Type::end, {"'-o'", "'&'", "'*'", "end of input"});
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = conjunction();
    if (tok_.type != Token::Type::lolli) return lhs;
    advance();
    Formula rhs = conjunction();
    return Formula::lolli(std::move(lhs), std::move(rhs));
  }

  Formula conjunction() {
    std::vector<Formula> parts;
    parts.push_back(product());
    while (tok_.type == Token::Type::amp) {
      advance();
      parts.push_back(product());
    }
    return Formula::with(std::move(parts));
  }

  Formula product() {
    std::vector<Formula> parts;
    parts.push_back(primary());
    while (tok_.type == Token::Type::star) {
      advance();
      parts.push_back(primary());
    }
    return Formula::tensor(std::move(parts));
  }

  Formula primary() {
    switch (tok_.type) {
      case Token::Type::ident: {
        Formula f = Formula::atom(tok_.text);
        advance();
        return f;
      }
      case Token::Type::bang:
        advance();
        return Formula::bang(primary());
      case Token::Type::lparen: {
        advance();
        Formula f = implication();
        expect_type(Token::Type::rparen, {"'-o'", "'&'", "'*'", "')'"});
        advance();
        return f;
      }
      default:
        throw ParseError(tok_.line, tok_.column,
                         std::string("unexpected ") + describe(tok_.type),
                         {"atom", "'!'", "'('"});
    }
  }

  void expect_type(Token::Type t, std::vector<std::string> expected) {
    if (tok_.type != t)
      throw ParseError(tok_.line, tok_.column,
                       std::string("unexpected ") + describe(tok_.type),
                       std::move(expected));
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++column_;
        ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.column = column_;
    tok_.text.clear();
    if (pos_ >= text_.size()) {
      tok_.type = Token::Type::end;
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Type t) {
      tok_.type = t;
      tok_.text = std::string(1, c);
      ++pos_;
      ++column_;
    };
    switch (c) {
      case '*': return single(Token::Type::star);
      case '&': return single(Token::Type::amp);
      case '!': return single(Token::Type::bang);
      case '(': return single(Token::Type::lparen);
      case ')': return single(Token::Type::rparen);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'o') {
          tok_.type = Token::Type::lolli;
          tok_.text = "-o";
          pos_ += 2;
          column_ += 2;
          return;
        }
        throw ParseError(line_, column_, "stray '-'", {"'-o'"});
      default:
        break;
    }
    auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        auto d = static_cast<unsigned char>(text_[pos_]);
        if (!std::isalnum(d) && d != '_') break;
        ++pos_;
      }
      tok_.type = Token::Type::ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      column_ += pos_ - start;
      return;
    }
    throw ParseError(line_, column_,
                     std::string("unexpected character '") + c + "'",
                     {"atom", "'!'", "'('"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
  Token tok_{Token::Type::end, "", 1, 1};
};

}  // namespace detail

/// Parses the ASCII concrete syntax: `*` (tensor, tightest), `&` (with),
/// `-o` (implication, loosest, non-associative), `!` prefix, parentheses.
/// `line`/`column` offset positions when the text is embedded in a file.
inline Formula parse_formula(std::string_view text, std::size_t line = 1,
                             std::size_t column = 1) {
  return detail::FormulaParser(text, line, column).parse_all();
}

/// Canonical spacing with minimal parentheses.
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_into(out, f);
  return out;
}

}  // namespace llx
