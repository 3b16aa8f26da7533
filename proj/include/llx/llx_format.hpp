#pragma once

// Line-oriented `.llx` problem files:
//
//   # comment
//   problem training            (optional name)
//   atoms control e t f1 f2
//   atoms resource m
//   init e m
//   rule pi1 : e -o t
//   rule pi2 : t * m -o f1 & f2
//   goal e
//
// `init` and `goal` list atoms separated by whitespace; repetition encodes
// multiplicity and repeated lines accumulate.

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "llx/error.hpp"
#include "llx/formula.hpp"
#include "llx/problem.hpp"
#include "llx/rule.hpp"

namespace llx {

enum class ProblemFormat { llx };

namespace detail {

struct Word {
  std::string_view text;
  std::size_t column;
};

inline std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace detail

/// Parses and fully validates a problem. Undeclared atoms become control
/// atoms in order of first appearance in the file.
inline Problem parse_problem(std::string_view text,
                             ProblemFormat = ProblemFormat::llx) {
  Problem p;
  std::vector<std::string> referenced;
  std::set<std::string, std::less<>> seen_ref;
  auto reference = [&](std::string_view n) {
    if (seen_ref.insert(std::string(n)).second) referenced.emplace_back(n);
  };
  auto reference_all = [&](const Multiset& m) {
    for (const auto& [n, _] : m.counts()) reference(n);
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    auto words = detail::split_words(line);
    if (words.empty()) continue;
    std::string_view directive = words[0].text;

    auto atom_list = [&](std::size_t from) {
      Multiset m;
      for (std::size_t i = from; i < words.size(); ++i) {
        if (!is_identifier(words[i].text))
          throw ParseError(lineno, words[i].column,
                           "invalid atom name '" + std::string(words[i].text) + "'",
                           {"atom"});
        m.add(words[i].text);
      }
      return m;
    };

    if (directive == "atoms") {
      if (words.size() < 2)
        throw ParseError(lineno, words[0].column + 5, "missing atom kind",
                         {"'control'", "'resource'"});
      auto kind = atom_kind_from_string(words[1].text);
      if (!kind)
        throw ParseError(lineno, words[1].column,
                         "unknown atom kind '" + std::string(words[1].text) + "'",
                         {"'control'", "'resource'"});
      for (std::size_t i = 2; i < words.size(); ++i) {
        if (!is_identifier(words[i].text))
          throw ParseError(lineno, words[i].column,
                           "invalid atom name '" + std::string(words[i].text) + "'",
                           {"atom"});
        p.atoms.push_back(Atom{std::string(words[i].text), *kind});
      }
    } else if (directive == "init") {
      Multiset m = atom_list(1);
      reference_all(m);
      p.init += m;
    } else if (directive == "goal") {
      Multiset m = atom_list(1);
      reference_all(m);
      p.goal += m;
    } else if (directive == "problem") {
      if (words.size() != 2)
        throw ParseError(lineno, words[0].column, "'problem' takes one name",
                         {"name"});
      p.name = std::string(words[1].text);
    } else if (directive == "rule") {
      std::size_t colon = line.find(':');
      if (words.size() < 2 || colon == std::string_view::npos)
        throw ParseError(lineno, line.size() + 1, "malformed rule", {"':'"});
      auto head = detail::split_words(line.substr(0, colon));
      if (head.size() != 2 || !is_identifier(head[1].text))
        throw ParseError(lineno, head.size() > 1 ? head[1].column : colon + 1,
                         "expected a rule name before ':'", {"rule name"});
      Formula f = parse_formula(line.substr(colon + 1), lineno, colon + 2);
      Rule r;
      try {
        r = normalize_rule(std::string(head[1].text), f);
      } catch (const FragmentError& e) {
        throw ParseError(lineno, colon + 2,
                         "rule '" + std::string(head[1].text) +
                             "' is outside the fragment: " + e.what());
      }
      reference_all(r.premises);
      for (const auto& a : r.alternatives) reference_all(a);
      p.rules.push_back(std::move(r));
    } else {
      throw ParseError(lineno, words[0].column,
                       "unknown directive '" + std::string(directive) + "'",
                       {"'atoms'", "'init'", "'rule'", "'goal'", "'problem'"});
    }
  }

  std::set<std::string, std::less<>> declared;
  for (const auto& a : p.atoms) declared.insert(a.name);
  for (const auto& n : referenced)
    if (!declared.count(n)) {
      p.atoms.push_back(Atom{n, AtomKind::control});
      declared.insert(n);
    }
  validate_problem(p);
  return p;
}

/// Writes the problem back in `.llx` form. Atom declarations are grouped
/// into runs of equal kind so declaration order survives a re-parse.
inline std::string print_llx(const Problem& p) {
  std::ostringstream out;
  if (p.name) out << "problem " << *p.name << "\n";
  for (std::size_t i = 0; i < p.atoms.size();) {
    AtomKind k = p.atoms[i].kind;
    out << "atoms " << to_string(k);
    for (; i < p.atoms.size() && p.atoms[i].kind == k; ++i)
      out << " " << p.atoms[i].name;
    out << "\n";
  }
  out << "init";
  if (!p.init.empty()) out << " " << p.init.to_string(" ");
  out << "\n";
  std::vector<std::string> order;
  for (const auto& a : p.atoms) order.push_back(a.name);
  for (const auto& r : p.rules) {
    out << "rule " << r.name << " : "
        << print_formula(Formula::lolli(multiset_formula(r.premises, order),
                                        consequent_formula(r, order)))
        << "\n";
  }
  out << "goal";
  if (!p.goal.empty()) out << " " << p.goal.to_string(" ");
  out << "\n";
  return out.str();
}

}  // namespace llx
