#pragma once

// Brute-force cross-check for the search engine. It enumerates the complete
// AND-OR tree down to a fixed depth with no caching and no iterative
// deepening, on its own dense count-vector representation, so that it shares
// no search or firing code with engine.hpp. Only the result types are shared.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "llx/engine.hpp"
#include "llx/problem.hpp"

namespace llx {

namespace detail {

class BruteForce {
 public:
  BruteForce(const Problem& p, SearchMode mode) : p_(p), mode_(mode) {
    for (std::size_t i = 0; i < p.atoms.size(); ++i) index_[p.atoms[i].name] = i;
    auto dense = [&](const Multiset& m) {
      std::vector<long> v(p.atoms.size(), 0);
      for (const auto& [name, c] : m.counts()) v.at(index_.at(name)) += static_cast<long>(c);
      return v;
    };
    for (const auto& r : p.rules) {
      DenseRule d;
      d.name = r.name;
      d.in = dense(r.premises);
      for (const auto& a : r.alternatives) d.out.push_back(dense(a));
      rules_.push_back(std::move(d));
    }
    init_ = dense(p.init);
    goal_ = dense(p.goal);
  }

  enum class Value { win, lose, unknown };

  Verdict run(std::size_t max_depth) {
    std::vector<std::vector<Firing>> strategy;
    Value v = eval(init_, max_depth, strategy);
    Verdict out;
    switch (v) {
      case Value::win:
        out.kind = Verdict::Kind::proven;
        for (auto& s : strategy) out.traces.push_back(Trace{std::move(s), p_.init, p_.goal});
        break;
      case Value::lose:
        out.kind = Verdict::Kind::refuted;
        out.note = "oracle: every branch of the game tree closes without reaching the goal";
        break;
      case Value::unknown:
        out.kind = Verdict::Kind::limit_exceeded;
        out.limit = Limit::max_depth;
        out.note = "oracle: game tree not closed within depth " + std::to_string(max_depth);
        break;
    }
    return out;
  }

 private:
  using Counts = std::vector<long>;

  struct DenseRule {
    std::string name;
    Counts in;
    std::vector<Counts> out;
  };

  bool enabled(const DenseRule& r, const Counts& s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] < r.in[i]) return false;
    return true;
  }

  Counts apply(const DenseRule& r, std::size_t b, const Counts& s) const {
    Counts n = s;
    for (std::size_t i = 0; i < n.size(); ++i) n[i] += r.out[b][i] - r.in[i];
    return n;
  }

  bool on_path(const Counts& s) const {
    for (const auto& q : path_)
      if (q == s) return true;
    return false;
  }

  // Three-valued game value of `s` with `depth` firings left. On a win,
  // `strategy` receives the firing suffixes of one winning strategy.
  Value eval(const Counts& s, std::size_t depth,
             std::vector<std::vector<Firing>>& strategy) {
    if (s == goal_) {
      strategy.assign(1, {});
      return Value::win;
    }
    bool any_enabled = false;
    for (const auto& r : rules_) any_enabled = any_enabled || enabled(r, s);
    if (!any_enabled) return Value::lose;
    if (depth == 0) return Value::unknown;

    path_.push_back(s);
    Value best = Value::lose;
    for (const auto& r : rules_) {
      if (!enabled(r, s)) continue;
      if (mode_ == SearchMode::exists) {
        for (std::size_t b = 0; b < r.out.size(); ++b) {
          std::vector<std::vector<Firing>> sub;
          Value v = child(r, b, s, depth, sub);
          if (v == Value::win) {
            for (auto& t : sub) t.insert(t.begin(), Firing{r.name, b});
            strategy = std::move(sub);
            path_.pop_back();
            return Value::win;
          }
          if (v == Value::unknown) best = Value::unknown;
        }
      } else {
        Value all = Value::win;
        std::vector<std::vector<Firing>> collected;
        for (std::size_t b = 0; b < r.out.size(); ++b) {
          std::vector<std::vector<Firing>> sub;
          Value v = child(r, b, s, depth, sub);
          if (v == Value::lose) {
            all = Value::lose;
            break;
          }
          if (v == Value::unknown) {
            all = Value::unknown;
            continue;
          }
          for (auto& t : sub) {
            t.insert(t.begin(), Firing{r.name, b});
            collected.push_back(std::move(t));
          }
        }
        if (all == Value::win) {
          strategy = std::move(collected);
          path_.pop_back();
          return Value::win;
        }
        if (all == Value::unknown) best = Value::unknown;
      }
    }
    path_.pop_back();
    return best;
  }

  Value child(const DenseRule& r, std::size_t b, const Counts& s, std::size_t depth,
              std::vector<std::vector<Firing>>& sub) {
    Counts n = apply(r, b, s);
    if (on_path(n)) return Value::lose;
    return eval(n, depth - 1, sub);
  }

  const Problem& p_;
  SearchMode mode_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<DenseRule> rules_;
  Counts init_;
  Counts goal_;
  std::vector<Counts> path_;
};

}  // namespace detail

/// Exhaustive depth-bounded evaluation. Returns Proven with a witness
/// strategy, Refuted when every branch closes (goal, stuck state or path
/// repetition) within `max_depth`, and LimitExceeded otherwise.
inline Verdict oracle_reachable(const Problem& p, std::size_t max_depth, SearchMode mode) {
  return detail::BruteForce(p, mode).run(max_depth);
}

}  // namespace llx
