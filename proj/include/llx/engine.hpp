#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "llx/error.hpp"
#include "llx/multiset.hpp"
#include "llx/problem.hpp"
#include "llx/rule.hpp"

namespace llx {

/// The multiset of transient resources available at one point of a run.
using State = Multiset;

/// One application of a rule, committing to alternative `branch`.
struct Firing {
  std::string rule;
  std::size_t branch = 0;

  std::string to_string() const { return rule + "#" + std::to_string(branch); }

  friend bool operator==(const Firing&, const Firing&) = default;
  friend auto operator<=>(const Firing&, const Firing&) = default;
};

struct Trace {
  std::vector<Firing> firings;
  State start;
  State end;

  friend bool operator==(const Trace&, const Trace&) = default;
};

inline std::string to_string(const std::vector<Firing>& firings) {
  std::string out;
  for (std::size_t i = 0; i < firings.size(); ++i) {
    if (i) out += " ";
    out += firings[i].to_string();
  }
  return out;
}

struct BlockedRule {
  std::string rule;
  Multiset missing;

  friend bool operator==(const BlockedRule&, const BlockedRule&) = default;
};

/// A non-goal state in which no rule applies, with the firings that led
/// there and, per rule, the premises the state lacks.
struct StuckReport {
  State state;
  std::vector<Firing> choices;
  std::vector<BlockedRule> blocked;
  /// `state - goal` when the goal is contained in the stuck state.
  Multiset leftover;

  friend bool operator==(const StuckReport&, const StuckReport&) = default;
};

struct SearchLimits {
  std::size_t max_depth = 10'000;
  /// Upper bound on search-node expansions, revisits included.
  std::size_t max_states = 1'000'000;

  friend bool operator==(const SearchLimits&, const SearchLimits&) = default;
};

enum class Limit { max_depth, max_states };

inline const char* to_string(Limit l) {
  return l == Limit::max_depth ? "max_depth" : "max_states";
}

enum class SearchMode { exists, all_paths };

struct Verdict {
  enum class Kind { proven, refuted, limit_exceeded };

  Kind kind = Kind::refuted;
  std::vector<Trace> traces;
  std::optional<StuckReport> stuck;
  std::string note;
  std::optional<Limit> limit;

  bool proven() const { return kind == Kind::proven; }
  bool refuted() const { return kind == Kind::refuted; }
  bool limit_exceeded() const { return kind == Kind::limit_exceeded; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::proven: return "proven";
    case Verdict::Kind::refuted: return "refuted";
    case Verdict::Kind::limit_exceeded: return "limit_exceeded";
  }
  return "?";
}

class NotApplicableError : public Error {
 public:
  NotApplicableError(const std::string& rule, Multiset missing)
      : Error("rule '" + rule + "' not applicable: missing " + missing.braced()),
        missing_(std::move(missing)) {}
  const Multiset& missing() const { return missing_; }

 private:
  Multiset missing_;
};

class BranchOutOfRange : public Error {
 public:
  using Error::Error;
};

class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, Multiset missing, const std::string& why)
      : Error("step " + std::to_string(step) + ": " + why),
        step_(step),
        missing_(std::move(missing)) {}
  std::size_t step() const { return step_; }
  const Multiset& missing() const { return missing_; }

 private:
  std::size_t step_;
  Multiset missing_;
};

inline bool applicable(const Rule& rule, const State& s) {
  return rule.premises.is_subset_of(s);
}

/// `s - premises + alternatives[branch]`; `s` itself is left untouched.
inline State fire(const Rule& rule, std::size_t branch, const State& s) {
  if (branch >= rule.alternatives.size())
    throw BranchOutOfRange("rule '" + rule.name + "' has " +
                           std::to_string(rule.alternatives.size()) +
                           " alternatives, branch " + std::to_string(branch) +
                           " requested");
  if (!applicable(rule, s))
    throw NotApplicableError(rule.name, rule.premises - s);
  State next = s - rule.premises;
  next += rule.alternatives[branch];
  return next;
}

/// Replays `t` from `t.start` and returns the final state.
inline State replay(const Problem& p, const Trace& t) {
  State s = t.start;
  for (std::size_t i = 0; i < t.firings.size(); ++i) {
    const Firing& f = t.firings[i];
    const Rule* r = p.find_rule(f.rule);
    if (!r) throw ReplayError(i, {}, "unknown rule '" + f.rule + "'");
    if (f.branch >= r->alternatives.size())
      throw ReplayError(i, {}, "branch out of range for '" + f.rule + "'");
    if (!applicable(*r, s)) {
      Multiset missing = r->premises - s;
      throw ReplayError(i, missing, "rule '" + f.rule + "' not applicable: missing " +
                                        missing.braced());
    }
    s = fire(*r, f.branch, s);
  }
  return s;
}

inline std::vector<BlockedRule> blocked_rules(const Problem& p, const State& s) {
  std::vector<BlockedRule> out;
  for (const auto& r : p.rules)
    if (!applicable(r, s)) out.push_back({r.name, r.premises - s});
  return out;
}

namespace detail {

// Iterative-deepening search over the AND-OR game
//
//   win(s) = s == goal  or  some applicable rule r with win(fire(r, b, s))
//            for every branch b (all_paths) / for some branch b (exists).
//
// Each round is a depth-first search bounded by the round number, so the
// first round that wins yields a strategy of minimal height, with ties broken
// by rule order then branch index. Repeating a state that is already on the
// current path loses. Won states are cached with their strategy height; in
// exists mode, failures are cached too, but only when no repetition against a
// strict ancestor influenced them (otherwise the failure is path-dependent).
class GameSearch {
 public:
  GameSearch(const Problem& p, SearchMode mode, SearchLimits limits)
      : p_(p), mode_(mode), limits_(limits) {}

  Verdict run() {
    Verdict v;
    try {
      for (std::size_t bound = 0;; ++bound) {
        Outcome o = solve(p_.init, 0, bound);
        if (o.win) {
          v.kind = Verdict::Kind::proven;
          for (auto& suffix : o.strategy)
            v.traces.push_back(Trace{std::move(suffix), p_.init, p_.goal});
          return v;
        }
        if (!o.cutoff) {
          v.kind = Verdict::Kind::refuted;
          v.stuck = first_stuck_;
          v.note = first_stuck_ ? "every strategy reaches a stuck state or repeats"
                                : "search space exhausted: every path repeats a state";
          return v;
        }
        if (bound >= limits_.max_depth) {
          v.kind = Verdict::Kind::limit_exceeded;
          v.limit = Limit::max_depth;
          v.note = "no strategy within " + std::to_string(limits_.max_depth) +
                   " firings";
          return v;
        }
      }
    } catch (const StatesExceeded&) {
      v = Verdict{};
      v.kind = Verdict::Kind::limit_exceeded;
      v.limit = Limit::max_states;
      v.note = "more than " + std::to_string(limits_.max_states) +
               " search nodes expanded";
      return v;
    }
  }

 private:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
  struct StatesExceeded {};

  struct Outcome {
    bool win = false;
    bool cutoff = false;
    // Shallowest path depth a repetition was detected against.
    std::size_t repeat_depth = kUnbounded;
    std::size_t height = 0;
    std::vector<std::vector<Firing>> strategy;
  };

  struct Won {
    std::size_t height;
    std::vector<std::vector<Firing>> strategy;
  };

  Outcome solve(const State& s, std::size_t depth, std::size_t remaining) {
    if (++expansions_ > limits_.max_states) throw StatesExceeded{};

    Outcome out;
    if (s == p_.goal) {
      out.win = true;
      out.strategy.emplace_back();
      return out;
    }
    if (auto it = won_.find(s); it != won_.end() && it->second.height <= remaining) {
      out.win = true;
      out.height = it->second.height;
      out.strategy = it->second.strategy;
      return out;
    }
    if (mode_ == SearchMode::exists) {
      if (auto it = failed_.find(s); it != failed_.end()) {
        if (it->second == kUnbounded) return out;
        if (it->second >= remaining) {
          out.cutoff = true;
          return out;
        }
      }
    }

    std::vector<std::size_t> moves;
    for (std::size_t i = 0; i < p_.rules.size(); ++i)
      if (applicable(p_.rules[i], s)) moves.push_back(i);
    if (moves.empty()) {
      if (!first_stuck_) {
        StuckReport r;
        r.state = s;
        r.choices = path_firings_;
        r.blocked = blocked_rules(p_, s);
        if (p_.goal.is_subset_of(s)) r.leftover = s - p_.goal;
        first_stuck_ = std::move(r);
      }
      return out;
    }
    if (remaining == 0) {
      out.cutoff = true;
      return out;
    }

    on_path_.emplace(s, depth);
    for (std::size_t ri : moves) {
      const Rule& rule = p_.rules[ri];
      if (mode_ == SearchMode::exists) {
        for (std::size_t b = 0; b < rule.alternatives.size() && !out.win; ++b) {
          Outcome child = step(rule, b, s, depth, remaining, out);
          if (child.win) {
            out.win = true;
            out.height = child.height + 1;
            out.strategy = prefixed(rule.name, b, std::move(child.strategy));
          }
        }
      } else {
        std::vector<std::vector<Firing>> strategy;
        std::size_t height = 0;
        bool all = true;
        for (std::size_t b = 0; b < rule.alternatives.size(); ++b) {
          Outcome child = step(rule, b, s, depth, remaining, out);
          if (!child.win) {
            all = false;
            break;
          }
          height = std::max(height, child.height + 1);
          for (auto& suffix : prefixed(rule.name, b, std::move(child.strategy)))
            strategy.push_back(std::move(suffix));
        }
        if (all) {
          out.win = true;
          out.height = height;
          out.strategy = std::move(strategy);
        }
      }
      if (out.win) break;
    }
    on_path_.erase(s);

    if (out.win) {
      auto it = won_.find(s);
      if (it == won_.end() || it->second.height > out.height)
        won_[s] = Won{out.height, out.strategy};
    } else if (mode_ == SearchMode::exists && out.repeat_depth >= depth) {
      std::size_t& slot = failed_[s];
      slot = out.cutoff ? std::max(slot, remaining) : kUnbounded;
    }
    return out;
  }

  // Explores one (rule, branch) child and folds its bookkeeping into `parent`.
  Outcome step(const Rule& rule, std::size_t b, const State& s, std::size_t depth,
               std::size_t remaining, Outcome& parent) {
    State next = fire(rule, b, s);
    if (auto it = on_path_.find(next); it != on_path_.end()) {
      parent.repeat_depth = std::min(parent.repeat_depth, it->second);
      return Outcome{};
    }
    path_firings_.push_back(Firing{rule.name, b});
    Outcome child = solve(next, depth + 1, remaining - 1);
    path_firings_.pop_back();
    parent.cutoff = parent.cutoff || child.cutoff;
    parent.repeat_depth = std::min(parent.repeat_depth, child.repeat_depth);
    return child;
  }

  static std::vector<std::vector<Firing>> prefixed(
      const std::string& rule, std::size_t b,
      std::vector<std::vector<Firing>> suffixes) {
    for (auto& s : suffixes) s.insert(s.begin(), Firing{rule, b});
    return suffixes;
  }

  const Problem& p_;
  SearchMode mode_;
  SearchLimits limits_;
  std::size_t expansions_ = 0;
  std::map<State, std::size_t> on_path_;
  std::vector<Firing> path_firings_;
  std::map<State, Won> won_;
  std::map<State, std::size_t> failed_;
  std::optional<StuckReport> first_stuck_;
};

}  // namespace detail

/// Is there some sequence of firings, rule and branch both chosen by the
/// prover, that rewrites `init` to exactly `goal`? A proof carries one trace
/// of minimal length.
inline Verdict prove_exists(const Problem& p, SearchLimits limits = {}) {
  return detail::GameSearch(p, SearchMode::exists, limits).run();
}

/// Does the prover have a strategy that reaches exactly `goal` whatever
/// alternative each fired rule takes? The prover commits to a rule before
/// its branch is known. A proof carries one trace per branch combination of
/// the winning strategy, in lexicographic firing order.
inline Verdict prove_all_paths(const Problem& p, SearchLimits limits = {}) {
  return detail::GameSearch(p, SearchMode::all_paths, limits).run();
}

inline Verdict prove(const Problem& p, SearchMode mode, SearchLimits limits = {}) {
  return detail::GameSearch(p, mode, limits).run();
}

}  // namespace llx
