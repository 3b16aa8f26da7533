#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace llx {

/// Finite multiset of atom names. Only positive multiplicities are stored,
/// so two multisets are equal exactly when their counts agree.
class Multiset {
 public:
  using Counts = std::map<std::string, std::size_t, std::less<>>;

  Multiset() = default;

  /// Builds from a list of names; repetition encodes multiplicity.
  Multiset(std::initializer_list<std::string_view> names) {
    for (auto n : names) add(n);
  }

  template <typename Range>
  static Multiset of(const Range& names) {
    Multiset m;
    for (const auto& n : names) m.add(n);
    return m;
  }

  void add(std::string_view name, std::size_t n = 1) {
    if (n == 0) return;
    auto it = counts_.find(name);
    if (it == counts_.end())
      counts_.emplace(std::string(name), n);
    else
      it->second += n;
  }

  /// Removes up to `n` copies; returns how many were actually removed.
  std::size_t remove(std::string_view name, std::size_t n = 1) {
    auto it = counts_.find(name);
    if (it == counts_.end()) return 0;
    std::size_t taken = std::min(n, it->second);
    it->second -= taken;
    if (it->second == 0) counts_.erase(it);
    return taken;
  }

  std::size_t count(std::string_view name) const {
    auto it = counts_.find(name);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Total number of tokens, counting multiplicity.
  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& [_, c] : counts_) total += c;
    return total;
  }

  bool empty() const { return counts_.empty(); }
  std::size_t distinct() const { return counts_.size(); }
  const Counts& counts() const { return counts_; }

  /// Count-wise containment: every atom of `*this` occurs at least as often in `other`.
  bool is_subset_of(const Multiset& other) const {
    for (const auto& [name, c] : counts_)
      if (other.count(name) < c) return false;
    return true;
  }

  /// Expanded element list in canonical (lexicographic) order.
  std::vector<std::string> elements() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (const auto& [name, c] : counts_)
      for (std::size_t i = 0; i < c; ++i) out.push_back(name);
    return out;
  }

  Multiset& operator+=(const Multiset& other) {
    for (const auto& [name, c] : other.counts_) add(name, c);
    return *this;
  }

  /// Truncated difference: counts never drop below zero.
  Multiset& operator-=(const Multiset& other) {
    for (const auto& [name, c] : other.counts_) remove(name, c);
    return *this;
  }

  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }
  friend Multiset operator-(Multiset a, const Multiset& b) { return a -= b; }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) {
    return a.counts_ <=> b.counts_;
  }

  /// Canonical text: `e, m, m`. Empty multiset prints as the empty string.
  std::string to_string(std::string_view sep = ", ") const {
    std::string out;
    bool first = true;
    for (const auto& [name, c] : counts_) {
      for (std::size_t i = 0; i < c; ++i) {
        if (!first) out += sep;
        first = false;
        out += name;
      }
    }
    return out;
  }

  /// `{e, m}` form used in diagnostics.
  std::string braced() const { return "{" + to_string() + "}"; }

  /// elements() with atoms listed in `order` first, the rest lexicographically.
  std::vector<std::string> elements_ordered(const std::vector<std::string>& order) const {
    std::vector<std::string> out;
    Multiset rest = *this;
    for (const auto& name : order) {
      for (std::size_t c = rest.count(name); c > 0; --c) out.push_back(name);
      rest.remove(name, rest.count(name));
    }
    for (auto& n : rest.elements()) out.push_back(std::move(n));
    return out;
  }

  /// Like to_string() but listing atoms in `order` first; atoms missing
  /// from `order` follow lexicographically.
  std::string to_string_ordered(const std::vector<std::string>& order,
                                std::string_view sep = ", ") const {
    if (order.empty()) return to_string(sep);
    std::string out;
    Multiset rest = *this;
    auto emit = [&](const std::string& name, std::size_t c) {
      for (std::size_t i = 0; i < c; ++i) {
        if (!out.empty()) out += sep;
        out += name;
      }
    };
    for (const auto& name : order) {
      std::size_t c = rest.count(name);
      emit(name, c);
      rest.remove(name, c);
    }
    for (const auto& [name, c] : rest.counts_) emit(name, c);
    return out;
  }

 private:
  Counts counts_;
};

}  // namespace llx
