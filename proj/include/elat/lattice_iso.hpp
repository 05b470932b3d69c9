#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace elat {

/// A finite partial order stored as down-sets and up-sets.
class Poset {
 public:
  Poset() = default;

  /// `leq(a, b)` must be a partial order on {0, ..., n-1}.
  template <typename Leq>
  Poset(std::size_t n, Leq&& leq) : below_(n, ElementSet(n)), above_(n, ElementSet(n)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (leq(a, b)) {
          below_[b].set(a);
          above_[a].set(b);
        }
    compute_profile();
  }

  std::size_t size() const noexcept { return below_.size(); }
  bool leq(std::size_t a, std::size_t b) const noexcept { return below_[b].test(a); }
  const ElementSet& below(std::size_t x) const noexcept { return below_[x]; }
  const ElementSet& above(std::size_t x) const noexcept { return above_[x]; }
  std::size_t rank(std::size_t x) const noexcept { return rank_[x]; }
  std::size_t lower_covers(std::size_t x) const noexcept { return lower_covers_[x]; }
  std::size_t upper_covers(std::size_t x) const noexcept { return upper_covers_[x]; }

  bool is_chain() const noexcept {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (!leq(a, b) && !leq(b, a)) return false;
    return true;
  }

 private:
  void compute_profile() {
    const std::size_t n = size();
    lower_covers_.assign(n, 0);
    upper_covers_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !leq(a, b)) continue;
        // a < b is a cover iff nothing lies strictly between them
        ElementSet between = above_[a] & below_[b];
        if (between.count() == 2) {
          ++upper_covers_[a];
          ++lower_covers_[b];
        }
      }
    // rank = length of the longest chain down to a minimal element
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return below_[x].count() < below_[y].count(); });
    rank_.assign(n, 0);
    for (std::size_t x : order)
      below_[x].for_each([&](std::size_t y) {
        if (y != x) rank_[x] = std::max(rank_[x], rank_[y] + 1);
      });
  }

  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> lower_covers_;
  std::vector<std::size_t> upper_covers_;
};

/// Backtracking enumeration of order isomorphisms a -> b (for lattices these
/// are exactly the lattice isomorphisms). Optional colors must be preserved.
/// Domains are filtered by a structural signature, then by forward checking
/// of the order relation against every assigned element; the next element
/// assigned is the one with the smallest domain (ties by index).
class LatticeIsoSearch {
 public:
  using Visitor = std::function<bool(const std::vector<std::size_t>&)>;

  LatticeIsoSearch(const Poset& a, const Poset& b, const std::vector<std::size_t>* color_a = nullptr,
                   const std::vector<std::size_t>* color_b = nullptr)
      : a_(a), b_(b), color_a_(color_a), color_b_(color_b) {}

  /// Visits isomorphisms in deterministic order until the visitor returns
  /// false. Returns the number visited. Throws BoundError past `limit`.
  std::size_t run(const Visitor& visit, std::size_t limit = 1000000) {
    const std::size_t n = a_.size();
    count_ = 0;
    limit_ = limit;
    stop_ = false;
    visit_ = &visit;
    if (n != b_.size()) return 0;
    std::vector<ElementSet> domains(n, ElementSet(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t t = 0; t < n; ++t)
        if (signature_match(x, t)) domains[x].set(t);
      if (domains[x].empty()) return 0;
    }
    map_.assign(n, n);
    recurse(domains, n);
    return count_;
  }

  std::optional<std::vector<std::size_t>> first() {
    std::optional<std::vector<std::size_t>> out;
    run([&](const std::vector<std::size_t>& m) {
      out = m;
      return false;
    });
    return out;
  }

  std::size_t count(std::size_t limit = 1000000) {
    return run([](const auto&) { return true; }, limit);
  }

 private:
  bool signature_match(std::size_t x, std::size_t t) const {
    if (color_a_ && color_b_ && (*color_a_)[x] != (*color_b_)[t]) return false;
    return a_.rank(x) == b_.rank(t) && a_.below(x).count() == b_.below(t).count() &&
           a_.above(x).count() == b_.above(t).count() && a_.lower_covers(x) == b_.lower_covers(t) &&
           a_.upper_covers(x) == b_.upper_covers(t);
  }

  void recurse(const std::vector<ElementSet>& domains, std::size_t remaining) {
    if (stop_) return;
    const std::size_t n = a_.size();
    if (remaining == 0) {
      if (++count_ > limit_) throw BoundError("lattice isomorphism enumeration exceeds bound");
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    std::size_t pick = n, best = n + 1;
    for (std::size_t x = 0; x < n; ++x) {
      if (map_[x] != n) continue;
      const std::size_t c = domains[x].count();
      if (c < best) {
        best = c;
        pick = x;
      }
    }
    if (best == 0) return;
    const ElementSet& dom = domains[pick];
    for (std::size_t t = dom.first(); t < n && !stop_; t = dom.next(t + 1)) {
      std::vector<ElementSet> next = domains;
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u) {
        if (map_[u] != n || u == pick) continue;
        ElementSet& d = next[u];
        if (a_.leq(u, pick)) d &= b_.below(t);
        else d.subtract(b_.below(t));
        if (a_.leq(pick, u)) d &= b_.above(t);
        else d.subtract(b_.above(t));
        if (d.empty()) ok = false;
      }
      if (!ok) continue;
      map_[pick] = t;
      recurse(next, remaining - 1);
      map_[pick] = n;
    }
  }

  const Poset& a_;
  const Poset& b_;
  const std::vector<std::size_t>* color_a_;
  const std::vector<std::size_t>* color_b_;
  std::vector<std::size_t> map_;
  std::size_t count_ = 0;
  std::size_t limit_ = 0;
  bool stop_ = false;
  const Visitor* visit_ = nullptr;
};

}  // namespace elat
