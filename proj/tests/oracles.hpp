#pragma once

// Independent reference computations, written for clarity over speed and
// sharing as little as possible with the library code paths under test.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "elat/elattice.hpp"
#include "elat/group.hpp"
#include "elat/perm.hpp"

namespace oracle {

using elat::Elem;
using elat::FiniteGroup;
using elat::Index;
using elat::Perm;

using Set = std::set<Elem>;

inline Elem index_of(const FiniteGroup& g, const Perm& p) { return *g.index_of(p); }

/// Product of elements computed from the permutations themselves.
inline Elem mul(const FiniteGroup& g, Elem a, Elem b) { return index_of(g, g.element(a) * g.element(b)); }

/// Every subset containing the identity and closed under multiplication
/// (finite, so these are exactly the subgroups). Feasible for |G| <= 12.
inline std::vector<Set> subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Set> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    Set s{0};
    for (std::size_t k = 1; k < n; ++k)
      if (mask >> (k - 1) & 1) s.insert(static_cast<Elem>(k));
    bool closed = true;
    for (Elem a : s) {
      for (Elem b : s)
        if (!s.contains(mul(g, a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

inline Set conjugate(const FiniteGroup& g, const Set& h, Elem a) {
  const Perm pa = g.element(a);
  const Perm pai = pa.inverse();
  Set out;
  for (Elem x : h) out.insert(index_of(g, pai * g.element(x) * pa));
  return out;
}

inline bool is_normal(const FiniteGroup& g, const Set& h) {
  for (Elem a = 0; a < g.order(); ++a)
    if (conjugate(g, h, a) != h) return false;
  return true;
}

/// Intersection of all conjugates of h.
inline Set core(const FiniteGroup& g, const Set& h) {
  Set c = h;
  for (Elem a = 0; a < g.order(); ++a) {
    Set conj = conjugate(g, h, a), keep;
    std::set_intersection(c.begin(), c.end(), conj.begin(), conj.end(), std::inserter(keep, keep.begin()));
    c = keep;
  }
  return c;
}

/// Closure of a set of permutations under products, by breadth-first search.
inline Set span(const FiniteGroup& g, const std::vector<Elem>& gens) {
  Set s{0};
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem y : gens) {
        Elem z = mul(g, x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return s;
}

inline Set derived(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const Perm pa = g.element(a), pb = g.element(b);
      comms.push_back(index_of(g, pa.inverse() * pb.inverse() * pa * pb));
    }
  return span(g, comms);
}

/// Intersection of the maximal elements among proper subgroups.
inline Set frattini(const FiniteGroup& g, const std::vector<Set>& subs) {
  Set all;
  for (Elem x = 0; x < g.order(); ++x) all.insert(x);
  Set phi = all;
  for (const auto& m : subs) {
    if (m == all) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k != all && k != m && std::includes(k.begin(), k.end(), m.begin(), m.end())) maximal = false;
    if (!maximal) continue;
    Set keep;
    std::set_intersection(phi.begin(), phi.end(), m.begin(), m.end(), std::inserter(keep, keep.begin()));
    phi = keep;
  }
  return phi;
}

/// Number of bijections of the group fixing the identity that preserve
/// products.
inline std::size_t automorphism_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> f(n);
  std::iota(f.begin(), f.end(), Elem{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Elem a = 1; a < n && ok; ++a)
      for (Elem b = 1; b < n && ok; ++b)
        if (f[mul(g, a, b)] != mul(g, f[a], f[b])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return count;
}

/// Distinct maps H -> H^a on the subgroup list: |{f_a}|.
inline std::size_t conjugation_action_order(const FiniteGroup& g, const std::vector<Set>& subs) {
  std::set<std::vector<std::size_t>> maps;
  for (Elem a = 0; a < g.order(); ++a) {
    std::vector<std::size_t> m;
    for (const auto& h : subs) {
      const Set c = conjugate(g, h, a);
      m.push_back(static_cast<std::size_t>(std::find(subs.begin(), subs.end(), c) - subs.begin()));
    }
    maps.insert(m);
  }
  return maps.size();
}

/// Number of left cosets xN, found by direct enumeration.
inline std::size_t coset_count(const FiniteGroup& g, const Set& n) {
  std::set<Set> cosets;
  for (Elem x = 0; x < g.order(); ++x) {
    Set c;
    for (Elem y : n) c.insert(mul(g, x, y));
    cosets.insert(c);
  }
  return cosets.size();
}

/// Bijective e-lattice automorphisms, by filtering all carrier
/// permutations with the ε-compatibility test first (early exit).
inline std::size_t el_automorphism_count(const elat::ELattice& l) {
  const auto n = static_cast<Index>(l.size());
  std::vector<Index> f(n);
  std::iota(f.begin(), f.end(), Index{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a)
      if (f[l.eps(a)] != l.eps(f[a])) ok = false;
    for (Index a = 0; a < n && ok; ++a)
      for (Index b = 0; b < n && ok; ++b)
        if (f[l.meet(a, b)] != l.meet(f[a], f[b]) || f[l.join(a, b)] != l.join(f[a], f[b])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

/// Order automorphisms of a finite poset given by `leq`, by trying every
/// permutation.
template <typename Leq>
std::size_t order_automorphism_count(std::size_t n, Leq&& leq) {
  std::vector<std::size_t> f(n);
  std::iota(f.begin(), f.end(), std::size_t{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (leq(a, b) != leq(f[a], f[b])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

}  // namespace oracle
