#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "group.hpp"

namespace elat {

using SubId = std::size_t;

struct Subgroup {
  GroupPtr parent;
  ElementSet members;
  std::vector<Elem> elements;    // sorted ascending
  std::vector<Elem> generators;  // a generating list, possibly redundant
  SubId id = 0;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Elem x) const noexcept { return members.test(x); }
};

inline ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& members, Elem a) {
  ElementSet out(g.order());
  members.for_each([&](std::size_t h) { out.set(g.conj(static_cast<Elem>(h), a)); });
  return out;
}

inline bool is_prime_power(std::size_t n, std::size_t* prime = nullptr) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  if (prime) *prime = p;
  return n == 1;
}

/// All subgroups of a finite group, ordered by (order, sorted member list),
/// with the containment order and the normal subgroups N(G).
class SubgroupLattice {
 public:
  SubgroupLattice(GroupPtr group, std::vector<Subgroup> subs) : group_(std::move(group)), subs_(std::move(subs)) {
    const std::size_t k = subs_.size();
    for (SubId i = 0; i < k; ++i) {
      subs_[i].id = i;
      index_.emplace(subs_[i].members, i);
    }
    below_.assign(k, ElementSet(k));
    for (SubId i = 0; i < k; ++i)
      for (SubId j = 0; j < k; ++j)
        if (subs_[i].order() <= subs_[j].order() && subs_[i].members.is_subset_of(subs_[j].members))
          below_[j].set(i);
    normal_flag_.assign(k, false);
    for (SubId i = 0; i < k; ++i)
      if (is_normal_set(*group_, subs_[i].members)) {
        normal_flag_[i] = true;
        normal_ids_.push_back(i);
      }
    core_.resize(k);
    for (SubId i = 0; i < k; ++i) {
      ElementSet c = subs_[i].members;
      for (Elem a = 0; a < group_->order(); ++a) c &= conjugate_set(*group_, subs_[i].members, a);
      core_[i] = id_of(c);
    }
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return subs_.size(); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subs_; }
  const Subgroup& operator[](SubId i) const noexcept { return subs_[i]; }

  SubId trivial() const noexcept { return 0; }
  SubId whole() const noexcept { return subs_.size() - 1; }

  /// a <= b (containment)
  bool leq(SubId a, SubId b) const noexcept { return below_[b].test(a); }
  /// Ids of subgroups contained in `b`.
  const ElementSet& below(SubId b) const noexcept { return below_[b]; }

  bool is_normal(SubId a) const noexcept { return normal_flag_[a]; }
  const std::vector<SubId>& normal_ids() const noexcept { return normal_ids_; }
  /// Id of the normal core of subgroup `a`.
  SubId core_id(SubId a) const noexcept { return core_[a]; }

  std::optional<SubId> find(const ElementSet& members) const {
    if (auto it = index_.find(members); it != index_.end()) return it->second;
    return std::nullopt;
  }
  SubId id_of(const ElementSet& members) const {
    if (auto id = find(members)) return *id;
    throw PreconditionError("element set is not a subgroup in this lattice");
  }

  SubId meet_id(SubId a, SubId b) const { return id_of(subs_[a].members & subs_[b].members); }
  SubId join_id(SubId a, SubId b) const {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    auto gens = subs_[a].generators;
    gens.insert(gens.end(), subs_[b].generators.begin(), subs_[b].generators.end());
    return id_of(group_->closure(gens));
  }

  /// Image of subgroup `a` under conjugation by `x`: a^x = x^-1 a x.
  SubId conjugate_id(SubId a, Elem x) const { return id_of(conjugate_set(*group_, subs_[a].members, x)); }

  /// Id of the image of subgroup `a` under an element map.
  SubId image_id(SubId a, const std::vector<Elem>& map) const {
    ElementSet img(group_->order());
    for (Elem x : subs_[a].elements) img.set(map[x]);
    return id_of(img);
  }

  std::string describe(SubId a) const {
    std::string s = "H" + std::to_string(a) + " |" + std::to_string(subs_[a].order()) + "|";
    return s;
  }

 private:
  GroupPtr group_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElementSet, SubId, ElementSetHash> index_;
  std::vector<ElementSet> below_;
  std::vector<bool> normal_flag_;
  std::vector<SubId> normal_ids_;
  std::vector<SubId> core_;
};

namespace detail {

inline Subgroup make_subgroup(const GroupPtr& g, ElementSet members, std::vector<Elem> gens) {
  Subgroup s;
  s.parent = g;
  s.elements = members.to_vector();
  s.members = std::move(members);
  s.generators = std::move(gens);
  return s;
}

}  // namespace detail

/// Every subgroup of `g`: cyclic subgroups first, then joins with cyclic
/// subgroups iterated to a fixed point.
inline SubgroupLattice all_subgroups(const GroupPtr& g, const Limits& limits = {}) {
  detail::check_bound(*g, limits.max_analysis_order);
  std::vector<Subgroup> subs;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet s, std::vector<Elem> gens) {
    if (seen.contains(s)) return;
    seen.emplace(s, subs.size());
    subs.push_back(detail::make_subgroup(g, std::move(s), std::move(gens)));
  };
  for (Elem x = 0; x < g->order(); ++x) add(g->closure({x}), x == 0 ? std::vector<Elem>{} : std::vector<Elem>{x});
  const std::size_t cyclic_count = subs.size();
  for (std::size_t k = 0; k < subs.size(); ++k)
    for (std::size_t c = 0; c < cyclic_count; ++c) {
      if (subs[c].members.is_subset_of(subs[k].members)) continue;
      auto gens = subs[k].generators;
      gens.insert(gens.end(), subs[c].generators.begin(), subs[c].generators.end());
      auto span = g->closure(gens);
      add(std::move(span), std::move(gens));
    }
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return SubgroupLattice(g, std::move(subs));
}

/// Normal core of `h`: the intersection of its conjugates.
inline Subgroup core(const SubgroupLattice& lat, const Subgroup& h) {
  if (h.parent.get() != lat.group_ptr().get()) throw PreconditionError("core: subgroup of a different group");
  return lat[lat.core_id(lat.id_of(h.members))];
}

/// Plain lattice meet (intersection) and join (generated subgroup). When
/// both arguments are normal, the join is checked to equal the set product.
inline std::pair<Subgroup, Subgroup> meet_join(const SubgroupLattice& lat, const Subgroup& a, const Subgroup& b) {
  if (a.parent.get() != lat.group_ptr().get() || b.parent.get() != lat.group_ptr().get())
    throw PreconditionError("meet_join: arguments from different parents");
  const SubId ia = lat.id_of(a.members), ib = lat.id_of(b.members);
  const SubId m = lat.meet_id(ia, ib), j = lat.join_id(ia, ib);
  if (lat.is_normal(ia) && lat.is_normal(ib)) {
    const auto& G = lat.group();
    ElementSet product(G.order());
    for (Elem x : a.elements)
      for (Elem y : b.elements) product.set(G.mul(x, y));
    if (product != lat[j].members) throw Error("set product of normal subgroups differs from their join");
  }
  return {lat[m], lat[j]};
}

/// Set product A*B of two normal subgroups, as a subgroup id.
inline SubId normal_product_id(const SubgroupLattice& lat, SubId a, SubId b) {
  const auto& G = lat.group();
  ElementSet product(G.order());
  for (Elem x : lat[a].elements)
    for (Elem y : lat[b].elements) product.set(G.mul(x, y));
  auto id = lat.find(product);
  if (!id) throw Error("set product of normal subgroups is not a subgroup");
  return *id;
}

struct GroupPredicates {
  bool abelian = false;
  bool dedekind = false;
  bool hamiltonian = false;
  bool simple = false;
  bool primary = false;
  bool nilpotent = false;
  bool satisfies_star = false;
};

struct FrattiniDerived {
  std::vector<SubId> maximal;
  SubId frattini = 0;
  SubId derived = 0;
};

inline FrattiniDerived frattini_derived(const SubgroupLattice& lat) {
  FrattiniDerived out;
  const SubId top = lat.whole();
  for (SubId i = 0; i < top; ++i) {
    bool maximal = true;
    for (SubId j = 0; j < top && maximal; ++j)
      if (j != i && lat.leq(i, j)) maximal = false;
    if (maximal) out.maximal.push_back(i);
  }
  ElementSet phi = lat[top].members;
  for (SubId m : out.maximal) phi &= lat[m].members;
  out.frattini = lat.id_of(phi);
  const auto& G = lat.group();
  std::vector<Elem> commutators;
  ElementSet seen(G.order());
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b) {
      Elem c = G.commutator(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        commutators.push_back(c);
      }
    }
  out.derived = lat.id_of(G.closure(commutators));
  return out;
}

namespace detail {

// Quotient G/N is Dedekind iff every subgroup containing N is normal in G;
// abelian iff D(G) <= N.
inline bool quotient_dedekind(const SubgroupLattice& lat, SubId n) {
  for (SubId k = 0; k < lat.size(); ++k)
    if (lat.leq(n, k) && !lat.is_normal(k)) return false;
  return true;
}

}  // namespace detail

inline GroupPredicates group_predicates(const SubgroupLattice& lat) {
  GroupPredicates p;
  const auto& G = lat.group();
  p.abelian = G.is_abelian();
  p.dedekind = lat.normal_ids().size() == lat.size();
  p.hamiltonian = p.dedekind && !p.abelian;
  p.simple = lat.normal_ids().size() == 2;
  p.primary = is_prime_power(G.order());
  const auto fd = frattini_derived(lat);
  p.nilpotent = std::all_of(fd.maximal.begin(), fd.maximal.end(), [&](SubId m) { return lat.is_normal(m); });
  p.satisfies_star = true;
  for (SubId n : lat.normal_ids()) {
    const bool ham = detail::quotient_dedekind(lat, n) && !lat.leq(fd.derived, n);
    if (ham && !is_prime_power(G.order() / lat[n].order())) p.satisfies_star = false;
  }
  return p;
}

/// Nilpotency via "every Sylow subgroup is normal" (the independent route).
inline bool nilpotent_by_sylow(const SubgroupLattice& lat) {
  std::size_t n = lat.group().order();
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p) continue;
    std::size_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    std::size_t count = 0;
    for (const auto& s : lat.subgroups())
      if (s.order() == pk) ++count;
    if (count != 1) return false;
  }
  return true;
}

/// Smallest number of elements generating the group, found as the least k
/// such that the group is a join of k cyclic subgroups.
inline std::size_t min_generator_count(const SubgroupLattice& lat) {
  if (lat.size() == 1) return 0;
  std::vector<SubId> cyclic;
  for (const auto& s : lat.subgroups()) {
    if (s.order() == 1) continue;
    if (std::any_of(s.elements.begin(), s.elements.end(),
                    [&](Elem x) { return lat.group().element_order(x) == s.order(); }))
      cyclic.push_back(s.id);
  }
  std::vector<bool> reach(lat.size(), false);
  std::vector<SubId> level;
  for (SubId c : cyclic)
    if (!reach[c]) {
      reach[c] = true;
      level.push_back(c);
    }
  for (std::size_t k = 1;; ++k) {
    if (reach[lat.whole()]) return k;
    std::vector<SubId> next;
    std::vector<bool> in_next(lat.size(), false);
    for (SubId s : level)
      for (SubId c : cyclic) {
        SubId j = lat.join_id(s, c);
        if (!in_next[j]) {
          in_next[j] = true;
          next.push_back(j);
        }
      }
    for (SubId j : next) reach[j] = true;
    level = std::move(next);
  }
}

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N for a normal subgroup of the lattice's group.
inline Quotient quotient_group(const SubgroupLattice& lat, SubId n) {
  if (!lat.is_normal(n)) throw PreconditionError("quotient_group: subgroup is not normal");
  auto [q, coset_of] = quotient_by_set(lat.group(), lat[n].members);
  auto label = lat.group().label().empty() ? std::string{} : lat.group().label() + "/H" + std::to_string(n);
  q.set_label(label);
  auto qp = share(std::move(q));
  return {qp, GroupHom{lat.group_ptr(), qp, std::move(coset_of)}};
}

}  // namespace elat
