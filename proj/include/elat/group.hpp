#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "perm.hpp"

namespace elat {

using Elem = std::uint32_t;

/// Resource bounds. These are configuration; the CLI exposes them as flags.
struct Limits {
  std::size_t max_closure_order = 10000;   // group_from_generators
  std::size_t max_analysis_order = 64;     // subgroups, automorphisms, isomorphism tests
  std::size_t enum_threshold = 10000;      // explicit Aut_E enumeration
  std::size_t max_lattice_isos = 1000000;  // lattice isomorphism enumeration
};

/// A finite permutation group with its full multiplication table.
/// Element 0 is the identity. `mul(i, j)` is elements[i] * elements[j]
/// (apply i, then j).
class FiniteGroup {
 public:
  /// `elems` must be closed under composition with elems[0] the identity.
  static FiniteGroup from_elements(std::vector<Perm> elems, std::string label) {
    if (elems.empty() || !elems[0].is_identity())
      throw PreconditionError("element 0 must be the identity");
    FiniteGroup g;
    g.label_ = std::move(label);
    g.elements_ = std::move(elems);
    const std::size_t n = g.elements_.size();
    std::unordered_map<Perm, Elem, PermHash> index;
    index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.elements_[i].degree() != g.elements_[0].degree())
        throw PreconditionError("elements have different degrees");
      if (!index.emplace(g.elements_[i], static_cast<Elem>(i)).second)
        throw PreconditionError("duplicate element");
    }
    g.cayley_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(g.elements_[i] * g.elements_[j]);
        if (it == index.end()) throw PreconditionError("element list is not closed under composition");
        g.cayley_[i * n + j] = it->second;
      }
    g.finish();
    return g;
  }

  /// Builds a group directly from a multiplication table (row-major n x n),
  /// representing each element by its right-regular permutation.
  static FiniteGroup from_table(const std::vector<Elem>& table, std::size_t n, std::string label) {
    std::vector<Perm> elems;
    elems.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Point> im(n);
      for (std::size_t x = 0; x < n; ++x) im[x] = static_cast<Point>(table[x * n + c]);
      elems.emplace_back(std::move(im));
    }
    return from_elements(std::move(elems), std::move(label));
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return elements_.front().degree(); }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(Elem i) const noexcept { return elements_[i]; }

  Elem mul(Elem a, Elem b) const noexcept { return cayley_[a * order() + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  static constexpr Elem identity() noexcept { return 0; }
  /// a^-1 x a
  Elem conj(Elem x, Elem a) const noexcept { return mul(mul(inverse_[a], x), a); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }

  std::size_t element_order(Elem a) const noexcept { return orders_[a]; }
  const std::vector<Elem>& inverses() const noexcept { return inverse_; }

  /// Generators the group was built from (or an irredundant set chosen
  /// from the element list), never containing the identity.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  std::optional<Elem> index_of(const Perm& p) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == p) return static_cast<Elem>(i);
    return std::nullopt;
  }

  bool is_abelian() const noexcept {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Histogram: count of elements per element order.
  std::map<std::size_t, std::size_t> order_census() const {
    std::map<std::size_t, std::size_t> c;
    for (auto o : orders_) ++c[o];
    return c;
  }

  /// Subgroup generated by `gens`, as a membership set.
  ElementSet closure(const std::vector<Elem>& gens) const {
    ElementSet s(order());
    s.set(identity());
    std::vector<Elem> members{identity()};
    for (std::size_t k = 0; k < members.size(); ++k)
      for (Elem g : gens) {
        Elem y = mul(members[k], g);
        if (!s.test(y)) {
          s.set(y);
          members.push_back(y);
        }
      }
    return s;
  }

  /// Exhaustive consistency check. Returns an empty string when the table,
  /// identity, inverses and associativity are all valid.
  std::string validate() const {
    const std::size_t n = order();
    for (Elem i = 0; i < n; ++i) {
      if (mul(0, i) != i || mul(i, 0) != i) return "identity row/column broken";
      if (mul(i, inv(i)) != 0 || mul(inv(i), i) != 0) return "inverse broken";
      if (elements_[i] * elements_[inv(i)] != elements_[0]) return "inverse permutation broken";
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (elements_[a] * elements_[b] != elements_[mul(a, b)]) return "table disagrees with permutations";
        for (Elem c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "associativity broken";
      }
    return {};
  }

 private:
  friend FiniteGroup group_from_generators(const std::vector<Perm>&, std::string, std::size_t);

  void finish() {
    const std::size_t n = order();
    inverse_.assign(n, 0);
    orders_.assign(n, 1);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          break;
        }
      Elem x = a;
      std::size_t k = 1;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      orders_[a] = a == 0 ? 1 : k;
    }
    if (generators_.empty()) generators_ = irredundant_generators();
  }

 public:
  /// Irredundant generating set: scan by decreasing element order, keep an
  /// element when it is outside the span of those already kept.
  std::vector<Elem> irredundant_generators() const {
    std::vector<Elem> by_order(order());
    for (Elem i = 0; i < order(); ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Elem a, Elem b) { return orders_[a] > orders_[b]; });
    std::vector<Elem> gens;
    ElementSet span = closure({});
    for (Elem x : by_order) {
      if (span.count() == order()) break;
      if (span.test(x)) continue;
      gens.push_back(x);
      span = closure(gens);
    }
    return gens;
  }

 private:
  std::string label_;
  std::vector<Perm> elements_;
  std::vector<Elem> cayley_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of `gens` under composition. Elements are listed breadth-first
/// from the identity, multiplying by generators in the given order.
inline FiniteGroup group_from_generators(const std::vector<Perm>& gens, std::string label = {},
                                         std::size_t max_order = Limits{}.max_closure_order) {
  if (gens.empty()) throw PreconditionError("at least one generator is required");
  const std::size_t n = gens.front().degree();
  if (n == 0) throw PreconditionError("degree must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != n) throw PreconditionError("generator degree mismatch");

  std::vector<Perm> elems{Perm::identity(n)};
  std::unordered_map<Perm, Elem, PermHash> index{{elems[0], 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm y = elems[k] * g;
      if (index.contains(y)) continue;
      if (elems.size() >= max_order)
        throw BoundError("group too large: closure exceeds order bound " + std::to_string(max_order));
      index.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }

  FiniteGroup g;
  g.label_ = std::move(label);
  g.elements_ = std::move(elems);
  const std::size_t order = g.elements_.size();
  g.cayley_.resize(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      g.cayley_[i * order + j] = index.at(g.elements_[i] * g.elements_[j]);
  for (const auto& p : gens) {
    Elem e = index.at(p);
    if (e != 0 && std::find(g.generators_.begin(), g.generators_.end(), e) == g.generators_.end())
      g.generators_.push_back(e);
  }
  g.finish();
  return g;
}

/// A homomorphism given by its element map.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  bool is_homomorphism() const {
    if (map.size() != source->order() || map[0] != 0) return false;
    for (Elem i = 0; i < source->order(); ++i)
      for (Elem j = 0; j < source->order(); ++j)
        if (map[source->mul(i, j)] != target->mul(map[i], map[j])) return false;
    return true;
  }
  bool is_bijective() const {
    if (source->order() != target->order()) return false;
    std::vector<bool> hit(target->order(), false);
    for (Elem y : map) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }
};

inline bool is_normal_set(const FiniteGroup& g, const ElementSet& members) {
  bool ok = true;
  members.for_each([&](std::size_t h) {
    for (Elem a : g.generators())
      if (!members.test(g.conj(static_cast<Elem>(h), a))) ok = false;
  });
  return ok;
}

inline bool is_subgroup_set(const FiniteGroup& g, const ElementSet& members) {
  if (members.universe() != g.order() || !members.test(0)) return false;
  bool ok = true;
  members.for_each([&](std::size_t a) {
    if (!ok) return;
    members.for_each([&](std::size_t b) {
      if (!members.test(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) ok = false;
    });
  });
  return ok;
}

/// Quotient of `g` by a normal subgroup given as a membership set. Cosets
/// are numbered by their first element in g's element order; each coset is
/// represented by its right-regular permutation on the cosets.
inline std::pair<FiniteGroup, std::vector<Elem>> quotient_by_set(const FiniteGroup& g,
                                                                 const ElementSet& normal) {
  if (!is_subgroup_set(g, normal)) throw PreconditionError("quotient: not a subgroup");
  if (!is_normal_set(g, normal)) throw PreconditionError("quotient: subgroup is not normal");
  const std::size_t n = g.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset_of(n, unset);
  std::vector<Elem> reps;
  const auto members = normal.to_vector();
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] != unset) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem h : members) coset_of[g.mul(h, x)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  auto label = g.label().empty() ? std::string{} : g.label() + "/N";
  return {FiniteGroup::from_table(table, q, std::move(label)), std::move(coset_of)};
}

namespace detail {

// Backtracking over generator images. Each node extends the partial map to
// the subgroup generated by the first k source generators and checks it is
// consistent (hence a homomorphism on that subgroup).
class HomSearch {
 public:
  HomSearch(const FiniteGroup& src, const FiniteGroup& dst, std::vector<Elem> gens, bool bijective)
      : src_(src), dst_(dst), gens_(std::move(gens)), bijective_(bijective) {}

  // Calls `visit(map)` for each homomorphism (bijective if requested);
  // stops when visit returns false.
  void run(const std::function<bool(const std::vector<Elem>&)>& visit) {
    images_.assign(gens_.size(), 0);
    visit_ = &visit;
    stop_ = false;
    recurse(0);
  }

 private:
  void recurse(std::size_t depth) {
    if (stop_) return;
    if (depth == gens_.size()) {
      std::vector<Elem> map;
      if (!extend(depth, map)) return;
      if (bijective_) {
        std::vector<bool> hit(dst_.order(), false);
        for (Elem y : map) {
          if (y == ~Elem{0} || hit[y]) return;
          hit[y] = true;
        }
      }
      if (!(*visit_)(map)) stop_ = true;
      return;
    }
    const Elem g = gens_[depth];
    ElementSet span(1);
    if (bijective_) {
      std::vector<Elem> prev(images_.begin(), images_.begin() + static_cast<std::ptrdiff_t>(depth));
      span = dst_.closure(prev);
    }
    for (Elem y = 0; y < dst_.order() && !stop_; ++y) {
      if (bijective_) {
        if (dst_.element_order(y) != src_.element_order(g)) continue;
        if (span.test(y)) continue;
      } else if (src_.element_order(g) % dst_.element_order(y) != 0) {
        continue;
      }
      images_[depth] = y;
      std::vector<Elem> scratch;
      if (!extend(depth + 1, scratch)) continue;
      recurse(depth + 1);
    }
  }

  bool extend(std::size_t k, std::vector<Elem>& map) const {
    constexpr Elem unset = ~Elem{0};
    map.assign(src_.order(), unset);
    map[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t i = 0; i < k; ++i) {
        const Elem xs = src_.mul(x, gens_[i]);
        const Elem ys = dst_.mul(map[x], images_[i]);
        if (map[xs] == unset) {
          map[xs] = ys;
          queue.push_back(xs);
        } else if (map[xs] != ys) {
          return false;
        }
      }
    }
    if (bijective_) {
      std::size_t kernel = 0;
      for (Elem x : queue)
        if (map[x] == 0) ++kernel;
      if (kernel != 1) return false;
    }
    return true;
  }

  const FiniteGroup& src_;
  const FiniteGroup& dst_;
  std::vector<Elem> gens_;
  bool bijective_;
  std::vector<Elem> images_;
  const std::function<bool(const std::vector<Elem>&)>* visit_ = nullptr;
  bool stop_ = false;
};

inline void check_bound(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw BoundError("group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
}

}  // namespace detail

/// Smallest generating set found by exhaustive search up to three
/// generators, falling back to a greedy irredundant set. Deterministic.
inline std::vector<Elem> minimal_generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  std::vector<Elem> cand;
  for (Elem x = 1; x < n; ++x) cand.push_back(x);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  for (Elem x : cand)
    if (g.element_order(x) == n) return {x};
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.closure({cand[i], cand[j]}).count() == n) return {cand[i], cand[j]};
  if (n <= 64) {
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        const auto pij = g.closure({cand[i], cand[j]});
        for (std::size_t k = j + 1; k < cand.size(); ++k) {
          if (pij.test(cand[k])) continue;
          if (g.closure({cand[i], cand[j], cand[k]}).count() == n) return {cand[i], cand[j], cand[k]};
        }
      }
  }
  return g.irredundant_generators();
}

/// All automorphisms of `g`, in backtracking order over images of a
/// minimal generating set.
inline std::vector<GroupHom> automorphism_group(const GroupPtr& g, const Limits& limits = {},
                                                std::size_t max_count = 1000000) {
  detail::check_bound(*g, limits.max_analysis_order);
  std::vector<GroupHom> out;
  detail::HomSearch search(*g, *g, minimal_generating_set(*g), true);
  search.run([&](const std::vector<Elem>& m) {
    if (out.size() >= max_count) throw BoundError("automorphism group exceeds enumeration bound");
    out.push_back(GroupHom{g, g, m});
    return true;
  });
  return out;
}

/// A witness isomorphism g -> h, or nullopt.
inline std::optional<GroupHom> find_isomorphism(const GroupPtr& g, const GroupPtr& h,
                                                const Limits& limits = {}) {
  detail::check_bound(*g, limits.max_analysis_order);
  detail::check_bound(*h, limits.max_analysis_order);
  if (g->order() != h->order() || g->order_census() != h->order_census()) return std::nullopt;
  if (g->is_abelian() != h->is_abelian()) return std::nullopt;
  std::optional<GroupHom> found;
  detail::HomSearch search(*g, *h, minimal_generating_set(*g), true);
  search.run([&](const std::vector<Elem>& m) {
    found = GroupHom{g, h, m};
    return false;
  });
  return found;
}

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace elat
