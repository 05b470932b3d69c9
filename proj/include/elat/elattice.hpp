#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice_iso.hpp"
#include "subgroups.hpp"

namespace elat {

using Index = std::uint32_t;

/// A finite carrier with a map eps and two binary operations given as
/// full tables. Tables are validated for range on construction; the
/// e-lattice axioms are checked separately by verify_axioms.
class ELattice {
 public:
  ELattice() = default;
  ELattice(std::size_t size, std::vector<Index> eps, std::vector<Index> meet, std::vector<Index> join,
           std::vector<std::string> labels = {})
      : size_(size), eps_(std::move(eps)), meet_(std::move(meet)), join_(std::move(join)), labels_(std::move(labels)) {
    if (size_ == 0) throw PreconditionError("e-lattice carrier must be nonempty");
    if (eps_.size() != size_) throw PreconditionError("eps has wrong length");
    if (meet_.size() != size_ * size_ || join_.size() != size_ * size_)
      throw PreconditionError("operation tables have wrong shape");
    auto in_range = [&](Index v) { return v < size_; };
    if (!std::all_of(eps_.begin(), eps_.end(), in_range) || !std::all_of(meet_.begin(), meet_.end(), in_range) ||
        !std::all_of(join_.begin(), join_.end(), in_range))
      throw PreconditionError("table entry out of range");
    if (!labels_.empty() && labels_.size() != size_) throw PreconditionError("labels have wrong length");
  }

  std::size_t size() const noexcept { return size_; }
  Index eps(Index a) const noexcept { return eps_[a]; }
  Index meet(Index a, Index b) const noexcept { return meet_[a * size_ + b]; }
  Index join(Index a, Index b) const noexcept { return join_[a * size_ + b]; }
  const std::vector<Index>& eps_table() const noexcept { return eps_; }
  const std::vector<Index>& meet_table() const noexcept { return meet_; }
  const std::vector<Index>& join_table() const noexcept { return join_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Index a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  bool is_fixed(Index a) const noexcept { return eps_[a] == a; }

  /// Fixed points of eps, ascending.
  std::vector<Index> fixed_points() const {
    std::vector<Index> out;
    for (Index a = 0; a < size_; ++a)
      if (is_fixed(a)) out.push_back(a);
    return out;
  }

  /// All operation results lie in Fix eps.
  bool is_canonical() const noexcept {
    for (std::size_t k = 0; k < meet_.size(); ++k)
      if (!is_fixed(meet_[k]) || !is_fixed(join_[k])) return false;
    return true;
  }

  friend bool operator==(const ELattice&, const ELattice&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Index> eps_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  std::vector<std::string> labels_;
};

struct AxiomReport {
  bool ok = true;
  std::string failure;          // which law failed, empty on success
  std::vector<Index> witness;   // first counterexample (pair or triple)
  bool eps_idempotent = true;
  bool image_equals_fix = true;
  bool canonical = false;
};

/// Exhaustive check of associativity, commutativity, a^a = ava = eps(a)
/// and absorption a^(avb) = av(a^b) = eps(a); also idempotence of eps,
/// Im eps = Fix eps, and canonicity.
inline AxiomReport verify_axioms(const ELattice& l) {
  AxiomReport r;
  const auto n = static_cast<Index>(l.size());
  auto fail = [&](std::string what, std::vector<Index> w) {
    if (r.ok) {
      r.ok = false;
      r.failure = std::move(what);
      r.witness = std::move(w);
    }
  };
  for (Index a = 0; a < n && r.ok; ++a) {
    if (l.meet(a, a) != l.eps(a)) fail("a meet a = eps(a)", {a});
    else if (l.join(a, a) != l.eps(a)) fail("a join a = eps(a)", {a});
  }
  for (Index a = 0; a < n && r.ok; ++a)
    for (Index b = 0; b < n && r.ok; ++b) {
      if (l.meet(a, b) != l.meet(b, a)) fail("meet commutativity", {a, b});
      else if (l.join(a, b) != l.join(b, a)) fail("join commutativity", {a, b});
      else if (l.meet(a, l.join(a, b)) != l.eps(a)) fail("absorption a meet (a join b) = eps(a)", {a, b});
      else if (l.join(a, l.meet(a, b)) != l.eps(a)) fail("absorption a join (a meet b) = eps(a)", {a, b});
    }
  for (Index a = 0; a < n && r.ok; ++a)
    for (Index b = 0; b < n && r.ok; ++b) {
      const Index ab_m = l.meet(a, b), ab_j = l.join(a, b);
      for (Index c = 0; c < n; ++c) {
        if (l.meet(a, l.meet(b, c)) != l.meet(ab_m, c)) {
          fail("meet associativity", {a, b, c});
          break;
        }
        if (l.join(a, l.join(b, c)) != l.join(ab_j, c)) {
          fail("join associativity", {a, b, c});
          break;
        }
      }
    }
  std::vector<bool> in_image(n, false);
  for (Index a = 0; a < n; ++a) {
    in_image[l.eps(a)] = true;
    if (l.eps(l.eps(a)) != l.eps(a)) r.eps_idempotent = false;
  }
  for (Index a = 0; a < n; ++a)
    if (in_image[a] != l.is_fixed(a)) r.image_equals_fix = false;
  if (r.ok && !r.eps_idempotent) fail("eps idempotent", {});
  if (r.ok && !r.image_equals_fix) fail("Im eps = Fix eps", {});
  r.canonical = l.is_canonical();
  return r;
}

/// The e-classes [a] = {b : eps(b) = eps(a)}, keyed by fixed point.
struct ClassPartition {
  std::vector<Index> class_of;                 // carrier index -> fixed point
  std::map<Index, std::vector<Index>> classes;  // fixed point -> members, ascending

  std::size_t class_size(Index fixed) const { return classes.at(fixed).size(); }
};

inline ClassPartition class_partition(const ELattice& l) {
  ClassPartition p;
  p.class_of = l.eps_table();
  for (Index a : l.fixed_points()) p.classes[a];
  for (Index a = 0; a < l.size(); ++a) p.classes[l.eps(a)].push_back(a);
  return p;
}

/// (Fix eps, meet, join) restricted; element k of this lattice is
/// carrier index elements[k].
struct FixLattice {
  std::vector<Index> elements;
  std::vector<Index> meet0;  // k x k, positions into `elements`
  std::vector<Index> join0;
  Poset order;               // a <= b iff a meet b = a

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t position(Index carrier) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), carrier);
    if (it == elements.end() || *it != carrier) throw PreconditionError("not a fixed point");
    return static_cast<std::size_t>(it - elements.begin());
  }

  /// Absorption, associativity, commutativity and idempotence on the
  /// restricted tables.
  bool is_lattice() const {
    const std::size_t k = size();
    auto m = [&](std::size_t a, std::size_t b) { return meet0[a * k + b]; };
    auto j = [&](std::size_t a, std::size_t b) { return join0[a * k + b]; };
    for (std::size_t a = 0; a < k; ++a) {
      if (m(a, a) != a || j(a, a) != a) return false;
      for (std::size_t b = 0; b < k; ++b) {
        if (m(a, b) != m(b, a) || j(a, b) != j(b, a)) return false;
        if (m(a, j(a, b)) != a || j(a, m(a, b)) != a) return false;
        for (std::size_t c = 0; c < k; ++c)
          if (m(a, m(b, c)) != m(m(a, b), c) || j(a, j(b, c)) != j(j(a, b), c)) return false;
      }
    }
    return true;
  }
};

inline FixLattice fix_lattice(const ELattice& l) {
  FixLattice f;
  f.elements = l.fixed_points();
  const std::size_t k = f.elements.size();
  f.meet0.resize(k * k);
  f.join0.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      f.meet0[a * k + b] = static_cast<Index>(f.position(l.meet(f.elements[a], f.elements[b])));
      f.join0[a * k + b] = static_cast<Index>(f.position(l.join(f.elements[a], f.elements[b])));
    }
  f.order = Poset(k, [&](std::size_t a, std::size_t b) { return f.meet0[a * k + b] == a; });
  return f;
}

/// Class sizes |[a]| indexed by position in the fixed lattice.
inline std::vector<std::size_t> class_sizes(const ELattice& l, const FixLattice& fix) {
  auto p = class_partition(l);
  std::vector<std::size_t> out;
  for (Index a : fix.elements) out.push_back(p.class_size(a));
  return out;
}

/// A finite lattice given by its operation tables.
struct Lattice {
  std::size_t size = 0;
  std::vector<Index> meet;
  std::vector<Index> join;
  std::vector<std::string> labels;

  /// Builds meet/join from a partial order; throws unless every pair has a
  /// greatest lower and least upper bound.
  template <typename Leq>
  static Lattice from_order(std::size_t n, Leq&& leq, std::vector<std::string> labels = {}) {
    Lattice l;
    l.size = n;
    l.labels = std::move(labels);
    l.meet.resize(n * n);
    l.join.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::optional<std::size_t> glb, lub;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq(c, a) && leq(c, b) && (!glb || leq(*glb, c))) glb = c;
          if (leq(a, c) && leq(b, c) && (!lub || leq(c, *lub))) lub = c;
        }
        if (!glb) throw PreconditionError("order is not a lattice (no lower bound)");
        if (!lub) throw PreconditionError("order is not a lattice (no upper bound)");
        for (std::size_t c = 0; c < n; ++c) {
          if (leq(c, a) && leq(c, b) && !leq(c, *glb)) throw PreconditionError("order is not a lattice (meet)");
          if (leq(a, c) && leq(b, c) && !leq(*lub, c)) throw PreconditionError("order is not a lattice (join)");
        }
        l.meet[a * n + b] = static_cast<Index>(*glb);
        l.join[a * n + b] = static_cast<Index>(*lub);
      }
    return l;
  }

  static Lattice chain(std::size_t n) {
    return from_order(n, [](std::size_t a, std::size_t b) { return a <= b; });
  }

  /// Bottom 0, `atoms` pairwise incomparable middle elements, top atoms+1.
  static Lattice diamond(std::size_t atoms) {
    const std::size_t top = atoms + 1;
    return from_order(atoms + 2, [top](std::size_t a, std::size_t b) { return a == b || a == 0 || b == top; });
  }

  /// The lattice as an e-lattice with eps = identity.
  ELattice as_elattice() const {
    std::vector<Index> eps(size);
    for (std::size_t a = 0; a < size; ++a) eps[a] = static_cast<Index>(a);
    return ELattice(size, eps, meet, join, labels);
  }
};

/// Builds a canonical e-lattice over `base` in which the class of base
/// element x has class_sizes[x] members. Base elements keep their indices
/// and are the fixed representatives; extra members are appended in base
/// order.
inline ELattice inflate(const Lattice& base, const std::vector<std::size_t>& class_sizes) {
  if (class_sizes.size() != base.size) throw PreconditionError("inflate: one class size per base element required");
  std::vector<Index> eps;
  for (std::size_t x = 0; x < base.size; ++x) {
    if (class_sizes[x] == 0) throw PreconditionError("inflate: class sizes must be positive");
    eps.push_back(static_cast<Index>(x));
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < base.size; ++x)
    labels.push_back(base.labels.empty() ? std::to_string(x) : base.labels[x]);
  for (std::size_t x = 0; x < base.size; ++x)
    for (std::size_t k = 1; k < class_sizes[x]; ++k) {
      eps.push_back(static_cast<Index>(x));
      labels.push_back(labels[x] + "'" + std::to_string(k));
    }
  const std::size_t n = eps.size();
  std::vector<Index> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      meet[a * n + b] = base.meet[eps[a] * base.size + eps[b]];
      join[a * n + b] = base.join[eps[a] * base.size + eps[b]];
    }
  return ELattice(n, std::move(eps), std::move(meet), std::move(join), std::move(labels));
}

/// L/~ with operations induced through eps, and the isomorphism to Fix eps.
struct QuotientLattice {
  std::vector<std::vector<Index>> classes;  // ordered by smallest member
  std::vector<std::size_t> class_of;        // carrier index -> class
  std::vector<std::size_t> meet;            // classes x classes
  std::vector<std::size_t> join;
  std::vector<Index> to_fix;                // class -> common eps value

  std::size_t size() const noexcept { return classes.size(); }
};

/// Quotient by an equivalence given as a label per carrier element. The
/// relation must lie inside Ker eps. It must also separate eps-fibres
/// into single classes: a strictly finer relation leaves [a] meet [a] =
/// [eps(a)] != [a] for a outside Fix eps, so L/~ is not a lattice.
inline QuotientLattice quotient_mod(const ELattice& l, const std::vector<std::size_t>& equiv) {
  if (equiv.size() != l.size()) throw PreconditionError("quotient_mod: one label per carrier element required");
  QuotientLattice q;
  std::map<std::size_t, std::size_t> label_to_class;
  q.class_of.resize(l.size());
  for (Index a = 0; a < l.size(); ++a) {
    auto [it, fresh] = label_to_class.emplace(equiv[a], q.classes.size());
    if (fresh) {
      q.classes.emplace_back();
      q.to_fix.push_back(l.eps(a));
    }
    q.classes[it->second].push_back(a);
    q.class_of[a] = it->second;
    if (q.to_fix[it->second] != l.eps(a))
      throw PreconditionError("quotient_mod: relation is not contained in Ker eps (elements " +
                              std::to_string(q.classes[it->second].front()) + " and " + std::to_string(a) + ")");
  }
  std::vector<bool> used(l.size(), false);
  for (Index f : q.to_fix) {
    if (used[f])
      throw PreconditionError("quotient_mod: relation is strictly finer than Ker eps; L/~ is not a lattice");
    used[f] = true;
  }
  std::vector<std::size_t> class_of_fixed(l.size(), 0);
  for (std::size_t c = 0; c < q.size(); ++c) class_of_fixed[q.to_fix[c]] = c;
  const std::size_t k = q.size();
  q.meet.resize(k * k);
  q.join.resize(k * k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      q.meet[c * k + d] = class_of_fixed[l.eps(l.meet(q.to_fix[c], q.to_fix[d]))];
      q.join[c * k + d] = class_of_fixed[l.eps(l.join(q.to_fix[c], q.to_fix[d]))];
    }
  return q;
}

/// The kernel of eps as a label vector (label = eps value).
inline std::vector<std::size_t> kernel_labels(const ELattice& l) {
  return {l.eps_table().begin(), l.eps_table().end()};
}

/// A finite group with its subgroup lattice and subgroup e-lattice:
/// eps(H) = core of H, H1 meet H2 = core(H1) n core(H2),
/// H1 join H2 = core(H1) core(H2).
struct SubgroupELattice {
  GroupPtr group;
  SubgroupLattice lattice;
  ELattice elattice;
};

inline ELattice subgroup_elattice(const SubgroupLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<Index> eps(n);
  for (SubId h = 0; h < n; ++h) eps[h] = static_cast<Index>(lat.core_id(h));
  std::map<std::pair<SubId, SubId>, std::pair<Index, Index>> normal_ops;
  for (SubId a : lat.normal_ids())
    for (SubId b : lat.normal_ids()) {
      const SubId product = normal_product_id(lat, a, b);
      if (product != lat.join_id(a, b)) throw Error("set product of normal subgroups differs from their join");
      normal_ops[{a, b}] = {static_cast<Index>(lat.meet_id(a, b)), static_cast<Index>(product)};
    }
  std::vector<Index> meet(n * n), join(n * n);
  for (SubId a = 0; a < n; ++a)
    for (SubId b = 0; b < n; ++b) {
      const auto& ops = normal_ops.at({eps[a], eps[b]});
      meet[a * n + b] = ops.first;
      join[a * n + b] = ops.second;
    }
  std::vector<std::string> labels;
  for (SubId h = 0; h < n; ++h) labels.push_back(lat.describe(h));
  return ELattice(n, std::move(eps), std::move(meet), std::move(join), std::move(labels));
}

inline SubgroupELattice make_subgroup_elattice(const GroupPtr& g, const Limits& limits = {}) {
  auto lat = all_subgroups(g, limits);
  auto el = subgroup_elattice(lat);
  return {g, std::move(lat), std::move(el)};
}

/// The plain subgroup lattice L(G) ordered by inclusion.
inline Poset subgroup_poset(const SubgroupLattice& lat) {
  return Poset(lat.size(), [&](std::size_t a, std::size_t b) { return lat.leq(a, b); });
}

/// N(G) ordered by inclusion, indexed by position in lat.normal_ids().
inline Poset normal_poset(const SubgroupLattice& lat) {
  const auto& ids = lat.normal_ids();
  return Poset(ids.size(), [&](std::size_t a, std::size_t b) { return lat.leq(ids[a], ids[b]); });
}

}  // namespace elat
