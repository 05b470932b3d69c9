#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catalog.hpp"
#include "elattice.hpp"
#include "errors.hpp"
#include "lattice_iso.hpp"

namespace elat {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

// ---------------------------------------------------------------------------
// Definition-level checks

struct MorphismVerdict {
  enum class Kind { NotHom, Hom, Iso };
  Kind kind = Kind::NotHom;
  std::string violated;        // equation that failed (NotHom only)
  std::vector<Index> witness;  // offending element or pair

  bool is_hom() const noexcept { return kind != Kind::NotHom; }
  bool is_iso() const noexcept { return kind == Kind::Iso; }
};

inline const char* to_string(MorphismVerdict::Kind k) {
  switch (k) {
    case MorphismVerdict::Kind::NotHom: return "not_hom";
    case MorphismVerdict::Kind::Hom: return "hom";
    case MorphismVerdict::Kind::Iso: return "iso";
  }
  return "?";
}

/// A map between the carriers of two e-lattices.
struct ELMap {
  const ELattice* source = nullptr;
  const ELattice* target = nullptr;
  std::vector<Index> map;
};

/// Checks f o eps1 = eps2 o f and both operation equations over all pairs;
/// a homomorphism that is a bijection is reported as an isomorphism.
inline MorphismVerdict check_el_morphism(const ELattice& src, const ELattice& dst, const std::vector<Index>& f) {
  if (f.size() != src.size()) throw PreconditionError("map length differs from source carrier size");
  for (Index y : f)
    if (y >= dst.size()) throw PreconditionError("map value out of target range");
  MorphismVerdict v;
  const auto n = static_cast<Index>(src.size());
  for (Index a = 0; a < n; ++a)
    if (f[src.eps(a)] != dst.eps(f[a])) {
      v.violated = "f(eps1(a)) = eps2(f(a))";
      v.witness = {a};
      return v;
    }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (f[src.meet(a, b)] != dst.meet(f[a], f[b])) {
        v.violated = "f(a meet b) = f(a) meet f(b)";
        v.witness = {a, b};
        return v;
      }
      if (f[src.join(a, b)] != dst.join(f[a], f[b])) {
        v.violated = "f(a join b) = f(a) join f(b)";
        v.witness = {a, b};
        return v;
      }
    }
  v.kind = MorphismVerdict::Kind::Hom;
  if (src.size() == dst.size()) {
    std::vector<bool> hit(dst.size(), false);
    bool bijective = true;
    for (Index y : f) {
      if (hit[y]) bijective = false;
      hit[y] = true;
    }
    if (bijective) v.kind = MorphismVerdict::Kind::Iso;
  }
  return v;
}

inline MorphismVerdict check_el_morphism(const ELMap& m) { return check_el_morphism(*m.source, *m.target, m.map); }

// ---------------------------------------------------------------------------
// Isomorphisms through the fixed lattice

/// Fixed-lattice isomorphism plus one bijection per class.
struct ELIsomorphism {
  std::vector<Index> fix_domain;  // fixed points of the source, ascending
  std::vector<Index> fix_image;   // image of each, in the target
  std::vector<std::vector<std::pair<Index, Index>>> class_bijections;  // parallel to fix_domain

  std::vector<Index> assemble(std::size_t source_size) const {
    std::vector<Index> f(source_size, 0);
    for (const auto& cls : class_bijections)
      for (auto [a, b] : cls) f[a] = b;
    return f;
  }
};

/// Pre-digested view of a canonical e-lattice for the searches below.
struct ELView {
  const ELattice* l = nullptr;
  FixLattice fix;
  ClassPartition partition;
  std::vector<std::size_t> sizes;  // class size per fixed-lattice position

  explicit ELView(const ELattice& lat)
      : l(&lat), fix(fix_lattice(lat)), partition(class_partition(lat)), sizes(class_sizes(lat, fix)) {}

  /// Class members of the fixed point at position k other than the point itself.
  std::vector<Index> others(std::size_t k) const {
    std::vector<Index> out;
    for (Index x : partition.classes.at(fix.elements[k]))
      if (x != fix.elements[k]) out.push_back(x);
    return out;
  }
};

namespace detail {

inline void require_canonical(const ELattice& l) {
  if (!l.is_canonical()) throw PreconditionError("e-lattice is not canonical");
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Enumerates fixed-lattice isomorphisms Fix1 -> Fix2 as position maps.
/// With `admissible_only`, only those preserving every class size.
inline std::size_t for_each_fix_iso(const ELView& a, const ELView& b, bool admissible_only,
                                    const std::function<bool(const std::vector<std::size_t>&)>& visit,
                                    std::size_t limit = Limits{}.max_lattice_isos) {
  LatticeIsoSearch search(a.fix.order, b.fix.order, admissible_only ? &a.sizes : nullptr,
                          admissible_only ? &b.sizes : nullptr);
  return search.run(visit, limit);
}

inline std::size_t count_fix_isos(const ELattice& l1, const ELattice& l2, bool admissible_only = false) {
  ELView a(l1), b(l2);
  return for_each_fix_iso(a, b, admissible_only, [](const auto&) { return true; });
}

/// Visits every e-lattice isomorphism over the fixed-lattice isomorphism
/// `g`: class bijections fix representative -> representative, remaining
/// members run through all arrangements in lexicographic order. The first
/// one visited is the canonical witness.
inline void for_each_extension(const ELView& a, const ELView& b, const std::vector<std::size_t>& g,
                               const std::function<bool(const std::vector<Index>&)>& visit) {
  const std::size_t k = a.fix.size();
  std::vector<std::vector<Index>> src(k), dst(k);
  for (std::size_t p = 0; p < k; ++p) {
    src[p] = a.others(p);
    dst[p] = b.others(g[p]);
    if (src[p].size() != dst[p].size()) return;
  }
  std::vector<Index> f(a.l->size());
  for (std::size_t p = 0; p < k; ++p) f[a.fix.elements[p]] = b.fix.elements[g[p]];
  std::function<bool(std::size_t)> rec = [&](std::size_t p) -> bool {
    if (p == k) return visit(f);
    auto perm = dst[p];
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) f[src[p][i]] = perm[i];
      if (!rec(p + 1)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  };
  rec(0);
}

inline ELIsomorphism make_isomorphism(const ELView& a, const ELView& b, const std::vector<Index>& total) {
  ELIsomorphism iso;
  for (std::size_t p = 0; p < a.fix.size(); ++p) {
    const Index x = a.fix.elements[p];
    iso.fix_domain.push_back(x);
    iso.fix_image.push_back(total[x]);
    std::vector<std::pair<Index, Index>> cls;
    for (Index m : a.partition.classes.at(x)) cls.emplace_back(m, total[m]);
    iso.class_bijections.push_back(std::move(cls));
  }
  (void)b;
  return iso;
}

/// Some e-lattice isomorphism l1 -> l2 assembled from the first admissible
/// fixed-lattice isomorphism, or nullopt when none is admissible.
inline std::optional<ELIsomorphism> el_isomorphism_search(const ELattice& l1, const ELattice& l2) {
  detail::require_canonical(l1);
  detail::require_canonical(l2);
  if (l1.size() != l2.size()) return std::nullopt;
  ELView a(l1), b(l2);
  if (a.fix.size() != b.fix.size() || detail::sorted(a.sizes) != detail::sorted(b.sizes)) return std::nullopt;
  std::optional<ELIsomorphism> out;
  for_each_fix_iso(a, b, true, [&](const std::vector<std::size_t>& g) {
    for_each_extension(a, b, g, [&](const std::vector<Index>& f) {
      out = make_isomorphism(a, b, f);
      return false;
    });
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Aut_E(L) through the exact sequence 1 -> prod S'([a_i]) -> Aut_E -> Im psi -> 1

struct AutEDecomposition {
  std::vector<Index> fixed_points;
  std::vector<std::size_t> class_sizes;     // m_i, parallel to fixed_points
  BigInt kernel_order;                       // prod (m_i - 1)!
  std::size_t aut_fix_order = 0;             // |Aut(Fix eps)|
  std::size_t im_psi_order = 0;              // admissible automorphisms
  BigInt total_order;
  std::string factored;
  bool fix_is_chain = false;
  bool psi_surjective = false;
  std::vector<std::vector<std::size_t>> admissible;  // Im psi as position maps

  /// Factorial terms (m_i - 1)! with m_i - 1 >= 2, in fixed-point order.
  std::vector<std::size_t> factorial_terms() const {
    std::vector<std::size_t> t;
    for (auto m : class_sizes)
      if (m >= 3) t.push_back(m - 1);
    return t;
  }
};

inline AutEDecomposition aut_e_decomposition(const ELattice& l, const Limits& limits = {}) {
  detail::require_canonical(l);
  ELView v(l);
  AutEDecomposition d;
  d.fixed_points = v.fix.elements;
  d.class_sizes = v.sizes;
  d.kernel_order = 1;
  for (auto m : v.sizes) d.kernel_order *= factorial(m - 1);
  d.aut_fix_order = for_each_fix_iso(v, v, false, [](const auto&) { return true; }, limits.max_lattice_isos);
  for_each_fix_iso(
      v, v, true,
      [&](const std::vector<std::size_t>& g) {
        d.admissible.push_back(g);
        return true;
      },
      limits.max_lattice_isos);
  d.im_psi_order = d.admissible.size();
  d.total_order = d.kernel_order * d.im_psi_order;
  d.fix_is_chain = v.fix.order.is_chain();
  d.psi_surjective = d.im_psi_order == d.aut_fix_order;
  std::string s;
  for (auto t : d.factorial_terms()) s += (s.empty() ? "" : " × ") + std::to_string(t) + "!";
  if (d.im_psi_order > 1) s += (s.empty() ? "" : " × ") + std::to_string(d.im_psi_order);
  d.factored = s.empty() ? "1" : s;
  return d;
}

/// Every e-lattice automorphism, assembled as (admissible fixed-lattice
/// automorphism, class bijections). Refuses when the order exceeds `max_order`.
inline std::vector<std::vector<Index>> enumerate_aut_e(const ELattice& l, std::size_t max_order,
                                                       const AutEDecomposition* known = nullptr) {
  std::optional<AutEDecomposition> own;
  if (!known) known = &own.emplace(aut_e_decomposition(l));
  if (known->total_order > max_order)
    throw BoundError("Aut_E order " + known->total_order.str() + " exceeds enumeration threshold " +
                     std::to_string(max_order));
  ELView v(l);
  std::vector<std::vector<Index>> out;
  for (const auto& g : known->admissible)
    for_each_extension(v, v, g, [&](const std::vector<Index>& f) {
      out.push_back(f);
      return true;
    });
  return out;
}

/// All carrier bijections that check_el_morphism accepts as isomorphisms
/// l1 -> l2, in lexicographic order. Independent of the fixed-lattice route.
inline std::vector<std::vector<Index>> brute_force_isomorphisms(const ELattice& l1, const ELattice& l2,
                                                                std::size_t max_carrier = 7) {
  if (l1.size() > max_carrier) throw BoundError("brute-force oracle limited to small carriers");
  std::vector<std::vector<Index>> out;
  if (l1.size() != l2.size()) return out;
  std::vector<Index> f(l1.size());
  std::iota(f.begin(), f.end(), Index{0});
  do {
    if (check_el_morphism(l1, l2, f).is_iso()) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

inline std::vector<std::vector<Index>> brute_force_aut_e(const ELattice& l, std::size_t max_carrier = 7) {
  return brute_force_isomorphisms(l, l, max_carrier);
}

/// Every map assembled from (admissible fixed-lattice iso, class bijections),
/// sorted; the set that must equal brute_force_isomorphisms.
inline std::vector<std::vector<Index>> assembled_isomorphisms(const ELattice& l1, const ELattice& l2) {
  std::vector<std::vector<Index>> out;
  if (l1.size() != l2.size()) return out;
  ELView a(l1), b(l2);
  for_each_fix_iso(a, b, true, [&](const std::vector<std::size_t>& g) {
    for_each_extension(a, b, g, [&](const std::vector<Index>& f) {
      out.push_back(f);
      return true;
    });
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Im phi: identity on Fix eps, an arbitrary representative-fixing
/// permutation on each class. Built directly from the classes.
inline std::vector<std::vector<Index>> phi_image(const ELattice& l, std::size_t max_order) {
  ELView v(l);
  BigInt order = 1;
  for (auto m : v.sizes) order *= factorial(m - 1);
  if (order > max_order) throw BoundError("Im phi exceeds enumeration threshold");
  std::vector<Index> identity(l.size());
  std::iota(identity.begin(), identity.end(), Index{0});
  std::vector<std::size_t> g(v.fix.size());
  std::iota(g.begin(), g.end(), std::size_t{0});
  std::vector<std::vector<Index>> out;
  for_each_extension(v, v, g, [&](const std::vector<Index>& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

struct ExactSequenceCheck {
  std::size_t enumerated = 0;
  std::size_t kernel_psi = 0;        // automorphisms acting trivially on Fix
  std::size_t image_phi = 0;         // distinct maps built from class permutations
  bool phi_injective = false;        // |Im phi| = prod (m_i - 1)!
  bool ker_equals_im = false;
  bool restrictions_in_im_psi = false;
  bool count_matches = false;        // enumerated = prod (m_i - 1)! * |Im psi|
  bool all_automorphisms = false;    // every enumerated map passes the definition check

  bool ok() const noexcept {
    return phi_injective && ker_equals_im && restrictions_in_im_psi && count_matches && all_automorphisms;
  }
};

inline ExactSequenceCheck verify_exact_sequence(const ELattice& l, const AutEDecomposition& d,
                                                const std::vector<std::vector<Index>>& autos,
                                                std::size_t max_order) {
  ExactSequenceCheck c;
  c.enumerated = autos.size();
  ELView v(l);
  std::set<std::vector<Index>> kernel;
  std::set<std::vector<std::size_t>> admissible(d.admissible.begin(), d.admissible.end());
  c.restrictions_in_im_psi = true;
  c.all_automorphisms = true;
  for (const auto& f : autos) {
    if (!check_el_morphism(l, l, f).is_iso()) c.all_automorphisms = false;
    std::vector<std::size_t> restriction;
    bool trivial = true;
    for (std::size_t p = 0; p < v.fix.size(); ++p) {
      const Index x = v.fix.elements[p];
      restriction.push_back(v.fix.position(f[x]));
      if (f[x] != x) trivial = false;
    }
    if (!admissible.contains(restriction)) c.restrictions_in_im_psi = false;
    if (trivial) kernel.insert(f);
  }
  auto im = phi_image(l, max_order);
  std::set<std::vector<Index>> im_set(im.begin(), im.end());
  c.kernel_psi = kernel.size();
  c.image_phi = im_set.size();
  c.phi_injective = BigInt(im_set.size()) == d.kernel_order && im_set.size() == im.size();
  c.ker_equals_im = kernel == im_set;
  c.count_matches = BigInt(autos.size()) == d.total_order;
  return c;
}

// ---------------------------------------------------------------------------
// Subgroup e-lattices: the towers Aut0 (Ker psi), Aut1 (group automorphisms),
// Aut2 (conjugations)

/// A permutation group on the subgroup list, with its catalog identification
/// when small enough.
struct PermGroupSummary {
  BigInt order = 1;
  std::string identified = "unknown";
  std::vector<Perm> elements;  // empty when not enumerated
};

namespace detail {

inline PermGroupSummary summarize(std::vector<Perm> elems, const Limits& limits) {
  PermGroupSummary s;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.order = elems.size();
  if (elems.size() <= limits.max_analysis_order) {
    auto g = share(FiniteGroup::from_elements(elems, {}));
    s.identified = identify(g, limits);
  }
  s.elements = std::move(elems);
  return s;
}

inline Perm perm_of(const std::vector<Index>& m) {
  std::vector<Point> im(m.begin(), m.end());
  return Perm(std::move(im));
}

}  // namespace detail

struct Towers {
  AutEDecomposition decomposition;
  PermGroupSummary aut0;
  PermGroupSummary aut1;
  PermGroupSummary aut2;
  BigInt aut2_oracle_order;        // |G| / |intersection of all normalizers|
  bool aut2_in_aut0 = false;
  bool aut2_in_aut1 = false;
  bool aut2_normal_in_aut1 = false;
  bool aut1_in_aut_e = false;
  std::optional<bool> aut0_normal_in_aut_e;  // only when Aut_E is enumerable
};

inline Towers aut_towers(const SubgroupELattice& s, const Limits& limits = {}) {
  const auto& lat = s.lattice;
  const auto& G = *s.group;
  const std::size_t n = lat.size();
  Towers t;
  t.decomposition = aut_e_decomposition(s.elattice, limits);
  ELView v(s.elattice);

  // Aut0 = Ker psi, generated by S'([a]) for each class
  t.aut0.order = t.decomposition.kernel_order;
  if (t.aut0.order <= limits.max_analysis_order) {
    std::vector<Perm> gens{Perm::identity(n)};
    for (std::size_t p = 0; p < v.fix.size(); ++p) {
      auto rest = v.others(p);
      if (rest.size() < 2) continue;
      std::vector<Point> cyc(rest.begin(), rest.end());
      gens.push_back(Perm::from_cycles(n, {{cyc[0], cyc[1]}}));
      if (cyc.size() > 2) gens.push_back(Perm::from_cycles(n, {cyc}));
    }
    auto g0 = group_from_generators(gens, {}, limits.max_closure_order);
    t.aut0 = detail::summarize(g0.elements(), limits);
  }

  // Aut1: images of group automorphisms acting on subgroups
  std::vector<Perm> induced;
  for (const auto& phi : automorphism_group(s.group, limits)) {
    std::vector<Point> im(n);
    for (SubId h = 0; h < n; ++h) im[h] = static_cast<Point>(lat.image_id(h, phi.map));
    induced.emplace_back(std::move(im));
  }
  t.aut1 = detail::summarize(std::move(induced), limits);
  t.aut1_in_aut_e = std::all_of(t.aut1.elements.begin(), t.aut1.elements.end(), [&](const Perm& p) {
    std::vector<Index> f(p.images().begin(), p.images().end());
    return check_el_morphism(s.elattice, s.elattice, f).is_iso();
  });

  // Aut2: f_a(H) = H^a
  std::vector<Perm> conj;
  for (Elem a = 0; a < G.order(); ++a) {
    std::vector<Point> im(n);
    for (SubId h = 0; h < n; ++h) im[h] = static_cast<Point>(lat.conjugate_id(h, a));
    conj.emplace_back(std::move(im));
  }
  t.aut2 = detail::summarize(std::move(conj), limits);

  // oracle: the kernel of a -> f_a is the intersection of all normalizers
  ElementSet norm(G.order());
  norm.complement();
  for (SubId h = 0; h < n; ++h) {
    ElementSet normalizer(G.order());
    for (Elem a = 0; a < G.order(); ++a)
      if (conjugate_set(G, lat[h].members, a) == lat[h].members) normalizer.set(a);
    norm &= normalizer;
  }
  t.aut2_oracle_order = G.order() / norm.count();

  t.aut2_in_aut0 = std::all_of(t.aut2.elements.begin(), t.aut2.elements.end(), [&](const Perm& p) {
    return std::all_of(lat.normal_ids().begin(), lat.normal_ids().end(), [&](SubId h) { return p[h] == h; });
  });
  std::set<Perm> aut1_set(t.aut1.elements.begin(), t.aut1.elements.end());
  std::set<Perm> aut2_set(t.aut2.elements.begin(), t.aut2.elements.end());
  t.aut2_in_aut1 = std::includes(aut1_set.begin(), aut1_set.end(), aut2_set.begin(), aut2_set.end());
  t.aut2_normal_in_aut1 = t.aut2_in_aut1;
  for (const auto& x : t.aut1.elements) {
    const Perm xi = x.inverse();
    for (const auto& y : t.aut2.elements)
      if (!aut2_set.contains(xi * y * x)) t.aut2_normal_in_aut1 = false;
  }

  if (t.decomposition.total_order <= limits.enum_threshold && t.aut0.order <= limits.max_analysis_order) {
    const auto autos = enumerate_aut_e(s.elattice, limits.enum_threshold, &t.decomposition);
    bool normal = true;
    for (const auto& f : autos) {
      const Perm x = detail::perm_of(f), xi = x.inverse();
      for (const auto& y : t.aut0.elements) {
        const Perm c = xi * y * x;
        for (Index fp : v.fix.elements)
          if (c[fp] != fp) normal = false;
      }
    }
    t.aut0_normal_in_aut_e = normal;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Induced isomorphism on quotients: K1/H1 -> f(K1)/f(H1)

struct QuotientContext {
  SubId normal = 0;
  Quotient quotient;
  SubgroupELattice el;
};

inline QuotientContext quotient_context(const SubgroupELattice& s, SubId normal, const Limits& limits = {}) {
  auto q = quotient_group(s.lattice, normal);
  auto el = make_subgroup_elattice(q.group, limits);
  return {normal, std::move(q), std::move(el)};
}

struct InducedQuotient {
  std::vector<Index> map;  // subgroup ids of G1/H1 -> subgroup ids of G2/f(H1)
  MorphismVerdict verdict;
  SubId h2 = 0;
};

/// Requires `f` to be an e-lattice isomorphism L(G1) -> L(G2) and `h1`
/// normal in G1. The optional contexts must be the quotients by h1 and f(h1).
inline InducedQuotient quotient_induced_iso(const SubgroupELattice& s1, const SubgroupELattice& s2,
                                            const std::vector<Index>& f, SubId h1, const Limits& limits = {},
                                            const QuotientContext* q1 = nullptr,
                                            const QuotientContext* q2 = nullptr) {
  if (!s1.lattice.is_normal(h1)) throw PreconditionError("quotient_induced_iso: H1 is not normal");
  if (!check_el_morphism(s1.elattice, s2.elattice, f).is_iso())
    throw PreconditionError("quotient_induced_iso: f is not an e-lattice isomorphism");
  InducedQuotient out;
  out.h2 = f[h1];
  std::optional<QuotientContext> own1, own2;
  if (!q1) q1 = &own1.emplace(quotient_context(s1, h1, limits));
  if (!q2) q2 = &own2.emplace(quotient_context(s2, out.h2, limits));
  if (q1->normal != h1 || q2->normal != out.h2) throw PreconditionError("quotient contexts do not match");

  const auto& G1 = *s1.group;
  const auto& pi1 = q1->quotient.projection.map;
  const auto& pi2 = q2->quotient.projection.map;
  const auto& ql1 = q1->el.lattice;
  const auto& ql2 = q2->el.lattice;
  out.map.resize(ql1.size());
  for (SubId s = 0; s < ql1.size(); ++s) {
    ElementSet pre(G1.order());
    for (Elem x = 0; x < G1.order(); ++x)
      if (ql1[s].contains(pi1[x])) pre.set(x);
    const SubId k1 = s1.lattice.id_of(pre);
    const SubId k2 = f[k1];
    if (!s2.lattice.leq(out.h2, k2)) throw Error("f(K1) does not contain f(H1)");
    ElementSet img(q2->quotient.group->order());
    for (Elem y : s2.lattice[k2].elements) img.set(pi2[y]);
    out.map[s] = static_cast<Index>(ql2.id_of(img));
  }
  out.verdict = check_el_morphism(q1->el.elattice, q2->el.elattice, out.map);
  return out;
}

}  // namespace elat
