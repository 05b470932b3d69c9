#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace elat {

namespace named {

inline FiniteGroup cyclic(std::size_t n, std::string label) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return group_from_generators({n == 1 ? Perm::identity(1) : Perm::from_cycles(n, {cyc})}, std::move(label));
}

inline FiniteGroup klein_four(std::string label) {
  return group_from_generators({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                               std::move(label));
}

inline FiniteGroup symmetric(std::size_t n, std::string label) {
  if (n == 0) throw PreconditionError("symmetric group degree must be positive");
  if (n == 1) return cyclic(1, std::move(label));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  if (n == 2) return group_from_generators({Perm::from_cycles(2, {{0, 1}})}, std::move(label));
  return group_from_generators({Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cyc})}, std::move(label));
}

inline FiniteGroup alternating(std::size_t n, std::string label) {
  if (n == 0) throw PreconditionError("alternating group degree must be positive");
  if (n <= 2) return cyclic(1, std::move(label));
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return group_from_generators(gens, std::move(label));
}

/// Dihedral group of the given ORDER (2, 4, 6, ...).
inline FiniteGroup dihedral(std::size_t order, std::string label) {
  if (order < 2 || order % 2) throw PreconditionError("dihedral order must be even and at least 2");
  const std::size_t n = order / 2;
  if (n == 1) return cyclic(2, std::move(label));
  if (n == 2) return klein_four(std::move(label));
  std::vector<Point> rot(n);
  std::iota(rot.begin(), rot.end(), Point{0});
  std::vector<Point> refl(n);
  for (std::size_t x = 0; x < n; ++x) refl[x] = static_cast<Point>((n - x) % n);
  return group_from_generators({Perm::from_cycles(n, {rot}), Perm(refl)}, std::move(label));
}

/// Dicyclic (generalized quaternion when a 2-power) group of order 4n,
/// <a, x | a^2n, x^2 = a^n, x^-1 a x = a^-1>, in its right-regular form.
inline FiniteGroup dicyclic(std::size_t order, std::string label) {
  if (order < 8 || order % 4) throw PreconditionError("dicyclic order must be a multiple of 4, at least 8");
  const std::size_t m = order / 2;  // order of a
  const std::size_t half = m / 2;   // x^2 = a^half
  // element a^k x^j has index k + m*j
  auto mul = [&](std::size_t e, std::size_t f) {
    std::size_t k = e % m, j = e / m, l = f % m, i = f / m;
    std::size_t kk = j ? (k + m - l) % m : (k + l) % m;
    std::size_t jj = j + i;
    if (jj == 2) {
      kk = (kk + half) % m;
      jj = 0;
    }
    return kk + m * jj;
  };
  auto right_regular = [&](std::size_t g) {
    std::vector<Point> im(order);
    for (std::size_t e = 0; e < order; ++e) im[e] = static_cast<Point>(mul(e, g));
    return Perm(im);
  };
  return group_from_generators({right_regular(1), right_regular(m)}, std::move(label));
}

inline FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, std::string label) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (Elem e : f.generators()) {
      std::vector<Point> im(degree);
      std::iota(im.begin(), im.end(), Point{0});
      const auto& p = f.element(e);
      for (std::size_t x = 0; x < p.degree(); ++x) im[offset + x] = static_cast<Point>(offset + p[x]);
      gens.emplace_back(std::move(im));
    }
    offset += f.degree();
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return group_from_generators(gens, std::move(label));
}

}  // namespace named

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  FiniteGroup parse() {
    if (text_.starts_with("perm:")) {
      pos_ = 5;
      return parse_perms();
    }
    std::vector<FiniteGroup> factors;
    factors.push_back(parse_factor());
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x') fail("expected 'x' between factors");
      ++pos_;
      factors.push_back(parse_factor());
    }
    std::string label(text_);
    if (factors.size() == 1) {
      factors.front().set_label(label);
      return std::move(factors.front());
    }
    return named::direct_product(factors, label);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("group spec: " + msg + " at position " + std::to_string(pos_), pos_);
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 100000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  FiniteGroup parse_factor() {
    const std::size_t start = pos_;
    auto rest = text_.substr(pos_);
    auto take = [&](std::string_view prefix) {
      if (!rest.starts_with(prefix)) return false;
      pos_ += prefix.size();
      return true;
    };
    auto build = [&]() -> FiniteGroup {
      if (take("Dih")) return named::dihedral(checked(number(), start), {});
      if (take("V4")) return named::klein_four({});
      if (take("C") || take("Z")) return named::cyclic(checked(number(), start), {});
      if (take("S")) return named::symmetric(checked(number(), start, 7), {});
      if (take("A")) return named::alternating(checked(number(), start, 7), {});
      if (take("D")) return named::dihedral(2 * checked(number(), start), {});
      if (take("Q")) return named::dicyclic(checked(number(), start), {});
      fail("unknown group name");
    };
    std::optional<FiniteGroup> built;
    try {
      built.emplace(build());
    } catch (const PreconditionError& e) {
      pos_ = start;
      fail(e.what());
    }
    FiniteGroup g = std::move(*built);
    g.set_label(std::string(text_.substr(start, pos_ - start)));
    return g;
  }

  std::size_t checked(std::size_t n, std::size_t start, std::size_t max_degree = 0) {
    if (n == 0) {
      pos_ = start;
      fail("order or degree must be positive");
    }
    if (max_degree && n > max_degree) {
      pos_ = start;
      fail("degree too large");
    }
    if (!max_degree && n > limits_.max_closure_order) {
      pos_ = start;
      throw BoundError("group too large: order exceeds bound " + std::to_string(limits_.max_closure_order));
    }
    return n;
  }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  FiniteGroup parse_perms() {
    std::vector<std::vector<std::vector<Point>>> gens;
    std::size_t degree = 1;
    while (true) {
      skip_ws();
      std::vector<std::vector<Point>> cycles;
      if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
      while (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        std::vector<Point> cyc;
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] != ')') {
          const std::size_t at = pos_;
          std::size_t p = number();
          if (p >= 65535) fail("point too large");
          for (Point q : cyc)
            if (q == p) {
              pos_ = at;
              fail("repeated point in cycle");
            }
          for (const auto& other : cycles)
            for (Point q : other)
              if (q == p) {
                pos_ = at;
                fail("cycles are not disjoint");
              }
          cyc.push_back(static_cast<Point>(p));
          degree = std::max(degree, p + 1);
          skip_ws();
        }
        if (pos_ >= text_.size()) fail("unterminated cycle");
        ++pos_;
        if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
        skip_ws();
      }
      gens.push_back(std::move(cycles));
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') fail("expected ',' or '('");
      ++pos_;
    }
    std::vector<Perm> perms;
    for (const auto& cycles : gens) perms.push_back(Perm::from_cycles(degree, cycles));
    return group_from_generators(perms, std::string(text_), limits_.max_closure_order);
  }

  std::string_view text_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a group spec: catalog names (`S3`, `D4` = dihedral of order 8,
/// `Dih8`, `Q8`, `V4`, `C12`, `Z3`), direct products joined by `x`
/// (`Z3xZ3`), or `perm:` followed by comma-separated generators in
/// 0-based cycle notation.
inline FiniteGroup parse_group(std::string_view spec, const Limits& limits = {}) {
  if (spec.empty()) throw ParseError("group spec: empty", 0);
  return detail::SpecParser(spec, limits).parse();
}

/// The built-in catalog: one name per isomorphism type, in a fixed order.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int n = 1; n <= 24; ++n) v.push_back("C" + std::to_string(n));
    for (const char* s : {"V4",    "S3",     "D4",     "Q8",    "Z2xZ2xZ2", "C4xC2", "A4",    "Z3xZ3",
                          "Dih10", "Dih12",  "Q12",    "C6xC2", "Dih14",    "Dih16", "Q16",   "C8xC2",
                          "D4xC2", "Q8xC2",  "C4xC4",  "Dih18", "C6xC3",    "Dih20", "Q20",   "Dih22",
                          "S4",    "Dih24",  "Q24",    "A4xC2", "S3xC3",    "S3xC4", "Z5xZ5", "S3xS3",
                          "S4xC2", "Q8xC3"})
      v.emplace_back(s);
    return v;
  }();
  return names;
}

/// Catalog group by spec, built once and shared.
inline GroupPtr catalog_group(const std::string& name, const Limits& limits = {}) {
  static std::mutex mu;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto g = share(parse_group(name, limits));
  cache.emplace(name, g);
  return g;
}

/// Catalog names of groups of order at most `max_order`.
inline std::vector<std::string> catalog_up_to(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& n : catalog_names())
    if (catalog_group(n)->order() <= max_order) out.push_back(n);
  return out;
}

/// First catalog entry isomorphic to `g`, or "unknown".
inline std::string identify(const GroupPtr& g, const Limits& limits = {}) {
  if (g->order() > limits.max_analysis_order) return "unknown";
  for (const auto& name : catalog_names()) {
    auto c = catalog_group(name);
    if (c->order() != g->order()) continue;
    if (find_isomorphism(g, c, limits)) return name;
  }
  return "unknown";
}

}  // namespace elat
