#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace elat {

using Point = std::uint16_t;

/// Permutation of {0, ..., n-1} stored as its image list. Composition is
/// left to right: `p * q` applies `p` first, then `q`.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) throw PreconditionError("images do not form a bijection");
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    return Perm(std::move(im), Unchecked{});
  }

  /// Builds a permutation from disjoint or overlapping cycles, composed left
  /// to right.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Perm result = identity(degree);
    for (const auto& cyc : cycles) {
      std::vector<Point> im(degree);
      std::iota(im.begin(), im.end(), Point{0});
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (cyc[k] >= degree) throw PreconditionError("cycle point out of range");
        im[cyc[k]] = cyc[(k + 1) % cyc.size()];
      }
      result = result * Perm(std::move(im));
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw PreconditionError("degree mismatch in composition");
    std::vector<Point> im(p.degree());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = q.images_[p.images_[x]];
    return Perm(std::move(im), Unchecked{});
  }

  Perm inverse() const {
    std::vector<Point> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<Point>(x);
    return Perm(std::move(im), Unchecked{});
  }

  /// Same permutation acting on `degree` points (extra points fixed).
  Perm extended(std::size_t degree) const {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    std::copy(images_.begin(), images_.end(), im.begin());
    return Perm(std::move(im), Unchecked{});
  }

  /// Cycle notation on 0-based points, e.g. "(0 1)(2 3)"; "()" for identity.
  std::string to_cycles() const {
    std::ostringstream out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (done[x] || images_[x] == x) continue;
      out << '(';
      std::size_t y = x;
      bool first = true;
      while (!done[y]) {
        done[y] = true;
        out << (first ? "" : " ") << y;
        first = false;
        y = images_[y];
      }
      out << ')';
    }
    auto s = out.str();
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = p.degree();
    for (Point x : p.images()) h = h * 1000003U ^ x;
    return h;
  }
};

}  // namespace elat
