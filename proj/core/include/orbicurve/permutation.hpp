#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbicurve/rational.hpp"

namespace orbicurve {

using Point = std::uint32_t; // 1-based in all textual and API forms

// A permutation of {1, 2, 3, ...} moving finitely many points, stored as the
// image table of 1..n where n is the largest moved point (0 for the
// identity). Trailing fixed points are trimmed, so equal functions have equal
// representations. Points beyond n are fixed; composition pads on demand.
//
// Products compose left to right: (p * q)(x) = q(p(x)). This matches the
// convention in which x^(pq) = (x^p)^q.
class Permutation {
public:
  Permutation() = default;

  // images[i] is the image of point i+1; must be a bijection.
  static Permutation from_images(std::vector<Point> images);

  // Disjoint-cycle notation, e.g. "(1,2)(3,6)". "()" is the identity. Points
  // are positive integers; repeating a point anywhere is an error.
  static Permutation parse(const std::string& text);

  Point degree() const noexcept { return static_cast<Point>(images_.size()); }
  bool is_identity() const noexcept { return images_.empty(); }

  Point apply(Point x) const noexcept {
    return x >= 1 && x <= images_.size() ? images_[x - 1] : x;
  }

  Permutation inverse() const;
  Permutation& operator*=(const Permutation& rhs);
  friend Permutation operator*(Permutation lhs, const Permutation& rhs) {
    return lhs *= rhs;
  }

  // p^k for k >= 0 (binary exponentiation).
  Permutation pow(std::uint64_t k) const;

  // Cycles sorted by smallest moved point, each starting at it. Fixed points
  // are omitted; the identity yields no cycles.
  std::vector<std::vector<Point>> cycles() const;

  // lcm of the cycle lengths.
  Int order() const;
  // order() as a machine word; requires degree small enough that the lcm
  // fits, which holds for every degree <= 42.
  std::uint64_t order_u64() const;

  // Canonical cycle notation: "(1,3,7)(4,5,6)", identity "()".
  std::string str() const;

  const std::vector<Point>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p);

private:
  void trim();

  std::vector<Point> images_;
};

} // namespace orbicurve

template <>
struct std::hash<orbicurve::Permutation> {
  std::size_t operator()(const orbicurve::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};
