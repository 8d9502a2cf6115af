#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbicurve/rational.hpp"

namespace orbicurve {

using Weight = std::int64_t;

// A smooth projective curve of genus g with finitely many weighted points
// a_1 <= ... <= a_t (all >= 2). Weight-1 points are ordinary: they are
// normalized away at construction and never stored, so the weight multiset
// is canonical and two curves compare equal iff genus and weights agree.
class WeightedCurve {
public:
  WeightedCurve() = default;
  WeightedCurve(std::int64_t genus, std::vector<Weight> weights);

  std::int64_t genus() const noexcept { return genus_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::size_t weight_count() const noexcept { return weights_.size(); }

  // "P1" for the plain rational line, otherwise "<a1,...,at>" prefixed with
  // "g=..;" when the genus is nonzero.
  std::string label() const;

  friend bool operator==(const WeightedCurve&, const WeightedCurve&) = default;

private:
  std::int64_t genus_ = 0;
  std::vector<Weight> weights_;
};

enum class Trisection {
  Spherical,  // chi > 0
  Parabolic,  // chi == 0
  Hyperbolic, // chi < 0
  ExcludedPQ, // genus 0 with one weighted point, or two of unequal weight
};

std::string to_string(Trisection t);

// chi = 2(1 - g) - sum_i (1 - 1/a_i). The denominator always divides the
// lcm of the weights.
Rational euler_characteristic(const WeightedCurve& curve);

// The excluded genus-0 shapes <p> and <p,q> (p != q) are reported as
// ExcludedPQ; every other curve is classified by the sign of chi.
Trisection classify(const WeightedCurve& curve);

// chi of the quotient of a cover with Euler characteristic chi_cover by a
// group of the given order: chi_cover / order. Order must be >= 1.
Rational riemann_hurwitz_chi(const Rational& chi_cover, const Int& group_order);

// 42 * |chi| = 84(g - 1), the automorphism bound for an ordinary curve of
// genus g >= 2. Requires chi to be a negative even integer.
Int hurwitz_bound(const Rational& chi);

// chi = 2(1 - g) for an ordinary (weightless) curve.
Int genus_to_chi(const Int& genus);
// Inverse of the above; chi must be an even integer <= 2.
Int chi_to_genus(const Rational& chi);

// lcm of the weights; 1 when there are none.
Int weight_lcm(const WeightedCurve& curve);

// |G| = 2 / (1/a + 1/b + 1/c - 1) for a spherical triple, i.e. one whose
// weighted line P1<a,b,c> is Spherical. The value is always a positive
// integer and equals 2 / chi(P1<a,b,c>).
Int spherical_triangle_group_order(Weight a, Weight b, Weight c);

} // namespace orbicurve
