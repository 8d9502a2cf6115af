#pragma once

#include "orbicurve/weighted_curve.hpp"

namespace orbicurve {

// Class in the numerical Grothendieck group of a weighted curve, recorded by
// rank and degree. Degrees live in the (1/a-bar)-scaled lattice: the class of
// the simple sheaf concentrated at a point of weight w has rank 0 and degree
// a-bar/w.
struct K0Class {
  Int rank = 0;
  Int degree = 0;

  friend bool operator==(const K0Class&, const K0Class&) = default;
};

// [O]: rank 1, degree 0.
K0Class structure_sheaf();

// a-bar / w: the degree of the simple sheaf at a point of weight w. Ordinary
// points (w = 1) give a-bar itself. w must be 1 or one of the curve's weights.
Int simple_sheaf_degree(const WeightedCurve& curve, Weight w);

// The class of the simple sheaf at a point of weight w.
K0Class simple_at_weight(const WeightedCurve& curve, Weight w);

// Average of the Euler form over the twist group:
//
//   <<X,Y>> = (chi/2) rk X rk Y + (1/a-bar) det [ rk X  rk Y ]
//                                             [ dg X  dg Y ]
//
// Bilinear in both arguments; <<O,O>> = chi/2.
Rational averaged_euler_form(const WeightedCurve& curve, const K0Class& x,
                             const K0Class& y);

} // namespace orbicurve
