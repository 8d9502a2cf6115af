#include "orbicurve/k0.hpp"

#include <algorithm>

namespace orbicurve {

K0Class structure_sheaf() { return {1, 0}; }

Int simple_sheaf_degree(const WeightedCurve& curve, Weight w) {
  const auto& ws = curve.weights();
  if (w != 1 && std::find(ws.begin(), ws.end(), w) == ws.end())
    throw DomainError("no point of weight " + std::to_string(w) + " on " +
                      curve.label());
  return weight_lcm(curve) / w;
}

K0Class simple_at_weight(const WeightedCurve& curve, Weight w) {
  return {0, simple_sheaf_degree(curve, w)};
}

Rational averaged_euler_form(const WeightedCurve& curve, const K0Class& x,
                             const K0Class& y) {
  Rational half_chi = euler_characteristic(curve) / Rational(2);
  Int det = x.rank * y.degree - y.rank * x.degree;
  return half_chi * Rational(x.rank * y.rank) + Rational(det, weight_lcm(curve));
}

} // namespace orbicurve
