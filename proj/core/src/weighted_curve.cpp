#include "orbicurve/weighted_curve.hpp"

#include <algorithm>

namespace orbicurve {

WeightedCurve::WeightedCurve(std::int64_t genus, std::vector<Weight> weights)
    : genus_(genus) {
  if (genus < 0) throw DomainError("negative genus");
  for (Weight w : weights) {
    if (w < 1) throw DomainError("weight must be a positive integer, got " +
                                 std::to_string(w));
    if (w > 1) weights_.push_back(w);
  }
  std::sort(weights_.begin(), weights_.end());
}

std::string WeightedCurve::label() const {
  std::string s;
  if (genus_ != 0) s = "g=" + std::to_string(genus_) + ";";
  if (weights_.empty()) return s.empty() ? "P1" : s + "<>";
  s += "<";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights_[i]);
  }
  s += ">";
  return s;
}

std::string to_string(Trisection t) {
  switch (t) {
    case Trisection::Spherical: return "Spherical";
    case Trisection::Parabolic: return "Parabolic";
    case Trisection::Hyperbolic: return "Hyperbolic";
    case Trisection::ExcludedPQ: return "ExcludedPQ";
  }
  throw DomainError("invalid trisection value");
}

Rational euler_characteristic(const WeightedCurve& curve) {
  Rational chi(Int(2 - 2 * curve.genus()));
  for (Weight a : curve.weights()) chi -= Rational(Int(a - 1), Int(a));
  return chi;
}

Trisection classify(const WeightedCurve& curve) {
  const auto& w = curve.weights();
  if (curve.genus() == 0) {
    if (w.size() == 1) return Trisection::ExcludedPQ;
    if (w.size() == 2 && w[0] != w[1]) return Trisection::ExcludedPQ;
  }
  switch (euler_characteristic(curve).sign()) {
    case 1: return Trisection::Spherical;
    case 0: return Trisection::Parabolic;
    default: return Trisection::Hyperbolic;
  }
}

Rational riemann_hurwitz_chi(const Rational& chi_cover, const Int& group_order) {
  if (group_order < 1)
    throw DomainError("group order must be a positive integer");
  return chi_cover / Rational(group_order);
}

Int hurwitz_bound(const Rational& chi) {
  if (!chi.is_integer() || chi.sign() >= 0 || chi.num() % 2 != 0)
    throw DomainError(
        "bound applies to ordinary hyperbolic surfaces: chi must be a "
        "negative even integer, got " + chi.str());
  return Int(-42) * chi.num();
}

Int genus_to_chi(const Int& genus) {
  if (genus < 0) throw DomainError("negative genus");
  return 2 - 2 * genus;
}

Int chi_to_genus(const Rational& chi) {
  if (!chi.is_integer() || chi.num() % 2 != 0 || chi.num() > 2)
    throw DomainError("chi of an ordinary curve must be an even integer <= 2, got " +
                      chi.str());
  return (2 - chi.num()) / 2;
}

Int weight_lcm(const WeightedCurve& curve) {
  Int l = 1;
  for (Weight a : curve.weights()) l = boost::multiprecision::lcm(l, Int(a));
  return l;
}

Int spherical_triangle_group_order(Weight a, Weight b, Weight c) {
  WeightedCurve line(0, {a, b, c});
  if (classify(line) != Trisection::Spherical)
    throw DomainError("triple (" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ") is not spherical");
  Rational order = Rational(2) / euler_characteristic(line);
  return order.as_integer();
}

} // namespace orbicurve
