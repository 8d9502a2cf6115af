#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbicurve/permutation.hpp"
#include "orbicurve/weighted_curve.hpp"

namespace orbicurve {

// Presentation of the orbifold fundamental group of a weighted curve:
//
//   < alpha_1, beta_1, ..., alpha_g, beta_g, sigma_1, ..., sigma_t |
//     sigma_j^{a_j} = 1,
//     sigma_1 ... sigma_t [alpha_1,beta_1] ... [alpha_g,beta_g] = 1 >
//
// with [a,b] = a b a^-1 b^-1. There are always t + 1 relations. Built from a
// WeightedCurve the weights are its canonical (sorted, >= 2) list; built
// from a raw tuple they are kept in the given order, and weight-1 entries
// are legal there (sigma_j^1 = 1 forces that generator to die).
class OrbifoldPresentation {
public:
  OrbifoldPresentation(std::int64_t genus, std::vector<Weight> weights);
  explicit OrbifoldPresentation(const WeightedCurve& curve);

  std::int64_t genus() const noexcept { return genus_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::size_t relation_count() const noexcept { return weights_.size() + 1; }

  // "<sigma_1, sigma_2 | sigma_1^2 = 1, sigma_2^2 = 1, sigma_1 sigma_2 = 1>"
  std::string str() const;

  friend bool operator==(const OrbifoldPresentation&,
                         const OrbifoldPresentation&) = default;

private:
  std::int64_t genus_ = 0;
  std::vector<Weight> weights_;
};

// Images of the presentation's generators in a symmetric group.
struct GeneratorImages {
  std::vector<Permutation> alpha;
  std::vector<Permutation> beta;
  std::vector<Permutation> sigma;

  friend bool operator==(const GeneratorImages&, const GeneratorImages&) = default;
};

// All of the images, in generator order; the generating set of the image
// group.
std::vector<Permutation> all_images(const GeneratorImages& images);

// True iff the assignment satisfies every relation. Arity mismatches are
// DomainErrors, a failed relation is just `false`.
bool check_homomorphism(const OrbifoldPresentation& pres,
                        const GeneratorImages& images);

// Text of the first relation the assignment violates; empty if none.
// Same arity requirements as check_homomorphism.
std::string first_failing_relation(const OrbifoldPresentation& pres,
                                   const GeneratorImages& images);

} // namespace orbicurve
