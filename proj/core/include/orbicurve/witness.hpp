#pragma once

#include <cstdint>
#include <string>

#include "orbicurve/perm_group.hpp"
#include "orbicurve/presentation.hpp"

namespace orbicurve {

inline constexpr Point default_witness_degree_cap = 24;

// Permutations c1, c2 of orders a, b whose product has order c, together
// with c3 = (c1 c2)^-1. Sending sigma_1, sigma_2, sigma_3 to c1, c2, c3
// defines a finite quotient of the <a,b,c> triangle presentation in which
// every sigma keeps its full order, so the kernel is torsionfree.
struct TriangleWitness {
  Weight a = 1, b = 1, c = 1;
  Point degree = 0; // symmetric-group degree at which the witness was found
  Permutation c1, c2, c3;
};

// Certificate that the given images define a finite quotient of the
// presented group. `torsionfree` records whether every sigma_j image has
// order exactly a_j, which is the criterion for the kernel to be free of
// torsion; the kernel of a homomorphism is always normal.
struct WitnessCertificate {
  OrbifoldPresentation presentation;
  GeneratorImages images;
  Int image_group_order = 1; // the index of the kernel
  bool torsionfree = false;
  bool normal = true;
};

// Verify the images against the presentation and package the certificate.
// A violated relation raises DomainError naming the first failure; the order
// computation follows `backend` (chain fallback by default, so indices past
// the cap are still exact).
WitnessCertificate certify_torsionfree_kernel(
    const OrbifoldPresentation& pres, const GeneratorImages& images,
    std::uint64_t cap = default_group_order_cap,
    OrderBackend backend = OrderBackend::BfsThenChain);

// Certificate for the triangle presentation <a,b,c> with sigmas c1, c2, c3.
WitnessCertificate certificate_from_triangle(
    const TriangleWitness& witness, std::uint64_t cap = default_group_order_cap,
    OrderBackend backend = OrderBackend::BfsThenChain);

// Deterministic search for a triangle witness, after Fox: try symmetric
// groups of increasing degree n; in each, try candidates c1 of order a drawn
// one per cycle type (parts descending on consecutive points, candidates
// ordered by image table), and for each scan all c2 of order exactly b in
// lexicographic image-table order until order(c1 c2) = c. The result is the
// first hit of this enumeration: minimal in degree, then in c1, then in c2.
// Workers split the c2 scan by the image of point 1; the merge keeps the
// result identical for every worker count. Throws SearchExhaustedError when
// max_degree is reached without a hit.
TriangleWitness fox_witness_search(Weight a, Weight b, Weight c,
                                   Point max_degree = default_witness_degree_cap,
                                   unsigned worker_count = 1);

// The forced witness for (n, n, 1): c1 an n-cycle, c2 its inverse, c3 the
// identity.
TriangleWitness trivial_cyclic_witness(Weight n);

// Images realizing the quotient-by-commutators reduction: alphas, betas and
// sigma_4.. die, sigma_1..3 go to the triangle witness. The curve must have
// at least three weighted points and the witness must match its first three
// weights. The composed assignment always satisfies the relations.
GeneratorImages reduction_images(const WeightedCurve& curve,
                                 const TriangleWitness& witness);

// Abelianized images for a weightless genus-g curve: alpha_1 and beta_1 map
// to disjoint k-cycles, everything else dies. All relations hold and the
// certificate is torsionfree vacuously.
GeneratorImages surface_abelianization_images(std::int64_t genus, Weight k);

// Stable JSON form of a certificate (schema_version, tool_version,
// presentation, images in cycle notation, image_group_order, flags).
std::string certificate_to_json(const WitnessCertificate& cert);

// Read back the presentation + images part of the JSON above (the other
// fields are recomputed, never trusted).
std::pair<OrbifoldPresentation, GeneratorImages> parse_homomorphism_json(
    const std::string& text);

} // namespace orbicurve
