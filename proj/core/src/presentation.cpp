#include "orbicurve/presentation.hpp"

namespace orbicurve {

OrbifoldPresentation::OrbifoldPresentation(std::int64_t genus,
                                           std::vector<Weight> weights)
    : genus_(genus), weights_(std::move(weights)) {
  if (genus < 0) throw DomainError("negative genus");
  for (Weight a : weights_)
    if (a < 1) throw DomainError("presentation weight must be >= 1");
}

OrbifoldPresentation::OrbifoldPresentation(const WeightedCurve& curve)
    : OrbifoldPresentation(curve.genus(), curve.weights()) {}

namespace {

std::string product_relation(const OrbifoldPresentation& pres) {
  std::string s;
  for (std::size_t j = 0; j < pres.weights().size(); ++j) {
    if (!s.empty()) s += " ";
    s += "sigma_" + std::to_string(j + 1);
  }
  for (std::int64_t i = 1; i <= pres.genus(); ++i) {
    if (!s.empty()) s += " ";
    s += "[alpha_" + std::to_string(i) + ",beta_" + std::to_string(i) + "]";
  }
  if (s.empty()) s = "1";
  return s + " = 1";
}

} // namespace

std::string OrbifoldPresentation::str() const {
  std::string gens;
  for (std::int64_t i = 1; i <= genus_; ++i) {
    if (!gens.empty()) gens += ", ";
    gens += "alpha_" + std::to_string(i) + ", beta_" + std::to_string(i);
  }
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (!gens.empty()) gens += ", ";
    gens += "sigma_" + std::to_string(j + 1);
  }
  std::string rels;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    rels += "sigma_" + std::to_string(j + 1) + "^" + std::to_string(weights_[j]) +
            " = 1, ";
  }
  rels += product_relation(*this);
  return "<" + gens + " | " + rels + ">";
}

std::vector<Permutation> all_images(const GeneratorImages& images) {
  std::vector<Permutation> out;
  out.reserve(images.alpha.size() + images.beta.size() + images.sigma.size());
  out.insert(out.end(), images.alpha.begin(), images.alpha.end());
  out.insert(out.end(), images.beta.begin(), images.beta.end());
  out.insert(out.end(), images.sigma.begin(), images.sigma.end());
  return out;
}

namespace {

void check_arity(const OrbifoldPresentation& pres, const GeneratorImages& images) {
  auto g = static_cast<std::size_t>(pres.genus());
  if (images.alpha.size() != g || images.beta.size() != g)
    throw DomainError("expected " + std::to_string(g) +
                      " alpha and beta images, got " +
                      std::to_string(images.alpha.size()) + " and " +
                      std::to_string(images.beta.size()));
  if (images.sigma.size() != pres.weights().size())
    throw DomainError("expected " + std::to_string(pres.weights().size()) +
                      " sigma images, got " + std::to_string(images.sigma.size()));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a * b * a.inverse() * b.inverse();
}

} // namespace

std::string first_failing_relation(const OrbifoldPresentation& pres,
                                   const GeneratorImages& images) {
  check_arity(pres, images);
  const auto& w = pres.weights();
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!images.sigma[j].pow(static_cast<std::uint64_t>(w[j])).is_identity())
      return "sigma_" + std::to_string(j + 1) + "^" + std::to_string(w[j]) +
             " = 1";
  }
  Permutation word;
  for (const auto& s : images.sigma) word *= s;
  for (std::size_t i = 0; i < images.alpha.size(); ++i)
    word *= commutator(images.alpha[i], images.beta[i]);
  if (!word.is_identity()) return product_relation(pres);
  return {};
}

bool check_homomorphism(const OrbifoldPresentation& pres,
                        const GeneratorImages& images) {
  return first_failing_relation(pres, images).empty();
}

} // namespace orbicurve
