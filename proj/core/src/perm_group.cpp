#include "orbicurve/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace orbicurve {

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::uint64_t cap) {
  std::unordered_set<Permutation> seen;
  std::deque<Permutation> frontier;
  auto push = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap)
        throw ResourceError("group enumeration exceeded cap of " +
                                std::to_string(cap) + " elements",
                            seen.size() - 1);
      frontier.push_back(std::move(p));
    }
  };
  push(Permutation{});
  for (const auto& g : generators) push(g);
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) push(p * g);
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

StabilizerChain::StabilizerChain(const std::vector<Permutation>& generators) {
  for (const auto& g : generators) degree_ = std::max(degree_, g.degree());
  for (const auto& g : generators)
    if (!g.is_identity()) insert_generator(g);
  // Verify deepest-first that each level's Schreier generators sift through
  // the subchain below it; a failed sift donates its residue as a new
  // generator and verification resumes at the residue's level.
  if (!levels_.empty()) {
    std::size_t i = levels_.size() - 1;
    for (;;) {
      std::size_t jump = 0;
      if (verify_level(i, jump)) {
        if (i == 0) break;
        --i;
      } else {
        i = jump;
      }
    }
  }
  order_ = 1;
  for (const auto& level : levels_) order_ *= Int(level.orbit.size());
}

std::size_t StabilizerChain::insert_generator(Permutation g) {
  std::size_t i = 0;
  while (i < levels_.size() && g.apply(levels_[i].base) == levels_[i].base) ++i;
  if (i == levels_.size()) {
    Level level;
    level.base = 1;
    while (g.apply(level.base) == level.base) ++level.base;
    levels_.push_back(std::move(level));
  }
  levels_[i].generators.push_back(std::move(g));
  for (std::size_t k = 0; k <= i; ++k) recompute_orbit(k);
  return i;
}

void StabilizerChain::recompute_orbit(std::size_t i) {
  Level& level = levels_[i];
  level.orbit.clear();
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.push_back(level.base);
  level.transversal[level.base - 1] = Permutation{};
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point gamma = level.orbit[head];
    for (std::size_t k = i; k < levels_.size(); ++k)
      for (const auto& g : levels_[k].generators) {
        Point delta = g.apply(gamma);
        if (!level.transversal[delta - 1]) {
          level.transversal[delta - 1] = *level.transversal[gamma - 1] * g;
          level.orbit.push_back(delta);
        }
      }
  }
}

bool StabilizerChain::verify_level(std::size_t i, std::size_t& jump) {
  const Level& level = levels_[i];
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point gamma = level.orbit[head];
    const Permutation& u = *level.transversal[gamma - 1];
    for (std::size_t k = i; k < levels_.size(); ++k)
      for (const auto& g : levels_[k].generators) {
        Permutation schreier =
            u * g * level.transversal[g.apply(gamma) - 1]->inverse();
        if (schreier.is_identity()) continue;
        std::size_t drop = 0;
        Permutation residue;
        if (!strip(std::move(schreier), i + 1, residue, drop)) {
          jump = insert_generator(std::move(residue));
          return false;
        }
      }
  }
  return true;
}

bool StabilizerChain::strip(Permutation p, std::size_t from, Permutation& residue,
                            std::size_t& drop_level) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point gamma = p.apply(level.base);
    if (gamma > degree_ || !level.transversal[gamma - 1]) {
      residue = std::move(p);
      drop_level = i;
      return false;
    }
    p *= level.transversal[gamma - 1]->inverse();
  }
  if (p.is_identity()) return true;
  residue = std::move(p);
  drop_level = levels_.size();
  return false;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.is_identity()) return true;
  if (p.degree() > degree_) return false;
  std::size_t drop = 0;
  Permutation residue;
  return strip(p, 0, residue, drop);
}

Int group_order(const std::vector<Permutation>& generators, std::uint64_t cap,
                OrderBackend backend) {
  if (backend != OrderBackend::ChainOnly) {
    try {
      return Int(enumerate_group(generators, cap).size());
    } catch (const ResourceError&) {
      if (backend == OrderBackend::BfsOnly) throw;
    }
  }
  return StabilizerChain(generators).order();
}

PermGroup::PermGroup(std::vector<Permutation> generators)
    : gens_(std::move(generators)) {}

const StabilizerChain& PermGroup::chain() const {
  if (!chain_) chain_.emplace(gens_);
  return *chain_;
}

const std::vector<Permutation>& PermGroup::elements(std::uint64_t cap) const {
  if (elements_.empty()) elements_ = enumerate_group(gens_, cap);
  return elements_;
}

bool is_simple(const PermGroup& group, std::uint64_t cap) {
  const auto& elems = group.elements(cap);
  if (elems.size() == 1) throw DomainError("simplicity is undefined for the trivial group");

  std::vector<std::pair<Permutation, Permutation>> conjugators; // (g, g^-1)
  for (const auto& g : group.generators()) conjugators.emplace_back(g, g.inverse());

  std::unordered_set<Permutation> classified;
  for (const auto& x : elems) { // sorted, so class representatives are canonical
    if (x.is_identity() || classified.count(x)) continue;
    // Conjugacy class of x: orbit under conjugation by the generators.
    std::vector<Permutation> cls{x};
    std::unordered_set<Permutation> in_cls{x};
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (const auto& [g, ginv] : conjugators) {
        Permutation y = ginv * cls[head] * g;
        if (in_cls.insert(y).second) cls.push_back(std::move(y));
      }
    }
    for (const auto& y : cls) classified.insert(y);
    // The normal closure of x is the subgroup generated by its class.
    if (enumerate_group(cls, elems.size()).size() != elems.size()) return false;
  }
  return true;
}

} // namespace orbicurve
