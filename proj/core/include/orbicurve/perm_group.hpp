#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbicurve/permutation.hpp"

namespace orbicurve {

inline constexpr std::uint64_t default_group_order_cap = 10'000'000;

// Breadth-first closure of the generating set under multiplication, kept in a
// hashed store. Throws ResourceError (carrying the number of elements found)
// once the store would exceed `cap`. The identity is always included.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::uint64_t cap = default_group_order_cap);

// Stabilizer chain built with the deterministic Schreier-Sims procedure.
// Order and membership come out of the chain without enumerating elements,
// so it handles orders far beyond any enumeration cap.
class StabilizerChain {
public:
  explicit StabilizerChain(const std::vector<Permutation>& generators);

  const Int& order() const noexcept { return order_; }
  bool contains(const Permutation& p) const;

private:
  struct Level {
    Point base = 0;
    // Generators assigned to this level fix the bases of every earlier
    // level; the effective generating set of level i is the union over
    // levels i and deeper.
    std::vector<Permutation> generators;
    std::vector<Point> orbit;                      // discovery order
    std::vector<std::optional<Permutation>> transversal; // by point - 1
  };

  std::size_t insert_generator(Permutation g);
  void recompute_orbit(std::size_t i);
  bool strip(Permutation p, std::size_t from, Permutation& residue,
             std::size_t& drop_level) const;
  bool verify_level(std::size_t i, std::size_t& jump);

  std::vector<Level> levels_;
  Point degree_ = 0;
  Int order_ = 1;
};

enum class OrderBackend {
  BfsOnly,      // honor the cap strictly; ResourceError beyond it
  BfsThenChain, // fall back to the stabilizer chain past the cap
  ChainOnly,
};

// Order of the group generated by `generators`. The BFS route stores at most
// `cap` elements; what happens beyond that depends on the backend.
Int group_order(const std::vector<Permutation>& generators,
                std::uint64_t cap = default_group_order_cap,
                OrderBackend backend = OrderBackend::BfsOnly);

// Finite permutation group with its generators, a stabilizer chain, and a
// lazily built element store.
class PermGroup {
public:
  explicit PermGroup(std::vector<Permutation> generators);

  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  const Int& order() const { return chain().order(); }
  bool contains(const Permutation& p) const { return chain().contains(p); }

  // Enumerated elements, cached; ResourceError past the cap.
  const std::vector<Permutation>& elements(std::uint64_t cap = default_group_order_cap) const;

private:
  const StabilizerChain& chain() const;

  std::vector<Permutation> gens_;
  mutable std::optional<StabilizerChain> chain_;
  mutable std::vector<Permutation> elements_;
};

// True iff the group is nonabelian-or-prime simple: no normal subgroup other
// than 1 and the whole group. Works by closing each conjugacy class and
// checking that it generates everything; needs the element enumeration, so
// the cap applies. The trivial group is out of domain.
bool is_simple(const PermGroup& group, std::uint64_t cap = default_group_order_cap);

} // namespace orbicurve
