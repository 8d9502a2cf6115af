#include "doctest.h"

#include <numeric>
#include <random>

#include "orbicurve/perm_group.hpp"

using namespace orbicurve;

namespace {

Permutation random_perm(std::mt19937_64& rng, Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

const std::vector<Permutation> s4_gens = {Permutation::parse("(1,2)"),
                                          Permutation::parse("(1,2,3,4)")};
const std::vector<Permutation> a5_gens = {Permutation::parse("(1,2,3,4,5)"),
                                          Permutation::parse("(3,4,5)")};

} // namespace

TEST_CASE("breadth-first enumeration") {
  auto c3 = enumerate_group({Permutation::parse("(1,2,3)")});
  CHECK(c3.size() == 3);
  CHECK(enumerate_group({}).size() == 1); // the trivial group
  CHECK(enumerate_group(s4_gens).size() == 24);
  CHECK_THROWS_AS(enumerate_group(s4_gens, 10), ResourceError);
  try {
    enumerate_group(s4_gens, 10);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.progress() >= 10);
    CHECK(e.progress() < 24);
  }
}

TEST_CASE("stabilizer chain orders") {
  std::vector<Permutation> s7 = {Permutation::parse("(1,2)"),
                                 Permutation::parse("(1,2,3,4,5,6,7)")};
  CHECK(StabilizerChain(s7).order() == 5040);
  CHECK(StabilizerChain(a5_gens).order() == 60);
  CHECK(StabilizerChain({}).order() == 1);
}

TEST_CASE("stabilizer chain membership") {
  StabilizerChain chain(a5_gens);
  CHECK(chain.contains(Permutation()));
  CHECK(chain.contains(Permutation::parse("(1,2,3)")));
  CHECK(chain.contains(Permutation::parse("(1,2)(3,4)")));
  CHECK_FALSE(chain.contains(Permutation::parse("(1,2)")));
  CHECK_FALSE(chain.contains(Permutation::parse("(1,2)(6,7)")));
}

TEST_CASE("group order backends agree and the cap is honored") {
  CHECK(group_order(s4_gens) == 24);
  CHECK(group_order(s4_gens, 10, OrderBackend::BfsThenChain) == 24);
  CHECK(group_order(s4_gens, 10, OrderBackend::ChainOnly) == 24);
  CHECK_THROWS_AS(group_order(s4_gens, 10, OrderBackend::BfsOnly), ResourceError);
  // a large group only the chain can size within a small cap
  std::vector<Permutation> s12 = {Permutation::parse("(1,2)"),
                                  Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11,12)")};
  CHECK(group_order(s12, 1000, OrderBackend::BfsThenChain) == Int("479001600"));
}

TEST_CASE("lazy group wrapper") {
  PermGroup g(a5_gens);
  CHECK(g.order() == 60);
  CHECK(g.elements().size() == 60);
  CHECK(g.contains(Permutation::parse("(1,3,5)")));
  CHECK(g.generators() == a5_gens);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(PermGroup(a5_gens)));
  CHECK(is_simple(PermGroup({Permutation::parse("(1,2,3,4,5,6,7)")}))); // C_7
  CHECK_FALSE(is_simple(PermGroup(s4_gens)));
  CHECK_FALSE(is_simple(PermGroup({Permutation::parse("(1,2,3,4,5,6)")}))); // C_6
  CHECK_FALSE(is_simple(PermGroup({Permutation::parse("(1,2,3)"),
                                   Permutation::parse("(1,2)(3,4)")}))); // A_4
  CHECK_THROWS_AS(is_simple(PermGroup({})), DomainError);
}

TEST_CASE("enumeration and chain agree on random generator sets") {
  std::mt19937_64 rng(8675309);
  std::uniform_int_distribution<Point> deg(2, 7);
  std::uniform_int_distribution<int> count(1, 3);
  for (int i = 0; i < 200; ++i) {
    Point n = deg(rng);
    std::vector<Permutation> gens;
    for (int j = count(rng); j > 0; --j) gens.push_back(random_perm(rng, n));
    Int via_bfs = group_order(gens, default_group_order_cap, OrderBackend::BfsOnly);
    Int via_chain = group_order(gens, default_group_order_cap, OrderBackend::ChainOnly);
    CHECK(via_bfs == via_chain);
    // every generator order divides the group order (Lagrange)
    for (const auto& g : gens) CHECK(via_bfs % g.order() == 0);
  }
}

TEST_CASE("element orders divide the group order") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<Point> deg(2, 6);
  for (int i = 0; i < 20; ++i) {
    std::vector<Permutation> gens = {random_perm(rng, deg(rng)),
                                     random_perm(rng, deg(rng))};
    PermGroup g(gens);
    for (const auto& p : g.elements()) CHECK(g.order() % p.order() == 0);
  }
}
