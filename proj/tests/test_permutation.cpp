#include "doctest.h"

#include <numeric>
#include <random>

#include "orbicurve/permutation.hpp"

using namespace orbicurve;

namespace {

Permutation random_perm(std::mt19937_64& rng, Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

} // namespace

TEST_CASE("parsing cycle notation") {
  CHECK(Permutation::parse("()") == Permutation());
  CHECK(Permutation::parse("(1,2)").str() == "(1,2)");
  CHECK(Permutation::parse("(1,2)(3,6)").str() == "(1,2)(3,6)");
  CHECK(Permutation::parse(" (2, 1) ").str() == "(1,2)");
  CHECK(Permutation::parse("(3,1,2)").str() == "(1,2,3)");
  // a singleton cycle is a fixed point
  CHECK(Permutation::parse("(5)") == Permutation());
  CHECK_THROWS_AS(Permutation::parse(""), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,2"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,1)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0,1)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(a,b)"), ParseError);
}

TEST_CASE("image tables must be bijections and trailing fixed points trim") {
  CHECK(Permutation::from_images({2, 1, 3, 4}).degree() == 2);
  CHECK(Permutation::from_images({1, 2, 3}) == Permutation());
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), DomainError);
  CHECK_THROWS_AS(Permutation::from_images({2, 3}), DomainError);
}

TEST_CASE("apply and fixed points beyond the degree") {
  Permutation p = Permutation::parse("(1,3,7)");
  CHECK(p.apply(1) == 3);
  CHECK(p.apply(3) == 7);
  CHECK(p.apply(7) == 1);
  CHECK(p.apply(2) == 2);
  CHECK(p.apply(100) == 100);
}

TEST_CASE("products compose left to right") {
  Permutation t = Permutation::parse("(1,2)");
  Permutation c = Permutation::parse("(1,2,3)");
  // (t*c)(1): 1 -> 2 under t, then 2 -> 3 under c
  CHECK((t * c).apply(1) == 3);
  CHECK((t * c).str() == "(1,3)");
  CHECK((c * t).str() == "(2,3)");
}

TEST_CASE("seven and nine point products") {
  Permutation s7 = Permutation::parse("(1,2,3,4,5,6,7)");
  CHECK((Permutation::parse("(1,2)(3,6)") * s7).str() == "(1,3,7)(4,5,6)");
  CHECK((Permutation::parse("(3,4)(5,7)") * s7).str() == "(1,2,3,5)(6,7)");
  Permutation s9 = Permutation::parse("(1,2,3,4,5,6,7,8,9)");
  CHECK((Permutation::parse("(1,4)(2,6)(3,7)(5,8)") * s9).str() ==
        "(1,5,9)(2,7,4)(3,8,6)");
}

TEST_CASE("inverse, powers, order") {
  Permutation p = Permutation::parse("(1,2,3)(4,5)");
  CHECK(p * p.inverse() == Permutation());
  CHECK(p.inverse().str() == "(1,3,2)(4,5)");
  CHECK(p.order() == 6);
  CHECK(p.order_u64() == 6);
  CHECK(p.pow(0) == Permutation());
  CHECK(p.pow(1) == p);
  CHECK(p.pow(6) == Permutation());
  CHECK(p.pow(7) == p);
  CHECK(Permutation().order() == 1);
  CHECK(Permutation::parse("(1,2,3,4,5,6,7)").order() == 7);
}

TEST_CASE("cycle extraction") {
  auto cycles = Permutation::parse("(4,5)(1,2,3)").cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<Point>{1, 2, 3});
  CHECK(cycles[1] == std::vector<Point>{4, 5});
  CHECK(Permutation().cycles().empty());
}

TEST_CASE("equal permutations hash equally") {
  std::hash<Permutation> h;
  CHECK(h(Permutation::parse("(1,2)(7)")) == h(Permutation::parse("(1,2)")));
  CHECK(h(Permutation()) == h(Permutation::parse("()")));
}

TEST_CASE("random permutation algebra") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<Point> deg(1, 9);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_perm(rng, deg(rng));
    Permutation q = random_perm(rng, deg(rng));
    Permutation r = random_perm(rng, deg(rng));
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK(Permutation::parse(p.str()) == p);
    std::uint64_t n = p.order_u64();
    CHECK(p.pow(n) == Permutation());
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) CHECK(p.pow(d) != Permutation());
  }
}
