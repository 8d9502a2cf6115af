#include "doctest.h"

#include <random>

#include "orbicurve/k0.hpp"

using namespace orbicurve;

namespace {

K0Class add(const K0Class& x, const K0Class& y) {
  return {x.rank + y.rank, x.degree + y.degree};
}

K0Class scale(const Int& n, const K0Class& x) {
  return {n * x.rank, n * x.degree};
}

} // namespace

TEST_CASE("structure sheaf and simple sheaves") {
  WeightedCurve c(0, {2, 3, 7});
  CHECK(structure_sheaf() == K0Class{1, 0});
  CHECK(simple_sheaf_degree(c, 2) == 21);
  CHECK(simple_sheaf_degree(c, 3) == 14);
  CHECK(simple_sheaf_degree(c, 7) == 6);
  CHECK(simple_sheaf_degree(c, 1) == 42);
  CHECK(simple_at_weight(c, 7) == K0Class{0, 6});
  CHECK_THROWS_AS(simple_sheaf_degree(c, 5), DomainError);
  CHECK_THROWS_AS(simple_sheaf_degree(c, 42), DomainError);
}

TEST_CASE("averaged euler form on the structure sheaf is chi/2") {
  CHECK(averaged_euler_form(WeightedCurve(0, {2, 3, 7}), structure_sheaf(),
                            structure_sheaf()) == Rational(-1, 84));
  CHECK(averaged_euler_form(WeightedCurve(0, {}), structure_sheaf(),
                            structure_sheaf()) == Rational(1));
  CHECK(averaged_euler_form(WeightedCurve(2, {}), structure_sheaf(),
                            structure_sheaf()) == Rational(-1));
}

TEST_CASE("averaged euler form against simple sheaves") {
  WeightedCurve c(0, {2, 3, 7});
  K0Class o = structure_sheaf();
  K0Class s7 = simple_at_weight(c, 7);
  CHECK(averaged_euler_form(c, o, s7) == Rational(1, 7));
  CHECK(averaged_euler_form(c, s7, o) == Rational(-1, 7));
  // simples pair to zero: both ranks vanish
  CHECK(averaged_euler_form(c, s7, simple_at_weight(c, 2)) == Rational(0));
}

TEST_CASE("the symmetrized form collapses to chi rk rk") {
  WeightedCurve c(0, {2, 3, 7});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> v(-50, 50);
  for (int i = 0; i < 100; ++i) {
    K0Class x{v(rng), v(rng)}, y{v(rng), v(rng)};
    Rational sym = averaged_euler_form(c, x, y) + averaged_euler_form(c, y, x);
    CHECK(sym == euler_characteristic(c) * Rational(x.rank * y.rank));
  }
}

TEST_CASE("averaged euler form is bilinear") {
  std::vector<WeightedCurve> curves = {
      WeightedCurve(0, {2, 3, 7}), WeightedCurve(0, {2, 2, 2, 2, 2}),
      WeightedCurve(2, {3, 5}), WeightedCurve(0, {6, 6}), WeightedCurve(1, {4})};
  std::mt19937_64 rng(123456);
  std::uniform_int_distribution<int> v(-50, 50);
  std::uniform_int_distribution<int> s(-5, 5);
  std::uniform_int_distribution<std::size_t> pick(0, curves.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const WeightedCurve& c = curves[pick(rng)];
    K0Class x{v(rng), v(rng)}, xx{v(rng), v(rng)}, y{v(rng), v(rng)};
    Int n(s(rng));
    CHECK(averaged_euler_form(c, add(x, xx), y) ==
          averaged_euler_form(c, x, y) + averaged_euler_form(c, xx, y));
    CHECK(averaged_euler_form(c, y, add(x, xx)) ==
          averaged_euler_form(c, y, x) + averaged_euler_form(c, y, xx));
    CHECK(averaged_euler_form(c, scale(n, x), y) ==
          Rational(n) * averaged_euler_form(c, x, y));
    CHECK(averaged_euler_form(c, x, scale(n, y)) ==
          Rational(n) * averaged_euler_form(c, x, y));
  }
}
