#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "orbicurve/errors.hpp"

namespace orbicurve {

using Int = boost::multiprecision::cpp_int;

// Exact rational number. Always stored in lowest terms with a positive
// denominator; every operation re-normalizes, so two equal values have
// identical representations.
class Rational {
public:
  Rational() = default;
  Rational(Int value) : num_(std::move(value)) {}
  Rational(std::int64_t value) : num_(value) {}
  Rational(int value) : num_(value) {}
  Rational(Int numerator, Int denominator);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  // -1, 0 or +1.
  int sign() const noexcept;
  bool is_integer() const noexcept { return den_ == 1; }
  // Requires is_integer().
  const Int& as_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs); // throws DomainError on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or just "p" for integers.
  std::string str() const;
  // Accepts an optional sign, digits, and an optional "/digits" suffix.
  static Rational parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void normalize();

  Int num_ = 0;
  Int den_ = 1;
};

} // namespace orbicurve
