#include "orbicurve/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace orbicurve {

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

int Rational::sign() const noexcept {
  if (num_ == 0) return 0;
  return num_ < 0 ? -1 : 1;
}

const Int& Rational::as_integer() const {
  if (den_ != 1) throw DomainError("rational " + str() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division of rational by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](const char* what) {
    std::size_t start = i;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i] == '-';
      ++i;
    }
    std::size_t first_digit = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == first_digit) throw ParseError(std::string("expected ") + what, start);
    Int value(text.substr(first_digit, i - first_digit));
    return negative ? Int(-value) : value;
  };
  Int num = digits("numerator");
  Int den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_pos = i;
    den = digits("denominator");
    if (den == 0) throw ParseError("zero denominator", den_pos);
  }
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace orbicurve
