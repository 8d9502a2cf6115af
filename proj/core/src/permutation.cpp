#include "orbicurve/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace orbicurve {

namespace {
constexpr Point max_point = 1'000'000;
} // namespace

void Permutation::trim() {
  while (!images_.empty() && images_.back() == images_.size())
    images_.pop_back();
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y < 1 || y > images.size() || seen[y - 1])
      throw DomainError("image table is not a bijection");
    seen[y - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  p.trim();
  return p;
}

Permutation Permutation::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used;
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    skip_ws();
    std::vector<Point> cycle;
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') throw ParseError("expected ',' or ')'", i);
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected a point", i);
      unsigned long long v = std::stoull(text.substr(start, i - start));
      if (v < 1 || v > max_point) throw ParseError("point out of range", start);
      Point pt = static_cast<Point>(v);
      if (pt > used.size()) used.resize(pt, false);
      if (used[pt - 1]) throw ParseError("repeated point " + std::to_string(pt), start);
      used[pt - 1] = true;
      cycle.push_back(pt);
      skip_ws();
    }
    if (i == text.size()) throw ParseError("unterminated cycle", i);
    ++i; // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  std::vector<Point> images(used.size());
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  return from_images(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  std::size_t n = std::max(images_.size(), rhs.images_.size());
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = rhs.apply(apply(static_cast<Point>(i + 1)));
  images_ = std::move(out);
  trim();
  return *this;
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result;
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point s = 1; s <= images_.size(); ++s) {
    if (seen[s - 1] || images_[s - 1] == s) continue;
    std::vector<Point> cycle;
    for (Point x = s; !seen[x - 1]; x = images_[x - 1]) {
      seen[x - 1] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Int Permutation::order() const {
  Int l = 1;
  for (const auto& cycle : cycles())
    l = boost::multiprecision::lcm(l, Int(cycle.size()));
  return l;
}

std::uint64_t Permutation::order_u64() const {
  std::uint64_t l = 1;
  for (const auto& cycle : cycles()) l = std::lcm(l, cycle.size());
  return l;
}

std::string Permutation::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cycle : cs) {
    s += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(cycle[i]);
    }
    s += ")";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.str();
}

} // namespace orbicurve
