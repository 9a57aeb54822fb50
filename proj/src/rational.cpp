#include "polyq/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace polyq {

namespace {

using i128 = __int128;

constexpr long long kMax = INT64_MAX;

long long narrow(i128 v) {
  if (v > i128(kMax) || v < -i128(kMax)) throw std::overflow_error("rational overflow");
  return static_cast<long long>(v);
}

Rat reduce(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rat{0, 1};
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return Rat{narrow(num / a), narrow(den / a)};
}

}  // namespace

Rat make_rat(long long num, long long den) { return reduce(num, den); }

Rat operator+(const Rat& a, const Rat& b) {
  return reduce(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}

Rat operator-(const Rat& a, const Rat& b) {
  return reduce(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
}

Rat operator*(const Rat& a, const Rat& b) {
  return reduce(i128(a.num) * b.num, i128(a.den) * b.den);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw std::domain_error("division by zero rational");
  return reduce(i128(a.num) * b.den, i128(a.den) * b.num);
}

Rat operator-(const Rat& a) { return Rat{-a.num, a.den}; }

Rat& operator+=(Rat& a, const Rat& b) { return a = a + b; }
Rat& operator-=(Rat& a, const Rat& b) { return a = a - b; }
Rat& operator*=(Rat& a, const Rat& b) { return a = a * b; }

bool operator<(const Rat& a, const Rat& b) {
  return i128(a.num) * b.den < i128(b.num) * a.den;
}

Rat rat_inverse(const Rat& a) {
  if (a.num == 0) throw std::domain_error("inverse of zero rational");
  return reduce(a.den, a.num);
}

std::string render_rat(const Rat& r) {
  std::string s = std::to_string(r.num);
  if (r.den != 1) {
    s += '/';
    s += std::to_string(r.den);
  }
  return s;
}

Rat parse_rat(const std::string& text, size_t& pos) {
  size_t p = pos;
  bool neg = false;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    neg = text[p] == '-';
    ++p;
  }
  if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
    throw std::invalid_argument("expected rational at position " + std::to_string(pos));
  i128 num = 0;
  while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
    num = num * 10 + (text[p] - '0');
    if (num > i128(kMax)) throw std::overflow_error("rational literal too large");
    ++p;
  }
  i128 den = 1;
  if (p < text.size() && text[p] == '/') {
    ++p;
    if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
      throw std::invalid_argument("expected denominator at position " + std::to_string(p));
    den = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      den = den * 10 + (text[p] - '0');
      if (den > i128(kMax)) throw std::overflow_error("rational literal too large");
      ++p;
    }
  }
  pos = p;
  return reduce(neg ? -num : num, den);
}

Rat parse_rat(const std::string& text) {
  size_t pos = 0;
  Rat r = parse_rat(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters after rational");
  return r;
}

}  // namespace polyq
