#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyq {

// Exact rational arithmetic.  Values are always reduced (gcd(num, den) = 1)
// with den > 0; zero is 0/1.  Arithmetic runs through __int128 and throws
// std::overflow_error if a reduced result leaves the 64-bit range — nothing
// ever wraps silently.
struct Rat {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rat&, const Rat&) = default;
};

Rat make_rat(long long num, long long den = 1);

inline bool is_zero(const Rat& r) { return r.num == 0; }

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);  // throws std::domain_error on b == 0
Rat operator-(const Rat& a);

Rat& operator+=(Rat& a, const Rat& b);
Rat& operator-=(Rat& a, const Rat& b);
Rat& operator*=(Rat& a, const Rat& b);

// Value order (cross-multiplied in 128 bits).
bool operator<(const Rat& a, const Rat& b);

Rat rat_inverse(const Rat& a);  // throws std::domain_error on 0

// "p" when den == 1, else "p/q"; locale-independent.
std::string render_rat(const Rat& r);

// Parses [-]digits[/digits] starting at pos; advances pos past the value.
// Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text, size_t& pos);
Rat parse_rat(const std::string& text);

}  // namespace polyq
