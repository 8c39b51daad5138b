#ifndef CROSSCAP_FRACTION_HPP
#define CROSSCAP_FRACTION_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace crosscap {

// Exact rational in (.., ..) used for crossing positions along polygon sides.
// Denominators stay small: positions are renormalized to k/(m+1) whenever a
// curve is canonicalized, so surgery-time arithmetic never deepens far.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::overflow_error("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Frac operator+(const Frac& a, const Frac& b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(const Frac& a, const Frac& b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(const Frac& a, const Frac& b) { return Frac(a.num * b.den, a.den * b.num); }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }
};

inline Frac midpoint(const Frac& a, const Frac& b) { return (a + b) / Frac(2); }

// 1 - x, the antipodal reindexing on crosscap sides.
inline Frac reflect_unit(const Frac& x) { return Frac(1) - x; }

}  // namespace crosscap

#endif
