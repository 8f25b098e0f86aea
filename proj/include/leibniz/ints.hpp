#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace leibniz {

// All domain arithmetic is exact. Transform matrices in normal-form
// computations grow well past 64 bits even for modest inputs, so the whole
// stack uses one arbitrary-precision integer type.
using Int = boost::multiprecision::cpp_int;

using Vec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Quotient rounded toward -inf; remainder in [0, b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

inline Int pow_int(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Deterministic trial division; inputs here are tiny (prime factors of
// group orders), so no need for anything faster.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::string to_string(const Int& v) { return v.str(); }

// A possibly-infinite count (element orders, subgroup orders).
struct Cardinal {
  bool finite = true;
  Int value = 1; // meaningful only when finite

  static Cardinal infinite() { return {false, 0}; }
  static Cardinal of(Int v) { return {true, std::move(v)}; }

  bool operator==(const Cardinal& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
  std::string str() const { return finite ? value.str() : std::string("inf"); }
};

} // namespace leibniz
