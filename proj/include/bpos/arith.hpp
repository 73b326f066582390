#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bpos {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct OverflowError : std::overflow_error {
  OverflowError() : std::overflow_error("int64 overflow in exact computation") {}
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline i64 ck_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i64 ck_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i64 ck_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

// C(a, k) for integer a (possibly negative) and k >= 0, with the convention
// C(a, k) = 0 whenever 0 <= a < k or a < 0.  Overflow in intermediates
// escalates to arbitrary precision; only a final value outside int64 throws.
i64 binomial(i64 a, i64 k);

// floor / ceil of a/b for b > 0.
inline i64 floor_div(i64 a, i64 b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  i64 q = a / b, r = a % b;
  return (r != 0 && a < 0) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  i64 q = a / b, r = a % b;
  return (r != 0 && a > 0) ? q + 1 : q;
}

// Exact rational with reduced representation, den > 0, checked arithmetic.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}
  Rational(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = ck_sub(0, n); d = ck_sub(0, d); }
    i64 g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(ck_add(ck_mul(a.num, b.den), ck_mul(b.num, a.den)), ck_mul(a.den, b.den));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(ck_sub(ck_mul(a.num, b.den), ck_mul(b.num, a.den)), ck_mul(a.den, b.den));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(ck_mul(a.num, b.num), ck_mul(a.den, b.den));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(ck_mul(a.num, b.den), ck_mul(a.den, b.num));
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return ck_mul(a.num, b.den) < ck_mul(b.num, a.den);
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// splitmix64 step; used to derive independent per-item seeds from one master seed.
inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline u64 mix_seed(u64 seed, u64 index) { return splitmix64(seed ^ splitmix64(index)); }

}  // namespace bpos
