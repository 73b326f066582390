#include "bpos/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

namespace bpos {

namespace {

using u128 = unsigned __int128;
constexpr u128 U128_MAX = ~u128{0};

// Exact C(a, k) for a >= k >= 0 in 128-bit; returns false on intermediate overflow.
bool binomial_u128(u64 a, u64 k, u128& out) {
  if (k > a - k) k = a - k;
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    u64 f = a - k + i;
    if (r > U128_MAX / f) return false;
    r = (r * f) / i;  // product of i consecutive integers is divisible by i!
  }
  out = r;
  return true;
}

i64 binomial_bigint(u64 a, u64 k) {
  namespace mp = boost::multiprecision;
  if (k > a - k) k = a - k;
  mp::cpp_int r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r *= (a - k + i);
    r /= i;
  }
  if (r > std::numeric_limits<i64>::max())
    throw OverflowError("binomial value exceeds int64");
  return static_cast<i64>(r);
}

}  // namespace

i64 binomial(i64 a, i64 k) {
  if (k < 0) throw std::invalid_argument("binomial: negative lower index");
  if (a < k) return 0;  // includes all a < 0
  u128 r;
  if (binomial_u128(static_cast<u64>(a), static_cast<u64>(k), r)) {
    if (r > static_cast<u128>(std::numeric_limits<i64>::max()))
      throw OverflowError("binomial value exceeds int64");
    return static_cast<i64>(r);
  }
  return binomial_bigint(static_cast<u64>(a), static_cast<u64>(k));
}

}  // namespace bpos
