#pragma once

#include <cstdint>
#include <vector>

namespace bpos {

// Arithmetic mod a prime p < 2^31 (products fit in 64 bits).

inline std::uint64_t fp_add(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= p ? r - p : r;
}

inline std::uint64_t fp_sub(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t fp_mul(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  return (a * b) % p;
}

std::uint64_t fp_pow(std::uint64_t p, std::uint64_t a, std::uint64_t e);
std::uint64_t fp_inv(std::uint64_t p, std::uint64_t a);

// Dense row-major matrix over F_p.
struct FpMatrix {
  int rows = 0;
  int cols = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> a;

  FpMatrix() = default;
  FpMatrix(int r, int c, std::uint64_t prime)
      : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

  std::uint64_t& at(int r, int c) {
    return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }
  std::uint64_t at(int r, int c) const {
    return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }
};

// Gaussian elimination rank.  The parallel version distributes row updates
// across OpenMP threads; both perform identical field operations, so the
// results agree exactly for any thread count.
int rank_serial(FpMatrix m);
int rank_parallel(FpMatrix m);

// Solve M x = rhs for invertible square M; returns empty if singular.
std::vector<std::uint64_t> fp_solve(FpMatrix m, std::vector<std::uint64_t> rhs);

}  // namespace bpos
