#include "bpos/gfp.hpp"

#include <stdexcept>

namespace bpos {

std::uint64_t fp_pow(std::uint64_t p, std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(p, r, a);
    a = fp_mul(p, a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t p, std::uint64_t a) {
  if (a % p == 0) throw std::invalid_argument("fp_inv: zero is not invertible");
  return fp_pow(p, a, p - 2);
}

namespace {

template <bool Parallel>
int rank_impl(FpMatrix m) {
  const std::uint64_t p = m.p;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    const std::uint64_t inv = fp_inv(p, m.at(rank, col));
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (int r = rank + 1; r < m.rows; ++r) {
        std::uint64_t f = m.at(r, col);
        if (f == 0) continue;
        const std::uint64_t scale = fp_mul(p, f, inv);
        for (int c = col; c < m.cols; ++c)
          m.at(r, c) = fp_sub(p, m.at(r, c), fp_mul(p, scale, m.at(rank, c)));
      }
    } else {
      for (int r = rank + 1; r < m.rows; ++r) {
        std::uint64_t f = m.at(r, col);
        if (f == 0) continue;
        const std::uint64_t scale = fp_mul(p, f, inv);
        for (int c = col; c < m.cols; ++c)
          m.at(r, c) = fp_sub(p, m.at(r, c), fp_mul(p, scale, m.at(rank, c)));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_serial(FpMatrix m) { return rank_impl<false>(std::move(m)); }
int rank_parallel(FpMatrix m) { return rank_impl<true>(std::move(m)); }

std::vector<std::uint64_t> fp_solve(FpMatrix m, std::vector<std::uint64_t> rhs) {
  if (m.rows != m.cols || static_cast<int>(rhs.size()) != m.rows)
    throw std::invalid_argument("fp_solve: square system required");
  const std::uint64_t p = m.p;
  const int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
      std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
    }
    const std::uint64_t inv = fp_inv(p, m.at(col, col));
    for (int c = 0; c < n; ++c) m.at(col, c) = fp_mul(p, m.at(col, c), inv);
    rhs[static_cast<size_t>(col)] = fp_mul(p, rhs[static_cast<size_t>(col)], inv);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint64_t f = m.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c)
        m.at(r, c) = fp_sub(p, m.at(r, c), fp_mul(p, f, m.at(col, c)));
      rhs[static_cast<size_t>(r)] =
          fp_sub(p, rhs[static_cast<size_t>(r)], fp_mul(p, f, rhs[static_cast<size_t>(col)]));
    }
  }
  return rhs;
}

}  // namespace bpos
