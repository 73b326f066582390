#include <doctest.h>

#include <random>

#include "bpos/gfp.hpp"

using namespace bpos;

namespace {

constexpr std::uint64_t P = 1000000007ull;

FpMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, std::uint64_t p) {
  FpMatrix m(rows, cols, p);
  for (auto& v : m.a) v = rng() % p;
  return m;
}

}  // namespace

TEST_SUITE("gfp") {

TEST_CASE("field primitives") {
  CHECK(fp_add(7, 5, 6) == 4);
  CHECK(fp_sub(7, 2, 5) == 4);
  CHECK(fp_mul(7, 3, 5) == 1);
  CHECK(fp_pow(7, 3, 0) == 1);
  CHECK(fp_pow(7, 3, 6) == 1);
  CHECK(fp_pow(P, 2, P - 1) == 1);
  for (std::uint64_t a = 1; a < 7; ++a) CHECK(fp_mul(7, a, fp_inv(7, a)) == 1);
  CHECK(fp_mul(P, 123456789, fp_inv(P, 123456789)) == 1);
}

TEST_CASE("rank of structured matrices") {
  FpMatrix id(4, 4, P);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(rank_serial(id) == 4);
  CHECK(rank_parallel(id) == 4);

  FpMatrix zero(3, 5, P);
  CHECK(rank_serial(zero) == 0);
  CHECK(rank_parallel(zero) == 0);

  // Two identical rows plus one independent row.
  FpMatrix m(3, 3, P);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 1; m.at(1, 1) = 2; m.at(1, 2) = 3;
  m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 0;
  CHECK(rank_serial(m) == 2);
  CHECK(rank_parallel(m) == 2);

  // Vandermonde rows at distinct nodes have full rank.
  FpMatrix v(5, 5, P);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) v.at(r, c) = fp_pow(P, static_cast<std::uint64_t>(r + 2), static_cast<std::uint64_t>(c));
  CHECK(rank_serial(v) == 5);
  CHECK(rank_parallel(v) == 5);
}

TEST_CASE("serial and parallel ranks agree on random matrices") {
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 30; ++iter) {
    int rows = 1 + static_cast<int>(rng() % 40);
    int cols = 1 + static_cast<int>(rng() % 40);
    auto m = random_matrix(rng, rows, cols, P);
    if (iter % 3 == 0 && rows > 2) {
      // Force dependent rows so non-full ranks are exercised too.
      for (int c = 0; c < cols; ++c)
        m.at(rows - 1, c) = fp_add(P, m.at(0, c), m.at(1, c));
    }
    CHECK(rank_serial(m) == rank_parallel(m));
  }
}

TEST_CASE("rank under a second prime") {
  std::mt19937_64 rng(7);
  auto m = random_matrix(rng, 20, 20, 998244353ull);
  CHECK(rank_serial(m) == rank_parallel(m));
}

TEST_CASE("linear solve") {
  FpMatrix m(3, 3, P);
  m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(0, 2) = 0;
  m.at(1, 0) = 1; m.at(1, 1) = 3; m.at(1, 2) = 1;
  m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 4;
  std::vector<std::uint64_t> x{3, 1, 2};
  std::vector<std::uint64_t> rhs(3, 0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      rhs[static_cast<size_t>(r)] =
          fp_add(P, rhs[static_cast<size_t>(r)], fp_mul(P, m.at(r, c), x[static_cast<size_t>(c)]));
  auto sol = fp_solve(m, rhs);
  REQUIRE(sol.size() == 3);
  CHECK(sol == x);

  FpMatrix sing(2, 2, P);
  sing.at(0, 0) = 1; sing.at(0, 1) = 2;
  sing.at(1, 0) = 2; sing.at(1, 1) = 4;
  CHECK(fp_solve(sing, {1, 2}).empty());
}

TEST_CASE("random solve round-trips") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    int nn = 1 + static_cast<int>(rng() % 12);
    auto m = random_matrix(rng, nn, nn, P);
    std::vector<std::uint64_t> x(static_cast<size_t>(nn));
    for (auto& v : x) v = rng() % P;
    std::vector<std::uint64_t> rhs(static_cast<size_t>(nn), 0);
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < nn; ++c)
        rhs[static_cast<size_t>(r)] = fp_add(
            P, rhs[static_cast<size_t>(r)], fp_mul(P, m.at(r, c), x[static_cast<size_t>(c)]));
    auto sol = fp_solve(m, rhs);
    if (sol.empty()) {
      CHECK(rank_serial(m) < nn);
    } else {
      CHECK(sol == x);
    }
  }
}

}  // TEST_SUITE
