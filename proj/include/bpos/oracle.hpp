#pragma once

#include <random>

#include "bpos/divisor.hpp"
#include "bpos/gfp.hpp"
#include "bpos/verdict.hpp"

namespace bpos {

// Deterministic RNG wrapper with a platform-independent bounded sampler.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(u64 seed) : eng(seed) {}

  u64 below(u64 bound) {  // uniform in [0, bound)
    if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
    u64 limit = ~u64{0} - ~u64{0} % bound;
    u64 x;
    do {
      x = eng();
    } while (x >= limit);
    return x % bound;
  }
  u64 nonzero_below(u64 bound) { return 1 + below(bound - 1); }
};

struct FieldSpec {
  std::vector<u64> primes{1000000007ull, 998244353ull};
  int min_trials = 3;
  int max_trials = 8;
  u64 seed = 0;
};

void validate(const FieldSpec& spec);

enum class PointMode { FullyRandom, OnRandomRnc };

// Random invertible image of the moment curve t -> (1, t, ..., t^n), with the
// s chosen parameters and the resulting points.
struct RncData {
  int n = 1;
  u64 p = 2;
  std::vector<std::vector<u64>> mat;     // (n+1) x (n+1), invertible
  std::vector<u64> params;               // s distinct parameters
  std::vector<std::vector<u64>> points;  // s points, mat * moment(param)
};

RncData make_rnc(int n, int s, u64 p, Rng& rng);
std::vector<std::vector<u64>> random_points(int n, int s, u64 p, Rng& rng);

struct FatPoint {
  std::vector<u64> coords;  // n+1 homogeneous coordinates
  i64 mult = 1;
};

// Exact h^0 over F_p of degree-d forms in n+1 variables vanishing to the given
// orders at the given points (one elimination, no trial logic).
i64 h0_at_points(int n, i64 d, u64 p, const std::vector<FatPoint>& pts);

struct OracleResult {
  i64 h0 = 0;
  i64 cols = 0;
  int trials = 0;
  int agreeing = 0;        // how many trials attained the minimum
  std::vector<i64> per_trial;
};

// Interpolation oracle: minimum of h0_at_points over repeated random trials
// across at least two primes; the minimum must recur before it is trusted.
OracleResult h0_general(int n, i64 d, const std::vector<i64>& mults,
                        const FieldSpec& spec, PointMode mode = PointMode::FullyRandom);

struct ProbeResult {
  bool dropped = false;
  i64 drop = 0;
  i64 h0_base = 0;
  i64 h0_probe = 0;
};

// Impose an order-mu point at a random point of the join named by label and
// report whether h^0 drops.  Uses the curve configuration when s = n+3.
ProbeResult base_point_probe(const DivisorClass& D, const JoinLabel& label, i64 mu,
                             const FieldSpec& spec);

// For a class certified l-very ample, the (l+1)-jet at any point (generic or
// on a span of two of the blown-up points) must impose C(n+l, n) conditions.
Verdict jet_spannedness_probe(const DivisorClass& D, i64 l, const FieldSpec& spec);

// Random point of the join of span(I) with the t-th secant of the curve.
std::vector<u64> sample_join_point(const RncData& rnc, const JoinLabel& label, Rng& rng);

// Exact membership test of q in that join, via the rank of a convolved
// catalecticant of the coordinates of q in the curve frame.
bool join_membership(const RncData& rnc, const std::vector<u64>& q,
                     const JoinLabel& label);

}  // namespace bpos
