#pragma once

#include <map>
#include <vector>

#include "bpos/divisor.hpp"
#include "bpos/verdict.hpp"

namespace bpos {

// Which iterated blow-up the class lives on: Linear(r) blows up the linear
// spans of up to r+1 points (dimension <= r); Sigma additionally blows up the
// secant joins of dimension <= n-2 (requires s = n+3).
struct SpacePolicy {
  enum class Kind { Linear, Sigma };
  Kind kind = Kind::Linear;
  int level = 0;  // r for Linear; ignored for Sigma

  static SpacePolicy linear(int r) { return {Kind::Linear, r}; }
  static SpacePolicy sigma() { return {Kind::Sigma, 0}; }

  friend bool operator==(const SpacePolicy&, const SpacePolicy&) = default;
};

// A divisorial component subtracted before transforming, with its multiplicity.
struct SplitOff {
  DivisorClass cls;
  JoinLabel label;
  i64 multiplicity = 0;
};

// Class on an iterated blow-up: d*h - sum coeff(I,t) * e_{I,t}, plus the
// divisorial pieces split off on the way (in subtraction order).
struct BlownUpClass {
  PointConfig cfg;
  SpacePolicy policy;
  i64 d = 0;
  std::map<JoinLabel, i64> coeffs;  // only nonzero entries
  std::vector<SplitOff> splits;

  i64 coeff(const JoinLabel& label) const;
};

// Transform to the blow-up along spans of dimension <= r (0 <= r <= n-1).
// r = n-1 first splits off fixed hyperplane components H_I, |I| = n.
BlownUpClass strict_transform_linear(const DivisorClass& D, int r);

// Transform to the blow-up along all joins of dimension <= n-2 (s = n+3).
// Divisorial joins (dimension n-1) are split off first; requires the input to
// be movable so that every such join carries a named divisor class.
BlownUpClass strict_transform_sigma(const DivisorClass& D);

// Sum the split-off pieces back in; inverse of the transform on the H / E_i part.
DivisorClass recover_divisor(const BlownUpClass& c);

// Restriction of a Linear-tower class to the exceptional divisor over the span
// of I (1 <= |I| <= n-1, key (I,0) present with positive coefficient): a class
// of degree k_I on P^{n-|I|} blown up at one point per positive strict
// superset key of size |I|+1, transformed to the induced level.
struct ExceptionalRestriction {
  DivisorClass face;       // degree k_I, multiplicities k_{I'} over supersets I'
  std::vector<IndexSet> points;  // superset keys, in sorted order
  int level = 0;           // r - |I|, possibly -1 when nothing remains to blow up
  BlownUpClass transformed;
};

ExceptionalRestriction restrict_to_exceptional(const BlownUpClass& c, const IndexSet& I);

// Cr(H) anchored at the n+1 points indexed by J: degree n with coefficient
// n - |J'| on every span key J' of size 1..n-1 inside J.
BlownUpClass cremona_hyperplane(const PointConfig& cfg, const IndexSet& J);

// Image of a pure-H-supported class under the Cremona map anchored at J.
// Classes with exceptional support are rejected.
BlownUpClass cremona_image(const BlownUpClass& c, const IndexSet& J);

// Global generation on the blow-up along spans of dimension <= r.
Verdict is_gg_on_xr(const DivisorClass& D, int r);

// Base-point-freeness after transforming to the full linear tower (r = n-1).
Verdict base_point_free_tilde(const DivisorClass& D);

// Whether the tower provides a log resolution of the pair (valid range of s).
Verdict log_resolution_applicable(const DivisorClass& D);

}  // namespace bpos
