#pragma once

#include "bpos/blowup.hpp"
#include "bpos/divisor.hpp"
#include "bpos/verdict.hpp"

namespace bpos {

// K_X = -(n+1)H + (n-1) sum E_i on the blow-up at points.
DivisorClass canonical_class(const PointConfig& cfg);

// Canonical class of the blow-up along spans of dimension <= r (0 <= r <= n-2):
// coefficient -(n - r' - 1) on every span key of dimension r'.
BlownUpClass canonical_class_blownup(const PointConfig& cfg, int r);

// a*D + K_X.
DivisorClass adjoint(const DivisorClass& D, i64 a);

// Fujita-type positivity of the adjoint series: requires D certified ample;
// checks (n+1)D + K globally generated and (n+2)D + K very ample.
Verdict check_fujita(const DivisorClass& D);

// Minimal discrepancy of the pair (P^n, eps*D) over the span/join centers,
// capped at 1: min{1, 1-eps, min_{labels, k>0} (n - r - 1 - eps*k)}.
// lc reports whether the pair is log canonical (value >= -1).
struct DiscrepancyResult {
  Rational value;
  Verdict lc;
};

DiscrepancyResult discrepancy(const DivisorClass& D, const Rational& eps);

// Closed interval of eps for which eps*D satisfies both endpoint conditions
// of the abundance-style hypothesis; empty when no eps works.  Requires n > 3.
struct EpsilonInterval {
  bool empty = true;
  Rational lower;
  Rational upper;
};

EpsilonInterval abundance_interval(const DivisorClass& D);

// Named secant-join divisor classes on s = n+3 points.
DivisorClass sigma_class(int n);  // n = 2*nu:   (nu+1)H - nu*sum(E)
DivisorClass gamma_class(int n);  // n = 2*nu+1: (nu+1)H - (nu+1)E_1 - nu*sum(E_j)

// Closed-form join multiplicities of those classes at any label.
i64 sigma_multiplicity(int n, const JoinLabel& label);
i64 gamma_multiplicity(int n, const JoinLabel& label);

// One reduction step D -> D - steps * (secant divisor), with steps minimal so
// that the residual has k_C = 0 and stays inside 0 <= m'_i <= d'.
struct Decomposition {
  i64 steps = 0;
  DivisorClass residual;
};

Decomposition decompose_even(const DivisorClass& D);
Decomposition decompose_odd(const DivisorClass& D);

}  // namespace bpos
