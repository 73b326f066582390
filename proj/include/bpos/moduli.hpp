#pragma once

#include <array>
#include <map>
#include <vector>

#include "bpos/divisor.hpp"
#include "bpos/enumeration.hpp"
#include "bpos/verdict.hpp"

namespace bpos {

// Divisor class on the moduli space of stable (n+3)-pointed rational curves,
// written on its presentation as an iterated blow-up of P^n at the n+2 points
// of a general configuration: d*H - sum_{1 <= |I| <= n-1} m_I E_I.
struct KapranovClass {
  int n = 1;
  i64 d = 0;
  std::map<IndexSet, i64> m;  // keys with 1 <= |I| <= n-1; absent means 0

  i64 coeff(const IndexSet& I) const;
};

void validate(const KapranovClass& c);

// Boundary divisor of the moduli space, given by an unordered 2-part split of
// the n+3 marks; stored by the side not containing the last mark is the
// normalized form J (1 <= |J| <= n).
struct BoundaryDivisor {
  int n = 1;
  IndexSet raw;  // one side of the split, 2 <= |raw| <= n+1

  static BoundaryDivisor of(int n, IndexSet raw);
  IndexSet normalized() const;  // side containing mark n+3, minus that mark
};

// E_J for |J| <= n-1, H_J = H - sum_{I proper subset of J} E_I for |J| = n.
KapranovClass boundary_to_class(const BoundaryDivisor& b);

// Pullback of the cotangent line at mark i: H for i = n+3, otherwise the
// Cremona image of H anchored at the other n+1 blown-up points.
KapranovClass psi_class(int n, int i);

// F-curves are indexed by partitions of the marks into four nonempty blocks.
using FCurve = FourPartition;

// Size-gated coefficients entering the intersection formulas.
int a_coeff(int n, const IndexSet& I);
int b_coeff(int n, const IndexSet& I, const IndexSet& J);

// Pairing of a class with the F-curve given by blocks {G, J, L} plus the block
// containing the last mark (the A-form), or with I = that block minus the last
// mark (the B-form).
i64 a_value(const KapranovClass& c, const IndexSet& G, const IndexSet& J,
            const IndexSet& L);
i64 b_value(const KapranovClass& c, const IndexSet& I, const IndexSet& G,
            const IndexSet& J, const IndexSet& L);

i64 f_pairing(const KapranovClass& c, const FCurve& f);

// Closed-form intersection of an F-curve with a boundary divisor: +1 when the
// split merges exactly two blocks, -1 when it isolates one block, 0 otherwise.
int boundary_f_pairing(const BoundaryDivisor& b, const FCurve& f);

struct FNefResult {
  Verdict verdict;
  std::vector<FCurve> witnesses;  // violating F-curves, capped
};

FNefResult is_f_nef(const KapranovClass& c, int max_witnesses = 16);
FNefResult is_f_nef_serial(const KapranovClass& c, int max_witnesses = 16);

// Strict transform of a class from the blow-up at n+2 points to the moduli
// space: m_{i} = m_i, m_I = k_I for 2 <= |I| <= n-1, then k_I copies of each
// hyperplane span with |I| = n and k_I > 0 are removed as divisorial fixed
// components (dropping d, the m_i with i in I, and the nested coefficients).
KapranovClass kapranov_from_divisor(const DivisorClass& D);
Verdict strict_transform_fnef(const DivisorClass& D);

// Consequences of F-nefness checked exactly: d >= m_I >= 0 and m_I >= m_J for
// every nested pair I subset J.
Verdict fnef_sanity(const KapranovClass& c);

}  // namespace bpos
