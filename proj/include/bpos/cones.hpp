#pragma once

#include "bpos/divisor.hpp"
#include "bpos/verdict.hpp"

namespace bpos {

// Cone membership for D = dH - sum m_i E_i on the blow-up at s general points.
// For s <= n+3 the facet descriptions are complete (Holds/Fails); for s >= n+4
// only sufficient criteria exist and the answer may be Unknown.

Verdict is_effective(const DivisorClass& D);
Verdict is_movable(const DivisorClass& D);
Verdict is_big(const DivisorClass& D);

// l-very ampleness (separates length-(l+1) subschemes); l = 0 is global
// generation, l = 1 is very ampleness.  Decided when s <= 2n or when
// sum(m) - n d <= b - 1 - l; Unknown otherwise.
Verdict is_l_very_ample(const DivisorClass& D, i64 l);

Verdict is_globally_generated(const DivisorClass& D);
Verdict is_semi_ample(const DivisorClass& D);
Verdict is_nef(const DivisorClass& D);
Verdict is_very_ample(const DivisorClass& D);
Verdict is_ample(const DivisorClass& D);
Verdict is_l_jet_ample(const DivisorClass& D, i64 l);

// Sufficient criterion for H^1 = 0 (so h^0 = chi).
Verdict has_vanishing_h1(const DivisorClass& D);

// Generators of the Mori cone used here: the strict transform of the line
// through points i, j and the class of a line inside the exceptional divisor
// over point i.
struct MoriCurve {
  enum class Kind { LineThrough, ExcLine };
  Kind kind = Kind::ExcLine;
  int i = 0;
  int j = 0;

  static MoriCurve line_through(int i, int j) { return {Kind::LineThrough, i, j}; }
  static MoriCurve exc_line(int i) { return {Kind::ExcLine, i, 0}; }
};

// D . C for the curves above: d - m_i - m_j, respectively m_i.
i64 mori_pairing(const DivisorClass& D, const MoriCurve& c);

}  // namespace bpos
