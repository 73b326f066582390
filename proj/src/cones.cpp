#include "bpos/cones.hpp"

#include <algorithm>
#include <sstream>

namespace bpos {

namespace {

std::string num(i64 v) { return std::to_string(v); }

// Largest join excess over all |I| = size for fixed t, via the top-|I| trick.
struct SigmaFacet {
  i64 excess;
  JoinLabel label;
};

SigmaFacet max_sigma_excess(const DivisorClass& D, i64 t, int size) {
  auto ts = top_sum(D, size);
  JoinLabel label{ts->I, t};
  return SigmaFacet{join_excess(D, label), label};
}

std::optional<Verdict> check_basic_effective(const DivisorClass& D) {
  const int n = D.cfg.n, s = D.cfg.s;
  if (D.d < 0) return Verdict::fails("d = " + num(D.d) + " < 0");
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) > D.d)
      return Verdict::fails("m_" + num(i) + " = " + num(D.mult(i)) + " > d = " + num(D.d));
  for (int size : {n + 1, n + 2}) {
    auto ts = top_sum(D, size);
    if (!ts) continue;
    i64 bound = ck_mul(n, D.d);
    if (ts->sum > bound)
      return Verdict::fails("sum_{i in " + fmt_set(ts->I) + "} m_i = " + num(ts->sum) +
                            " > n*d = " + num(bound));
  }
  return std::nullopt;
}

}  // namespace

Verdict is_effective(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (s >= n + 4) {
    for (int i = 1; i <= s; ++i) {
      if (D.mult(i) < 0)
        return Verdict::unknown("sufficient criterion failed: m_" + num(i) + " = " +
                                num(D.mult(i)) + " < 0");
      if (D.mult(i) > D.d)
        return Verdict::unknown("sufficient criterion failed: m_" + num(i) + " = " +
                                num(D.mult(i)) + " > d = " + num(D.d));
    }
    i64 gap = ck_sub(D.sum_m(), ck_mul(n, D.d));
    i64 slack = std::max<i64>(0, s - n - 3);
    if (gap <= slack) return Verdict::holds();
    return Verdict::unknown("sufficient criterion failed: sum(m) - n*d = " + num(gap) +
                            " > max{0, s-n-3} = " + num(slack));
  }
  if (auto v = check_basic_effective(D)) return *v;
  if (s == n + 3) {
    for (i64 t = 1; n - 2 * t + 1 >= 0; ++t) {
      auto f = max_sigma_excess(D, t, static_cast<int>(n - 2 * t + 1));
      if (f.excess > 0)
        return Verdict::fails("join excess at " + f.label.str() + " = " + num(f.excess) +
                              " > 0");
    }
  }
  return Verdict::holds();
}

Verdict is_movable(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (s >= n + 4)
    return Verdict::unknown("no movability criterion applies for s >= n+4");
  Verdict eff = is_effective(D);
  if (eff.is_fails()) return eff;
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) < 0)
      return Verdict::fails("m_" + num(i) + " = " + num(D.mult(i)) + " < 0");
  if (auto ts = top_sum(D, n)) {
    i64 bound = ck_mul(n - 1, D.d);
    if (ts->sum > bound)
      return Verdict::fails("sum_{i in " + fmt_set(ts->I) + "} m_i = " + num(ts->sum) +
                            " > (n-1)*d = " + num(bound));
  }
  if (s == n + 3) {
    for (i64 t = 1; n - 2 * t >= 0; ++t) {
      auto f = max_sigma_excess(D, t, static_cast<int>(n - 2 * t));
      if (f.excess > 0)
        return Verdict::fails("join excess at " + f.label.str() + " = " + num(f.excess) +
                              " > 0");
    }
  }
  return Verdict::holds();
}

Verdict is_big(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (s >= n + 4)
    return Verdict::unknown("no bigness criterion applies for s >= n+4");
  if (D.d <= 0) return Verdict::fails("d = " + num(D.d) + " <= 0");
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) >= D.d)
      return Verdict::fails("m_" + num(i) + " = " + num(D.mult(i)) + " >= d = " + num(D.d));
  for (int size : {n + 1, n + 2}) {
    auto ts = top_sum(D, size);
    if (!ts) continue;
    i64 bound = ck_mul(n, D.d);
    if (ts->sum >= bound)
      return Verdict::fails("sum_{i in " + fmt_set(ts->I) + "} m_i = " + num(ts->sum) +
                            " >= n*d = " + num(bound));
  }
  if (s == n + 3) {
    for (i64 t = 1; n - 2 * t + 1 >= 0; ++t) {
      auto f = max_sigma_excess(D, t, static_cast<int>(n - 2 * t + 1));
      if (f.excess >= 0)
        return Verdict::fails("join excess at " + f.label.str() + " = " + num(f.excess) +
                              " >= 0");
    }
  }
  return Verdict::holds();
}

Verdict is_l_very_ample(const DivisorClass& D, i64 l) {
  validate(D);
  if (l < 0) throw std::invalid_argument("is_l_very_ample: l must be >= 0");
  const int n = D.cfg.n, s = D.cfg.s;
  if (s > 2 * n) {
    i64 gap = ck_sub(D.sum_m(), ck_mul(n, D.d));
    i64 bound = ck_sub(b_bound(D), ck_add(1, l));
    if (gap > bound)
      return Verdict::unknown("sum(m) - n*d = " + num(gap) + " > b-1-l = " + num(bound));
  }
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) < l)
      return Verdict::fails("m_" + num(i) + " = " + num(D.mult(i)) + " < l = " + num(l));
  if (auto ts = top_sum(D, 2)) {
    int i = ts->I.elems()[0], j = ts->I.elems()[1];
    i64 val = ck_sub(D.d, ts->sum);
    if (val < l)
      return Verdict::fails("d - m_" + num(i) + " - m_" + num(j) + " = " + num(val) +
                            " < l = " + num(l));
  }
  return Verdict::holds();
}

Verdict is_globally_generated(const DivisorClass& D) { return is_l_very_ample(D, 0); }
Verdict is_semi_ample(const DivisorClass& D) { return is_l_very_ample(D, 0); }
Verdict is_nef(const DivisorClass& D) { return is_l_very_ample(D, 0); }
Verdict is_very_ample(const DivisorClass& D) { return is_l_very_ample(D, 1); }
Verdict is_ample(const DivisorClass& D) { return is_l_very_ample(D, 1); }
Verdict is_l_jet_ample(const DivisorClass& D, i64 l) { return is_l_very_ample(D, l); }

Verdict has_vanishing_h1(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) < 0)
      return Verdict::unknown("sufficient criterion failed: m_" + num(i) + " = " +
                              num(D.mult(i)) + " < 0");
  if (auto ts = top_sum(D, 2)) {
    if (ts->sum > ck_add(D.d, 1))
      return Verdict::unknown("sufficient criterion failed: m_i + m_j = " + num(ts->sum) +
                              " > d+1 = " + num(D.d + 1) + " for {i,j} = " + fmt_set(ts->I));
  }
  // Points with m_i = 0 impose no conditions; counting them would loosen the
  // bound with phantom points, so only i with m_i >= 1 enter the slack term.
  int s_pos = 0;
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) >= 1) ++s_pos;
  i64 bound = ck_add(ck_mul(n, D.d), std::max<i64>(1, s_pos - n - 2));
  if (D.sum_m() > bound)
    return Verdict::unknown("sufficient criterion failed: sum(m) = " + num(D.sum_m()) +
                            " > n*d + max{1, s'-n-2} = " + num(bound) + " (s' = " +
                            num(s_pos) + " points with m_i >= 1)");
  // A first-cohomology-free class has exactly chi sections, so chi < 0 is
  // incompatible with the conclusion and the certificate must stay silent.
  if (chi(D) < 0)
    return Verdict::unknown("sufficient criterion failed: chi = " + num(chi(D)) + " < 0");
  return Verdict::holds();
}

i64 mori_pairing(const DivisorClass& D, const MoriCurve& c) {
  validate(D);
  auto check_index = [&](int i) {
    if (i < 1 || i > D.cfg.s)
      throw std::invalid_argument("mori_pairing: point index out of range");
  };
  if (c.kind == MoriCurve::Kind::ExcLine) {
    check_index(c.i);
    return D.mult(c.i);
  }
  check_index(c.i);
  check_index(c.j);
  if (c.i == c.j)
    throw std::invalid_argument("mori_pairing: line through a pair needs distinct points");
  return ck_sub(D.d, ck_add(D.mult(c.i), D.mult(c.j)));
}

}  // namespace bpos
