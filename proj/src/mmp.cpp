#include "bpos/mmp.hpp"

#include <algorithm>
#include <limits>

#include "bpos/cones.hpp"
#include "bpos/enumeration.hpp"

namespace bpos {

namespace {

std::string num(i64 v) { return std::to_string(v); }

// Smallest integer alpha with lo <= alpha and alpha <= each upper bound; the
// upper bounds arrive as exact rationals.
i64 minimal_step(i64 k_c, i64 nu, const std::vector<Rational>& uppers,
                 const char* what) {
  if (k_c < 1)
    throw std::domain_error(std::string(what) +
                            ": not applicable, curve multiplicity k_C = " + num(k_c));
  i64 lo = ceil_div(k_c, nu);
  i64 hi = std::numeric_limits<i64>::max();
  for (const Rational& u : uppers)
    hi = std::min(hi, floor_div(u.num, u.den));
  if (lo > hi)
    throw std::domain_error(std::string(what) + ": infeasible step range [" + num(lo) +
                            ", " + num(hi) + "]");
  return lo;
}

}  // namespace

DivisorClass canonical_class(const PointConfig& cfg) {
  validate(cfg);
  std::vector<i64> m(static_cast<size_t>(cfg.s), -(cfg.n - 1));
  return DivisorClass::of(cfg.n, cfg.s, -(cfg.n + 1), std::move(m));
}

BlownUpClass canonical_class_blownup(const PointConfig& cfg, int r) {
  validate(cfg);
  if (r < 0 || r > cfg.n - 2)
    throw std::invalid_argument("canonical_class_blownup: need 0 <= r <= n-2");
  BlownUpClass out;
  out.cfg = cfg;
  out.policy = SpacePolicy::linear(r);
  out.d = -(cfg.n + 1);
  for (int size = 1; size <= std::min(r + 1, cfg.s); ++size) {
    for_each_combination(cfg.s, size, [&](const std::vector<int>& c) {
      out.coeffs[JoinLabel{IndexSet::of(c), 0}] = -(cfg.n - (size - 1) - 1);
      return true;
    });
  }
  return out;
}

DivisorClass adjoint(const DivisorClass& D, i64 a) {
  DivisorClass K = canonical_class(D.cfg);
  std::vector<i64> m(static_cast<size_t>(D.cfg.s));
  for (int i = 1; i <= D.cfg.s; ++i)
    m[static_cast<size_t>(i - 1)] = ck_add(ck_mul(a, D.mult(i)), K.mult(i));
  return DivisorClass::of(D.cfg.n, D.cfg.s, ck_add(ck_mul(a, D.d), K.d), std::move(m));
}

Verdict check_fujita(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  Verdict amp = is_ample(D);
  if (!amp.is_holds())
    return Verdict::unknown("input not certified ample: " +
                            (amp.witness.empty() ? std::string("Unknown") : amp.witness));
  if (s >= 2 * n + 1) {
    i64 gap = ck_sub(D.sum_m(), ck_mul(n, D.d));
    if (gap > 0)
      return Verdict::unknown("sum(m) - n*d = " + num(gap) +
                              " > 0, adjoint classes leave the decided range");
  }
  Verdict gg = is_globally_generated(adjoint(D, n + 1));
  if (gg.is_fails()) return Verdict::fails("(n+1)D + K: " + gg.witness);
  Verdict va = is_very_ample(adjoint(D, n + 2));
  if (va.is_fails()) return Verdict::fails("(n+2)D + K: " + va.witness);
  if (gg.is_holds() && va.is_holds()) return Verdict::holds();
  return Verdict::unknown(!gg.is_holds() ? "(n+1)D + K: " + gg.witness
                                         : "(n+2)D + K: " + va.witness);
}

DiscrepancyResult discrepancy(const DivisorClass& D, const Rational& eps) {
  validate(D);
  if (eps < Rational(0) || eps > Rational(1))
    throw std::invalid_argument("discrepancy: eps must lie in [0, 1]");
  const int n = D.cfg.n, s = D.cfg.s;
  Rational best = rat_min(Rational(1), Rational(1) - eps);
  JoinLabel best_label;
  bool from_label = false;
  auto consider = [&](const JoinLabel& label) {
    i64 k = join_multiplicity(D, label);
    if (k <= 0) return;
    Rational a = Rational(n - join_dimension(label) - 1) - eps * Rational(k);
    if (a < best) {
      best = a;
      best_label = label;
      from_label = true;
    }
  };
  for (int size = 2; size <= std::min(n - 1, s); ++size) {
    for_each_combination(s, size, [&](const std::vector<int>& c) {
      consider(JoinLabel{IndexSet::of(c), 0});
      return true;
    });
  }
  if (s == n + 3) {
    for (i64 t = 1; 2 * t - 1 <= n - 2; ++t) {
      for (int size = 0; size + 2 * t - 1 <= n - 2; ++size) {
        for_each_combination(s, size, [&](const std::vector<int>& c) {
          consider(JoinLabel{IndexSet::of(c), t});
          return true;
        });
      }
    }
  }
  DiscrepancyResult out{best, Verdict::holds()};
  if (best < Rational(-1)) {
    std::string w = from_label
                        ? "discrepancy " + best.str() + " < -1 at " + best_label.str()
                        : "discrepancy " + best.str() + " < -1";
    out.lc = Verdict::fails(w);
  }
  return out;
}

EpsilonInterval abundance_interval(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (n <= 3) throw std::domain_error("abundance_interval: requires n > 3");
  EpsilonInterval out;
  for (int i = 1; i <= s; ++i)
    if (D.mult(i) <= 0) return out;  // lower endpoint condition unsatisfiable
  Rational lower(0);
  for (int i = 1; i <= s; ++i)
    lower = rat_max(lower, Rational(n - 1, D.mult(i)));
  Rational upper(1);
  if (auto ts = top_sum(D, 2)) {
    i64 excess = ck_sub(ts->sum, D.d);
    if (excess > 0) upper = rat_min(upper, Rational(n - 3, excess));
  }
  if (lower > upper) return out;
  out.empty = false;
  out.lower = lower;
  out.upper = upper;
  return out;
}

DivisorClass sigma_class(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("sigma_class: n must be even and >= 2");
  const i64 nu = n / 2;
  std::vector<i64> m(static_cast<size_t>(n + 3), nu);
  return DivisorClass::of(n, n + 3, nu + 1, std::move(m));
}

DivisorClass gamma_class(int n) {
  if (n < 3 || n % 2 != 1)
    throw std::invalid_argument("gamma_class: n must be odd and >= 3");
  const i64 nu = (n - 1) / 2;
  std::vector<i64> m(static_cast<size_t>(n + 3), nu);
  m[0] = nu + 1;
  return DivisorClass::of(n, n + 3, nu + 1, std::move(m));
}

i64 sigma_multiplicity(int n, const JoinLabel& label) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("sigma_multiplicity: n must be even and >= 2");
  if (label.t < 0 || label.I.max_element() > n + 3)
    throw std::invalid_argument("sigma_multiplicity: malformed label");
  const i64 nu = n / 2;
  return std::max<i64>(0, nu - label.I.size() - label.t + 1);
}

i64 gamma_multiplicity(int n, const JoinLabel& label) {
  if (n < 3 || n % 2 != 1)
    throw std::invalid_argument("gamma_multiplicity: n must be odd and >= 3");
  if (label.t < 0 || label.I.max_element() > n + 3)
    throw std::invalid_argument("gamma_multiplicity: malformed label");
  const i64 nu = (n - 1) / 2;
  const i64 delta = label.I.contains(1) ? 1 : 0;
  return std::max<i64>(0, nu - label.I.size() - label.t + 1 + delta);
}

Decomposition decompose_even(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("decompose_even: n must be even and >= 2");
  if (s != n + 3) throw std::domain_error("decompose_even: requires s = n+3");
  const i64 nu = n / 2;
  const i64 k_c = join_multiplicity(D, JoinLabel{IndexSet{}, 1});
  std::vector<Rational> uppers;
  for (int i = 1; i <= s; ++i) {
    uppers.emplace_back(D.mult(i), nu);
    uppers.emplace_back(ck_sub(D.d, D.mult(i)));
  }
  i64 alpha = minimal_step(k_c, nu, uppers, "decompose_even");
  DivisorClass res = D;
  res.d = ck_sub(res.d, ck_mul(alpha, nu + 1));
  for (auto& mi : res.m) mi = ck_sub(mi, ck_mul(alpha, nu));
  i64 k_res = join_multiplicity(res, JoinLabel{IndexSet{}, 1});
  if (k_res != std::max<i64>(0, k_c - alpha * nu) || k_res != 0)
    throw std::logic_error("decompose_even: residual curve multiplicity nonzero");
  for (int i = 1; i <= s; ++i)
    if (res.mult(i) < 0 || res.mult(i) > res.d)
      throw std::logic_error("decompose_even: residual leaves 0 <= m_i <= d");
  return {alpha, res};
}

Decomposition decompose_odd(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (n < 3 || n % 2 != 1)
    throw std::invalid_argument("decompose_odd: n must be odd and >= 3");
  if (s != n + 3) throw std::domain_error("decompose_odd: requires s = n+3");
  const i64 nu = (n - 1) / 2;
  const i64 k_c = join_multiplicity(D, JoinLabel{IndexSet{}, 1});
  std::vector<Rational> uppers;
  for (int i = 1; i <= s; ++i) {
    uppers.emplace_back(D.mult(i), i == 1 ? nu + 1 : nu);
    uppers.emplace_back(ck_sub(D.d, D.mult(i)));
  }
  i64 beta = minimal_step(k_c, nu, uppers, "decompose_odd");
  DivisorClass res = D;
  res.d = ck_sub(res.d, ck_mul(beta, nu + 1));
  res.m[0] = ck_sub(res.m[0], ck_mul(beta, nu + 1));
  for (size_t i = 1; i < res.m.size(); ++i) res.m[i] = ck_sub(res.m[i], ck_mul(beta, nu));
  i64 k_res = join_multiplicity(res, JoinLabel{IndexSet{}, 1});
  if (k_res != std::max<i64>(0, k_c - beta * nu) || k_res != 0)
    throw std::logic_error("decompose_odd: residual curve multiplicity nonzero");
  for (int i = 1; i <= s; ++i)
    if (res.mult(i) < 0 || res.mult(i) > res.d)
      throw std::logic_error("decompose_odd: residual leaves 0 <= m_i <= d");
  return {beta, res};
}

}  // namespace bpos
