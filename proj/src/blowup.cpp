#include "bpos/blowup.hpp"

#include <algorithm>

#include "bpos/enumeration.hpp"

namespace bpos {

namespace {

std::string num(i64 v) { return std::to_string(v); }

DivisorClass hyperplane_through(const PointConfig& cfg, const IndexSet& I) {
  std::vector<i64> m(static_cast<size_t>(cfg.s), 0);
  for (int i : I.elems()) m[static_cast<size_t>(i - 1)] = 1;
  return DivisorClass::of(cfg.n, cfg.s, 1, std::move(m));
}

// Secant divisor class: (nu+1)H - nu*sum(E) for even n, with the coefficient
// over the anchor point raised to nu+1 for odd n.
DivisorClass secant_divisor(const PointConfig& cfg, int anchor) {
  const int n = cfg.n;
  const i64 nu = n / 2;
  std::vector<i64> m(static_cast<size_t>(cfg.s), nu);
  if (n % 2 == 1) m[static_cast<size_t>(anchor - 1)] = nu + 1;
  return DivisorClass::of(cfg.n, cfg.s, nu + 1, std::move(m));
}

// First |I| = size span with positive excess, scanning in lexicographic order.
std::optional<std::pair<IndexSet, i64>> first_positive_span(const DivisorClass& D,
                                                            int size) {
  std::optional<std::pair<IndexSet, i64>> found;
  for_each_combination(D.cfg.s, size, [&](const std::vector<int>& c) {
    IndexSet I = IndexSet::of(c);
    i64 e = linear_excess(D, I);
    if (e > 0) {
      found = {I, e};
      return false;
    }
    return true;
  });
  return found;
}

void subtract(DivisorClass& work, const DivisorClass& piece, i64 mult) {
  work.d = ck_sub(work.d, ck_mul(mult, piece.d));
  for (int i = 1; i <= work.cfg.s; ++i)
    work.m[static_cast<size_t>(i - 1)] =
        ck_sub(work.m[static_cast<size_t>(i - 1)], ck_mul(mult, piece.mult(i)));
}

void fill_span_keys(const DivisorClass& work, int max_size,
                    std::map<JoinLabel, i64>& coeffs) {
  for (int size = 1; size <= std::min(max_size, work.cfg.s); ++size) {
    for_each_combination(work.cfg.s, size, [&](const std::vector<int>& c) {
      JoinLabel label{IndexSet::of(c), 0};
      i64 k = std::max<i64>(0, linear_excess(work, label.I));
      if (k > 0) coeffs[label] = k;
      return true;
    });
  }
}

}  // namespace

i64 BlownUpClass::coeff(const JoinLabel& label) const {
  auto it = coeffs.find(label);
  return it == coeffs.end() ? 0 : it->second;
}

BlownUpClass strict_transform_linear(const DivisorClass& D, int r) {
  validate(D);
  const int n = D.cfg.n;
  if (r < 0 || r > n - 1)
    throw std::invalid_argument("strict_transform_linear: need 0 <= r <= n-1");
  DivisorClass work = D;
  std::vector<SplitOff> splits;
  if (r == n - 1) {
    // Spans of n points are divisors; split them off until none is fixed.
    while (auto hit = first_positive_span(work, n)) {
      DivisorClass piece = hyperplane_through(work.cfg, hit->first);
      subtract(work, piece, hit->second);
      splits.push_back({piece, JoinLabel{hit->first, 0}, hit->second});
      if (work.d < 0)
        throw std::domain_error(
            "strict_transform_linear: hyperplane split-off does not terminate "
            "(class is not effective)");
    }
  }
  BlownUpClass out;
  out.cfg = D.cfg;
  out.policy = SpacePolicy::linear(r);
  out.d = work.d;
  out.splits = std::move(splits);
  fill_span_keys(work, r + 1, out.coeffs);
  return out;
}

BlownUpClass strict_transform_sigma(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (s != n + 3)
    throw std::domain_error("strict_transform_sigma: requires s = n+3");
  if (n < 2)
    throw std::domain_error("strict_transform_sigma: requires n >= 2");
  const i64 nu = n / 2;
  DivisorClass work = D;
  std::vector<SplitOff> splits;
  while (true) {
    if (work.d < 0)
      throw std::domain_error(
          "strict_transform_sigma: split-off does not terminate (class is not "
          "effective)");
    if (auto hit = first_positive_span(work, n)) {
      DivisorClass piece = hyperplane_through(work.cfg, hit->first);
      subtract(work, piece, hit->second);
      splits.push_back({piece, JoinLabel{hit->first, 0}, hit->second});
      continue;
    }
    bool split_secant = false;
    if (n % 2 == 0) {
      JoinLabel label{IndexSet{}, nu};
      i64 k = join_excess(work, label);
      if (k > 0) {
        DivisorClass piece = secant_divisor(work.cfg, 0);
        subtract(work, piece, k);
        splits.push_back({piece, label, k});
        split_secant = true;
      }
    } else {
      for (int i = 1; i <= s && !split_secant; ++i) {
        JoinLabel label{IndexSet::of({i}), nu};
        i64 k = join_excess(work, label);
        if (k > 0) {
          DivisorClass piece = secant_divisor(work.cfg, i);
          subtract(work, piece, k);
          splits.push_back({piece, label, k});
          split_secant = true;
        }
      }
    }
    if (split_secant) continue;
    break;
  }
  // Any remaining divisorial join must be trivial: those labels carry no
  // divisor class that could be split off.
  for (i64 t = 1; n - 2 * t >= 0; ++t) {
    const int size = static_cast<int>(n - 2 * t);
    bool named_even = (n % 2 == 0 && size == 0);
    bool named_odd = (n % 2 == 1 && size == 1);
    if (named_even || named_odd) continue;
    bool bad = false;
    JoinLabel bad_label;
    for_each_combination(s, size, [&](const std::vector<int>& c) {
      JoinLabel label{IndexSet::of(c), t};
      if (join_excess(work, label) > 0) {
        bad = true;
        bad_label = label;
        return false;
      }
      return true;
    });
    if (bad)
      throw std::domain_error("strict_transform_sigma: join " + bad_label.str() +
                              " is divisorial and fixed but has no divisor class "
                              "(input violates the movability hypothesis)");
  }
  BlownUpClass out;
  out.cfg = D.cfg;
  out.policy = SpacePolicy::sigma();
  out.d = work.d;
  out.splits = std::move(splits);
  fill_span_keys(work, n - 1, out.coeffs);
  for (i64 t = 1; 2 * t - 1 <= n - 2; ++t) {
    for (int size = 0; size + 2 * t - 1 <= n - 2; ++size) {
      for_each_combination(s, size, [&](const std::vector<int>& c) {
        JoinLabel label{IndexSet::of(c), t};
        i64 k = std::max<i64>(0, join_excess(work, label));
        if (k > 0) out.coeffs[label] = k;
        return true;
      });
    }
  }
  return out;
}

DivisorClass recover_divisor(const BlownUpClass& c) {
  i64 d = c.d;
  std::vector<i64> m(static_cast<size_t>(c.cfg.s), 0);
  for (int i = 1; i <= c.cfg.s; ++i)
    m[static_cast<size_t>(i - 1)] = c.coeff(JoinLabel{IndexSet::of({i}), 0});
  for (const SplitOff& sp : c.splits) {
    d = ck_add(d, ck_mul(sp.multiplicity, sp.cls.d));
    for (int i = 1; i <= c.cfg.s; ++i)
      m[static_cast<size_t>(i - 1)] =
          ck_add(m[static_cast<size_t>(i - 1)], ck_mul(sp.multiplicity, sp.cls.mult(i)));
  }
  return DivisorClass::of(c.cfg.n, c.cfg.s, d, std::move(m));
}

ExceptionalRestriction restrict_to_exceptional(const BlownUpClass& c, const IndexSet& I) {
  if (c.policy.kind != SpacePolicy::Kind::Linear)
    throw std::invalid_argument("restrict_to_exceptional: span towers only");
  const int n = c.cfg.n;
  if (I.size() < 1 || I.size() > n - 1)
    throw std::invalid_argument("restrict_to_exceptional: need 1 <= |I| <= n-1");
  const i64 k_I = c.coeff(JoinLabel{I, 0});
  if (k_I <= 0)
    throw std::invalid_argument("restrict_to_exceptional: key (" + I.str() +
                                ", 0) is not a positive coefficient");
  ExceptionalRestriction out;
  for (const auto& [label, k] : c.coeffs) {
    if (label.t != 0 || label.I.size() != I.size() + 1) continue;
    if (k > 0 && I.is_subset_of(label.I)) out.points.push_back(label.I);
  }
  std::vector<i64> mults;
  mults.reserve(out.points.size());
  for (const IndexSet& sup : out.points) mults.push_back(c.coeff(JoinLabel{sup, 0}));
  out.face = DivisorClass::of(n - I.size(), static_cast<int>(out.points.size()), k_I,
                              std::move(mults));
  out.level = c.policy.level - I.size();
  out.transformed = strict_transform_linear(out.face, std::max(0, out.level));
  return out;
}

BlownUpClass cremona_hyperplane(const PointConfig& cfg, const IndexSet& J) {
  validate(cfg);
  const int n = cfg.n;
  if (J.size() != n + 1)
    throw std::invalid_argument("cremona_hyperplane: anchor needs exactly n+1 points");
  if (J.max_element() > cfg.s)
    throw std::invalid_argument("cremona_hyperplane: point index exceeds s");
  BlownUpClass out;
  out.cfg = cfg;
  out.policy = SpacePolicy::linear(std::max(0, n - 2));
  out.d = n;
  for (int size = 1; size <= n - 1; ++size) {
    for_each_combination(J.size(), size, [&](const std::vector<int>& pos) {
      std::vector<int> sub;
      sub.reserve(pos.size());
      for (int p : pos) sub.push_back(J.elems()[static_cast<size_t>(p - 1)]);
      out.coeffs[JoinLabel{IndexSet::of(std::move(sub)), 0}] = n - size;
      return true;
    });
  }
  return out;
}

BlownUpClass cremona_image(const BlownUpClass& c, const IndexSet& J) {
  if (!c.coeffs.empty() || !c.splits.empty())
    throw std::invalid_argument(
        "cremona_image: only pure-H-supported classes are supported");
  BlownUpClass out = cremona_hyperplane(c.cfg, J);
  out.d = ck_mul(out.d, c.d);
  for (auto& [label, k] : out.coeffs) k = ck_mul(k, c.d);
  if (c.d == 0) out.coeffs.clear();
  return out;
}

Verdict is_gg_on_xr(const DivisorClass& D, int r) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (r < 0 || r > n - 1)
    throw std::invalid_argument("is_gg_on_xr: need 0 <= r <= n-1");
  if (s > n + 1) {
    i64 gap = ck_sub(D.sum_m(), ck_mul(n, D.d));
    i64 slack = std::max<i64>(0, s - n - 3);
    if (gap > slack)
      return Verdict::unknown("sum(m) - n*d = " + num(gap) + " > max{0, s-n-3} = " +
                              num(slack));
  }
  for (int i = 1; i <= s; ++i) {
    if (D.mult(i) < 0)
      return Verdict::fails("m_" + num(i) + " = " + num(D.mult(i)) + " < 0");
    if (D.mult(i) > D.d)
      return Verdict::fails("m_" + num(i) + " = " + num(D.mult(i)) + " > d = " + num(D.d));
  }
  if (auto ts = top_sum(D, r + 2)) {
    i64 bound = ck_mul(r + 1, D.d);
    if (ts->sum > bound)
      return Verdict::fails("sum_{i in " + fmt_set(ts->I) + "} m_i = " + num(ts->sum) +
                            " > (r+1)*d = " + num(bound));
  }
  return Verdict::holds();
}

Verdict base_point_free_tilde(const DivisorClass& D) {
  return is_gg_on_xr(D, D.cfg.n - 1);
}

Verdict log_resolution_applicable(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (s <= n + 2) return Verdict::holds();
  i64 gap = ck_sub(D.sum_m(), ck_mul(n, D.d));
  i64 slack = s - n - 3;
  if (gap <= slack) return Verdict::holds();
  return Verdict::unknown("sum(m) - n*d = " + num(gap) + " > s-n-3 = " + num(slack));
}

}  // namespace bpos
