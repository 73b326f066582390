#include "bpos/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bpos/enumeration.hpp"

namespace bpos {

void validate(const PointConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("PointConfig: n must be >= 1");
  if (cfg.s < 0) throw std::invalid_argument("PointConfig: s must be >= 0");
}

IndexSet IndexSet::of(std::vector<int> elems) {
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw std::invalid_argument("IndexSet: elements must be strictly increasing");
  }
  IndexSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

IndexSet IndexSet::set_union(const IndexSet& o) const {
  std::vector<int> out;
  std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                 std::back_inserter(out));
  IndexSet s;
  s.elems_ = std::move(out);
  return s;
}

IndexSet IndexSet::set_intersection(const IndexSet& o) const {
  std::vector<int> out;
  std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                        std::back_inserter(out));
  IndexSet s;
  s.elems_ = std::move(out);
  return s;
}

IndexSet IndexSet::set_difference(const IndexSet& o) const {
  std::vector<int> out;
  std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                      std::back_inserter(out));
  IndexSet s;
  s.elems_ = std::move(out);
  return s;
}

bool IndexSet::is_subset_of(const IndexSet& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

std::string fmt_set(const IndexSet& I) { return I.str(); }

IndexSet full_index_set(int s) {
  std::vector<int> v(static_cast<size_t>(std::max(s, 0)));
  std::iota(v.begin(), v.end(), 1);
  return IndexSet::of(std::move(v));
}

std::string JoinLabel::str() const {
  return "(" + I.str() + ", " + std::to_string(t) + ")";
}

void validate(const PointConfig& cfg, const JoinLabel& label) {
  validate(cfg);
  if (label.t < 0) throw std::invalid_argument("JoinLabel: t must be >= 0");
  if (label.I.max_element() > cfg.s)
    throw std::invalid_argument("JoinLabel: point index exceeds s");
}

i64 join_dimension(const JoinLabel& label) {
  return static_cast<i64>(label.I.size()) + 2 * label.t - 1;
}

DivisorClass DivisorClass::of(int n, int s, i64 d, std::vector<i64> m) {
  DivisorClass D;
  D.cfg = PointConfig{n, s};
  D.d = d;
  D.m = std::move(m);
  validate(D);
  return D;
}

i64 DivisorClass::mult(int i) const {
  if (i < 1 || i > cfg.s) throw std::invalid_argument("DivisorClass: index out of range");
  return m[static_cast<size_t>(i - 1)];
}

i64 DivisorClass::sum_m() const {
  i64 acc = 0;
  for (i64 v : m) acc = ck_add(acc, v);
  return acc;
}

i64 DivisorClass::sum_m_over(const IndexSet& I) const {
  i64 acc = 0;
  for (int i : I.elems()) acc = ck_add(acc, mult(i));
  return acc;
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  os << d << "H";
  for (int i = 1; i <= cfg.s; ++i) os << " - " << mult(i) << "E" << i;
  return os.str();
}

void validate(const DivisorClass& D) {
  validate(D.cfg);
  if (static_cast<int>(D.m.size()) != D.cfg.s)
    throw std::invalid_argument("DivisorClass: multiplicity count must equal s");
}

i64 linear_excess(const DivisorClass& D, const IndexSet& I) {
  if (I.max_element() > D.cfg.s)
    throw std::invalid_argument("linear_excess: point index exceeds s");
  return ck_sub(D.sum_m_over(I), ck_mul(static_cast<i64>(I.size()) - 1, D.d));
}

i64 linear_multiplicity(const DivisorClass& D, const IndexSet& I) {
  if (I.size() < 1 || I.size() > D.cfg.n)
    throw std::invalid_argument("linear_multiplicity: need 1 <= |I| <= n");
  return std::max<i64>(0, linear_excess(D, I));
}

i64 join_excess(const DivisorClass& D, const JoinLabel& label) {
  validate(D.cfg, label);
  if (label.t == 0) return linear_excess(D, label.I);
  if (D.cfg.s != D.cfg.n + 3)
    throw std::domain_error("join_excess: secant joins require s = n+3");
  i64 lhs = ck_add(ck_mul(label.t, D.sum_m()), D.sum_m_over(label.I));
  i64 coeff = ck_add(ck_mul(static_cast<i64>(D.cfg.n) + 1, label.t),
                     static_cast<i64>(label.I.size()) - 1);
  return ck_sub(lhs, ck_mul(coeff, D.d));
}

i64 join_multiplicity(const DivisorClass& D, const JoinLabel& label) {
  return std::max<i64>(0, join_excess(D, label));
}

std::vector<BaseLocusCycle> base_locus_decomposition(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  std::vector<BaseLocusCycle> out;
  // Linear spans of dimension 1..n-1: |I| = 2..n.
  for (int size = 2; size <= std::min(n, s); ++size) {
    for_each_combination(s, size, [&](const std::vector<int>& c) {
      JoinLabel label{IndexSet::of(c), 0};
      i64 k = join_multiplicity(D, label);
      if (k > 0) out.push_back({label, k});
      return true;
    });
  }
  // Secant joins: dimension |I| + 2t - 1 in 1..n-1 with t >= 1.
  if (s == n + 3) {
    for (i64 t = 1; 2 * t - 1 <= n - 1; ++t) {
      for (int size = 0; size + 2 * t - 1 <= n - 1; ++size) {
        for_each_combination(s, size, [&](const std::vector<int>& c) {
          JoinLabel label{IndexSet::of(c), t};
          i64 k = join_multiplicity(D, label);
          if (k > 0) out.push_back({label, k});
          return true;
        });
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BaseLocusCycle& a, const BaseLocusCycle& b) {
    i64 da = join_dimension(a.label), db = join_dimension(b.label);
    if (da != db) return da < db;
    if (a.label.I != b.label.I) return a.label.I < b.label.I;
    return a.label.t < b.label.t;
  });
  return out;
}

i64 sldim(const DivisorClass& D) {
  validate(D);
  const int n = D.cfg.n, s = D.cfg.s;
  if (s > n + 3) throw std::domain_error("sldim: unsupported configuration (s > n+3)");
  const i64 tmax = (s == n + 3) ? (n / 2 + n % 2) : 0;
  i64 acc = 0;
  for (i64 t = 0; t <= tmax; ++t) {
    for (int size = 0; size <= n - 2 * t; ++size) {
      if (size > s) break;
      for_each_combination(s, size, [&](const std::vector<int>& c) {
        JoinLabel label{IndexSet::of(c), t};
        i64 k = join_multiplicity(D, label);
        i64 r = join_dimension(label);
        i64 term = binomial(ck_sub(ck_add(n, k), r + 1), n);
        acc = (size % 2 == 0) ? ck_add(acc, term) : ck_sub(acc, term);
        return true;
      });
    }
  }
  return acc;
}

i64 chi(const DivisorClass& D) {
  validate(D);
  i64 acc = binomial(ck_add(D.cfg.n, D.d), D.cfg.n);
  for (i64 mi : D.m) acc = ck_sub(acc, binomial(ck_sub(ck_add(D.cfg.n, mi), 1), D.cfg.n));
  return acc;
}

i64 b_bound(const DivisorClass& D) {
  validate(D);
  i64 eq = 0;
  for (i64 mi : D.m)
    if (mi == D.d) ++eq;
  return std::min<i64>(D.cfg.n - eq, D.cfg.s - D.cfg.n - 2);
}

JoinIntersection join_intersection(const PointConfig& cfg, const JoinLabel& a,
                                   const JoinLabel& b) {
  validate(cfg, a);
  validate(cfg, b);
  if (cfg.s != cfg.n + 3)
    throw std::domain_error("join_intersection: requires s = n+3");
  const i64 r = join_dimension(a);
  if (r != join_dimension(b))
    throw std::invalid_argument("join_intersection: labels must have equal dimension");

  // Strip the common point indices; they re-enter every intersection component.
  const IndexSet common = a.I.set_intersection(b.I);
  const IndexSet I1 = a.I.set_difference(common);
  const IndexSet I2 = b.I.set_difference(common);
  const i64 rp = r - common.size();

  const int n = cfg.n;
  JoinIntersection out;
  if (rp > n - 1) {
    out.reason = "reduced dimension " + std::to_string(rp) + " exceeds n-1 = " +
                 std::to_string(n - 1);
    return out;
  }
  const i64 sz12 = I1.size() + I2.size();
  if (2 * rp > 2 * n - sz12) {
    out.reason = "2*" + std::to_string(rp) + " > 2n - (|I1'|+|I2'|) = " +
                 std::to_string(2 * n - sz12);
    return out;
  }

  const IndexSet pool = I1.set_union(I2);
  std::vector<JoinLabel> labels;
  const int psz = pool.size();
  for (int size = 0; size <= psz; ++size) {
    for_each_combination(psz, size, [&](const std::vector<int>& pick) {
      std::vector<int> j;
      j.reserve(pick.size());
      for (int p : pick) j.push_back(pool.elems()[static_cast<size_t>(p - 1)]);
      IndexSet J = IndexSet::of(std::move(j));
      auto symdiff_sz = [&](const IndexSet& X) {
        return X.set_union(J).size() - X.set_intersection(J).size();
      };
      if (2 * symdiff_sz(I1) != sz12 || 2 * symdiff_sz(I2) != sz12) return true;
      // 2(|J| + 2 t_J - 1) = 2 rp - (|I1'| + |I2'|)
      i64 num = 2 * rp - sz12 + 2 - 2 * static_cast<i64>(J.size());
      if (num < 0 || num % 4 != 0) return true;  // no join of that shape
      labels.push_back({J.set_union(common), num / 4});
      return true;
    });
  }
  std::sort(labels.begin(), labels.end());
  out.determined = true;
  out.labels = std::move(labels);
  return out;
}

std::optional<TopSum> top_sum(const DivisorClass& D, int k) {
  if (k < 0 || k > D.cfg.s) return std::nullopt;
  std::vector<int> idx(static_cast<size_t>(D.cfg.s));
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return D.mult(a) > D.mult(b); });
  idx.resize(static_cast<size_t>(k));
  std::sort(idx.begin(), idx.end());
  TopSum ts;
  ts.I = IndexSet::of(std::move(idx));
  ts.sum = D.sum_m_over(ts.I);
  return ts;
}

}  // namespace bpos
