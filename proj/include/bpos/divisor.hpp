#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpos/arith.hpp"

namespace bpos {

// Ambient data: blow-up of P^n at s points in general position.
struct PointConfig {
  int n = 1;
  int s = 0;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

void validate(const PointConfig& cfg);  // n >= 1, s >= 0

// Sorted set of point indices, 1-based.  Construction rejects anything that is
// not strictly increasing with all elements >= 1; malformed input is never
// silently normalized.
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet of(std::vector<int> elems);

  const std::vector<int>& elems() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int i) const;
  int max_element() const { return elems_.empty() ? 0 : elems_.back(); }

  IndexSet set_union(const IndexSet& o) const;
  IndexSet set_intersection(const IndexSet& o) const;
  IndexSet set_difference(const IndexSet& o) const;
  bool is_subset_of(const IndexSet& o) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return a.elems_ < b.elems_;
  }

  std::string str() const;  // "{1,2,5}" or "{}"

 private:
  std::vector<int> elems_;
};

// Label (I, t) for the join of the linear span of the points indexed by I with
// the t-th secant variety of the rational normal curve through all s points.
// t = 0 is the plain linear span; t >= 1 requires s = n+3.
struct JoinLabel {
  IndexSet I;
  i64 t = 0;

  friend bool operator==(const JoinLabel&, const JoinLabel&) = default;
  friend bool operator<(const JoinLabel& a, const JoinLabel& b) {
    if (a.I != b.I) return a.I < b.I;
    return a.t < b.t;
  }

  std::string str() const;  // "({1,2}, 1)"
};

void validate(const PointConfig& cfg, const JoinLabel& label);

// dim J(L_I, sigma_t) = |I| + 2t - 1 (-1 for the empty join).
i64 join_dimension(const JoinLabel& label);

// Divisor class d*H - sum_i m_i E_i on the blow-up at s general points.
struct DivisorClass {
  PointConfig cfg;
  i64 d = 0;
  std::vector<i64> m;  // size cfg.s

  static DivisorClass of(int n, int s, i64 d, std::vector<i64> m);

  i64 mult(int i) const;  // m_i, 1-based
  i64 sum_m() const;
  i64 sum_m_over(const IndexSet& I) const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  std::string str() const;
};

void validate(const DivisorClass& D);

// sum_{i in I} m_i - (|I| - 1) d, unclamped; defined for any I subset {1..s}.
i64 linear_excess(const DivisorClass& D, const IndexSet& I);

// k_I = max{0, linear excess}; requires 1 <= |I| <= n.
i64 linear_multiplicity(const DivisorClass& D, const IndexSet& I);

// t * sum(m) + sum_{i in I} m_i - ((n+1) t + |I| - 1) d, unclamped.
// t >= 1 requires s = n+3 (throws std::domain_error otherwise).
i64 join_excess(const DivisorClass& D, const JoinLabel& label);

// k_{I, sigma_t} = max{0, join excess}.
i64 join_multiplicity(const DivisorClass& D, const JoinLabel& label);

struct BaseLocusCycle {
  JoinLabel label;
  i64 multiplicity = 0;  // > 0

  friend bool operator==(const BaseLocusCycle&, const BaseLocusCycle&) = default;
};

// All labels of dimension 1..n-1 with positive multiplicity, sorted by
// (dimension, I, t).  Secant labels (t >= 1) appear only when s = n+3.
std::vector<BaseLocusCycle> base_locus_decomposition(const DivisorClass& D);

// Alternating-sum dimension count for the linear system after removing the
// expected base locus; requires s <= n+3.
i64 sldim(const DivisorClass& D);

// Euler-characteristic count: C(n+d, n) - sum_i C(n + m_i - 1, n).
i64 chi(const DivisorClass& D);

// b = min{ n - #{i : m_i = d}, s - n - 2 }.
i64 b_bound(const DivisorClass& D);

// Intersection of two equal-dimensional joins on s = n+3 points.
struct JoinIntersection {
  bool determined = false;
  std::vector<JoinLabel> labels;  // valid when determined
  std::string reason;             // unmet hypothesis when not determined
};

JoinIntersection join_intersection(const PointConfig& cfg, const JoinLabel& a,
                                   const JoinLabel& b);

// Helpers shared across modules.
std::string fmt_set(const IndexSet& I);
IndexSet full_index_set(int s);

// Indices of the k largest multiplicities (ties by smallest index), together
// with their sum.  The returned set is the binding index set for every facet
// family of the form "sum_{i in I} m_i <= bound over all |I| = k".
struct TopSum {
  IndexSet I;
  i64 sum = 0;
};
std::optional<TopSum> top_sum(const DivisorClass& D, int k);

}  // namespace bpos
