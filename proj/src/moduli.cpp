#include "bpos/moduli.hpp"

#include <algorithm>
#include <bit>

#include "bpos/blowup.hpp"
#include "bpos/cones.hpp"

namespace bpos {

namespace {

std::string num(i64 v) { return std::to_string(v); }

std::string fcurve_str(const FCurve& f) {
  std::string out = "(";
  for (int b = 0; b < 4; ++b) {
    if (b) out += " | ";
    auto elems = mask_to_set(f.blocks[static_cast<size_t>(b)]);
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems[i]);
    }
  }
  return out + ")";
}

// Dense coefficient table indexed by subset mask of the blown-up points; the
// size gate |U| <= n-1 is baked in because larger sets are never stored.
struct DenseClass {
  int n = 1;
  i64 d = 0;
  std::vector<i64> by_mask;

  explicit DenseClass(const KapranovClass& c) : n(c.n), d(c.d) {
    by_mask.assign(1ull << (c.n + 2), 0);
    for (const auto& [I, v] : c.m) by_mask[set_to_mask(I.elems())] = v;
  }
  i64 m(std::uint32_t mask) const { return by_mask[mask]; }
};

i64 dense_pairing(const DenseClass& c, const FCurve& f, std::uint32_t last_mark_bit) {
  std::uint32_t b0 = 0, rest[3] = {0, 0, 0};
  int nrest = 0;
  for (int b = 0; b < 4; ++b) {
    std::uint32_t mask = f.blocks[static_cast<size_t>(b)];
    if (mask & last_mark_bit)
      b0 = mask & ~last_mark_bit;
    else
      rest[nrest++] = mask;
  }
  const std::uint32_t g = rest[0], j = rest[1], l = rest[2];
  if (b0 == 0)
    return c.d - c.m(g) - c.m(j) - c.m(l) + c.m(g | j) + c.m(j | l) + c.m(g | l);
  return c.m(b0) - c.m(b0 | g) - c.m(b0 | j) - c.m(b0 | l) + c.m(b0 | j | l) +
         c.m(b0 | g | j) + c.m(b0 | g | l);
}

FNefResult scan_fcurves(const KapranovClass& c, int max_witnesses, bool parallel) {
  validate(c);
  const auto partitions = all_four_partitions(c.n + 3);
  const DenseClass dense(c);
  const std::uint32_t last_bit = 1u << (c.n + 2);
  std::vector<size_t> bad;
  if (parallel) {
#pragma omp parallel
    {
      std::vector<size_t> local;
#pragma omp for schedule(static)
      for (size_t i = 0; i < partitions.size(); ++i)
        if (dense_pairing(dense, partitions[i], last_bit) < 0) local.push_back(i);
#pragma omp critical
      bad.insert(bad.end(), local.begin(), local.end());
    }
    std::sort(bad.begin(), bad.end());
  } else {
    for (size_t i = 0; i < partitions.size(); ++i)
      if (f_pairing(c, partitions[i]) < 0) bad.push_back(i);
  }
  FNefResult out;
  if (bad.empty()) {
    out.verdict = Verdict::holds();
    return out;
  }
  for (size_t idx : bad) {
    if (static_cast<int>(out.witnesses.size()) >= max_witnesses) break;
    out.witnesses.push_back(partitions[idx]);
  }
  const FCurve& first = partitions[bad.front()];
  out.verdict = Verdict::fails("F-curve " + fcurve_str(first) + " pairs to " +
                               num(parallel ? dense_pairing(dense, first, last_bit)
                                            : f_pairing(c, first)));
  return out;
}

}  // namespace

i64 KapranovClass::coeff(const IndexSet& I) const {
  if (I.size() < 1 || I.size() > n - 1) return 0;
  auto it = m.find(I);
  return it == m.end() ? 0 : it->second;
}

void validate(const KapranovClass& c) {
  if (c.n < 1) throw std::invalid_argument("KapranovClass: n must be >= 1");
  if (c.n + 3 > 12)
    throw std::invalid_argument("KapranovClass: more than 12 marks unsupported");
  for (const auto& [I, v] : c.m) {
    (void)v;
    if (I.size() < 1 || I.size() > c.n - 1)
      throw std::invalid_argument("KapranovClass: key " + I.str() +
                                  " needs 1 <= |I| <= n-1");
    if (I.max_element() > c.n + 2)
      throw std::invalid_argument("KapranovClass: key " + I.str() +
                                  " exceeds the n+2 blown-up points");
  }
}

BoundaryDivisor BoundaryDivisor::of(int n, IndexSet raw) {
  if (n < 1) throw std::invalid_argument("BoundaryDivisor: n must be >= 1");
  if (raw.max_element() > n + 3)
    throw std::invalid_argument("BoundaryDivisor: mark exceeds n+3");
  if (raw.size() < 2 || raw.size() > n + 1)
    throw std::invalid_argument("BoundaryDivisor: need 2 <= |split side| <= n+1");
  return BoundaryDivisor{n, std::move(raw)};
}

IndexSet BoundaryDivisor::normalized() const {
  const int mm = n + 3;
  if (raw.contains(mm)) return raw.set_difference(IndexSet::of({mm}));
  return full_index_set(mm).set_difference(raw).set_difference(IndexSet::of({mm}));
}

KapranovClass boundary_to_class(const BoundaryDivisor& b) {
  const IndexSet J = b.normalized();
  KapranovClass c;
  c.n = b.n;
  if (J.size() <= b.n - 1) {
    c.d = 0;
    c.m[J] = -1;
    return c;
  }
  // |J| = n: the split-off hyperplane H_J.
  c.d = 1;
  for (int size = 1; size <= b.n - 1; ++size) {
    for_each_combination(J.size(), size, [&](const std::vector<int>& pos) {
      std::vector<int> sub;
      sub.reserve(pos.size());
      for (int p : pos) sub.push_back(J.elems()[static_cast<size_t>(p - 1)]);
      c.m[IndexSet::of(std::move(sub))] = 1;
      return true;
    });
  }
  return c;
}

KapranovClass psi_class(int n, int i) {
  if (n < 1) throw std::invalid_argument("psi_class: n must be >= 1");
  if (i < 1 || i > n + 3) throw std::invalid_argument("psi_class: mark out of range");
  KapranovClass c;
  c.n = n;
  if (i == n + 3) {
    c.d = 1;
    return c;
  }
  BlownUpClass h;
  h.cfg = PointConfig{n, n + 2};
  h.policy = SpacePolicy::linear(std::max(0, n - 2));
  h.d = 1;
  BlownUpClass img = cremona_image(h, full_index_set(n + 2).set_difference(IndexSet::of({i})));
  c.d = img.d;
  for (const auto& [label, v] : img.coeffs) c.m[label.I] = v;
  return c;
}

int a_coeff(int n, const IndexSet& I) { return I.size() <= n - 1 ? 1 : 0; }

int b_coeff(int n, const IndexSet& I, const IndexSet& J) {
  return I.size() + J.size() <= n - 1 ? 1 : 0;
}

i64 a_value(const KapranovClass& c, const IndexSet& G, const IndexSet& J,
            const IndexSet& L) {
  auto term = [&](const IndexSet& U) { return a_coeff(c.n, U) * c.coeff(U); };
  return c.d - term(G) - term(J) - term(L) + term(J.set_union(L)) +
         term(J.set_union(G)) + term(L.set_union(G));
}

i64 b_value(const KapranovClass& c, const IndexSet& I, const IndexSet& G,
            const IndexSet& J, const IndexSet& L) {
  auto pair_term = [&](const IndexSet& X, const IndexSet& Y) {
    return b_coeff(c.n, X, Y) * c.coeff(X.set_union(Y));
  };
  return c.coeff(I) - pair_term(I, G) - pair_term(I, J) - pair_term(I, L) +
         pair_term(I.set_union(J), L) + pair_term(I.set_union(G), J) +
         pair_term(I.set_union(G), L);
}

i64 f_pairing(const KapranovClass& c, const FCurve& f) {
  validate(c);
  const int mm = c.n + 3;
  std::array<IndexSet, 4> sets;
  int b0 = -1;
  for (int b = 0; b < 4; ++b) {
    sets[static_cast<size_t>(b)] =
        IndexSet::of(mask_to_set(f.blocks[static_cast<size_t>(b)]));
    if (sets[static_cast<size_t>(b)].contains(mm)) b0 = b;
  }
  if (b0 < 0) throw std::invalid_argument("f_pairing: no block contains the last mark");
  std::array<IndexSet, 3> rest;
  int nrest = 0;
  for (int b = 0; b < 4; ++b)
    if (b != b0) rest[static_cast<size_t>(nrest++)] = sets[static_cast<size_t>(b)];
  IndexSet I = sets[static_cast<size_t>(b0)].set_difference(IndexSet::of({mm}));
  if (I.empty()) return a_value(c, rest[0], rest[1], rest[2]);
  return b_value(c, I, rest[0], rest[1], rest[2]);
}

int boundary_f_pairing(const BoundaryDivisor& b, const FCurve& f) {
  const std::uint32_t raw = set_to_mask(b.raw.elems());
  const std::uint32_t full = (1u << (b.n + 3)) - 1;
  const std::uint32_t comp = full & ~raw;
  for (int i = 0; i < 4; ++i) {
    if (f.blocks[static_cast<size_t>(i)] == raw || f.blocks[static_cast<size_t>(i)] == comp)
      return -1;
    for (int j = i + 1; j < 4; ++j) {
      std::uint32_t u = f.blocks[static_cast<size_t>(i)] | f.blocks[static_cast<size_t>(j)];
      if (u == raw) return 1;
    }
  }
  return 0;
}

FNefResult is_f_nef(const KapranovClass& c, int max_witnesses) {
  return scan_fcurves(c, max_witnesses, true);
}

FNefResult is_f_nef_serial(const KapranovClass& c, int max_witnesses) {
  return scan_fcurves(c, max_witnesses, false);
}

KapranovClass kapranov_from_divisor(const DivisorClass& D) {
  validate(D);
  if (D.cfg.s != D.cfg.n + 2)
    throw std::invalid_argument("kapranov_from_divisor: requires s = n+2");
  const int n = D.cfg.n, s = D.cfg.s;
  KapranovClass c;
  c.n = n;
  c.d = D.d;
  std::map<IndexSet, i64> m;
  for (int i = 1; i <= s; ++i) m[IndexSet::of({i})] = D.mult(i);
  for (int size = 2; size <= n - 1; ++size) {
    for_each_combination(s, size, [&](const std::vector<int>& v) {
      IndexSet I = IndexSet::of(v);
      i64 k = linear_multiplicity(D, I);
      if (k > 0) m[I] = k;
      return true;
    });
  }
  // A hyperplane span with k_I > 0 is a divisorial fixed component, not a
  // blow-up center; the transform removes its k_I copies, and each copy
  // carries H minus every exceptional class nested in I.
  for_each_combination(s, n, [&](const std::vector<int>& v) {
    i64 k = linear_multiplicity(D, IndexSet::of(v));
    if (k <= 0) return true;
    c.d = ck_sub(c.d, k);
    for (int i : v) m[IndexSet::of({i})] -= k;
    for (int size = 2; size <= n - 1; ++size) {
      for_each_combination(n, size, [&](const std::vector<int>& pos) {
        std::vector<int> sub;
        sub.reserve(pos.size());
        for (int p : pos) sub.push_back(v[p - 1]);
        m[IndexSet::of(sub)] -= k;
        return true;
      });
    }
    return true;
  });
  for (const auto& [I, val] : m)
    if (val != 0) c.m[I] = val;
  return c;
}

Verdict strict_transform_fnef(const DivisorClass& D) {
  validate(D);
  if (D.cfg.s != D.cfg.n + 2)
    throw std::invalid_argument("strict_transform_fnef: requires s = n+2");
  for (int i = 1; i <= D.cfg.s; ++i)
    if (D.mult(i) < 0)
      return Verdict::unknown("m_" + num(i) + " = " + num(D.mult(i)) + " < 0");
  Verdict eff = is_effective(D);
  if (eff.is_fails()) return Verdict::unknown("not effective: " + eff.witness);
  return is_f_nef(kapranov_from_divisor(D)).verdict;
}

Verdict fnef_sanity(const KapranovClass& c) {
  validate(c);
  const std::uint32_t top = 1u << (c.n + 2);
  DenseClass dense(c);
  for (std::uint32_t u = 1; u < top; ++u) {
    if (std::popcount(u) > c.n - 1) continue;
    i64 v = dense.m(u);
    if (v < 0)
      return Verdict::fails("m_" + IndexSet::of(mask_to_set(u)).str() + " = " + num(v) +
                            " < 0");
    if (v > c.d)
      return Verdict::fails("m_" + IndexSet::of(mask_to_set(u)).str() + " = " + num(v) +
                            " > d = " + num(c.d));
    // Proper nonempty submasks must carry at least this coefficient.
    for (std::uint32_t sub = (u - 1) & u; sub; sub = (sub - 1) & u) {
      if (dense.m(sub) < v)
        return Verdict::fails("m_" + IndexSet::of(mask_to_set(sub)).str() + " = " +
                              num(dense.m(sub)) + " < m_" +
                              IndexSet::of(mask_to_set(u)).str() + " = " + num(v));
    }
  }
  if (c.d < 0) return Verdict::fails("d = " + num(c.d) + " < 0");
  return Verdict::holds();
}

}  // namespace bpos
