#include "bpos/oracle.hpp"

#include <algorithm>

#include "bpos/cones.hpp"

namespace bpos {

namespace {

constexpr i64 MAX_COLUMNS = 20000;

void check_prime_vs_degree(u64 p, i64 d) {
  if (static_cast<i64>(p) <= d)
    throw std::domain_error("oracle: field of size " + std::to_string(p) +
                            " too small for degree " + std::to_string(d));
}

// All exponent vectors of total degree deg in nvars variables, lex order.
void enum_exponents(int nvars, i64 deg, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(nvars), 0);
  // Recursive lambda over positions.
  auto rec = [&](auto&& self, int pos, i64 left) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<size_t>(pos)] = static_cast<int>(left);
      out.push_back(cur);
      return;
    }
    for (i64 e = left; e >= 0; --e) {
      cur[static_cast<size_t>(pos)] = static_cast<int>(e);
      self(self, pos + 1, left - e);
    }
  };
  if (deg >= 0 && nvars >= 1) rec(rec, 0, deg);
}

// Pascal triangle mod p up to row `top` (valid exactly because top < p).
std::vector<std::vector<u64>> binom_table(u64 p, int top) {
  std::vector<std::vector<u64>> t(static_cast<size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    t[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          fp_add(p, t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                 t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
  }
  return t;
}

std::vector<u64> moment_vector(int n, u64 p, u64 tau) {
  std::vector<u64> v(static_cast<size_t>(n) + 1);
  v[0] = 1 % p;
  for (int j = 1; j <= n; ++j) v[static_cast<size_t>(j)] = fp_mul(p, v[static_cast<size_t>(j - 1)], tau % p);
  return v;
}

std::vector<u64> mat_apply(const std::vector<std::vector<u64>>& mat, u64 p,
                           const std::vector<u64>& v) {
  std::vector<u64> out(mat.size(), 0);
  for (size_t r = 0; r < mat.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      out[r] = fp_add(p, out[r], fp_mul(p, mat[r][c], v[c]));
  return out;
}

bool is_zero_vec(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

}  // namespace

void validate(const FieldSpec& spec) {
  if (spec.primes.size() < 2)
    throw std::invalid_argument("FieldSpec: at least two primes required");
  for (u64 p : spec.primes)
    if (p < 2 || p >= (1ull << 31))
      throw std::invalid_argument("FieldSpec: primes must satisfy 2 <= p < 2^31");
  if (spec.min_trials < 3)
    throw std::invalid_argument("FieldSpec: at least three trials required");
  if (spec.max_trials < spec.min_trials)
    throw std::invalid_argument("FieldSpec: max_trials < min_trials");
}

std::vector<std::vector<u64>> random_points(int n, int s, u64 p, Rng& rng) {
  std::vector<std::vector<u64>> pts;
  pts.reserve(static_cast<size_t>(s));
  while (static_cast<int>(pts.size()) < s) {
    std::vector<u64> q(static_cast<size_t>(n) + 1);
    q[0] = 1;  // affine chart; keeps homogeneous coordinates comparable
    for (int j = 1; j <= n; ++j) q[static_cast<size_t>(j)] = rng.below(p);
    if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(std::move(q));
  }
  return pts;
}

RncData make_rnc(int n, int s, u64 p, Rng& rng) {
  RncData rnc;
  rnc.n = n;
  rnc.p = p;
  const int dim = n + 1;
  for (int tries = 0;; ++tries) {
    if (tries > 100) throw std::logic_error("make_rnc: no invertible matrix found");
    rnc.mat.assign(static_cast<size_t>(dim), std::vector<u64>(static_cast<size_t>(dim)));
    FpMatrix m(dim, dim, p);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        u64 v = rng.below(p);
        rnc.mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        m.at(r, c) = v;
      }
    if (rank_serial(m) == dim) break;
  }
  while (static_cast<int>(rnc.params.size()) < s) {
    u64 tau = rng.below(p);
    if (std::find(rnc.params.begin(), rnc.params.end(), tau) == rnc.params.end())
      rnc.params.push_back(tau);
  }
  for (u64 tau : rnc.params)
    rnc.points.push_back(mat_apply(rnc.mat, p, moment_vector(n, p, tau)));
  return rnc;
}

i64 h0_at_points(int n, i64 d, u64 p, const std::vector<FatPoint>& pts) {
  if (n < 1) throw std::invalid_argument("h0_at_points: n must be >= 1");
  check_prime_vs_degree(p, d);
  if (d < 0) return 0;
  const i64 cols64 = binomial(n + d, n);
  if (cols64 > MAX_COLUMNS)
    throw std::domain_error("h0_at_points: linear system too large");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (static_cast<int>(pts[i].coords.size()) != n + 1)
      throw std::invalid_argument("h0_at_points: point needs n+1 coordinates");
    if (is_zero_vec(pts[i].coords))
      throw std::invalid_argument("h0_at_points: zero vector is not a point");
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].coords == pts[j].coords)
        throw std::invalid_argument("h0_at_points: duplicate point");
  }

  std::vector<std::vector<int>> monos;
  enum_exponents(n + 1, d, monos);
  const int cols = static_cast<int>(monos.size());

  // Order mu vanishing is cut out by the divided-power derivatives of order
  // mu-1 alone (lower orders follow by the Euler relations when p > d); an
  // order above d+1 imposes nothing beyond d+1, which already forces zero.
  i64 rows64 = 0;
  std::vector<i64> mu_eff(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    mu_eff[i] = std::min<i64>(pts[i].mult, d + 1);
    if (mu_eff[i] >= 1) rows64 += binomial(n + mu_eff[i] - 1, n);
  }
  if (rows64 > 4 * MAX_COLUMNS)
    throw std::domain_error("h0_at_points: linear system too large");

  auto bt = binom_table(p, static_cast<int>(d));
  FpMatrix m(static_cast<int>(rows64), cols, p);
  int row = 0;
  std::vector<std::vector<int>> betas;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (mu_eff[i] < 1) continue;
    // Powers of each coordinate up to d.
    std::vector<std::vector<u64>> pw(static_cast<size_t>(n) + 1,
                                     std::vector<u64>(static_cast<size_t>(d) + 1, 1));
    for (int j = 0; j <= n; ++j) {
      u64 cj = pts[i].coords[static_cast<size_t>(j)] % p;
      for (i64 e = 1; e <= d; ++e)
        pw[static_cast<size_t>(j)][static_cast<size_t>(e)] =
            fp_mul(p, pw[static_cast<size_t>(j)][static_cast<size_t>(e - 1)], cj);
    }
    betas.clear();
    enum_exponents(n + 1, mu_eff[i] - 1, betas);
    for (const auto& beta : betas) {
      for (int c = 0; c < cols; ++c) {
        const auto& alpha = monos[static_cast<size_t>(c)];
        u64 entry = 1;
        bool ok = true;
        for (int j = 0; j <= n && ok; ++j) {
          int aj = alpha[static_cast<size_t>(j)], bj = beta[static_cast<size_t>(j)];
          if (aj < bj) {
            ok = false;
            break;
          }
          entry = fp_mul(p, entry, bt[static_cast<size_t>(aj)][static_cast<size_t>(bj)]);
          entry = fp_mul(p, entry, pw[static_cast<size_t>(j)][static_cast<size_t>(aj - bj)]);
        }
        m.at(row, c) = ok ? entry : 0;
      }
      ++row;
    }
  }
  return cols64 - rank_parallel(std::move(m));
}

namespace {

std::vector<FatPoint> as_fat(const std::vector<std::vector<u64>>& pts,
                             const std::vector<i64>& mults) {
  std::vector<FatPoint> out;
  out.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) out.push_back({pts[i], mults[i]});
  return out;
}

}  // namespace

OracleResult h0_general(int n, i64 d, const std::vector<i64>& mults,
                        const FieldSpec& spec, PointMode mode) {
  validate(spec);
  const int s = static_cast<int>(mults.size());
  OracleResult out;
  out.cols = d >= 0 ? binomial(n + d, n) : 0;
  for (int k = 0; k < spec.max_trials; ++k) {
    const u64 p = spec.primes[static_cast<size_t>(k) % spec.primes.size()];
    check_prime_vs_degree(p, d);
    Rng rng(mix_seed(spec.seed, static_cast<u64>(k)));
    std::vector<std::vector<u64>> pts =
        mode == PointMode::FullyRandom ? random_points(n, s, p, rng)
                                       : make_rnc(n, s, p, rng).points;
    out.per_trial.push_back(h0_at_points(n, d, p, as_fat(pts, mults)));
    out.trials = static_cast<int>(out.per_trial.size());
    if (out.trials >= spec.min_trials) {
      i64 mn = *std::min_element(out.per_trial.begin(), out.per_trial.end());
      int agree = static_cast<int>(std::count(out.per_trial.begin(), out.per_trial.end(), mn));
      if (agree >= 2) {
        out.h0 = mn;
        out.agreeing = agree;
        return out;
      }
    }
  }
  out.h0 = *std::min_element(out.per_trial.begin(), out.per_trial.end());
  out.agreeing =
      static_cast<int>(std::count(out.per_trial.begin(), out.per_trial.end(), out.h0));
  return out;
}

std::vector<u64> sample_join_point(const RncData& rnc, const JoinLabel& label, Rng& rng) {
  const u64 p = rnc.p;
  const int n = rnc.n;
  if (label.t < 0) throw std::invalid_argument("sample_join_point: t must be >= 0");
  if (label.I.empty() && label.t == 0)
    throw std::invalid_argument("sample_join_point: empty join has no points");
  if (label.I.max_element() > static_cast<int>(rnc.points.size()))
    throw std::invalid_argument("sample_join_point: point index out of range");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<u64> q(static_cast<size_t>(n) + 1, 0);
    for (int i : label.I.elems()) {
      u64 c = rng.nonzero_below(p);
      const auto& pt = rnc.points[static_cast<size_t>(i - 1)];
      for (int j = 0; j <= n; ++j)
        q[static_cast<size_t>(j)] = fp_add(p, q[static_cast<size_t>(j)],
                                           fp_mul(p, c, pt[static_cast<size_t>(j)]));
    }
    std::vector<u64> fresh;
    for (i64 j = 0; j < label.t; ++j) {
      u64 tau;
      do {
        tau = rng.below(p);
      } while (std::find(rnc.params.begin(), rnc.params.end(), tau) != rnc.params.end() ||
               std::find(fresh.begin(), fresh.end(), tau) != fresh.end());
      fresh.push_back(tau);
      u64 u = rng.nonzero_below(p);
      std::vector<u64> cp = mat_apply(rnc.mat, p, moment_vector(n, p, tau));
      for (int jj = 0; jj <= n; ++jj)
        q[static_cast<size_t>(jj)] = fp_add(p, q[static_cast<size_t>(jj)],
                                            fp_mul(p, u, cp[static_cast<size_t>(jj)]));
    }
    if (!is_zero_vec(q)) return q;
  }
  throw std::logic_error("sample_join_point: sampling kept collapsing to zero");
}

bool join_membership(const RncData& rnc, const std::vector<u64>& q,
                     const JoinLabel& label) {
  const u64 p = rnc.p;
  const int n = rnc.n;
  if (static_cast<int>(q.size()) != n + 1)
    throw std::invalid_argument("join_membership: point needs n+1 coordinates");
  if (is_zero_vec(q)) throw std::invalid_argument("join_membership: zero vector");
  if (label.t < 0) throw std::invalid_argument("join_membership: t must be >= 0");
  if (label.I.max_element() > static_cast<int>(rnc.points.size()))
    throw std::invalid_argument("join_membership: point index out of range");
  const i64 k = label.I.size() + label.t;
  if (n - k + 1 <= 0) return true;  // the join fills projective space

  // Coordinates of q in the curve frame: binary-form coefficients a_0..a_n.
  FpMatrix m(n + 1, n + 1, p);
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c)
      m.at(r, c) = rnc.mat[static_cast<size_t>(r)][static_cast<size_t>(c)];
  std::vector<u64> a = fp_solve(std::move(m), q);
  if (a.empty()) throw std::logic_error("join_membership: frame matrix singular");

  // Coefficients of prod_{i in I} (X - tau_i), ascending.
  std::vector<u64> base{1 % p};
  for (int i : label.I.elems()) {
    u64 tau = rnc.params[static_cast<size_t>(i - 1)] % p;
    std::vector<u64> next(base.size() + 1, 0);
    for (size_t j = 0; j < base.size(); ++j) {
      next[j + 1] = fp_add(p, next[j + 1], base[j]);
      next[j] = fp_sub(p, next[j], fp_mul(p, tau, base[j]));
    }
    base = std::move(next);
  }

  // T[r][c] = sum_j base[j] * a[r + c + j]; membership = rank deficiency.
  const int rows = static_cast<int>(n - k + 1);
  const int tcols = static_cast<int>(label.t + 1);
  FpMatrix T(rows, tcols, p);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < tcols; ++c) {
      u64 acc = 0;
      for (size_t j = 0; j < base.size(); ++j)
        acc = fp_add(p, acc, fp_mul(p, base[j], a[static_cast<size_t>(r + c) + j]));
      T.at(r, c) = acc;
    }
  return rank_serial(std::move(T)) < tcols;
}

ProbeResult base_point_probe(const DivisorClass& D, const JoinLabel& label, i64 mu,
                             const FieldSpec& spec) {
  validate(D);
  validate(D.cfg, label);
  validate(spec);
  if (mu < 1) throw std::invalid_argument("base_point_probe: mu must be >= 1");
  if (label.I.empty() && label.t == 0)
    throw std::invalid_argument("base_point_probe: empty join has no points");
  if (label.t >= 1 && D.cfg.s != D.cfg.n + 3)
    throw std::domain_error("base_point_probe: secant labels require s = n+3");
  const int n = D.cfg.n, s = D.cfg.s;
  const bool on_curve = (s == n + 3);
  std::vector<i64> base_trials, probe_trials;
  for (int k = 0; k < spec.min_trials; ++k) {
    const u64 p = spec.primes[static_cast<size_t>(k) % spec.primes.size()];
    check_prime_vs_degree(p, D.d);
    Rng rng(mix_seed(spec.seed, static_cast<u64>(k)));
    RncData data;
    if (on_curve) {
      data = make_rnc(n, s, p, rng);
    } else {
      data.n = n;
      data.p = p;
      data.points = random_points(n, s, p, rng);  // span sampling only touches points
    }
    std::vector<u64> q = sample_join_point(data, label, rng);
    for (int guard = 0; std::find(data.points.begin(), data.points.end(), q) !=
                        data.points.end();
         ++guard) {
      if (guard > 100) throw std::logic_error("base_point_probe: cannot avoid the points");
      q = sample_join_point(data, label, rng);
    }
    const auto& pts = data.points;
    std::vector<FatPoint> fat = as_fat(pts, D.m);
    base_trials.push_back(h0_at_points(n, D.d, p, fat));
    fat.push_back({q, mu});
    probe_trials.push_back(h0_at_points(n, D.d, p, fat));
  }
  ProbeResult out;
  out.h0_base = *std::min_element(base_trials.begin(), base_trials.end());
  out.h0_probe = *std::min_element(probe_trials.begin(), probe_trials.end());
  out.drop = out.h0_base - out.h0_probe;
  out.dropped = out.drop > 0;
  return out;
}

Verdict jet_spannedness_probe(const DivisorClass& D, i64 l, const FieldSpec& spec) {
  validate(D);
  validate(spec);
  if (l < 0) throw std::invalid_argument("jet_spannedness_probe: l must be >= 0");
  Verdict gate = is_l_very_ample(D, l);
  if (!gate.is_holds())
    return Verdict::unknown(gate.is_fails() ? "not l-very ample: " + gate.witness
                                            : gate.witness);
  const int n = D.cfg.n, s = D.cfg.s;
  const i64 expected = binomial(n + l, n);
  std::vector<i64> base_t, gen_t, span_t;
  const bool do_span = s >= 2;
  for (int k = 0; k < spec.min_trials; ++k) {
    const u64 p = spec.primes[static_cast<size_t>(k) % spec.primes.size()];
    check_prime_vs_degree(p, D.d);
    Rng rng(mix_seed(spec.seed, static_cast<u64>(k)));
    auto pts = random_points(n, s, p, rng);
    auto is_existing = [&](const std::vector<u64>& q) {
      return std::find(pts.begin(), pts.end(), q) != pts.end();
    };
    std::vector<u64> qgen;
    do {
      qgen = random_points(n, 1, p, rng).front();
    } while (is_existing(qgen));
    std::vector<FatPoint> fat = as_fat(pts, D.m);
    base_t.push_back(h0_at_points(n, D.d, p, fat));
    {
      auto probe = fat;
      probe.push_back({qgen, l + 1});
      gen_t.push_back(h0_at_points(n, D.d, p, probe));
    }
    if (do_span) {
      RncData fake;
      fake.n = n;
      fake.p = p;
      fake.points = pts;
      std::vector<u64> qspan;
      do {
        qspan = sample_join_point(fake, JoinLabel{IndexSet::of({1, 2}), 0}, rng);
      } while (is_existing(qspan));
      auto probe = fat;
      probe.push_back({qspan, l + 1});
      span_t.push_back(h0_at_points(n, D.d, p, probe));
    }
  }
  const i64 base = *std::min_element(base_t.begin(), base_t.end());
  const i64 gen = *std::min_element(gen_t.begin(), gen_t.end());
  const i64 drop_gen = base - gen;
  if (drop_gen != expected)
    return Verdict::fails("generic jet imposed " + std::to_string(drop_gen) +
                          " conditions, expected " + std::to_string(expected));
  if (do_span) {
    const i64 sp = *std::min_element(span_t.begin(), span_t.end());
    const i64 drop_span = base - sp;
    if (drop_span != expected)
      return Verdict::fails("jet on a span imposed " + std::to_string(drop_span) +
                            " conditions, expected " + std::to_string(expected));
  }
  return Verdict::holds();
}

}  // namespace bpos
