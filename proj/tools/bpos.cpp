#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpos/blowup.hpp"
#include "bpos/cones.hpp"
#include "bpos/mmp.hpp"
#include "bpos/moduli.hpp"
#include "bpos/report.hpp"
#include "bpos/sweep.hpp"

namespace {

using namespace bpos;

// A verdict the command asserted (--expect-holds, --boundary-table) came out
// different; mapped to exit code 1 as opposed to usage errors (2) and I/O (3).
struct CheckFailed : std::runtime_error {
  explicit CheckFailed(const std::string& what) : std::runtime_error(what) {}
};

i64 parse_int(const std::string& text) {
  size_t idx = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &idx);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (idx != text.size() || text.empty())
    throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

// Comma list with k^j repetition shorthand: "2,2,1" or "2^5" or "3,1^4".
std::vector<i64> parse_mults(const std::string& text) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const size_t caret = tok.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_int(tok));
      continue;
    }
    const i64 v = parse_int(tok.substr(0, caret));
    const i64 reps = parse_int(tok.substr(caret + 1));
    if (reps < 1) throw std::invalid_argument("repetition count must be >= 1");
    for (i64 r = 0; r < reps; ++r) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty multiplicity list");
  return out;
}

Rational parse_rational(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// Class spec grammar for fnef: "d=0,m_{1,2}=-1" (commas inside braces bind).
KapranovClass parse_kapranov(int n, const std::string& text) {
  KapranovClass c;
  c.n = n;
  std::vector<std::string> toks;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  toks.push_back(cur);
  for (const std::string& t : toks) {
    const size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("class spec entry without '=': '" + t + "'");
    const std::string key = t.substr(0, eq);
    const i64 val = parse_int(t.substr(eq + 1));
    if (key == "d") {
      c.d = val;
    } else if (key.rfind("m_{", 0) == 0 && key.back() == '}') {
      std::vector<int> elems;
      std::stringstream es(key.substr(3, key.size() - 4));
      std::string e;
      while (std::getline(es, e, ',')) elems.push_back(static_cast<int>(parse_int(e)));
      c.m[IndexSet::of(elems)] = val;
    } else {
      throw std::invalid_argument("unknown class spec key: '" + key + "'");
    }
  }
  validate(c);
  return c;
}

std::string fmt_curve(const FCurve& f) {
  std::string out = "(";
  for (size_t b = 0; b < f.blocks.size(); ++b) {
    if (b) out += " | ";
    const auto elems = mask_to_set(f.blocks[b]);
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems[i]);
    }
  }
  return out + ")";
}

// Shared class arguments; -s defaults to the length of the -m list.
struct ClassArgs {
  int n = 1;
  int s = -1;
  i64 d = 0;
  std::string m_text;

  DivisorClass build() const {
    auto m = parse_mults(m_text);
    const int ss = s >= 0 ? s : static_cast<int>(m.size());
    auto D = DivisorClass::of(n, ss, d, std::move(m));
    validate(D);
    return D;
  }
};

void add_class_options(CLI::App* cmd, ClassArgs& a) {
  cmd->add_option("-n", a.n, "ambient projective dimension")->required();
  cmd->add_option("-s", a.s, "number of blown-up points (default: length of -m)");
  cmd->add_option("-d", a.d, "degree")->required();
  cmd->add_option("-m", a.m_text, "multiplicities, comma list with k^j shorthand")
      ->required();
}

// Global knobs shared by the random-trial commands; filled from flags, the
// config file, or BPOS_SEED.
struct Globals {
  std::string primes;
  int min_trials = 3;
  int max_trials = 8;
  int workers = 64;
  u64 seed = 0;

  FieldSpec field() const {
    FieldSpec f;
    if (!primes.empty()) {
      f.primes.clear();
      std::stringstream ss(primes);
      std::string tok;
      while (std::getline(ss, tok, ',')) f.primes.push_back(static_cast<u64>(parse_int(tok)));
    }
    f.min_trials = min_trials;
    f.max_trials = max_trials;
    f.seed = seed;
    validate(f);
    return f;
  }
};

void print_verdict_line(const std::string& name, const Verdict& v) {
  std::cout << "  " << name << ": " << to_string(v.status);
  if (!v.witness.empty()) std::cout << "  (" << v.witness << ")";
  std::cout << "\n";
}

void emit(const ojson& j, bool json) {
  if (json) std::cout << j.dump(2) << "\n";
}

void cmd_analyze(const ClassArgs& args, i64 l, bool json, const std::string& expect) {
  const DivisorClass D = args.build();
  const ojson j = analysis_json(D, l);
  if (json) {
    emit(j, true);
  } else {
    std::cout << "class: " << D.str() << "  (n=" << D.cfg.n << ", s=" << D.cfg.s << ")\n";
    std::cout << "chi = " << j["chi"] << "   b = " << j["b"] << "   sldim = ";
    if (j["sldim"].is_null())
      std::cout << "n/a (s > n+3)\n";
    else
      std::cout << j["sldim"] << "\n";
    std::cout << "verdicts:\n";
    for (const auto& [name, v] : j["verdicts"].items()) {
      std::cout << "  " << name << ": " << v["status"].get<std::string>();
      if (v.contains("witness")) std::cout << "  (" << v["witness"].get<std::string>() << ")";
      std::cout << "\n";
    }
    std::cout << "base locus:\n";
    if (j["base_locus"].empty()) std::cout << "  (empty)\n";
    for (const auto& c : j["base_locus"]) {
      std::string iset = "{";
      for (const auto& e : c["I"]) {
        if (iset.size() > 1) iset += ",";
        iset += std::to_string(e.get<int>());
      }
      std::cout << "  (" << iset << "}, " << c["t"] << ")  dim " << c["dim"]
                << "  multiplicity " << c["multiplicity"] << "\n";
    }
  }
  if (!expect.empty()) {
    if (!j["verdicts"].contains(expect))
      throw std::invalid_argument("--expect-holds: unknown classifier '" + expect + "'");
    const std::string status = j["verdicts"][expect]["status"].get<std::string>();
    if (status != "Holds")
      throw CheckFailed("expected " + expect + " to hold, got " + status);
  }
}

void cmd_transform(const ClassArgs& args, bool sigma, int level, bool json) {
  const DivisorClass D = args.build();
  const BlownUpClass c = sigma ? strict_transform_sigma(D) : strict_transform_linear(D, level);
  if (json) {
    emit(to_json(c), true);
    return;
  }
  std::cout << "input: " << D.str() << "\n";
  if (c.policy.kind == SpacePolicy::Kind::Linear)
    std::cout << "space: blow-up along spans of dimension <= " << c.policy.level << "\n";
  else
    std::cout << "space: blow-up along all joins of dimension <= " << (c.cfg.n - 2) << "\n";
  std::cout << "transform: " << c.d << "h";
  for (const auto& [label, k] : c.coeffs) std::cout << " - " << k << "e" << label.str();
  std::cout << "\n";
  if (!c.splits.empty()) {
    std::cout << "split off first:\n";
    for (const SplitOff& sp : c.splits)
      std::cout << "  " << sp.multiplicity << " x [" << sp.cls.str() << "] along "
                << sp.label.str() << "\n";
  }
}

void cmd_fnef_table(int n, bool json) {
  const auto curves = all_four_partitions(n + 3);
  i64 boundaries = 0, mismatches = 0;
  std::string first_bad;
  for (int k = 1; k <= n; ++k) {
    for_each_combination(n + 2, k, [&](const std::vector<int>& J) {
      auto raw = IndexSet::of(J).set_union(IndexSet::of({n + 3}));
      const auto b = BoundaryDivisor::of(n, raw);
      const auto cls = boundary_to_class(b);
      ++boundaries;
      for (const FCurve& f : curves) {
        if (f_pairing(cls, f) != boundary_f_pairing(b, f)) {
          ++mismatches;
          if (first_bad.empty())
            first_bad = "boundary " + b.normalized().str() + " vs " + fmt_curve(f);
        }
      }
      return true;
    });
  }
  if (json) {
    ojson j;
    j["n"] = n;
    j["boundaries"] = boundaries;
    j["f_curves"] = static_cast<i64>(curves.size());
    j["mismatches"] = mismatches;
    emit(j, true);
  } else if (mismatches == 0) {
    std::cout << "all " << boundaries << " x " << curves.size() << " pairings match\n";
  }
  if (mismatches > 0)
    throw CheckFailed("boundary table: " + std::to_string(mismatches) +
                      " mismatches, first at " + first_bad);
}

void report_fnef(const FNefResult& res, int max_witnesses, bool json, bool expect_holds) {
  if (json) {
    ojson j = to_json(res.verdict);
    ojson w = ojson::array();
    for (const FCurve& f : res.witnesses) w.push_back(fmt_curve(f));
    j["witnesses"] = std::move(w);
    emit(j, true);
  } else {
    std::cout << "f-nef: " << to_string(res.verdict.status);
    if (!res.verdict.witness.empty()) std::cout << "  (" << res.verdict.witness << ")";
    std::cout << "\n";
    if (!res.witnesses.empty()) {
      std::cout << "violating F-curves (cap " << max_witnesses << "):\n";
      for (const FCurve& f : res.witnesses) std::cout << "  " << fmt_curve(f) << "\n";
    }
  }
  if (expect_holds && !res.verdict.is_holds())
    throw CheckFailed("expected f-nef to hold, got " +
                      std::string(to_string(res.verdict.status)));
}

void cmd_fnef_divisor(int n, const std::string& coeff_text, int max_witnesses, bool json,
                      bool expect_holds) {
  const auto coeffs = parse_mults(coeff_text);
  if (coeffs.size() < 2)
    throw std::invalid_argument("--from-divisor needs d followed by the E-coefficients");
  std::vector<i64> m(coeffs.begin() + 1, coeffs.end());
  for (i64& mi : m) mi = -mi;  // the list carries signed coefficients d, e_1, ...
  const int s = static_cast<int>(m.size());
  const auto D = DivisorClass::of(n, s, coeffs[0], std::move(m));
  const Verdict v = strict_transform_fnef(D);
  FNefResult res;
  res.verdict = v;
  if (v.is_fails()) res = is_f_nef(kapranov_from_divisor(D), max_witnesses);
  report_fnef(res, max_witnesses, json, expect_holds);
}

void cmd_oracle(int n, i64 d, const std::string& m_text, const std::string& mode,
                const Globals& g, bool json) {
  const auto m = parse_mults(m_text);
  if (d >= 0 && binomial(n + d, n) > 10000)
    throw std::domain_error("oracle: linear system exceeds 10000 columns");
  const FieldSpec field = g.field();
  const PointMode pm = mode == "rnc" ? PointMode::OnRandomRnc : PointMode::FullyRandom;
  const OracleResult r = h0_general(n, d, m, field, pm);
  if (json) {
    ojson j;
    j["n"] = n;
    j["d"] = d;
    j["m"] = m;
    j["mode"] = mode;
    j["h0"] = r.h0;
    j["cols"] = r.cols;
    j["trials"] = r.trials;
    j["agreeing"] = r.agreeing;
    j["per_trial"] = r.per_trial;
    j["seed"] = field.seed;
    j["primes"] = field.primes;
    emit(j, true);
  } else {
    std::cout << "h0 = " << r.h0 << "  (cols " << r.cols << ", trials " << r.trials
              << ", agreeing " << r.agreeing << ", seed " << field.seed << ")\n";
  }
}

void cmd_sweep(SweepOptions opt, const Globals& g, bool json) {
  opt.field = g.field();
  opt.chunk = g.workers;
  const SweepSummary sum = run_sweep(opt);
  if (json) {
    ojson j;
    j["total"] = sum.total;
    j["skipped"] = sum.skipped;
    j["agree"] = sum.agree;
    j["disagree"] = sum.disagree;
    j["unknown"] = sum.unknown;
    j["seed"] = opt.field.seed;
    j["out"] = opt.out_path;
    emit(j, true);
  } else {
    std::cout << "total=" << sum.total << " skipped=" << sum.skipped << " agree=" << sum.agree
              << " disagree=" << sum.disagree << " unknown=" << sum.unknown
              << " seed=" << opt.field.seed << "\n";
  }
  if (sum.disagree > 0)
    throw CheckFailed("sweep: " + std::to_string(sum.disagree) +
                      " disagreements inside the exactness regime");
}

void cmd_lc(const ClassArgs& args, const std::string& eps_text, bool interval, bool json) {
  const DivisorClass D = args.build();
  if (interval) {
    const EpsilonInterval iv = abundance_interval(D);
    if (json) {
      ojson j;
      j["class"] = to_json(D);
      j["empty"] = iv.empty;
      if (!iv.empty) {
        j["lower"] = iv.lower.str();
        j["upper"] = iv.upper.str();
      }
      emit(j, true);
    } else if (iv.empty) {
      std::cout << "interval: empty\n";
    } else {
      std::cout << "interval: [" << iv.lower.str() << ", " << iv.upper.str() << "]\n";
    }
    return;
  }
  const Rational eps = parse_rational(eps_text);
  const DiscrepancyResult r = discrepancy(D, eps);
  if (json) {
    ojson j;
    j["class"] = to_json(D);
    j["epsilon"] = eps.str();
    j["discrepancy"] = r.value.str();
    j["lc"] = to_json(r.lc);
    emit(j, true);
  } else {
    std::cout << "discrepancy = " << r.value.str() << "   lc: " << to_string(r.lc.status);
    if (!r.lc.witness.empty()) std::cout << "  (" << r.lc.witness << ")";
    std::cout << "\n";
  }
}

void cmd_fujita(const ClassArgs& args, bool json, bool expect_holds) {
  const DivisorClass D = args.build();
  const int n = D.cfg.n;
  const DivisorClass A1 = adjoint(D, n + 1), A2 = adjoint(D, n + 2);
  const Verdict overall = check_fujita(D);
  if (json) {
    ojson j;
    j["class"] = to_json(D);
    j["gg_adjoint"] = to_json(A1);
    j["gg"] = to_json(is_globally_generated(A1));
    j["va_adjoint"] = to_json(A2);
    j["va"] = to_json(is_very_ample(A2));
    j["fujita"] = to_json(overall);
    emit(j, true);
  } else {
    std::cout << "adjoint " << (n + 1) << "D + K = " << A1.str() << "\n";
    print_verdict_line("globally generated", is_globally_generated(A1));
    std::cout << "adjoint " << (n + 2) << "D + K = " << A2.str() << "\n";
    print_verdict_line("very ample", is_very_ample(A2));
    std::cout << "fujita: " << to_string(overall.status);
    if (!overall.witness.empty()) std::cout << "  (" << overall.witness << ")";
    std::cout << "\n";
  }
  if (expect_holds && !overall.is_holds())
    throw CheckFailed("expected fujita to hold, got " +
                      std::string(to_string(overall.status)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positivity of divisor classes on blow-ups of projective space"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "config file of key=value lines");

  Globals g;
  app.add_option("--primes", g.primes, "comma list of field primes (each < 2^31)");
  app.add_option("--min-trials", g.min_trials, "minimum oracle trials")->capture_default_str();
  app.add_option("--max-trials", g.max_trials, "maximum oracle trials")->capture_default_str();
  app.add_option("--workers", g.workers, "sweep batch size")->capture_default_str();
  app.add_option("--seed", g.seed, "master seed")->envname("BPOS_SEED")->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full positivity report for one class");
  ClassArgs an_args;
  add_class_options(analyze, an_args);
  i64 an_l = -1;
  bool an_json = false;
  std::string an_expect;
  analyze->add_option("--l", an_l, "also decide l-very-ampleness for this l");
  analyze->add_flag("--json", an_json, "JSON output");
  analyze->add_option("--expect-holds", an_expect,
                      "exit 1 unless this classifier returns Holds");
  analyze->callback([&] { cmd_analyze(an_args, an_l, an_json, an_expect); });

  // transform
  auto* transform = app.add_subcommand("transform", "strict transform to an iterated blow-up");
  ClassArgs tr_args;
  add_class_options(transform, tr_args);
  int tr_level = 0;
  bool tr_sigma = false, tr_json = false;
  auto* tr_space = transform->add_option_group("space", "target space");
  tr_space->add_option("--level", tr_level, "blow up spans of dimension <= r");
  tr_space->add_flag("--sigma", tr_sigma, "blow up all joins of dimension <= n-2");
  tr_space->require_option(1);
  transform->add_flag("--json", tr_json, "JSON output");
  transform->callback([&] { cmd_transform(tr_args, tr_sigma, tr_level, tr_json); });

  // fnef
  auto* fnef = app.add_subcommand("fnef", "F-nefness on the moduli model");
  int fn_n = 1;
  fnef->add_option("-n", fn_n, "ambient projective dimension (n+3 <= 12)")
      ->required()
      ->check(CLI::Range(1, 9));
  bool fn_table = false;
  std::string fn_divisor, fn_class;
  auto* fn_mode = fnef->add_option_group("mode", "what to check");
  fn_mode->add_flag("--boundary-table", fn_table,
                    "verify every boundary x F-curve pairing against the sign rule");
  fn_mode->add_option("--from-divisor", fn_divisor,
                      "signed coefficients d,e_1,...,e_{n+2} of a class to transform");
  fn_mode->add_option("--class", fn_class, "direct class spec, e.g. d=0,m_{1,2}=-1");
  fn_mode->require_option(1);
  int fn_witnesses = 16;
  bool fn_json = false, fn_expect = false;
  fnef->add_option("--witnesses", fn_witnesses, "cap on listed violating F-curves")
      ->capture_default_str();
  fnef->add_flag("--json", fn_json, "JSON output");
  fnef->add_flag("--expect-holds", fn_expect, "exit 1 unless the verdict is Holds");
  fnef->callback([&] {
    if (fn_table) {
      cmd_fnef_table(fn_n, fn_json);
    } else if (!fn_divisor.empty()) {
      cmd_fnef_divisor(fn_n, fn_divisor, fn_witnesses, fn_json, fn_expect);
    } else {
      const KapranovClass c = parse_kapranov(fn_n, fn_class);
      report_fnef(is_f_nef(c, fn_witnesses), fn_witnesses, fn_json, fn_expect);
    }
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "finite-field interpolation oracle for h0");
  int or_n = 1;
  i64 or_d = 0;
  std::string or_m, or_mode = "random";
  bool or_json = false;
  oracle->add_option("-n", or_n, "ambient projective dimension")->required();
  oracle->add_option("-d", or_d, "degree")->required();
  oracle->add_option("-m", or_m, "multiplicities, comma list with k^j shorthand")->required();
  oracle->add_option("--mode", or_mode, "point sampling: random | rnc")
      ->check(CLI::IsMember({"random", "rnc"}))
      ->capture_default_str();
  oracle->add_flag("--json", or_json, "JSON output");
  oracle->callback([&] { cmd_oracle(or_n, or_d, or_m, or_mode, g, or_json); });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "oracle vs dimension count over a class range");
  SweepOptions sw;
  bool sw_json = false;
  sweep->add_option("-n", sw.n, "ambient projective dimension (s = n+3)")->required();
  sweep->add_option("--d-max", sw.d_max, "maximum degree")->capture_default_str();
  sweep->add_option("--m-max", sw.m_max, "maximum multiplicity")->capture_default_str();
  sweep->add_option("-o,--out", sw.out_path, "JSONL output file")->required();
  sweep->add_flag("--resume", sw.resume, "skip classes already present in the output file");
  sweep->add_flag("--timing", sw.timing, "record per-item wall time (breaks byte-identity)");
  sweep->add_flag("--json", sw_json, "JSON summary");
  sweep->callback([&] { cmd_sweep(sw, g, sw_json); });

  // lc
  auto* lc = app.add_subcommand("lc", "log-canonical threshold data for eps * D");
  ClassArgs lc_args;
  add_class_options(lc, lc_args);
  std::string lc_eps;
  bool lc_interval = false, lc_json = false;
  auto* lc_mode = lc->add_option_group("mode", "what to compute");
  lc_mode->add_option("--epsilon", lc_eps, "rational scale, e.g. 1/2");
  lc_mode->add_flag("--interval", lc_interval, "feasible epsilon interval");
  lc_mode->require_option(1);
  lc->add_flag("--json", lc_json, "JSON output");
  lc->callback([&] { cmd_lc(lc_args, lc_eps, lc_interval, lc_json); });

  // fujita
  auto* fujita = app.add_subcommand("fujita", "adjoint positivity for a certified ample class");
  ClassArgs fu_args;
  add_class_options(fujita, fu_args);
  bool fu_json = false, fu_expect = false;
  fujita->add_flag("--json", fu_json, "JSON output");
  fujita->add_flag("--expect-holds", fu_expect, "exit 1 unless the verdict is Holds");
  fujita->callback([&] { cmd_fujita(fu_args, fu_json, fu_expect); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
