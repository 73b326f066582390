#include "bpos/sweep.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>

#include "bpos/cones.hpp"
#include "bpos/report.hpp"

namespace bpos {

namespace {

std::string class_key(const DivisorClass& D) {
  std::string k = std::to_string(D.cfg.n) + "|" + std::to_string(D.cfg.s) + "|" +
                  std::to_string(D.d) + "|";
  for (size_t i = 0; i < D.m.size(); ++i) {
    if (i) k += ",";
    k += std::to_string(D.m[i]);
  }
  return k;
}

u64 content_seed(u64 master, const DivisorClass& D) {
  u64 h = 1469598103934665603ull;  // FNV-1a over the class data
  auto eat = [&](u64 v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  eat(static_cast<u64>(D.cfg.n));
  eat(static_cast<u64>(D.cfg.s));
  eat(static_cast<u64>(D.d));
  for (i64 mi : D.m) eat(static_cast<u64>(mi));
  return mix_seed(master, h);
}

// Non-increasing multiplicity vectors, lexicographically descending first.
void enum_multisets(int s, i64 m_max, i64 cap, std::vector<i64>& cur,
                    const std::function<void(const std::vector<i64>&)>& f) {
  if (static_cast<int>(cur.size()) == s) {
    f(cur);
    return;
  }
  for (i64 v = std::min(m_max, cap); v >= 0; --v) {
    cur.push_back(v);
    enum_multisets(s, m_max, v, cur, f);
    cur.pop_back();
  }
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("run_sweep: n must be >= 1");
  if (opt.d_max < 0 || opt.m_max < 0)
    throw std::invalid_argument("run_sweep: bounds must be >= 0");
  validate(opt.field);
  const int s = opt.n + 3;

  std::set<std::string> done;
  if (opt.resume) {
    std::ifstream in(opt.out_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) continue;
      try {
        done.insert(class_key(divisor_from_json(j)));
      } catch (const std::exception&) {
        continue;  // foreign lines are ignored, not fatal
      }
    }
  }

  std::vector<DivisorClass> items;
  for (i64 d = 0; d <= opt.d_max; ++d) {
    std::vector<i64> cur;
    enum_multisets(s, opt.m_max, opt.m_max, cur, [&](const std::vector<i64>& m) {
      items.push_back(DivisorClass::of(opt.n, s, d, m));
    });
  }

  SweepSummary sum;
  sum.total = static_cast<i64>(items.size());

  std::ofstream out(opt.out_path, opt.resume ? std::ios::app : std::ios::trunc);
  if (!out) throw IoError("run_sweep: cannot open " + opt.out_path);

  std::vector<DivisorClass> todo;
  for (const DivisorClass& D : items) {
    if (opt.resume && done.count(class_key(D))) {
      ++sum.skipped;
      continue;
    }
    todo.push_back(D);
  }

  const int chunk = std::max(1, opt.chunk);
  std::vector<std::string> lines;
  for (size_t base = 0; base < todo.size(); base += static_cast<size_t>(chunk)) {
    const size_t end = std::min(todo.size(), base + static_cast<size_t>(chunk));
    lines.assign(end - base, std::string{});
#pragma omp parallel for schedule(dynamic)
    for (size_t i = base; i < end; ++i) {
      const DivisorClass& D = todo[i];
      const auto t0 = std::chrono::steady_clock::now();
      FieldSpec field = opt.field;
      field.seed = content_seed(opt.field.seed, D);
      OracleResult orc = h0_general(D.cfg.n, D.d, D.m, field, PointMode::OnRandomRnc);
      const i64 sl = sldim(D);
      const i64 expected = std::max<i64>(0, sl);
      const i64 gap = D.sum_m() - static_cast<i64>(D.cfg.n) * D.d;
      const bool regime = gap <= 0;
      const char* match = orc.h0 == expected ? "agree" : (regime ? "disagree" : "unknown");
      ojson j = to_json(D);
      j["h0"] = orc.h0;
      j["sldim"] = sl;
      j["expected"] = expected;
      j["regime"] = regime;
      j["match"] = match;
      j["effective"] = to_string(is_effective(D).status);
      j["movable"] = to_string(is_movable(D).status);
      j["seed"] = field.seed;
      if (opt.timing) {
        const auto t1 = std::chrono::steady_clock::now();
        j["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      }
      lines[i - base] = j.dump();
    }
    for (const std::string& line : lines) {
      out << line << "\n";
      if (!out) throw IoError("run_sweep: write failed on " + opt.out_path);
      auto j = nlohmann::json::parse(line);
      const std::string match = j.at("match").get<std::string>();
      if (match == "agree")
        ++sum.agree;
      else if (match == "disagree")
        ++sum.disagree;
      else
        ++sum.unknown;
    }
  }
  return sum;
}

}  // namespace bpos
