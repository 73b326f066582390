#include "bpos/report.hpp"

#include "bpos/cones.hpp"

namespace bpos {

ojson to_json(const Verdict& v) {
  ojson j;
  j["status"] = to_string(v.status);
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

ojson to_json(const JoinLabel& label) {
  ojson j;
  j["I"] = label.I.elems();
  j["t"] = label.t;
  return j;
}

ojson to_json(const DivisorClass& D) {
  ojson j;
  j["n"] = D.cfg.n;
  j["s"] = D.cfg.s;
  j["d"] = D.d;
  j["m"] = D.m;
  return j;
}

ojson to_json(const BaseLocusCycle& c) {
  ojson j = to_json(c.label);
  j["dim"] = join_dimension(c.label);
  j["multiplicity"] = c.multiplicity;
  return j;
}

ojson to_json(const BlownUpClass& c) {
  ojson j;
  j["n"] = c.cfg.n;
  j["s"] = c.cfg.s;
  if (c.policy.kind == SpacePolicy::Kind::Linear) {
    j["space"] = "linear";
    j["level"] = c.policy.level;
  } else {
    j["space"] = "sigma";
  }
  j["d"] = c.d;
  ojson coeffs = ojson::array();
  for (const auto& [label, k] : c.coeffs) {
    ojson e = to_json(label);
    e["k"] = k;
    coeffs.push_back(std::move(e));
  }
  j["coeffs"] = std::move(coeffs);
  ojson splits = ojson::array();
  for (const SplitOff& sp : c.splits) {
    ojson e;
    e["class"] = to_json(sp.cls);
    e["label"] = to_json(sp.label);
    e["multiplicity"] = sp.multiplicity;
    splits.push_back(std::move(e));
  }
  j["splits"] = std::move(splits);
  return j;
}

ojson to_json(const KapranovClass& c) {
  ojson j;
  j["n"] = c.n;
  j["d"] = c.d;
  ojson m = ojson::array();
  for (const auto& [I, v] : c.m) {
    ojson e;
    e["I"] = I.elems();
    e["m"] = v;
    m.push_back(std::move(e));
  }
  j["m"] = std::move(m);
  return j;
}

ojson to_json(const OracleResult& r) {
  ojson j;
  j["h0"] = r.h0;
  j["cols"] = r.cols;
  j["trials"] = r.trials;
  j["agreeing"] = r.agreeing;
  j["per_trial"] = r.per_trial;
  return j;
}

ojson to_json(const ProbeResult& r) {
  ojson j;
  j["outcome"] = r.dropped ? "Dropped" : "Unchanged";
  j["drop"] = r.drop;
  j["h0_base"] = r.h0_base;
  j["h0_probe"] = r.h0_probe;
  return j;
}

DivisorClass divisor_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("s") || !j.contains("d") || !j.contains("m"))
    throw std::invalid_argument("divisor_from_json: need keys n, s, d, m");
  return DivisorClass::of(j.at("n").get<int>(), j.at("s").get<int>(),
                          j.at("d").get<i64>(), j.at("m").get<std::vector<i64>>());
}

ojson analysis_json(const DivisorClass& D, i64 l) {
  ojson j;
  j["class"] = to_json(D);
  j["chi"] = chi(D);
  j["b"] = b_bound(D);
  if (D.cfg.s <= D.cfg.n + 3)
    j["sldim"] = sldim(D);
  else
    j["sldim"] = nullptr;
  ojson v;
  v["effective"] = to_json(is_effective(D));
  v["movable"] = to_json(is_movable(D));
  v["big"] = to_json(is_big(D));
  v["nef"] = to_json(is_nef(D));
  v["globally_generated"] = to_json(is_globally_generated(D));
  v["very_ample"] = to_json(is_very_ample(D));
  v["ample"] = to_json(is_ample(D));
  if (l >= 0) v["l_very_ample"] = to_json(is_l_very_ample(D, l));
  v["has_vanishing_h1"] = to_json(has_vanishing_h1(D));
  j["verdicts"] = std::move(v);
  ojson cycles = ojson::array();
  for (const BaseLocusCycle& c : base_locus_decomposition(D)) cycles.push_back(to_json(c));
  j["base_locus"] = std::move(cycles);
  return j;
}

}  // namespace bpos
