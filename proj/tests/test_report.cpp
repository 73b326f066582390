#include <doctest.h>

#include "bpos/blowup.hpp"
#include "bpos/cones.hpp"
#include "bpos/report.hpp"

using namespace bpos;

TEST_SUITE("report") {

TEST_CASE("verdict serialization") {
  auto h = to_json(Verdict::holds());
  CHECK(h["status"] == "Holds");
  CHECK(!h.contains("witness"));
  auto f = to_json(Verdict::fails("d = -1 < 0"));
  CHECK(f["status"] == "Fails");
  CHECK(f["witness"] == "d = -1 < 0");
  auto u = to_json(Verdict::unknown("out of range"));
  CHECK(u["status"] == "Unknown");
  CHECK(u["witness"] == "out of range");
}

TEST_CASE("label and class serialization") {
  auto jl = to_json(JoinLabel{IndexSet::of({1, 2}), 1});
  CHECK(jl["I"] == ojson::array({1, 2}));
  CHECK(jl["t"] == 1);

  auto D = DivisorClass::of(2, 5, 4, {2, 2, 2, 2, 2});
  auto jd = to_json(D);
  CHECK(jd["n"] == 2);
  CHECK(jd["s"] == 5);
  CHECK(jd["d"] == 4);
  CHECK(jd["m"] == ojson::array({2, 2, 2, 2, 2}));
}

TEST_CASE("divisor class json round trip") {
  auto D = DivisorClass::of(3, 6, 5, {3, 2, 2, 1, 1, 0});
  nlohmann::json parsed = nlohmann::json::parse(to_json(D).dump());
  CHECK(divisor_from_json(parsed) == D);

  nlohmann::json missing = {{"n", 2}, {"s", 5}, {"d", 4}};
  CHECK_THROWS_AS(divisor_from_json(missing), std::invalid_argument);
}

TEST_CASE("base locus cycle serialization") {
  auto D = DivisorClass::of(2, 5, 4, {2, 2, 2, 2, 2});
  auto cycles = base_locus_decomposition(D);
  REQUIRE(cycles.size() == 1);
  auto j = to_json(cycles[0]);
  CHECK(j["I"] == ojson::array());
  CHECK(j["t"] == 1);
  CHECK(j["dim"] == 1);
  CHECK(j["multiplicity"] == 2);
}

TEST_CASE("blown up class serialization") {
  auto D = DivisorClass::of(2, 5, 4, {2, 2, 2, 2, 2});

  auto lin = to_json(strict_transform_linear(D, 1));
  CHECK(lin["space"] == "linear");
  CHECK(lin["level"] == 1);
  CHECK(lin["d"] == 4);
  CHECK(lin["coeffs"].size() == 5);
  CHECK(lin["coeffs"][0]["I"] == ojson::array({1}));
  CHECK(lin["coeffs"][0]["k"] == 2);
  CHECK(lin["splits"].empty());

  auto sig = to_json(strict_transform_sigma(D));
  CHECK(sig["space"] == "sigma");
  CHECK(!sig.contains("level"));
  CHECK(sig["d"] == 0);
  CHECK(sig["coeffs"].empty());
  REQUIRE(sig["splits"].size() == 1);
  CHECK(sig["splits"][0]["multiplicity"] == 2);
  CHECK(sig["splits"][0]["label"]["t"] == 1);
  CHECK(sig["splits"][0]["class"]["d"] == 2);
}

TEST_CASE("kapranov class serialization") {
  auto c = kapranov_from_divisor(DivisorClass::of(3, 5, 3, {2, 2, 2, 1, 1}));
  auto j = to_json(c);
  CHECK(j["n"] == 3);
  CHECK(j["d"] == 3);
  CHECK(j["m"].size() == 8);
  bool saw_pair = false;
  for (const auto& e : j["m"])
    if (e["I"] == ojson::array({1, 2})) {
      saw_pair = true;
      CHECK(e["m"] == 1);
    }
  CHECK(saw_pair);
}

TEST_CASE("oracle and probe serialization") {
  OracleResult r;
  r.h0 = 2;
  r.cols = 10;
  r.trials = 3;
  r.agreeing = 3;
  r.per_trial = {2, 2, 2};
  auto j = to_json(r);
  CHECK(j["h0"] == 2);
  CHECK(j["cols"] == 10);
  CHECK(j["trials"] == 3);
  CHECK(j["agreeing"] == 3);
  CHECK(j["per_trial"] == ojson::array({2, 2, 2}));

  ProbeResult keep;
  keep.h0_base = 1;
  keep.h0_probe = 1;
  CHECK(to_json(keep)["outcome"] == "Unchanged");
  ProbeResult drop;
  drop.dropped = true;
  drop.drop = 1;
  drop.h0_base = 1;
  auto jd = to_json(drop);
  CHECK(jd["outcome"] == "Dropped");
  CHECK(jd["drop"] == 1);
}

TEST_CASE("analysis report for the quartic example") {
  auto D = DivisorClass::of(2, 5, 4, {2, 2, 2, 2, 2});
  auto j = analysis_json(D, 1);
  CHECK(j["class"]["d"] == 4);
  CHECK(j["chi"] == 0);
  CHECK(j["b"] == 1);
  CHECK(j["sldim"] == 1);
  CHECK(j["verdicts"]["effective"]["status"] == "Holds");
  CHECK(j["verdicts"]["movable"]["status"] == "Fails");
  CHECK(j["verdicts"]["big"]["status"] == "Fails");
  CHECK(j["verdicts"]["l_very_ample"]["status"] == "Unknown");
  CHECK(j["verdicts"]["has_vanishing_h1"]["status"] == "Unknown");
  REQUIRE(j["base_locus"].size() == 1);
  CHECK(j["base_locus"][0]["multiplicity"] == 2);

  auto no_l = analysis_json(D);
  CHECK(!no_l["verdicts"].contains("l_very_ample"));
}

TEST_CASE("analysis report outside the small range") {
  auto D = DivisorClass::of(2, 8, 3, {1, 1, 1, 1, 1, 1, 1, 1});
  auto j = analysis_json(D);
  CHECK(j["sldim"].is_null());
  CHECK(j["chi"] == 2);
  CHECK(j["verdicts"]["globally_generated"]["status"] == "Unknown");
}

TEST_CASE("reports are byte stable") {
  auto D = DivisorClass::of(3, 6, 4, {2, 2, 2, 1, 1, 1});
  CHECK(analysis_json(D, 2).dump(2) == analysis_json(D, 2).dump(2));
}

}  // TEST_SUITE
