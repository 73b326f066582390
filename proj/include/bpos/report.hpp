#pragma once

#include <json.hpp>

#include "bpos/blowup.hpp"
#include "bpos/divisor.hpp"
#include "bpos/moduli.hpp"
#include "bpos/oracle.hpp"
#include "bpos/verdict.hpp"

namespace bpos {

using ojson = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

ojson to_json(const Verdict& v);
ojson to_json(const JoinLabel& label);
ojson to_json(const DivisorClass& D);
ojson to_json(const BaseLocusCycle& c);
ojson to_json(const BlownUpClass& c);
ojson to_json(const KapranovClass& c);
ojson to_json(const OracleResult& r);
ojson to_json(const ProbeResult& r);

DivisorClass divisor_from_json(const nlohmann::json& j);

// Full positivity report for one class; l >= 0 adds the l-very-ample verdict.
ojson analysis_json(const DivisorClass& D, i64 l = -1);

}  // namespace bpos
