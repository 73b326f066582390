#pragma once

#include <string>

#include "bpos/oracle.hpp"

namespace bpos {

// Exhaustive comparison of the interpolation oracle against the alternating
// dimension count over all classes with s = n+3, 0 <= d <= d_max and
// non-increasing multiplicities drawn from 0..m_max.
struct SweepOptions {
  int n = 2;
  i64 d_max = 5;
  i64 m_max = 3;
  std::string out_path;   // JSONL sink
  bool resume = false;    // skip classes already present in out_path
  bool timing = false;    // add per-item wall time (breaks byte-identity)
  int chunk = 64;         // items per parallel batch
  FieldSpec field;
};

struct SweepSummary {
  i64 total = 0;
  i64 skipped = 0;
  i64 agree = 0;
  i64 disagree = 0;  // oracle != expected inside the exactness regime
  i64 unknown = 0;   // oracle != expected outside the regime (logged only)
};

SweepSummary run_sweep(const SweepOptions& opt);

}  // namespace bpos
