#pragma once

#include <string>

namespace bpos {

// Three-valued answer for membership tests against partially described cones.
// Fails always carries the violated inequality; Unknown carries the unmet
// range hypothesis that kept the criterion from applying.
struct Verdict {
  enum class Status { Holds, Fails, Unknown };

  Status status = Status::Unknown;
  std::string witness;

  static Verdict holds() { return {Status::Holds, ""}; }
  static Verdict fails(std::string w) { return {Status::Fails, std::move(w)}; }
  static Verdict unknown(std::string w) { return {Status::Unknown, std::move(w)}; }

  bool is_holds() const { return status == Status::Holds; }
  bool is_fails() const { return status == Status::Fails; }
  bool is_unknown() const { return status == Status::Unknown; }

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.status == b.status;
  }
};

inline const char* to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds: return "Holds";
    case Verdict::Status::Fails: return "Fails";
    default: return "Unknown";
  }
}

}  // namespace bpos
