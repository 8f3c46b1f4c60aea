#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace elw {

// A derived fact checked alongside a structure's defining conditions.
struct Assertion {
  std::string name;
  bool holds = true;
  std::string detail;
};

// Outcome of a check: accepted, or rejected with the violated condition and
// a witness (element indices, or the offending line for proofs).
struct Verdict {
  bool accepted = true;
  std::string reason;
  std::vector<int> witness;
  std::optional<std::size_t> line;
  std::vector<Assertion> assertions;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string reason, std::vector<int> witness = {}) {
    Verdict v;
    v.accepted = false;
    v.reason = std::move(reason);
    v.witness = std::move(witness);
    return v;
  }

  bool assertions_hold() const {
    for (const auto& a : assertions) {
      if (!a.holds) return false;
    }
    return true;
  }

  // Accepted and every derived assertion holds.
  bool ok() const { return accepted && assertions_hold(); }
};

}  // namespace elw
