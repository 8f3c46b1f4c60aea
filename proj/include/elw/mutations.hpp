#pragma once

namespace elw {

// Switches that weaken individual rules. Every field defaults to the faithful
// setting; the reproduction suite flips them one at a time to confirm that
// its checks are not vacuous.
struct Mutations {
  // AN may only necessitate axiom lines.
  bool an_axioms_only = true;
  // A6 belongs to EL3minus (and hence to every stronger EL logic).
  bool a6_in_el3minus = true;
  // A8 belongs to EL3 (and hence to EL4 and EL5).
  bool a8_in_el3 = true;
  // EL3 and stronger model classes enforce know(m) <= neg(neg(m)).
  bool enforce_condition_viii = true;

  bool faithful() const {
    return an_axioms_only && a6_in_el3minus && a8_in_el3 && enforce_condition_viii;
  }
};

}  // namespace elw
