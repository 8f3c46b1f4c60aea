#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "elw/mutations.hpp"
#include "elw/syntax.hpp"
#include "elw/verdict.hpp"

namespace elw {

enum class LogicId { L3, EL3minus, EL3, EL4, EL5, IELminus, IEL };

std::string_view to_string(LogicId id);
std::optional<LogicId> logic_from_string(std::string_view text);
// Modal logics with AN and tertium non datur (L3 through EL5).
bool is_modal_family(LogicId id);

// Axiom schemes. CO is intuitionistic co-reflection (f -> K f); INT covers
// substitution instances of IPC theorems.
enum class Axiom { A1, A2, A3, A4, A5, A6, A7, A8, CO, INT };

std::string_view to_string(Axiom a);
std::optional<Axiom> axiom_from_string(std::string_view text);

// Schemes available in a logic, in matching order.
std::vector<Axiom> axioms_of(LogicId logic, const Mutations& mut = {});

// Pattern of a named scheme over metavariables x0 and x1; throws for INT.
Formula scheme_pattern(Axiom scheme);

// Structural match against the pattern of a named scheme (not INT).
bool matches_scheme(const Formula& f, Axiom scheme);
// f is a substitution instance of x0 | ~x0.
bool matches_tertium(const Formula& f);

// True iff the propositional skeleton of f is an IPC theorem.
bool is_int_instance(const Formula& f);

// First scheme of the logic that f instantiates.
std::optional<Axiom> match_axiom(const Formula& f, LogicId logic, const Mutations& mut = {});

struct Justification {
  enum class Rule { Axiom, TheoremT, Hypothesis, MP, AN };
  Rule rule = Rule::Axiom;
  Axiom axiom = Axiom::INT;
  // 1-based line or hypothesis numbers.
  std::size_t first = 0;
  std::size_t second = 0;

  static Justification by_axiom(Axiom a) { return {Rule::Axiom, a, 0, 0}; }
  static Justification tertium() { return {Rule::TheoremT, Axiom::INT, 0, 0}; }
  static Justification hypothesis(std::size_t k) { return {Rule::Hypothesis, Axiom::INT, k, 0}; }
  // Line `premise` is f, line `implication` is f -> g.
  static Justification modus_ponens(std::size_t premise, std::size_t implication) {
    return {Rule::MP, Axiom::INT, premise, implication};
  }
  static Justification necessitation(std::size_t line) { return {Rule::AN, Axiom::INT, line, 0}; }
};

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct ProofScript {
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;

  // Formula of the last line; throws std::logic_error when empty.
  const Formula& conclusion() const;
};

Verdict check_proof(const ProofScript& script, LogicId logic, const Mutations& mut = {});

// Proof-script text format.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ProofScript parse_script(std::string_view text);
std::string render_script(const ProofScript& script);
std::string render_justification(const Justification& j);

// Assembles scripts line by line. Helpers emit the standard derived steps
// (K distribution, glue by IPC instances) and return the new line number.
class ProofBuilder {
 public:
  std::size_t hypothesis(const Formula& f);
  std::size_t axiom(Axiom a, const Formula& f);
  std::size_t tertium(const Formula& f);
  std::size_t mp(std::size_t premise, std::size_t implication);
  std::size_t an(std::size_t line);

  // IPC instance (p1 -> (p2 -> ... -> goal)) followed by one MP per premise.
  std::size_t by_int(const std::vector<std::size_t>& premises, const Formula& goal);
  // box(a -> b) -> (box a -> box b), derived from A3 and A2.
  std::size_t k_axiom(const Formula& a, const Formula& b);
  // From a line box(a -> b), derive box a -> box b.
  std::size_t k_apply(std::size_t boxed_implication);
  // IPC instance f, then box f by AN.
  std::size_t necessitate_int(const Formula& f);

  const Formula& formula(std::size_t line) const;
  ProofScript build() const { return script_; }

 private:
  std::size_t push(Formula f, Justification j);
  ProofScript script_;
};

// SP instance (phi == psi) -> (chi[x:=phi] == chi[x:=psi]).
Formula sp_instance(const Formula& phi, const Formula& psi, const Formula& chi, VarIndex x);
// Derivation of the SP instance in EL3minus by induction on chi.
ProofScript build_sp_proof(const Formula& phi, const Formula& psi, const Formula& chi, VarIndex x);

struct LibraryEntry {
  std::string name;
  std::string statement;
  // Weakest logic in which the script is accepted.
  LogicId logic;
  // Next-weaker logic lacking a scheme the script needs, when one exists.
  std::optional<LogicId> weaker;
  ProofScript script;
};

std::map<std::string, LibraryEntry> theorem_library();

}  // namespace elw
