#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "elw/heyting.hpp"
#include "elw/ipc.hpp"
#include "elw/mutations.hpp"
#include "elw/proof.hpp"
#include "elw/syntax.hpp"
#include "elw/verdict.hpp"

namespace elw {

// Algebraic model of EL3minus, EL3, EL4 or EL5. TRUE is the principal
// filter generated by true_gen.
struct ElModel {
  std::shared_ptr<const HeytingAlgebra> algebra;
  Elem true_gen = 0;
  std::vector<bool> bel;
  std::vector<Elem> box;
  std::vector<Elem> know;
  LogicId cls = LogicId::EL5;
};

// Algebraic model of IELminus or IEL.
struct IelModel {
  std::shared_ptr<const HeytingAlgebra> algebra;
  std::vector<bool> bel;
  std::vector<Elem> know;
  LogicId cls = LogicId::IELminus;
};

using Model = std::variant<ElModel, IelModel>;

// Element assigned to each variable, indexed by variable number.
using Assignment = std::vector<Elem>;

class EvalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_el_class(LogicId id);
bool is_iel_class(LogicId id);

// Defining conditions of the class, checked exhaustively. Derived facts
// (disjunction property; BEL within TRUE from EL3 up) are reported as
// assertions.
Verdict validate_el_model(const ElModel& m, const Mutations& mut = {});
Verdict validate_iel_model(const IelModel& m);
Verdict validate_model(const Model& m, const Mutations& mut = {});

const HeytingAlgebra& algebra_of(const Model& m);
LogicId class_of(const Model& m);

// Throws EvalError for box under an IEL model or an unassigned variable.
Elem eval(const ElModel& m, const Assignment& gamma, const Formula& f);
Elem eval(const IelModel& m, const Assignment& gamma, const Formula& f);
Elem eval(const Model& m, const Assignment& gamma, const Formula& f);

// EL: the value lies in TRUE. IEL: the value is top.
bool satisfies(const Model& m, const Assignment& gamma, const Formula& f);

// First assignment in lexicographic order (x0 most significant) under which
// f is not satisfied.
std::optional<Assignment> falsifying_assignment(const Model& m, const Formula& f);
bool valid_in_model(const Model& m, const Formula& f);

struct SearchBudget {
  std::size_t max_poset_size = 3;
  std::size_t max_models = 1'000'000;
  // Operation-table candidates examined per search.
  std::size_t max_op_tables = 10'000'000;
  std::chrono::milliseconds time_cap{30'000};
};

struct EnumerationStats {
  std::size_t carriers = 0;
  std::size_t candidates = 0;
  std::size_t models = 0;
  // The stream ended on a budget limit rather than running out of candidates.
  bool budget_exhausted = false;
  // The sink asked to stop.
  bool stopped = false;
};

// Streams the validated models of a class in a fixed order: carrier, TRUE,
// box table, BEL, know table. The sink returns false to stop.
EnumerationStats enumerate_models(LogicId cls, const SearchBudget& budget,
                                  const std::function<bool(const Model&)>& sink,
                                  const Mutations& mut = {});

struct Countermodel {
  Model model;
  Assignment gamma;
};

struct SearchResult {
  std::optional<Countermodel> found;
  EnumerationStats stats;
};

// First enumerated model and assignment that falsify f. Failure to find one
// says nothing about validity.
SearchResult find_countermodel(const Formula& f, LogicId cls, const SearchBudget& budget,
                               const Mutations& mut = {});

// EL5 model over the up-sets of a rooted Kripke model, with each variable
// assigned its truth set. Throws DomainError when k is not a rooted model.
Countermodel kripke_to_el5(const KripkeModel& k);

struct EmbeddingReport {
  bool ipc_consequence = false;
  // Explicit refutation built from the IPC countermodel.
  std::optional<Countermodel> refutation;
  // First refutation met by bounded model search.
  std::optional<Countermodel> search_hit;
  bool budget_exhausted = false;
  bool agreement = false;
  std::string detail;
};

// Compares IPC consequence of chi from the premises with the existence of an
// EL5 model and assignment satisfying every box premise but not box chi.
EmbeddingReport embedding_crosscheck(const std::vector<Formula>& premises, const Formula& chi,
                                     const SearchBudget& budget);

struct DisjunctionReport {
  // False when phi or psi is an IPC theorem; nothing is then claimed.
  bool attempted = false;
  // Two countermodels were joined under a fresh root.
  bool joined = false;
  std::optional<Countermodel> refutation;
  std::string detail;
};

// Refutes box phi | box psi for two IPC non-theorems.
DisjunctionReport restricted_dp_check(const Formula& phi, const Formula& psi);

std::string describe(const Model& m);
std::string describe(const Assignment& gamma);

}  // namespace elw
