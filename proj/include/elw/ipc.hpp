#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elw/syntax.hpp"

namespace elw {

// Thrown when a query exceeds the engine's search limits. The engine never
// answers a query it could not finish.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for inputs outside an operation's domain (e.g. box in an IPC query).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite rooted Kripke model for intuitionistic propositional logic.
struct KripkeModel {
  std::size_t worlds = 0;
  // order[v * worlds + w] is true iff v <= w (w is accessible from v).
  std::vector<bool> order;
  std::size_t root = 0;
  // valuation[x][w]: variable x holds at world w. Variables beyond the end
  // hold nowhere.
  std::vector<std::vector<bool>> valuation;

  bool leq(std::size_t v, std::size_t w) const { return order[v * worlds + w]; }
  bool holds(VarIndex x, std::size_t w) const {
    return x < valuation.size() && valuation[x][w];
  }
};

// Reflexive, transitive, rooted and persistent; empty string when well formed.
std::string kripke_defect(const KripkeModel& k);

bool forces(const KripkeModel& k, std::size_t world, const Formula& f);

// Restriction of k to the worlds above w, with w as the new root.
KripkeModel cone(const KripkeModel& k, std::size_t w);

struct IpcLimits {
  // Proof-search nodes per query.
  std::size_t max_steps = 5'000'000;
  // Finite-model bound for countermodel construction, in worlds.
  std::size_t max_worlds = 4096;
};

bool ipc_valid(const Formula& f, const IpcLimits& limits = {});
bool ipc_consequence(const std::vector<Formula>& premises, const Formula& goal,
                     const IpcLimits& limits = {});

// Rooted countermodel whose root does not force f; nullopt when f is valid.
std::optional<KripkeModel> ipc_countermodel(const Formula& f, const IpcLimits& limits = {});

// Rooted model whose root forces every premise but not the goal.
std::optional<KripkeModel> ipc_consequence_countermodel(const std::vector<Formula>& premises,
                                                        const Formula& goal,
                                                        const IpcLimits& limits = {});

// The bound N(f) used by countermodel construction: 2^|Sub(f)|, capped.
std::size_t finite_model_bound(const Formula& f, const IpcLimits& limits = {});

std::string describe(const KripkeModel& k);

}  // namespace elw
